#include "anim/geometry.hpp"

#include <cmath>

#include "anim/interp.hpp"

namespace anim {

double length(Vec2 v) {
    return std::hypot(v.x, v.y);
}

Vec2 bezier_point(const std::vector<Vec2>& controls, double u) {
    std::vector<Vec2> pts = controls;
    for (size_t m = pts.size() - 1; m > 0; --m)
        for (size_t i = 0; i < m; ++i)
            pts[i] = {lerp(pts[i].x, pts[i + 1].x, u), lerp(pts[i].y, pts[i + 1].y, u)};
    return pts[0];
}

Stroke sample_bezier_curve(const std::vector<Vec2>& controls, int resolution) {
    if (controls.size() < 2)
        throw Error(errc::too_few_controls,
                    "a Bezier curve needs at least 2 control points, got " +
                        std::to_string(controls.size()));
    if (resolution < 2)
        throw Error(errc::resolution_too_small,
                    "resolution must be >= 2, got " + std::to_string(resolution));
    Stroke stroke;
    stroke.points.reserve(resolution);
    for (int k = 0; k < resolution; ++k) {
        double u = static_cast<double>(k) / (resolution - 1);
        stroke.points.push_back(bezier_point(controls, u));
    }
    return stroke;
}

int stroke_index(int resolution, double eased_t) {
    double idx = std::round(lerp(1.0, static_cast<double>(resolution), eased_t));
    if (idx < 1)
        return 1;
    if (idx > resolution)
        return resolution;
    return static_cast<int>(idx);
}

std::array<Vec2, 3> arrowhead(Vec2 p_prev, Vec2 p_tip, double arrowsize) {
    Vec2 axis = p_tip - p_prev;
    double len = length(axis);
    if (len == 0.0)
        throw Error(errc::coincident_points, "arrowhead needs two distinct points");
    Vec2 dir = (1.0 / len) * axis;
    double barb = 0.35 * arrowsize;
    constexpr double half_angle = 30.0 * 3.14159265358979323846 / 180.0;
    double c = std::cos(half_angle), s = std::sin(half_angle);
    // Barbs trail behind the tip, mirrored across the axis.
    Vec2 left = p_tip - barb * Vec2{c * dir.x - s * dir.y, s * dir.x + c * dir.y};
    Vec2 right = p_tip - barb * Vec2{c * dir.x + s * dir.y, -s * dir.x + c * dir.y};
    return {p_tip, left, right};
}

} // namespace anim
