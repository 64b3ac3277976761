#pragma once

#include <array>
#include <vector>

#include "anim/error.hpp"

namespace anim {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Vec2&) const = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double length(Vec2 v);

/// Sampled points along a curve, drawn progressively via a stroke index.
struct Stroke {
    std::vector<Vec2> points;
};

/// Evaluate the Bezier curve of `controls` (degree = size - 1) at
/// `resolution` uniformly spaced parameter values u = (k-1)/(resolution-1),
/// by de Casteljau recursion. The first and last stroke points equal the
/// first and last control points exactly.
Stroke sample_bezier_curve(const std::vector<Vec2>& controls, int resolution);

/// Single de Casteljau evaluation at parameter u in [0, 1].
Vec2 bezier_point(const std::vector<Vec2>& controls, double u);

/// 1-based count of stroke points visible at eased progress:
/// round(lerp(1, resolution, eased_t)), ties rounding half away from zero.
/// The result is clamped into [1, resolution].
int stroke_index(int resolution, double eased_t);

/// Arrowhead triangle for a segment ending at p_tip: apex at p_tip, axis
/// along p_prev -> p_tip, barb length 0.35 * arrowsize logical units,
/// half-angle 30 degrees. arrowsize 0 collapses the triangle onto the tip.
std::array<Vec2, 3> arrowhead(Vec2 p_prev, Vec2 p_tip, double arrowsize);

} // namespace anim
