#include "anim/render.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "anim/typeset.hpp"

namespace anim {

namespace {

constexpr int kSubGrid = 4; // 4x4 supersampled edge coverage

double sub_offset(int i) {
    return (i + 0.5) / kSubGrid;
}

double clamp01(double v) {
    return std::clamp(v, 0.0, 1.0);
}

uint8_t quantize(double c) {
    return static_cast<uint8_t>(std::lround(clamp01(c) * 255.0));
}

// size is calibrated to 1080p output and scales with the frame height.
double size_to_pixels(double size, int fb_height) {
    return size * fb_height / 1080.0;
}

struct PixelRect {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0; // half-open

    bool empty() const { return x0 >= x1 || y0 >= y1; }
};

PixelRect clip_rect(double min_x, double min_y, double max_x, double max_y, int w, int h) {
    PixelRect r;
    if (!std::isfinite(min_x) || !std::isfinite(min_y) || !std::isfinite(max_x) ||
        !std::isfinite(max_y))
        return r;
    // One pixel of slack so boundary subsamples are never missed.
    r.x0 = static_cast<int>(std::clamp(std::floor(min_x) - 1, 0.0, static_cast<double>(w)));
    r.y0 = static_cast<int>(std::clamp(std::floor(min_y) - 1, 0.0, static_cast<double>(h)));
    r.x1 = static_cast<int>(std::clamp(std::ceil(max_x) + 1, 0.0, static_cast<double>(w)));
    r.y1 = static_cast<int>(std::clamp(std::ceil(max_y) + 1, 0.0, static_cast<double>(h)));
    return r;
}

// Subsample coverage masks for one draw call, accumulated over any number
// of shapes (union semantics), then composited in a single pass.
class CoverageMap {
public:
    CoverageMap(PixelRect bounds) : bounds_(bounds) {
        if (!bounds_.empty())
            mask_.assign(static_cast<size_t>(bounds_.x1 - bounds_.x0) *
                             (bounds_.y1 - bounds_.y0),
                         0);
    }

    bool empty() const { return bounds_.empty(); }

    // inside(x, y) decides membership of a subsample point (pixel coords).
    template <typename Inside>
    void accumulate(PixelRect shape, const Inside& inside) {
        int x0 = std::max(shape.x0, bounds_.x0);
        int y0 = std::max(shape.y0, bounds_.y0);
        int x1 = std::min(shape.x1, bounds_.x1);
        int y1 = std::min(shape.y1, bounds_.y1);
        int stride = bounds_.x1 - bounds_.x0;
        for (int y = y0; y < y1; ++y) {
            uint16_t* row = mask_.data() + static_cast<size_t>(y - bounds_.y0) * stride;
            for (int x = x0; x < x1; ++x) {
                uint16_t m = row[x - bounds_.x0];
                if (m == 0xffff)
                    continue;
                int bit = 0;
                for (int sy = 0; sy < kSubGrid; ++sy) {
                    double py = y + sub_offset(sy);
                    for (int sx = 0; sx < kSubGrid; ++sx, ++bit) {
                        uint16_t flag = static_cast<uint16_t>(1u << bit);
                        if ((m & flag) == 0 && inside(x + sub_offset(sx), py))
                            m |= flag;
                    }
                }
                row[x - bounds_.x0] = m;
            }
        }
    }

    void composite(FrameBuffer& fb, const Color& color, double alpha) const {
        alpha = clamp01(alpha);
        if (alpha <= 0 || empty())
            return;
        Color c{clamp01(color.r), clamp01(color.g), clamp01(color.b)};
        int stride = bounds_.x1 - bounds_.x0;
        for (int y = bounds_.y0; y < bounds_.y1; ++y) {
            const uint16_t* row = mask_.data() + static_cast<size_t>(y - bounds_.y0) * stride;
            for (int x = bounds_.x0; x < bounds_.x1; ++x) {
                uint16_t m = row[x - bounds_.x0];
                if (m == 0)
                    continue;
                double coverage = std::popcount(m) / double(kSubGrid * kSubGrid);
                double a = alpha * coverage;
                if (a <= 0)
                    continue;
                uint8_t* px = fb.pixel(x, y);
                double dr = px[0] / 255.0, dg = px[1] / 255.0, db = px[2] / 255.0,
                       da = px[3] / 255.0;
                double out_a = a + da * (1 - a);
                if (out_a <= 0)
                    continue;
                px[0] = quantize((c.r * a + dr * da * (1 - a)) / out_a);
                px[1] = quantize((c.g * a + dg * da * (1 - a)) / out_a);
                px[2] = quantize((c.b * a + db * da * (1 - a)) / out_a);
                px[3] = quantize(out_a);
            }
        }
    }

private:
    PixelRect bounds_;
    std::vector<uint16_t> mask_;
};

double dist_sq_to_segment(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 ab = b - a;
    double len_sq = dot(ab, ab);
    double t = len_sq > 0 ? clamp01(dot(p - a, ab) / len_sq) : 0.0;
    Vec2 q = a + t * ab;
    Vec2 d = p - q;
    return dot(d, d);
}

PixelRect capsule_bounds(Vec2 a, Vec2 b, double r, int w, int h) {
    return clip_rect(std::min(a.x, b.x) - r, std::min(a.y, b.y) - r,
                     std::max(a.x, b.x) + r, std::max(a.y, b.y) + r, w, h);
}

// Fills the union of round-capped segments between consecutive points
// (already in pixel coordinates) in one compositing pass.
void stroke_polyline_px(FrameBuffer& fb, const std::vector<Vec2>& px_points,
                        double width_px, const Style& style) {
    if (px_points.size() < 2 || width_px <= 0 || style.alpha <= 0)
        return;
    for (const Vec2& p : px_points)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            return;
    double r = width_px / 2;
    double min_x = px_points[0].x, max_x = px_points[0].x;
    double min_y = px_points[0].y, max_y = px_points[0].y;
    for (const Vec2& p : px_points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    CoverageMap cov(clip_rect(min_x - r, min_y - r, max_x + r, max_y + r, fb.width(),
                              fb.height()));
    if (cov.empty())
        return;
    double r_sq = r * r;
    for (size_t i = 0; i + 1 < px_points.size(); ++i) {
        Vec2 a = px_points[i], b = px_points[i + 1];
        cov.accumulate(capsule_bounds(a, b, r, fb.width(), fb.height()),
                       [&](double x, double y) {
                           return dist_sq_to_segment({x, y}, a, b) <= r_sq;
                       });
    }
    cov.composite(fb, style.color, style.alpha);
}

void fill_triangle_px(FrameBuffer& fb, Vec2 p0, Vec2 p1, Vec2 p2, const Style& style) {
    if (style.alpha <= 0)
        return;
    for (const Vec2& p : {p0, p1, p2})
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            return;
    double area2 = cross(p1 - p0, p2 - p0);
    if (area2 == 0)
        return;
    if (area2 < 0)
        std::swap(p1, p2); // counter-clockwise
    PixelRect bounds = clip_rect(std::min({p0.x, p1.x, p2.x}), std::min({p0.y, p1.y, p2.y}),
                                 std::max({p0.x, p1.x, p2.x}), std::max({p0.y, p1.y, p2.y}),
                                 fb.width(), fb.height());
    CoverageMap cov(bounds);
    if (cov.empty())
        return;
    cov.accumulate(bounds, [&](double x, double y) {
        Vec2 p{x, y};
        return cross(p1 - p0, p - p0) >= 0 && cross(p2 - p1, p - p1) >= 0 &&
               cross(p0 - p2, p - p2) >= 0;
    });
    cov.composite(fb, style.color, style.alpha);
}

void fill_rect_px(FrameBuffer& fb, double x0, double y0, double x1, double y1,
                  const Color& color, double alpha) {
    if (alpha <= 0 || x1 <= x0 || y1 <= y0)
        return;
    PixelRect bounds = clip_rect(x0, y0, x1, y1, fb.width(), fb.height());
    CoverageMap cov(bounds);
    if (cov.empty())
        return;
    cov.accumulate(bounds, [&](double x, double y) {
        return x >= x0 && x < x1 && y >= y0 && y < y1;
    });
    cov.composite(fb, color, alpha);
}

double logical_scale(const Viewport& vp, int fb_width) {
    return fb_width / vp.width();
}

// --- 5x7 overlay font -------------------------------------------------------

// Rows top to bottom, 5 bits each, MSB left. Digits, clock punctuation and
// the bar glyphs are all the overlay ever needs.
const std::map<char, std::array<uint8_t, 7>>& overlay_font() {
    static const std::map<char, std::array<uint8_t, 7>> font = {
        {'0', {0x0e, 0x11, 0x13, 0x15, 0x19, 0x11, 0x0e}},
        {'1', {0x04, 0x0c, 0x04, 0x04, 0x04, 0x04, 0x0e}},
        {'2', {0x0e, 0x11, 0x01, 0x02, 0x04, 0x08, 0x1f}},
        {'3', {0x1f, 0x02, 0x04, 0x02, 0x01, 0x11, 0x0e}},
        {'4', {0x02, 0x06, 0x0a, 0x12, 0x1f, 0x02, 0x02}},
        {'5', {0x1f, 0x10, 0x1e, 0x01, 0x01, 0x11, 0x0e}},
        {'6', {0x06, 0x08, 0x10, 0x1e, 0x11, 0x11, 0x0e}},
        {'7', {0x1f, 0x01, 0x02, 0x04, 0x08, 0x08, 0x08}},
        {'8', {0x0e, 0x11, 0x11, 0x0e, 0x11, 0x11, 0x0e}},
        {'9', {0x0e, 0x11, 0x11, 0x0f, 0x01, 0x02, 0x0c}},
        {'T', {0x1f, 0x04, 0x04, 0x04, 0x04, 0x04, 0x04}},
        {'=', {0x00, 0x00, 0x1f, 0x00, 0x1f, 0x00, 0x00}},
        {'.', {0x00, 0x00, 0x00, 0x00, 0x00, 0x0c, 0x0c}},
    };
    return font;
}

constexpr int kOverlayScale = 2;
const Color kOverlayColor{0.5, 0.5, 0.5};

void overlay_set(FrameBuffer& fb, int x, int y) {
    if (x < 0 || y < 0 || x >= fb.width() || y >= fb.height())
        return;
    uint8_t* px = fb.pixel(x, y);
    px[0] = px[1] = px[2] = quantize(kOverlayColor.r);
    px[3] = 255;
}

void overlay_rect(FrameBuffer& fb, int x0, int y0, int w, int h) {
    for (int y = y0; y < y0 + h; ++y)
        for (int x = x0; x < x0 + w; ++x)
            overlay_set(fb, x, y);
}

void overlay_text(FrameBuffer& fb, int x, int y, const std::string& text) {
    for (char c : text) {
        auto it = overlay_font().find(c);
        if (it != overlay_font().end()) {
            for (int row = 0; row < 7; ++row)
                for (int col = 0; col < 5; ++col)
                    if (it->second[row] & (1 << (4 - col)))
                        overlay_rect(fb, x + col * kOverlayScale, y + row * kOverlayScale,
                                     kOverlayScale, kOverlayScale);
        }
        x += 6 * kOverlayScale;
    }
}

} // namespace

Viewport Viewport::fitted(int fb_width, int fb_height) const {
    double logical = width() / height();
    double pixel = static_cast<double>(fb_width) / fb_height;
    Viewport out = *this;
    if (logical < pixel) {
        double expand = (height() * pixel - width()) / 2;
        out.x_min -= expand;
        out.x_max += expand;
    } else if (logical > pixel) {
        double expand = (width() / pixel - height()) / 2;
        out.y_min -= expand;
        out.y_max += expand;
    }
    return out;
}

Vec2 world_to_pixel(const Viewport& vp, Vec2 p, int fb_width, int fb_height) {
    return {(p.x - vp.x_min) / vp.width() * fb_width,
            (vp.y_max - p.y) / vp.height() * fb_height};
}

FrameBuffer::FrameBuffer(int width, int height) : width_(width), height_(height) {
    if (width <= 0 || height <= 0)
        throw Error(errc::io_error, "framebuffer dimensions must be positive");
    data_.assign(static_cast<size_t>(width) * height * 4, 255); // opaque white
}

void draw_segment(FrameBuffer& fb, const Viewport& vp, Vec2 a, Vec2 b, const Style& style) {
    Vec2 pa = world_to_pixel(vp, a, fb.width(), fb.height());
    Vec2 pb = world_to_pixel(vp, b, fb.width(), fb.height());
    double width_px = size_to_pixels(style.size, fb.height());
    stroke_polyline_px(fb, {pa, pb}, width_px, style);
    if (style.arrow && !(a == b)) {
        auto tri = arrowhead(a, b, style.arrowsize);
        fill_triangle_px(fb, world_to_pixel(vp, tri[0], fb.width(), fb.height()),
                         world_to_pixel(vp, tri[1], fb.width(), fb.height()),
                         world_to_pixel(vp, tri[2], fb.width(), fb.height()), style);
    }
}

void fill_circle(FrameBuffer& fb, const Viewport& vp, Vec2 center, double radius,
                 const Style& style) {
    if (radius <= 0 || style.alpha <= 0)
        return;
    Vec2 pc = world_to_pixel(vp, center, fb.width(), fb.height());
    if (!std::isfinite(pc.x) || !std::isfinite(pc.y))
        return;
    double r = radius * logical_scale(vp, fb.width());
    PixelRect bounds = clip_rect(pc.x - r, pc.y - r, pc.x + r, pc.y + r, fb.width(),
                                 fb.height());
    CoverageMap cov(bounds);
    if (cov.empty())
        return;
    double r_sq = r * r;
    cov.accumulate(bounds, [&](double x, double y) {
        double dx = x - pc.x, dy = y - pc.y;
        return dx * dx + dy * dy <= r_sq;
    });
    cov.composite(fb, style.color, style.alpha);
}

void connect(FrameBuffer& fb, const Viewport& vp, const std::vector<Vec2>& points,
             const Style& style) {
    if (points.size() < 2)
        return;
    std::vector<Vec2> px;
    px.reserve(points.size());
    for (const Vec2& p : points)
        px.push_back(world_to_pixel(vp, p, fb.width(), fb.height()));
    stroke_polyline_px(fb, px, size_to_pixels(style.size, fb.height()), style);
}

void draw_fragments(FrameBuffer& fb, const Viewport& vp, Vec2 anchor,
                    const FragmentedString& fs, double t, const std::string& mode,
                    const Style& style) {
    std::vector<TypingState> states = typing_states(fs, t, mode);
    Vec2 anchor_px = world_to_pixel(vp, anchor, fb.width(), fb.height());
    double k = fb.height() / 1080.0; // fragment offsets are in 1080p pixel units
    for (size_t i = 0; i < fs.fragments.size(); ++i) {
        const Fragment& f = fs.fragments[i];
        const TypingState& st = states[i];
        double a = style.alpha * st.alpha;
        if (a <= 0)
            continue;
        Vec2 at = f.offset + st.extra_offset;
        double x0 = anchor_px.x + at.x * k;
        double y_base = anchor_px.y - at.y * k; // logical y up, pixel y down
        fill_rect_px(fb, x0, y_base - f.box_h * k, x0 + f.box_w * k, y_base, style.color, a);
    }
}

void draw_debug_overlay(FrameBuffer& fb, const Timeline& tl, double now) {
    char clock[32];
    std::snprintf(clock, sizeof clock, "T=%06.3f", now);
    overlay_text(fb, 8, 8, clock);

    std::vector<double> progress = tl.progress(now);
    int bar_w = 120, bar_h = 8;
    int y = 8 + 7 * kOverlayScale + 6;
    for (double p : progress) {
        // Outline plus proportional fill.
        overlay_rect(fb, 8, y, bar_w, 1);
        overlay_rect(fb, 8, y + bar_h - 1, bar_w, 1);
        overlay_rect(fb, 8, y, 1, bar_h);
        overlay_rect(fb, 8 + bar_w - 1, y, 1, bar_h);
        int fill = static_cast<int>(std::lround(p * (bar_w - 2)));
        overlay_rect(fb, 9, y + 1, fill, bar_h - 2);
        y += bar_h + 4;
    }
}

} // namespace anim
