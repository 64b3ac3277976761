#pragma once

#include <cstdint>
#include <vector>

#include "anim/geometry.hpp"
#include "anim/timeline.hpp"
#include "anim/typeset.hpp"

namespace anim {

struct Color {
    double r = 0, g = 0, b = 0;

    bool operator==(const Color&) const = default;
};

/// The logical drawing rectangle, y up. canvasCenter is its midpoint.
struct Viewport {
    double x_min = -16, x_max = 16;
    double y_min = 0, y_max = 18;

    static Viewport standard() { return {}; }

    Vec2 center() const { return {(x_min + x_max) / 2, (y_min + y_max) / 2}; }
    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }

    /// Expand the smaller axis symmetrically until the logical aspect ratio
    /// matches the pixel aspect ratio.
    Viewport fitted(int fb_width, int fb_height) const;
};

/// Maps a logical point to real-valued pixel coordinates: x_min -> 0,
/// x_max -> width, y_max -> 0, y_min -> height (y flips).
Vec2 world_to_pixel(const Viewport& vp, Vec2 p, int fb_width, int fb_height);

/// 8-bit RGBA raster, straight (non-premultiplied) alpha, white background.
class FrameBuffer {
public:
    FrameBuffer(int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }
    const std::vector<uint8_t>& bytes() const { return data_; }
    std::vector<uint8_t>& bytes() { return data_; }

    uint8_t* pixel(int x, int y) { return data_.data() + 4 * (static_cast<size_t>(y) * width_ + x); }
    const uint8_t* pixel(int x, int y) const {
        return data_.data() + 4 * (static_cast<size_t>(y) * width_ + x);
    }

    bool operator==(const FrameBuffer&) const = default;

private:
    int width_;
    int height_;
    std::vector<uint8_t> data_;
};

/// Draw modifiers. size doubles as stroke width and text size, measured in
/// pixels at 1080p output and scaled as height/1080 at other resolutions.
struct Style {
    double size = 4;
    Color color;
    double alpha = 1;
    bool arrow = false;
    double arrowsize = 1;
};

/// Antialiased stroked segment with round caps; a degenerate segment draws
/// a dot of the stroke width. With style.arrow, an arrowhead triangle is
/// filled at b. Geometry outside the viewport clips silently.
void draw_segment(FrameBuffer& fb, const Viewport& vp, Vec2 a, Vec2 b, const Style& style);

/// Antialiased filled disc; radius is in logical units. Radius 0 leaves the
/// framebuffer unchanged.
void fill_circle(FrameBuffer& fb, const Viewport& vp, Vec2 center, double radius,
                 const Style& style);

/// Polyline through the points, one compositing pass over the union of the
/// segments so joins do not double-darken. A single point draws nothing.
/// style.arrow is ignored here; arrowheads come from draw_segment.
void connect(FrameBuffer& fb, const Viewport& vp, const std::vector<Vec2>& points,
             const Style& style);

/// Typewriter text: each fragment's box is filled at
/// anchor + offset + typing offset with alpha = style.alpha * typing alpha.
void draw_fragments(FrameBuffer& fb, const Viewport& vp, Vec2 anchor,
                    const FragmentedString& fs, double t, const std::string& mode,
                    const Style& style);

/// Top-left corner overlay: the clock as "T=ss.mmm" plus one progress bar
/// per track, in a fixed 50% gray.
void draw_debug_overlay(FrameBuffer& fb, const Timeline& tl, double now);

} // namespace anim
