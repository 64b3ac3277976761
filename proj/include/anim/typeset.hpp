#pragma once

#include <string>
#include <vector>

#include "anim/error.hpp"
#include "anim/geometry.hpp"
#include "anim/metrics.hpp"

namespace anim {

/// Parse tree of the Nyka markup subset. `$` toggles math mode; inside
/// math, `^`/`_` bind the next atom, `\cmd` introduces symbols and
/// operators, and bracket arguments carry operator limits and fraction
/// parts. Both `[...]` and `{...}` delimit argument groups.
struct NykaNode {
    enum class Kind {
        text_run,    // text: run of characters; math: a single character
        math_group,  // $...$ segment or a bracket/brace group
        symbol,      // \infty, greek letters; name in `text`
        big_operator,// \sum, \prod, \int; optional limits in children
        fraction,    // \frac[num][den]; children = {numerator, denominator}
        superscript, // children = {base, exponent}
        subscript,   // children = {base, index}
        style_flag,  // \displaystyle; children = rest of the group
    };

    Kind kind = Kind::text_run;
    std::string text;                // characters or command name
    std::vector<NykaNode> children;
    bool has_lower = false;          // big_operator: children[0] present
    bool has_upper = false;          // big_operator: children[has_lower] present
    bool space_before = false;       // math mode: whitespace preceded this atom
    size_t pos = 0;                  // byte offset in the source string
};

/// Alternating text runs and math groups. Errors carry the byte position
/// of the offending character.
std::vector<NykaNode> parse_nyka(const std::string& s);

/// Translate Nyka markup to standard TeX syntax: operator bracket
/// arguments become _{...} / ^{...}, \frac[a][b] becomes \frac{a}{b}.
/// Markup-free text passes through unchanged.
std::string nyka_to_tex(const std::string& s);

/// One positioned glyph. Offsets are in size units (the same scale as the
/// text size), y up, relative to the anchor baseline; the box is what the
/// placeholder renderer fills.
struct Fragment {
    std::string glyph;
    Vec2 offset;
    double size = 0;
    bool math_mode = false;
    int script_level = 0;
    double box_w = 0;
    double box_h = 0;
};

/// The glyph decomposition of a string. The fragment count and glyph
/// sequence depend only on the parse, never on the metrics provider, so
/// durations derived from the count are stable across the two-phase
/// (pre-/post-font) setup.
struct FragmentedString {
    std::vector<Fragment> fragments;
    std::string source;
    double size = 0;
    std::string metrics_id;
};

/// Decompose `s` into positioned fragments. Spaces advance the cursor but
/// emit nothing. Scripts shrink by 0.7 per level and shift by 0.45 * size;
/// big-operator limits stack below/above in display style.
FragmentedString fragment(const std::string& s, double size, const GlyphMetrics& metrics);

inline FragmentedString fragment(const std::string& s, double size) {
    return fragment(s, size, builtin_metrics());
}

size_t fragment_length(const FragmentedString& fs);

struct TypingState {
    double alpha = 0;
    Vec2 extra_offset;
};

/// Per-glyph reveal state at overall progress t in [0, 1]. Glyph i of N
/// has local progress clamp(t*N - (i-1), 0, 1), so exactly one glyph is
/// mid-animation at a time. Modes: "up" (rise and fade in), "fade",
/// "appear" (hard cut).
std::vector<TypingState> typing_states(const FragmentedString& fs, double t,
                                       const std::string& mode);

namespace layout {
// Invented layout constants, kept in one place.
inline constexpr double kScriptScale = 0.7;       // size factor per script level
inline constexpr double kScriptShift = 0.45;      // script baseline shift * size
inline constexpr double kLowerLimitDrop = 0.70;   // display-style limits
inline constexpr double kUpperLimitRaise = 1.05;
inline constexpr double kFracNumRaise = 0.55;
inline constexpr double kFracDenDrop = 0.60;
inline constexpr double kFracBarRaise = 0.26;
inline constexpr double kFracBarThickness = 0.045;
inline constexpr double kFracPad = 0.08;
inline constexpr double kBoxWidthRatio = 0.82;    // glyph box vs advance
inline constexpr double kTypingRise = 0.4;        // "up" mode start offset * size
} // namespace layout

} // namespace anim
