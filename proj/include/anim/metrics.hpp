#pragma once

#include <string>

namespace anim {

/// Where glyph dimensions come from. Glyphs are named by a single visible
/// character ("a", "=") or a symbol name ("sum", "infty"). Implementations
/// must be deterministic: the same (glyph, size) always yields the same
/// numbers, even before ready() turns true (the pre-ready answers are the
/// provider's provisional guesses).
class GlyphMetrics {
public:
    virtual ~GlyphMetrics() = default;

    virtual std::string id() const = 0;
    virtual bool ready() const = 0;

    /// Horizontal advance, in size units.
    virtual double advance(const std::string& glyph, double size) const = 0;

    /// Extent above the baseline, in size units.
    virtual double height(const std::string& glyph, double size) const = 0;
};

/// The embedded metrics table: per-character advance ratios of a reference
/// sans-serif face, always ready, no font files needed.
const GlyphMetrics& builtin_metrics();

/// Test double for the two-phase setup contract: reports not ready and
/// answers every query with a flat placeholder ratio.
class PendingMetrics : public GlyphMetrics {
public:
    std::string id() const override { return "pending"; }
    bool ready() const override { return false; }
    double advance(const std::string&, double size) const override { return 0.6 * size; }
    double height(const std::string&, double size) const override { return 0.6 * size; }
};

} // namespace anim
