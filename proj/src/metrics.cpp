#include "anim/metrics.hpp"

#include <array>
#include <map>

namespace anim {

namespace {

// Advance ratios (advance / size) of the printable ASCII range, modelled
// on a standard sans-serif reference face.
constexpr std::array<double, 95> kAsciiAdvance = {
    /* ' ' */ 0.278, /* ! */ 0.278, /* " */ 0.355, /* # */ 0.556, /* $ */ 0.556,
    /* % */ 0.889,   /* & */ 0.667, /* ' */ 0.191, /* ( */ 0.333, /* ) */ 0.333,
    /* * */ 0.389,   /* + */ 0.584, /* , */ 0.278, /* - */ 0.333, /* . */ 0.278,
    /* / */ 0.278,
    /* 0-9 */ 0.556, 0.556, 0.556, 0.556, 0.556, 0.556, 0.556, 0.556, 0.556, 0.556,
    /* : */ 0.278, /* ; */ 0.278, /* < */ 0.584, /* = */ 0.584, /* > */ 0.584,
    /* ? */ 0.556, /* @ */ 1.015,
    /* A-Z */ 0.667, 0.667, 0.722, 0.722, 0.667, 0.611, 0.778, 0.722, 0.278, 0.500,
    0.667, 0.556, 0.833, 0.722, 0.778, 0.667, 0.778, 0.722, 0.667, 0.611,
    0.722, 0.667, 0.944, 0.667, 0.667, 0.611,
    /* [ */ 0.278, /* \ */ 0.278, /* ] */ 0.278, /* ^ */ 0.469, /* _ */ 0.556,
    /* ` */ 0.333,
    /* a-z */ 0.556, 0.556, 0.500, 0.556, 0.556, 0.278, 0.556, 0.556, 0.222, 0.222,
    0.500, 0.222, 0.833, 0.556, 0.556, 0.556, 0.556, 0.333, 0.500, 0.278,
    0.556, 0.500, 0.722, 0.500, 0.500, 0.500,
    /* { */ 0.334, /* | */ 0.260, /* } */ 0.334, /* ~ */ 0.584,
};

const std::map<std::string, double>& symbol_advance() {
    static const std::map<std::string, double> table = {
        {"sum", 1.056}, {"prod", 1.056}, {"int", 0.556}, {"infty", 0.833},
    };
    return table;
}

const std::map<std::string, double>& symbol_height() {
    static const std::map<std::string, double> table = {
        {"sum", 0.90}, {"prod", 0.90}, {"int", 1.10}, {"infty", 0.44},
    };
    return table;
}

bool has_ascender(char c) {
    if ((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'))
        return true;
    switch (c) {
    case 'b': case 'd': case 'f': case 'h': case 'k': case 'l': case 't':
        return true;
    default:
        return false;
    }
}

class BuiltinMetrics : public GlyphMetrics {
public:
    std::string id() const override { return "builtin:v1"; }
    bool ready() const override { return true; }

    double advance(const std::string& glyph, double size) const override {
        if (glyph.size() == 1) {
            char c = glyph[0];
            if (c >= 0x20 && c < 0x7f)
                return kAsciiAdvance[c - 0x20] * size;
            return 0.6 * size;
        }
        auto it = symbol_advance().find(glyph);
        return (it != symbol_advance().end() ? it->second : 0.6) * size;
    }

    double height(const std::string& glyph, double size) const override {
        if (glyph.size() == 1) {
            char c = glyph[0];
            if (c >= 'a' && c <= 'z')
                return (has_ascender(c) ? 0.72 : 0.50) * size;
            if ((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'))
                return 0.72 * size;
            switch (c) {
            case '.': case ',': return 0.12 * size;
            case '-': case '=': case '+': return 0.40 * size;
            default: return 0.62 * size;
            }
        }
        auto it = symbol_height().find(glyph);
        return (it != symbol_height().end() ? it->second : 0.62) * size;
    }
};

} // namespace

const GlyphMetrics& builtin_metrics() {
    static const BuiltinMetrics instance;
    return instance;
}

} // namespace anim
