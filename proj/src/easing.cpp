#include "anim/easing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace anim {

namespace {

constexpr double kPi = std::numbers::pi;

// Overshoot constants of the back family.
constexpr double c1 = 1.70158;
constexpr double c2 = c1 * 1.525;
constexpr double c3 = c1 + 1.0;

// Period constants of the elastic family.
constexpr double c4 = 2.0 * kPi / 3.0;
constexpr double c5 = 2.0 * kPi / 4.5;

double out_bounce(double t) {
    constexpr double n1 = 7.5625;
    constexpr double d1 = 2.75;
    if (t < 1.0 / d1)
        return n1 * t * t;
    if (t < 2.0 / d1) {
        t -= 1.5 / d1;
        return n1 * t * t + 0.75;
    }
    if (t < 2.5 / d1) {
        t -= 2.25 / d1;
        return n1 * t * t + 0.9375;
    }
    t -= 2.625 / d1;
    return n1 * t * t + 0.984375;
}

double eval(EasingKind kind, double t) {
    using K = EasingKind;
    switch (kind) {
    case K::linear: return t;

    case K::inSine: return 1 - std::cos(t * kPi / 2);
    case K::outSine: return std::sin(t * kPi / 2);
    case K::inOutSine: return -(std::cos(kPi * t) - 1) / 2;

    case K::inQuad: return t * t;
    case K::outQuad: return 1 - (1 - t) * (1 - t);
    case K::inOutQuad:
        return t < 0.5 ? 2 * t * t : 1 - std::pow(-2 * t + 2, 2) / 2;

    case K::inCubic: return t * t * t;
    case K::outCubic: return 1 - std::pow(1 - t, 3);
    case K::inOutCubic:
        return t < 0.5 ? 4 * t * t * t : 1 - std::pow(-2 * t + 2, 3) / 2;

    case K::inQuart: return t * t * t * t;
    case K::outQuart: return 1 - std::pow(1 - t, 4);
    case K::inOutQuart:
        return t < 0.5 ? 8 * t * t * t * t : 1 - std::pow(-2 * t + 2, 4) / 2;

    case K::inQuint: return t * t * t * t * t;
    case K::outQuint: return 1 - std::pow(1 - t, 5);
    case K::inOutQuint:
        return t < 0.5 ? 16 * t * t * t * t * t : 1 - std::pow(-2 * t + 2, 5) / 2;

    case K::inExpo: return std::pow(2, 10 * t - 10);
    case K::outExpo: return 1 - std::pow(2, -10 * t);
    case K::inOutExpo:
        return t < 0.5 ? std::pow(2, 20 * t - 10) / 2
                       : (2 - std::pow(2, -20 * t + 10)) / 2;

    case K::inCirc: return 1 - std::sqrt(1 - t * t);
    case K::outCirc: return std::sqrt(1 - (t - 1) * (t - 1));
    case K::inOutCirc:
        return t < 0.5 ? (1 - std::sqrt(1 - 4 * t * t)) / 2
                       : (std::sqrt(1 - std::pow(-2 * t + 2, 2)) + 1) / 2;

    case K::inBack: return c3 * t * t * t - c1 * t * t;
    case K::outBack:
        return 1 + c3 * std::pow(t - 1, 3) + c1 * std::pow(t - 1, 2);
    case K::inOutBack:
        return t < 0.5
                   ? std::pow(2 * t, 2) * ((c2 + 1) * 2 * t - c2) / 2
                   : (std::pow(2 * t - 2, 2) * ((c2 + 1) * (2 * t - 2) + c2) + 2) / 2;

    case K::inElastic:
        return -std::pow(2, 10 * t - 10) * std::sin((10 * t - 10.75) * c4);
    case K::outElastic:
        return std::pow(2, -10 * t) * std::sin((10 * t - 0.75) * c4) + 1;
    case K::inOutElastic:
        return t < 0.5
                   ? -std::pow(2, 20 * t - 10) * std::sin((20 * t - 11.125) * c5) / 2
                   : std::pow(2, -20 * t + 10) * std::sin((20 * t - 11.125) * c5) / 2 + 1;

    case K::inBounce: return 1 - out_bounce(1 - t);
    case K::outBounce: return out_bounce(t);
    case K::inOutBounce:
        return t < 0.5 ? (1 - out_bounce(1 - 2 * t)) / 2
                       : (1 + out_bounce(2 * t - 1)) / 2;
    }
    return t;
}

const std::vector<std::string> kNames = {
    "linear",
    "easeInSine", "easeOutSine", "easeInOutSine",
    "easeInQuad", "easeOutQuad", "easeInOutQuad",
    "easeInCubic", "easeOutCubic", "easeInOutCubic",
    "easeInQuart", "easeOutQuart", "easeInOutQuart",
    "easeInQuint", "easeOutQuint", "easeInOutQuint",
    "easeInExpo", "easeOutExpo", "easeInOutExpo",
    "easeInCirc", "easeOutCirc", "easeInOutCirc",
    "easeInBack", "easeOutBack", "easeInOutBack",
    "easeInElastic", "easeOutElastic", "easeInOutElastic",
    "easeInBounce", "easeOutBounce", "easeInOutBounce",
};

} // namespace

double ease(EasingKind kind, double t) {
    t = std::clamp(t, 0.0, 1.0);
    // Exact endpoints: finished tracks must hold targets bit-for-bit, and
    // some formulas (sine, expo, elastic) only reach 0/1 up to rounding.
    if (t == 0.0)
        return 0.0;
    if (t == 1.0)
        return 1.0;
    return eval(kind, t);
}

const std::string& easing_name(EasingKind kind) {
    return kNames[static_cast<size_t>(kind)];
}

EasingKind easing_from_name(const std::string& name) {
    for (size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name)
            return static_cast<EasingKind>(i);
    throw Error(errc::unknown_easing, "\"" + name + "\" is not in the easing catalog");
}

const std::vector<std::string>& list_easings() {
    return kNames;
}

} // namespace anim
