#pragma once

#include <string>
#include <vector>

#include "anim/error.hpp"

namespace anim {

/// The standard easing catalog: linear plus {in, out, inOut} of ten
/// families. Names follow the usual lower-camel spelling
/// ("easeInOutCubic", "easeOutBack", ...).
enum class EasingKind {
    linear,
    inSine, outSine, inOutSine,
    inQuad, outQuad, inOutQuad,
    inCubic, outCubic, inOutCubic,
    inQuart, outQuart, inOutQuart,
    inQuint, outQuint, inOutQuint,
    inExpo, outExpo, inOutExpo,
    inCirc, outCirc, inOutCirc,
    inBack, outBack, inOutBack,
    inElastic, outElastic, inOutElastic,
    inBounce, outBounce, inOutBounce,
};

inline constexpr int kEasingCount = 31;

/// Evaluate an easing at t. t is clamped to [0, 1] first, and the
/// endpoints map to exactly 0 and 1 so that finished tracks hold their
/// target values bit-for-bit. Back and elastic kinds overshoot [0, 1]
/// in the interior.
double ease(EasingKind kind, double t);

/// Canonical name ("easeOutBack"); inverse of easing_from_name.
const std::string& easing_name(EasingKind kind);

/// Throws unknown_easing for names outside the catalog.
EasingKind easing_from_name(const std::string& name);

/// All 31 canonical names in stable catalog order.
const std::vector<std::string>& list_easings();

} // namespace anim
