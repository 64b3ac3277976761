#pragma once

#include <string>
#include <variant>
#include <vector>

#include "anim/error.hpp"

namespace anim {

/// A scalar or an arbitrarily nested list of scalars (points, colors,
/// matrices). The operand type of lerp and of scene property bindings.
class Value {
public:
    Value() : node_(0.0) {}
    Value(double scalar) : node_(scalar) {}
    Value(std::initializer_list<Value> items) : node_(std::vector<Value>(items)) {}
    explicit Value(std::vector<Value> items) : node_(std::move(items)) {}

    bool is_scalar() const { return std::holds_alternative<double>(node_); }
    double scalar() const { return std::get<double>(node_); }
    const std::vector<Value>& items() const { return std::get<std::vector<Value>>(node_); }
    size_t size() const { return is_scalar() ? 0 : items().size(); }

    bool operator==(const Value& other) const = default;

private:
    std::variant<double, std::vector<Value>> node_;
};

/// True iff both are scalars or both are lists of equal length with
/// pairwise compatible children.
bool shape_compatible(const Value& x, const Value& y);

/// lerp(x, y, t) = t * y + (1 - t) * x, element-wise. t is not clamped;
/// the formula is total and extrapolates. Throws shape_mismatch with the
/// diverging path in the message when the operands disagree.
Value lerp(const Value& x, const Value& y, double t);

double lerp(double x, double y, double t);

/// "[2][0]: list(3) vs scalar" style rendering, used by error messages.
std::string shape_string(const Value& v);

} // namespace anim
