#include "anim/interp.hpp"

namespace anim {

namespace {

void lerp_into(const Value& x, const Value& y, double t, const std::string& path, Value& out) {
    if (x.is_scalar() && y.is_scalar()) {
        out = Value(t * y.scalar() + (1 - t) * x.scalar());
        return;
    }
    if (x.is_scalar() != y.is_scalar() || x.size() != y.size()) {
        throw Error(errc::shape_mismatch,
                    "at " + (path.empty() ? std::string("root") : path) + ": " +
                        shape_string(x) + " vs " + shape_string(y));
    }
    std::vector<Value> items;
    items.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        Value child;
        lerp_into(x.items()[i], y.items()[i], t, path + "[" + std::to_string(i) + "]", child);
        items.push_back(std::move(child));
    }
    out = Value(std::move(items));
}

} // namespace

bool shape_compatible(const Value& x, const Value& y) {
    if (x.is_scalar() || y.is_scalar())
        return x.is_scalar() && y.is_scalar();
    if (x.size() != y.size())
        return false;
    for (size_t i = 0; i < x.size(); ++i)
        if (!shape_compatible(x.items()[i], y.items()[i]))
            return false;
    return true;
}

Value lerp(const Value& x, const Value& y, double t) {
    Value out;
    lerp_into(x, y, t, "", out);
    return out;
}

double lerp(double x, double y, double t) {
    return t * y + (1 - t) * x;
}

std::string shape_string(const Value& v) {
    if (v.is_scalar())
        return "scalar";
    return "list(" + std::to_string(v.size()) + ")";
}

} // namespace anim
