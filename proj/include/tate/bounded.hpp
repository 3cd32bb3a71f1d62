#pragma once

#include <stdexcept>

#include "tate/rational.hpp"

namespace tate {

// Exact rational center plus error radius: the closed interval
// [center - radius, center + radius]. Arithmetic is exact on both fields.
struct BoundedValue {
    Rat center;
    Rat radius;

    BoundedValue() : center(0), radius(0) {}
    BoundedValue(Rat c, Rat r) : center(std::move(c)), radius(std::move(r)) {
        if (radius < 0) throw std::invalid_argument("BoundedValue: negative radius");
    }

    static BoundedValue exact(Rat c) { return BoundedValue(std::move(c), Rat(0)); }

    bool contains(const Rat& x) const { return rat_abs(x - center) <= radius; }
    bool overlaps(const BoundedValue& o) const { return rat_abs(center - o.center) <= radius + o.radius; }
    // interval containment: every point of this lies inside o
    bool within(const BoundedValue& o) const {
        return rat_abs(center - o.center) + radius <= o.radius;
    }

    friend BoundedValue operator+(const BoundedValue& a, const BoundedValue& b) {
        return BoundedValue(a.center + b.center, a.radius + b.radius);
    }
    friend BoundedValue operator-(const BoundedValue& a, const BoundedValue& b) {
        return BoundedValue(a.center - b.center, a.radius + b.radius);
    }
    friend BoundedValue operator+(const BoundedValue& a, const Rat& c) {
        return BoundedValue(a.center + c, a.radius);
    }
};

}  // namespace tate
