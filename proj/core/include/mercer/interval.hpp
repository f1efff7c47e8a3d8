#pragma once

#include <limits>
#include <string>

#include "mercer/errors.hpp"

namespace mercer {

// Closed interval [lo, hi]. Degenerate (lo == hi) is allowed.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo <= hi)) {
            throw InvalidInput("interval requires lo <= hi, got [" +
                               std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
        }
    }

    bool contains(double x) const { return lo <= x && x <= hi; }
    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
};

// Interval with independently open/closed ends; the domain of a function.
// Infinite endpoints are expressed with +-infinity and are always open.
struct Domain {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_open = true;
    bool hi_open = true;

    static Domain all_reals() { return Domain{}; }

    static Domain closed(double lo, double hi) { return Domain{lo, hi, false, false}; }

    static Domain open_above(double lo, bool lo_open) {
        return Domain{lo, std::numeric_limits<double>::infinity(), lo_open, true};
    }

    bool contains(double x) const {
        if (lo_open ? !(x > lo) : !(x >= lo)) return false;
        if (hi_open ? !(x < hi) : !(x <= hi)) return false;
        return true;
    }

    bool contains(const Interval& iv) const { return contains(iv.lo) && contains(iv.hi); }

    std::string to_string() const;
};

}  // namespace mercer
