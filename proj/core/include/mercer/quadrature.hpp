#pragma once

#include <algorithm>
#include <cmath>

#include "mercer/convex_function.hpp"

namespace mercer {

// Relative half-width below which a segment is treated as a point and the
// integral mean collapses to f of the midpoint. Matches the limit of
// w/(abar-a) * integral as the segment shrinks.
inline constexpr double kDegenerateEps = 1e-9;

inline bool is_degenerate_segment(double a, double b) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(b - a) <= kDegenerateEps * scale;
}

struct QuadratureOptions {
    double tol_abs = 1e-10;
    double tol_rel = 1e-10;
    // Maximum number of panels the adaptive integrator may process.
    int max_intervals = 10000;
    // Skip the antiderivative fast path (used to cross-check the two routes).
    bool force_adaptive = false;
};

enum class QuadratureMethod { antiderivative, adaptive, degenerate_limit };

const char* to_string(QuadratureMethod m);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    QuadratureMethod method = QuadratureMethod::adaptive;
};

// Mean value of fn over the segment between a and b:
//   (1/(b-a)) * integral_a^b fn
// Orientation-independent bit for bit (the 1/(b-a) sign cancels reversed
// limits, so the segment is normalized before integrating). Degenerate
// segments return fn((a+b)/2) with method degenerate_limit.
//
// Throws DomainError if the segment leaves fn's domain and BudgetError
// (carrying the best estimate) if the adaptive subdivision budget runs out.
QuadratureResult integral_mean(const ConvexFunction& fn, double a, double b,
                               const QuadratureOptions& opts = {});

}  // namespace mercer
