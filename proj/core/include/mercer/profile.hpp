#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mercer/chain.hpp"

namespace mercer {

// F(t) = sum_i w_i f(M+m-((1-t) abar + t a_i)) sampled on a uniform grid
// over [0, 1]. F is nondecreasing and convex; `endpoints` holds the analytic
// identities F(0) = f(M+m-abar) and F(1) = sum_i w_i f(M+m-a_i) for
// cross-checking against the sampled values.
struct FProfile {
    std::vector<double> grid;
    std::vector<double> values;
    std::pair<double, double> endpoints;
};

struct ProfileViolation {
    std::size_t j;
    std::size_t k;
    double defect;
};

// Samples F on grid_size >= 3 uniform points.
FProfile f_profile(const Instance& inst, const ConvexFunction& fn, int grid_size);

// Indices where values[j+1] < values[j] - tol.
std::vector<ProfileViolation> check_monotone(const FProfile& profile, double tol);

// Pairs (j, k) with j + k even where the grid midpoint value exceeds the
// average: values[(j+k)/2] > (values[j] + values[k])/2 + tol.
std::vector<ProfileViolation> check_midpoint_convex(const FProfile& profile, double tol);

struct ProfileMeanIdentity {
    double profile_mean;    // trapezoidal mean of F over [0, 1]
    double integral_term;   // weighted reflected integral means
    double difference;      // profile_mean - integral_term
    double error_bound;     // trapezoid-rule bound from second differences
};

// The trapezoidal mean of F over [0,1] approaches the weighted integral term
// at O(G^-2); both are reported, nothing is asserted exact. grid_size >= 33.
ProfileMeanIdentity profile_mean_identity(const Instance& inst, const ConvexFunction& fn,
                                          int grid_size);

// Two-column CSV (t, F) for external plotting.
std::string profile_to_csv(const FProfile& profile, bool header = true);

}  // namespace mercer
