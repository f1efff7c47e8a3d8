#include "mercer/profile.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace mercer {

FProfile f_profile(const Instance& inst, const ConvexFunction& fn, int grid_size) {
    if (grid_size < 3) throw InvalidInput("profile grid needs at least 3 points");
    FProfile profile;
    profile.grid.resize(static_cast<std::size_t>(grid_size));
    profile.values.resize(profile.grid.size());
    for (std::size_t j = 0; j < profile.grid.size(); ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(grid_size - 1);
        profile.grid[j] = t;
        profile.values[j] = interpolated_reflection_sum(inst, fn, t);
    }
    profile.endpoints = {fn(inst.M() + inst.m() - inst.abar()),
                         interpolated_reflection_sum(inst, fn, 1.0)};
    return profile;
}

std::vector<ProfileViolation> check_monotone(const FProfile& profile, double tol) {
    std::vector<ProfileViolation> violations;
    for (std::size_t j = 0; j + 1 < profile.values.size(); ++j) {
        const double defect = profile.values[j] - profile.values[j + 1];
        if (defect > tol) violations.push_back({j, j + 1, defect});
    }
    return violations;
}

std::vector<ProfileViolation> check_midpoint_convex(const FProfile& profile, double tol) {
    std::vector<ProfileViolation> violations;
    const std::vector<double>& v = profile.values;
    for (std::size_t j = 0; j < v.size(); ++j) {
        for (std::size_t k = j + 2; k < v.size(); k += 2) {
            const double defect = v[(j + k) / 2] - 0.5 * (v[j] + v[k]);
            if (defect > tol) violations.push_back({j, k, defect});
        }
    }
    return violations;
}

ProfileMeanIdentity profile_mean_identity(const Instance& inst, const ConvexFunction& fn,
                                          int grid_size) {
    if (grid_size < 33) throw InvalidInput("profile mean identity needs grid_size >= 33");
    const FProfile profile = f_profile(inst, fn, grid_size);
    const std::vector<double>& v = profile.values;
    const double h = 1.0 / static_cast<double>(grid_size - 1);

    double mean = 0.5 * (v.front() + v.back());
    for (std::size_t j = 1; j + 1 < v.size(); ++j) mean += v[j];
    mean *= h;

    // Composite trapezoid error ~ -(h/12) * sum of second differences.
    double second_diff_sum = 0.0;
    for (std::size_t j = 1; j + 1 < v.size(); ++j) {
        second_diff_sum += v[j + 1] - 2.0 * v[j] + v[j - 1];
    }
    const double bound = std::abs(second_diff_sum) * h / 12.0 + 1e-15 * std::abs(mean);

    const double integral = reflected_integral_term(inst, fn);
    return {mean, integral, mean - integral, bound};
}

std::string profile_to_csv(const FProfile& profile, bool header) {
    std::ostringstream os;
    if (header) os << "t,F\n";
    char buf[64];
    for (std::size_t j = 0; j < profile.grid.size(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g", profile.grid[j], profile.values[j]);
        os << buf << '\n';
    }
    return os.str();
}

}  // namespace mercer
