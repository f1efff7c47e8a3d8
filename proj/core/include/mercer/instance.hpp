#pragma once

#include <cstddef>
#include <vector>

#include "mercer/errors.hpp"
#include "mercer/interval.hpp"

namespace mercer {

// A scalar problem datum: bounds m <= M, points a_i in [m, M], and weights
// w_i in [0, 1] summing to one. Weight sums within 1e-12 of one are divided
// through exactly; anything further off is rejected rather than silently
// repaired. The weighted mean abar is derived on construction.
//
// Immutable after construction.
class Instance {
public:
    Instance(double m, double M, std::vector<double> weights, std::vector<double> points);

    double m() const { return m_; }
    double M() const { return M_; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<double>& points() const { return points_; }
    double abar() const { return abar_; }
    std::size_t n() const { return points_.size(); }

private:
    double m_;
    double M_;
    std::vector<double> weights_;
    std::vector<double> points_;
    double abar_;
};

// Shared weight validation: each w in [0, 1], |sum - 1| <= 1e-12, then the
// sum is divided through. Also used for operator instances.
std::vector<double> normalize_weights(std::vector<double> weights, std::size_t expected_n);

}  // namespace mercer
