#include "mercer/instance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mercer {

namespace {
constexpr double kWeightSumTol = 1e-12;
}

std::vector<double> normalize_weights(std::vector<double> weights, std::size_t expected_n) {
    if (weights.size() != expected_n) {
        std::ostringstream os;
        os << "expected " << expected_n << " weights, got " << weights.size();
        throw InvalidInput(os.str());
    }
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0 && w <= 1.0)) {
            std::ostringstream os;
            os << "weight " << w << " outside [0, 1]";
            throw InvalidInput(os.str());
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTol) {
        std::ostringstream os;
        os << "weights sum to " << sum << ", more than 1e-12 away from 1";
        throw InvalidInput(os.str());
    }
    for (double& w : weights) w /= sum;
    return weights;
}

Instance::Instance(double m, double M, std::vector<double> weights,
                   std::vector<double> points)
    : m_(m), M_(M) {
    if (!(m <= M)) {
        std::ostringstream os;
        os << "instance requires m <= M, got m=" << m << ", M=" << M;
        throw InvalidInput(os.str());
    }
    if (points.empty()) throw InvalidInput("instance requires at least one point");
    if (weights.size() != points.size()) {
        std::ostringstream os;
        os << "got " << weights.size() << " weights for " << points.size() << " points";
        throw InvalidInput(os.str());
    }
    for (double a : points) {
        if (!(a >= m && a <= M)) {
            std::ostringstream os;
            os << "point " << a << " outside [" << m << ", " << M << "]";
            throw InvalidInput(os.str());
        }
    }
    weights_ = normalize_weights(std::move(weights), points.size());
    points_ = std::move(points);

    double abar = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) abar += weights_[i] * points_[i];
    // abar lies in [m, M] mathematically; rounding may push it out by ulps.
    const double scale = std::max({1.0, std::abs(m), std::abs(M)});
    if (abar < m - 1e-12 * scale || abar > M + 1e-12 * scale) {
        std::ostringstream os;
        os << "derived mean " << abar << " outside [" << m << ", " << M << "]";
        throw InvalidInput(os.str());
    }
    abar_ = std::clamp(abar, m, M);
}

}  // namespace mercer
