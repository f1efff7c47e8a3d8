#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mercer/errors.hpp"
#include "mercer/interval.hpp"

namespace mercer {

// A convex function of one real variable: an evaluator, an optional
// closed-form antiderivative, a domain, and metadata. Every instance
// is convex by construction; convexity of arbitrary callables is never
// certified at runtime.
//
// Immutable after construction; evaluation is pure and thread-safe.
class ConvexFunction {
public:
    using Eval = std::function<double(double)>;

    ConvexFunction(std::string id, std::vector<double> params, Domain domain,
                   Eval eval, Eval antiderivative = nullptr, bool operator_convex = false)
        : id_(std::move(id)),
          params_(std::move(params)),
          domain_(domain),
          eval_(std::move(eval)),
          anti_(std::move(antiderivative)),
          operator_convex_(operator_convex) {}

    const std::string& id() const { return id_; }
    const std::vector<double>& params() const { return params_; }
    const Domain& domain() const { return domain_; }
    bool has_antiderivative() const { return static_cast<bool>(anti_); }

    // Member of the operator-convex whitelist (safe under functional calculus
    // in the Loewner order). Scalar convexity alone does not qualify.
    bool operator_convex() const { return operator_convex_; }

    // f(x). Throws DomainError for x outside the domain; never returns a
    // non-finite value.
    double operator()(double x) const;

    // An antiderivative F with F' = f; only differences F(b) - F(a) are
    // meaningful. Throws InvalidInput when no closed form is available
    // (check has_antiderivative() first; quadrature is the fallback).
    double antiderivative(double x) const;

    // f + (alpha*x + beta). Affine additions preserve convexity, the
    // antiderivative, and operator convexity.
    ConvexFunction plus_affine(double alpha, double beta) const;

private:
    std::string id_;
    std::vector<double> params_;
    Domain domain_;
    Eval eval_;
    Eval anti_;
    bool operator_convex_ = false;
};

// Built-in catalog:
//   exp       e^x                 on (-inf, inf)
//   neg_log   -log x              on (0, inf)
//   square    x^2                 on (-inf, inf)
//   power_1.5 x^1.5               on [0, inf)
//   power_2   x^2                 on [0, inf)
//   power_3   x^3                 on [0, inf)
//   abs_shift |x - c|             on (-inf, inf), c = params[0]
//   entropy   x log x             on (0, inf)
//   inverse   1/x                 on (0, inf)
// All entries carry closed-form antiderivatives.
const std::vector<ConvexFunction>& catalog();

// Catalog lookup by id. Throws InvalidInput for unknown ids.
const ConvexFunction& catalog_find(const std::string& id);

// An affine function a*x + b (slack-free for every chain); handy in tests
// and harness configurations.
ConvexFunction affine_function(double slope, double intercept);

// Pointwise max of `complexity` affine functions with coefficients drawn
// deterministically from `seed`; convex by construction, with an exact
// piecewise-quadratic antiderivative. Anchor points and slopes are scaled
// to the given domain so the pieces actually show up inside it.
ConvexFunction random_convex(std::uint64_t seed, int complexity, const Interval& domain);

// Largest sampled midpoint-convexity defect
//   max over grid pairs of f((x+y)/2) - (f(x)+f(y))/2
// on a uniform grid of `grid_points` inside [iv.lo, iv.hi]. Nonpositive
// (up to rounding) for convex f.
double max_midpoint_convexity_defect(const ConvexFunction& fn, const Interval& iv,
                                     int grid_points);

}  // namespace mercer
