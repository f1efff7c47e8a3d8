#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mercer/convex_function.hpp"
#include "mercer/instance.hpp"
#include "mercer/quadrature.hpp"

namespace mercer {

struct ToleranceModel {
    double tol_abs = 1e-9;
    double tol_rel = 1e-9;
};

enum class Verdict { holds, holds_at_tolerance, violated };

const char* to_string(Verdict v);

// An ordered list of values v_1 <= ... <= v_k (the claimed order), the
// pairwise slacks v_{j+1} - v_j, and a tolerance-aware verdict per link.
// A link is violated iff slack < -(tol_abs + tol_rel * max(|v_j|, |v_{j+1}|)).
struct ChainReport {
    std::string chain_id;
    std::vector<double> values;
    std::vector<double> slacks;
    std::vector<Verdict> verdicts;
    ToleranceModel tolerance;

    Verdict overall() const;
    double worst_slack() const;

    nlohmann::json to_json() const;
    // One line per link: chain_id,link,lower,upper,slack,verdict
    std::string to_csv(bool header = true) const;
};

// Builds slacks and verdicts from raw values.
ChainReport make_chain_report(std::string chain_id, std::vector<double> values,
                              const ToleranceModel& tol = {});

struct VerdictSummary {
    std::vector<Verdict> links;
    Verdict overall;
};

// Re-judges an existing report under a (possibly different) tolerance.
VerdictSummary verify(const ChainReport& report, const ToleranceModel& tol);

// --- shared chain building blocks -----------------------------------------

// sum_i w_i f(a_i), skipping zero weights.
double weighted_f_sum(const Instance& inst, const ConvexFunction& fn);

// f(M) + f(m) - sum_i w_i f(a_i): the reflected upper bound.
double mercer_rhs(const Instance& inst, const ConvexFunction& fn);

// F(t) = sum_i w_i f(M + m - ((1-t) abar + t a_i)); F(0) collapses to
// f(M+m-abar), F(1) to sum_i w_i f(M+m-a_i).
double interpolated_reflection_sum(const Instance& inst, const ConvexFunction& fn, double t);

// sum_i w_i * mean of f over the segment [M+m-abar, M+m-a_i]; points with
// a_i ~ abar use the degenerate point limit.
double reflected_integral_term(const Instance& inst, const ConvexFunction& fn,
                               const QuadratureOptions& qopts = {});

// --- chain evaluations ------------------------------------------------------

// sum_i w_i f(a_i) - f(abar); nonnegative for convex f.
double jensen_gap(const Instance& inst, const ConvexFunction& fn);

// f(M) + f(m) - f(a_i) - f(M+m-a_i) for the i-th point; nonnegative,
// zero when a_i sits at an endpoint.
double lemma1_slack(const Instance& inst, const ConvexFunction& fn, std::size_t i);

// [f(M+m-abar), f(M)+f(m)-sum w_i f(a_i)]
ChainReport mercer_chain(const Instance& inst, const ConvexFunction& fn,
                         const ToleranceModel& tol = {});

// [f(M+m-abar), F(t), mercer rhs] for t in [0, 1]
ChainReport theorem6_chain(const Instance& inst, const ConvexFunction& fn, double t,
                           const ToleranceModel& tol = {});

// [f(M+m-abar), weighted integral means over reflected segments, mercer rhs]
ChainReport corollary14_chain(const Instance& inst, const ConvexFunction& fn,
                              const ToleranceModel& tol = {},
                              const QuadratureOptions& qopts = {});

// [f(M+m-abar), midpoint term F(1/2), integral term, mercer rhs]
ChainReport theorem15_chain(const Instance& inst, const ConvexFunction& fn,
                            const ToleranceModel& tol = {},
                            const QuadratureOptions& qopts = {});

// Geometric-mean chain obtained by exponentiating the negated neg_log
// theorem15 chain and reversing it:
//   [M m / prod a_i^{w_i}, exp(weighted log-integral term),
//    prod (M+m-(abar+a_i)/2)^{w_i}, M+m-abar]
// Requires m > 0.
ChainReport corollary18_chain(const Instance& inst, const ToleranceModel& tol = {},
                              const QuadratureOptions& qopts = {});

// Reflection-free five-value chain:
//   [f(abar), sum w_i f((abar+a_i)/2), weighted means over [abar, a_i],
//    (f(abar) + sum w_i f(a_i))/2, sum w_i f(a_i)]
ChainReport final_remark_chain(const Instance& inst, const ConvexFunction& fn,
                               const ToleranceModel& tol = {},
                               const QuadratureOptions& qopts = {});

// Two-point specialization: identical, by construction, to corollary14_chain
// on the induced instance {n=2, w=(1/2,1/2), points=(a,b)}.
ChainReport remark_two_point_chain(double m, double M, double a, double b,
                                   const ConvexFunction& fn, const ToleranceModel& tol = {},
                                   const QuadratureOptions& qopts = {});

}  // namespace mercer
