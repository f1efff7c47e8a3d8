#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "mercer/chain.hpp"
#include "mercer/convex_function.hpp"

namespace mercer {

using HermitianMatrix = Eigen::MatrixXcd;

// Hermitian matrices A_1..A_n with spectra in [m, M] plus weights: the
// operator analog of Instance. Inputs are symmetrized to (A + A*)/2 when
// the asymmetry is tiny and rejected otherwise; spectra are validated on
// construction. Dimension is capped (eigendecompositions stay desk-scale).
class OperatorInstance {
public:
    static constexpr int kDefaultMaxDim = 16;

    OperatorInstance(double m, double M, std::vector<double> weights,
                     std::vector<HermitianMatrix> matrices, int max_dim = kDefaultMaxDim);

    double m() const { return m_; }
    double M() const { return M_; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<HermitianMatrix>& matrices() const { return matrices_; }
    int dim() const { return dim_; }
    std::size_t n() const { return matrices_.size(); }

    // sum_i w_i A_i
    HermitianMatrix weighted_mean() const;

private:
    double m_;
    double M_;
    std::vector<double> weights_;
    std::vector<HermitianMatrix> matrices_;
    int dim_;
};

// Parses {"m":..., "M":..., "weights":[...], "matrices":[[[re,im],...],...]}
// with row-major d x d entries; bare numbers are accepted as real entries.
OperatorInstance operator_instance_from_json(const nlohmann::json& j,
                                             int max_dim = OperatorInstance::kDefaultMaxDim);
OperatorInstance operator_instance_from_file(const std::string& path,
                                             int max_dim = OperatorInstance::kDefaultMaxDim);

// Chain of Hermitian matrices judged in the Loewner order: link j records
// the smallest eigenvalue of values[j+1] - values[j], violated iff that
// eigenvalue < -(tol_abs + tol_rel * spectral norm of the pair).
struct LoewnerReport {
    std::string chain_id;
    std::vector<HermitianMatrix> values;
    std::vector<double> min_eigenvalues;
    std::vector<Verdict> verdicts;
    ToleranceModel tolerance;

    Verdict overall() const;
    double worst_min_eigenvalue() const;

    nlohmann::json to_json() const;
};

struct OperatorQuadratureOptions {
    double tol_abs = 1e-11;
    double tol_rel = 1e-11;
    // Subinterval count of the base composite rule; each refinement doubles
    // it until the Richardson estimate clears the tolerance.
    int base_subintervals = 32;
    int max_subintervals = 4096;
};

// f(A) = U diag(f(lambda)) U* from a unitary eigendecomposition; the result
// is symmetrized back to Hermitian. Spectrum must lie inside fn's domain.
HermitianMatrix matrix_function(const HermitianMatrix& A, const ConvexFunction& fn);

// f((M+m)I - sum w_i A_i)  vs  (f(M)+f(m))I - sum w_i f(A_i).
// fn must be operator convex; plain convexity is rejected up front so
// genuine violations are never manufactured from the wrong hypothesis.
LoewnerReport operator_mercer(const OperatorInstance& inst, const ConvexFunction& fn,
                              const ToleranceModel& tol = {});

// Four-matrix lift of the scalar theorem15 chain. The integral term is the
// matrix-valued integral of t -> f((1-t)X + tY_i) with X = (M+m)I - Abar and
// Y_i = (M+m)I - A_i, computed by a composite Simpson rule with Richardson
// halving for the error estimate.
LoewnerReport operator_theorem15(const OperatorInstance& inst, const ConvexFunction& fn,
                                 const ToleranceModel& tol = {},
                                 const OperatorQuadratureOptions& qopts = {});

}  // namespace mercer
