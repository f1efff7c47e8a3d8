#include "mercer/operators.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace mercer {

namespace {

double max_asymmetry(const HermitianMatrix& A) {
    return (A - A.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::SelfAdjointEigenSolver<HermitianMatrix> decompose(const HermitianMatrix& A) {
    Eigen::SelfAdjointEigenSolver<HermitianMatrix> solver(A);
    if (solver.info() != Eigen::Success) {
        throw Error("Hermitian eigendecomposition failed");
    }
    return solver;
}

double spectral_norm(const HermitianMatrix& A) {
    return decompose(A).eigenvalues().cwiseAbs().maxCoeff();
}

HermitianMatrix hermitize(const HermitianMatrix& A) { return 0.5 * (A + A.adjoint()); }

Verdict worse(Verdict a, Verdict b) {
    return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

void require_operator_convex(const ConvexFunction& fn) {
    if (!fn.operator_convex()) {
        throw NotOperatorConvex(fn.id() +
                                " is convex but not operator convex; Loewner-order "
                                "checks would report spurious violations");
    }
}

LoewnerReport judge_loewner(std::string chain_id, std::vector<HermitianMatrix> values,
                            const ToleranceModel& tol) {
    LoewnerReport report;
    report.chain_id = std::move(chain_id);
    report.values = std::move(values);
    report.tolerance = tol;
    std::vector<double> norms(report.values.size());
    for (std::size_t j = 0; j < report.values.size(); ++j) {
        norms[j] = spectral_norm(report.values[j]);
    }
    for (std::size_t j = 0; j + 1 < report.values.size(); ++j) {
        const HermitianMatrix diff = hermitize(report.values[j + 1] - report.values[j]);
        const double min_eig = decompose(diff).eigenvalues().minCoeff();
        report.min_eigenvalues.push_back(min_eig);
        const double scale = std::max(norms[j], norms[j + 1]);
        const double allowance = tol.tol_abs + tol.tol_rel * scale;
        report.verdicts.push_back(min_eig >= 0.0 ? Verdict::holds
                                  : min_eig < -allowance ? Verdict::violated
                                                         : Verdict::holds_at_tolerance);
    }
    return report;
}

}  // namespace

OperatorInstance::OperatorInstance(double m, double M, std::vector<double> weights,
                                   std::vector<HermitianMatrix> matrices, int max_dim)
    : m_(m), M_(M) {
    if (!(m <= M)) throw InvalidInput("operator instance requires m <= M");
    if (matrices.empty()) throw InvalidInput("operator instance requires >= 1 matrix");
    dim_ = static_cast<int>(matrices.front().rows());
    if (dim_ < 1) throw InvalidInput("matrices must be nonempty");
    if (dim_ > max_dim) {
        std::ostringstream os;
        os << "dimension " << dim_ << " exceeds cap " << max_dim;
        throw InvalidInput(os.str());
    }
    const double spectrum_tol = 1e-10 * std::max({1.0, std::abs(m), std::abs(M)});
    for (HermitianMatrix& A : matrices) {
        if (A.rows() != dim_ || A.cols() != dim_) {
            throw InvalidInput("all matrices must be square with equal dimension");
        }
        const double asym = max_asymmetry(A);
        if (asym > 1e-12 * std::max(1.0, A.cwiseAbs().maxCoeff())) {
            std::ostringstream os;
            os << "matrix is not Hermitian (asymmetry " << asym << ")";
            throw InvalidInput(os.str());
        }
        A = hermitize(A);
        const Eigen::VectorXd eigs = decompose(A).eigenvalues();
        if (eigs.minCoeff() < m - spectrum_tol || eigs.maxCoeff() > M + spectrum_tol) {
            std::ostringstream os;
            os << "spectrum [" << eigs.minCoeff() << ", " << eigs.maxCoeff()
               << "] leaves [" << m << ", " << M << "]";
            throw InvalidInput(os.str());
        }
    }
    weights_ = normalize_weights(std::move(weights), matrices.size());
    matrices_ = std::move(matrices);
}

HermitianMatrix OperatorInstance::weighted_mean() const {
    HermitianMatrix mean = HermitianMatrix::Zero(dim_, dim_);
    for (std::size_t i = 0; i < matrices_.size(); ++i) {
        mean += weights_[i] * matrices_[i];
    }
    return hermitize(mean);
}

OperatorInstance operator_instance_from_json(const nlohmann::json& j, int max_dim) {
    try {
        const double m = j.at("m").get<double>();
        const double M = j.at("M").get<double>();
        const auto weights = j.at("weights").get<std::vector<double>>();
        const nlohmann::json& mats = j.at("matrices");
        if (!mats.is_array() || mats.empty()) {
            throw InvalidInput("'matrices' must be a nonempty array");
        }
        std::vector<HermitianMatrix> matrices;
        for (const nlohmann::json& flat : mats) {
            const std::size_t len = flat.size();
            const int d = static_cast<int>(std::llround(std::sqrt(static_cast<double>(len))));
            if (static_cast<std::size_t>(d) * static_cast<std::size_t>(d) != len) {
                throw InvalidInput("matrix entry count is not a perfect square");
            }
            HermitianMatrix A(d, d);
            for (int r = 0; r < d; ++r) {
                for (int c = 0; c < d; ++c) {
                    const nlohmann::json& e = flat.at(static_cast<std::size_t>(r * d + c));
                    if (e.is_array()) {
                        A(r, c) = std::complex<double>(e.at(0).get<double>(),
                                                       e.at(1).get<double>());
                    } else {
                        A(r, c) = std::complex<double>(e.get<double>(), 0.0);
                    }
                }
            }
            matrices.push_back(std::move(A));
        }
        return OperatorInstance(m, M, weights, std::move(matrices), max_dim);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad operator instance JSON: ") + e.what());
    }
}

OperatorInstance operator_instance_from_file(const std::string& path, int max_dim) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("cannot parse '" + path + "': " + e.what());
    }
    return operator_instance_from_json(j, max_dim);
}

Verdict LoewnerReport::overall() const {
    Verdict v = Verdict::holds;
    for (Verdict link : verdicts) v = worse(v, link);
    return v;
}

double LoewnerReport::worst_min_eigenvalue() const {
    double w = std::numeric_limits<double>::infinity();
    for (double e : min_eigenvalues) w = std::min(w, e);
    return min_eigenvalues.empty() ? 0.0 : w;
}

nlohmann::json LoewnerReport::to_json() const {
    nlohmann::json j;
    j["chain_id"] = chain_id;
    j["min_eigenvalues"] = min_eigenvalues;
    nlohmann::json verdicts_json = nlohmann::json::array();
    for (Verdict v : verdicts) verdicts_json.push_back(to_string(v));
    j["verdicts"] = verdicts_json;
    j["tolerance"] = {{"tol_abs", tolerance.tol_abs}, {"tol_rel", tolerance.tol_rel}};
    return j;
}

HermitianMatrix matrix_function(const HermitianMatrix& A, const ConvexFunction& fn) {
    const auto solver = decompose(hermitize(A));
    const Eigen::VectorXd eigs = solver.eigenvalues();
    Eigen::VectorXd mapped(eigs.size());
    for (Eigen::Index k = 0; k < eigs.size(); ++k) mapped[k] = fn(eigs[k]);
    const HermitianMatrix result = solver.eigenvectors() * mapped.asDiagonal() *
                                   solver.eigenvectors().adjoint();
    return hermitize(result);
}

LoewnerReport operator_mercer(const OperatorInstance& inst, const ConvexFunction& fn,
                              const ToleranceModel& tol) {
    require_operator_convex(fn);
    const int d = inst.dim();
    const HermitianMatrix reflect =
        (inst.M() + inst.m()) * HermitianMatrix::Identity(d, d);
    const HermitianMatrix lhs = matrix_function(reflect - inst.weighted_mean(), fn);
    HermitianMatrix rhs =
        (fn(inst.M()) + fn(inst.m())) * HermitianMatrix::Identity(d, d);
    for (std::size_t i = 0; i < inst.n(); ++i) {
        if (inst.weights()[i] == 0.0) continue;
        rhs -= inst.weights()[i] * matrix_function(inst.matrices()[i], fn);
    }
    return judge_loewner("mercer", {lhs, hermitize(rhs)}, tol);
}

namespace {

// integral_0^1 f((1-t)X + tY) dt by composite Simpson, doubling the grid
// until the Richardson comparison clears tol; returns the extrapolated sum.
HermitianMatrix matrix_path_integral(const HermitianMatrix& X, const HermitianMatrix& Y,
                                     const ConvexFunction& fn,
                                     const OperatorQuadratureOptions& qopts) {
    auto node = [&](double t) {
        return matrix_function((1.0 - t) * X + t * Y, fn);
    };
    auto composite_simpson = [&](int subintervals) {
        const double h = 1.0 / subintervals;
        HermitianMatrix sum = node(0.0) + node(1.0);
        for (int k = 1; k < subintervals; ++k) {
            sum += (k % 2 == 1 ? 4.0 : 2.0) * node(k * h);
        }
        return HermitianMatrix((h / 3.0) * sum);
    };

    HermitianMatrix coarse = composite_simpson(qopts.base_subintervals / 2);
    for (int n = qopts.base_subintervals; n <= qopts.max_subintervals; n *= 2) {
        const HermitianMatrix fine = composite_simpson(n);
        const HermitianMatrix richardson = (fine - coarse) / 15.0;
        const double est = richardson.norm();  // Frobenius bounds the spectral norm
        const double scale = fine.norm();
        if (est <= qopts.tol_abs + qopts.tol_rel * scale) {
            return hermitize(fine + richardson);
        }
        coarse = fine;
    }
    throw BudgetError("matrix path integral did not converge within " +
                          std::to_string(qopts.max_subintervals) + " subintervals",
                      0.0, 0.0);
}

}  // namespace

LoewnerReport operator_theorem15(const OperatorInstance& inst, const ConvexFunction& fn,
                                 const ToleranceModel& tol,
                                 const OperatorQuadratureOptions& qopts) {
    require_operator_convex(fn);
    const int d = inst.dim();
    const HermitianMatrix reflect =
        (inst.M() + inst.m()) * HermitianMatrix::Identity(d, d);
    const HermitianMatrix X = hermitize(reflect - inst.weighted_mean());

    const HermitianMatrix v1 = matrix_function(X, fn);
    HermitianMatrix v2 = HermitianMatrix::Zero(d, d);
    HermitianMatrix v3 = HermitianMatrix::Zero(d, d);
    HermitianMatrix v4 =
        (fn(inst.M()) + fn(inst.m())) * HermitianMatrix::Identity(d, d);
    for (std::size_t i = 0; i < inst.n(); ++i) {
        if (inst.weights()[i] == 0.0) continue;
        const HermitianMatrix Y = hermitize(reflect - inst.matrices()[i]);
        v2 += inst.weights()[i] * matrix_function(0.5 * (X + Y), fn);
        v3 += inst.weights()[i] * matrix_path_integral(X, Y, fn, qopts);
        v4 -= inst.weights()[i] * matrix_function(inst.matrices()[i], fn);
    }
    return judge_loewner("theorem15",
                         {v1, hermitize(v2), hermitize(v3), hermitize(v4)}, tol);
}

}  // namespace mercer
