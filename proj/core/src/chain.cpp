#include "mercer/chain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace mercer {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::holds_at_tolerance: return "holds_at_tolerance";
        case Verdict::violated: return "violated";
    }
    return "?";
}

namespace {

Verdict judge_link(double lo, double hi, const ToleranceModel& tol) {
    const double slack = hi - lo;
    if (slack >= 0.0) return Verdict::holds;
    const double allowance = tol.tol_abs + tol.tol_rel * std::max(std::abs(lo), std::abs(hi));
    return slack < -allowance ? Verdict::violated : Verdict::holds_at_tolerance;
}

Verdict worse(Verdict a, Verdict b) {
    return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

std::string format_g12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace

Verdict ChainReport::overall() const {
    Verdict v = Verdict::holds;
    for (Verdict link : verdicts) v = worse(v, link);
    return v;
}

double ChainReport::worst_slack() const {
    double w = std::numeric_limits<double>::infinity();
    for (double s : slacks) w = std::min(w, s);
    return slacks.empty() ? 0.0 : w;
}

nlohmann::json ChainReport::to_json() const {
    nlohmann::json j;
    j["chain_id"] = chain_id;
    j["values"] = values;
    j["slacks"] = slacks;
    nlohmann::json verdicts_json = nlohmann::json::array();
    for (Verdict v : verdicts) verdicts_json.push_back(to_string(v));
    j["verdicts"] = verdicts_json;
    j["tolerance"] = {{"tol_abs", tolerance.tol_abs}, {"tol_rel", tolerance.tol_rel}};
    return j;
}

std::string ChainReport::to_csv(bool header) const {
    std::ostringstream os;
    if (header) os << "chain_id,link,lower,upper,slack,verdict\n";
    for (std::size_t j = 0; j + 1 < values.size(); ++j) {
        os << chain_id << ',' << j << ',' << format_g12(values[j]) << ','
           << format_g12(values[j + 1]) << ',' << format_g12(slacks[j]) << ','
           << to_string(verdicts[j]) << '\n';
    }
    return os.str();
}

ChainReport make_chain_report(std::string chain_id, std::vector<double> values,
                              const ToleranceModel& tol) {
    if (values.size() < 2) throw InvalidInput("chain needs at least two values");
    ChainReport report;
    report.chain_id = std::move(chain_id);
    report.values = std::move(values);
    report.tolerance = tol;
    report.slacks.reserve(report.values.size() - 1);
    report.verdicts.reserve(report.values.size() - 1);
    for (std::size_t j = 0; j + 1 < report.values.size(); ++j) {
        report.slacks.push_back(report.values[j + 1] - report.values[j]);
        report.verdicts.push_back(judge_link(report.values[j], report.values[j + 1], tol));
    }
    return report;
}

VerdictSummary verify(const ChainReport& report, const ToleranceModel& tol) {
    VerdictSummary summary;
    summary.overall = Verdict::holds;
    for (std::size_t j = 0; j + 1 < report.values.size(); ++j) {
        const Verdict v = judge_link(report.values[j], report.values[j + 1], tol);
        summary.links.push_back(v);
        summary.overall = worse(summary.overall, v);
    }
    return summary;
}

// --- building blocks --------------------------------------------------------

double weighted_f_sum(const Instance& inst, const ConvexFunction& fn) {
    double sum = 0.0;
    for (std::size_t i = 0; i < inst.n(); ++i) {
        if (inst.weights()[i] == 0.0) continue;
        sum += inst.weights()[i] * fn(inst.points()[i]);
    }
    return sum;
}

double mercer_rhs(const Instance& inst, const ConvexFunction& fn) {
    return fn(inst.M()) + fn(inst.m()) - weighted_f_sum(inst, fn);
}

double interpolated_reflection_sum(const Instance& inst, const ConvexFunction& fn,
                                   double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw InvalidInput("interpolation parameter t must lie in [0, 1]");
    }
    const double reflect = inst.M() + inst.m();
    double sum = 0.0;
    for (std::size_t i = 0; i < inst.n(); ++i) {
        if (inst.weights()[i] == 0.0) continue;
        const double mixed = (1.0 - t) * inst.abar() + t * inst.points()[i];
        sum += inst.weights()[i] * fn(reflect - mixed);
    }
    return sum;
}

double reflected_integral_term(const Instance& inst, const ConvexFunction& fn,
                               const QuadratureOptions& qopts) {
    const double reflect = inst.M() + inst.m();
    const double from = reflect - inst.abar();
    double sum = 0.0;
    for (std::size_t i = 0; i < inst.n(); ++i) {
        if (inst.weights()[i] == 0.0) continue;
        sum += inst.weights()[i] *
               integral_mean(fn, from, reflect - inst.points()[i], qopts).value;
    }
    return sum;
}

// --- chains ------------------------------------------------------------------

double jensen_gap(const Instance& inst, const ConvexFunction& fn) {
    return weighted_f_sum(inst, fn) - fn(inst.abar());
}

double lemma1_slack(const Instance& inst, const ConvexFunction& fn, std::size_t i) {
    if (i >= inst.n()) throw InvalidInput("lemma1_slack: point index out of range");
    const double a = inst.points()[i];
    return fn(inst.M()) + fn(inst.m()) - fn(a) - fn(inst.M() + inst.m() - a);
}

ChainReport mercer_chain(const Instance& inst, const ConvexFunction& fn,
                         const ToleranceModel& tol) {
    const double lhs = fn(inst.M() + inst.m() - inst.abar());
    return make_chain_report("mercer", {lhs, mercer_rhs(inst, fn)}, tol);
}

ChainReport theorem6_chain(const Instance& inst, const ConvexFunction& fn, double t,
                           const ToleranceModel& tol) {
    const double lhs = fn(inst.M() + inst.m() - inst.abar());
    const double middle = interpolated_reflection_sum(inst, fn, t);
    return make_chain_report("theorem6", {lhs, middle, mercer_rhs(inst, fn)}, tol);
}

ChainReport corollary14_chain(const Instance& inst, const ConvexFunction& fn,
                              const ToleranceModel& tol, const QuadratureOptions& qopts) {
    const double lhs = fn(inst.M() + inst.m() - inst.abar());
    const double middle = reflected_integral_term(inst, fn, qopts);
    return make_chain_report("corollary14", {lhs, middle, mercer_rhs(inst, fn)}, tol);
}

ChainReport theorem15_chain(const Instance& inst, const ConvexFunction& fn,
                            const ToleranceModel& tol, const QuadratureOptions& qopts) {
    const double lhs = fn(inst.M() + inst.m() - inst.abar());
    // (abar + a_i)/2 is the t = 1/2 mix, so the midpoint term is F(1/2).
    const double midpoint = interpolated_reflection_sum(inst, fn, 0.5);
    const double integral = reflected_integral_term(inst, fn, qopts);
    return make_chain_report("theorem15", {lhs, midpoint, integral, mercer_rhs(inst, fn)},
                             tol);
}

ChainReport corollary18_chain(const Instance& inst, const ToleranceModel& tol,
                              const QuadratureOptions& qopts) {
    if (!(inst.m() > 0.0)) {
        throw DomainError("corollary18 requires m > 0 (logarithm domain)");
    }
    const ChainReport log_chain =
        theorem15_chain(inst, catalog_find("neg_log"), tol, qopts);
    std::vector<double> values(log_chain.values.size());
    for (std::size_t j = 0; j < values.size(); ++j) {
        values[j] = std::exp(-log_chain.values[log_chain.values.size() - 1 - j]);
    }
    return make_chain_report("corollary18", std::move(values), tol);
}

ChainReport final_remark_chain(const Instance& inst, const ConvexFunction& fn,
                               const ToleranceModel& tol, const QuadratureOptions& qopts) {
    const double f_abar = fn(inst.abar());
    const double f_points = weighted_f_sum(inst, fn);
    double midpoint = 0.0;
    double integral = 0.0;
    for (std::size_t i = 0; i < inst.n(); ++i) {
        if (inst.weights()[i] == 0.0) continue;
        midpoint += inst.weights()[i] * fn(0.5 * (inst.abar() + inst.points()[i]));
        integral += inst.weights()[i] *
                    integral_mean(fn, inst.abar(), inst.points()[i], qopts).value;
    }
    return make_chain_report(
        "final_remark", {f_abar, midpoint, integral, 0.5 * (f_abar + f_points), f_points},
        tol);
}

ChainReport remark_two_point_chain(double m, double M, double a, double b,
                                   const ConvexFunction& fn, const ToleranceModel& tol,
                                   const QuadratureOptions& qopts) {
    const Instance induced(m, M, {0.5, 0.5}, {a, b});
    ChainReport report = corollary14_chain(induced, fn, tol, qopts);
    report.chain_id = "two_point";
    return report;
}

}  // namespace mercer
