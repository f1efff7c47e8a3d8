#include "mercer/quadrature.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace mercer {

const char* to_string(QuadratureMethod m) {
    switch (m) {
        case QuadratureMethod::antiderivative: return "antiderivative";
        case QuadratureMethod::adaptive: return "adaptive";
        case QuadratureMethod::degenerate_limit: return "degenerate_limit";
    }
    return "?";
}

namespace {

double simpson(double h, double fa, double fm, double fb) {
    return (fa + 4.0 * fm + fb) * (h / 6.0);
}

struct Panel {
    double a, b;
    double fa, fm, fb;
    double s;  // Simpson estimate over [a, b]
};

}  // namespace

QuadratureResult integral_mean(const ConvexFunction& fn, double a, double b,
                               const QuadratureOptions& opts) {
    if (is_degenerate_segment(a, b)) {
        return {fn(0.5 * (a + b)), 0.0, QuadratureMethod::degenerate_limit};
    }

    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    if (!fn.domain().contains(lo) || !fn.domain().contains(hi)) {
        std::ostringstream os;
        os << fn.id() << ": segment [" << lo << ", " << hi << "] leaves domain "
           << fn.domain().to_string();
        throw DomainError(os.str());
    }
    const double width = hi - lo;

    if (fn.has_antiderivative() && !opts.force_adaptive) {
        const double flo = fn.antiderivative(lo);
        const double fhi = fn.antiderivative(hi);
        const double value = (fhi - flo) / width;
        const double eps = std::numeric_limits<double>::epsilon();
        const double err = 4.0 * eps * (std::abs(fhi) + std::abs(flo)) / width +
                           4.0 * eps * std::abs(value);
        return {value, err, QuadratureMethod::antiderivative};
    }

    // Adaptive Simpson: bisect panels, compare the one-panel rule against the
    // two-half rule, keep the Richardson-corrected sum once the comparison is
    // below the panel's share of the tolerance.
    const double fa0 = fn(lo);
    const double fm0 = fn(0.5 * (lo + hi));
    const double fb0 = fn(hi);
    const double s0 = simpson(width, fa0, fm0, fb0);

    // Absolute tolerance on the full integral; panels get a width-prorated cut.
    const double eps_int = opts.tol_abs * width + opts.tol_rel * std::abs(s0);
    const double min_width = 8.0 * std::numeric_limits<double>::epsilon() *
                             std::max({1.0, std::abs(lo), std::abs(hi)});

    std::vector<Panel> stack;
    stack.push_back({lo, hi, fa0, fm0, fb0, s0});
    double sum = 0.0;
    double err_sum = 0.0;
    int used = 0;
    bool out_of_budget = false;

    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        ++used;

        const double h = p.b - p.a;
        const double m = 0.5 * (p.a + p.b);
        const double lm = 0.5 * (p.a + m);
        const double rm = 0.5 * (m + p.b);
        const double flm = fn(lm);
        const double frm = fn(rm);
        const double sl = simpson(m - p.a, p.fa, flm, p.fm);
        const double sr = simpson(p.b - m, p.fm, frm, p.fb);
        const double s2 = sl + sr;
        const double err = (s2 - p.s) / 15.0;

        const bool converged = std::abs(err) <= eps_int * (h / width);
        if (converged || h <= min_width || out_of_budget) {
            sum += s2 + err;
            err_sum += std::abs(err);
            continue;
        }
        if (used >= opts.max_intervals) out_of_budget = true;
        stack.push_back({m, p.b, p.fm, frm, p.fb, sr});
        stack.push_back({p.a, m, p.fa, flm, p.fm, sl});
    }

    const double mean = sum / width;
    const double mean_err = err_sum / width;
    if (out_of_budget) {
        std::ostringstream os;
        os << fn.id() << ": adaptive quadrature exceeded budget of "
           << opts.max_intervals << " intervals on [" << lo << ", " << hi << "]";
        throw BudgetError(os.str(), mean, mean_err);
    }
    return {mean, mean_err, QuadratureMethod::adaptive};
}

}  // namespace mercer
