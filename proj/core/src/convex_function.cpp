#include "mercer/convex_function.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "mercer/rng.hpp"

namespace mercer {

std::string Domain::to_string() const {
    std::ostringstream os;
    os << (lo_open ? '(' : '[');
    if (std::isinf(lo)) os << "-inf";
    else os << lo;
    os << ", ";
    if (std::isinf(hi)) os << "inf";
    else os << hi;
    os << (hi_open ? ')' : ']');
    return os.str();
}

double ConvexFunction::operator()(double x) const {
    if (!domain_.contains(x)) {
        std::ostringstream os;
        os << id_ << ": argument " << x << " outside domain " << domain_.to_string();
        throw DomainError(os.str());
    }
    return eval_(x);
}

double ConvexFunction::antiderivative(double x) const {
    if (!anti_) throw InvalidInput(id_ + ": no closed-form antiderivative");
    if (!domain_.contains(x)) {
        std::ostringstream os;
        os << id_ << ": antiderivative argument " << x << " outside domain "
           << domain_.to_string();
        throw DomainError(os.str());
    }
    return anti_(x);
}

ConvexFunction ConvexFunction::plus_affine(double alpha, double beta) const {
    std::vector<double> params = params_;
    params.push_back(alpha);
    params.push_back(beta);
    Eval base = eval_;
    Eval eval = [base, alpha, beta](double x) { return base(x) + alpha * x + beta; };
    Eval anti;
    if (anti_) {
        Eval base_anti = anti_;
        anti = [base_anti, alpha, beta](double x) {
            return base_anti(x) + 0.5 * alpha * x * x + beta * x;
        };
    }
    return ConvexFunction(id_ + "+affine", std::move(params), domain_, std::move(eval),
                          std::move(anti), operator_convex_);
}

namespace {

ConvexFunction make_power(double p) {
    std::ostringstream id;
    id << "power_" << p;
    // Operator convex exactly for p in [1, 2].
    const bool op_convex = p >= 1.0 && p <= 2.0;
    return ConvexFunction(
        id.str(), {p}, Domain{0.0, std::numeric_limits<double>::infinity(), false, true},
        [p](double x) { return std::pow(x, p); },
        [p](double x) { return std::pow(x, p + 1.0) / (p + 1.0); }, op_convex);
}

std::vector<ConvexFunction> build_catalog() {
    std::vector<ConvexFunction> cat;
    cat.emplace_back(
        "exp", std::vector<double>{}, Domain::all_reals(),
        [](double x) { return std::exp(x); },
        [](double x) { return std::exp(x); }, false);
    cat.emplace_back(
        "neg_log", std::vector<double>{}, Domain::open_above(0.0, true),
        [](double x) { return -std::log(x); },
        [](double x) { return x - x * std::log(x); }, true);
    cat.emplace_back(
        "square", std::vector<double>{}, Domain::all_reals(),
        [](double x) { return x * x; },
        [](double x) { return x * x * x / 3.0; }, true);
    cat.push_back(make_power(1.5));
    cat.push_back(make_power(2.0));
    cat.push_back(make_power(3.0));
    const double c = 1.0;
    cat.emplace_back(
        "abs_shift", std::vector<double>{c}, Domain::all_reals(),
        [c](double x) { return std::abs(x - c); },
        [c](double x) { return 0.5 * (x - c) * std::abs(x - c); }, false);
    cat.emplace_back(
        "entropy", std::vector<double>{}, Domain::open_above(0.0, true),
        [](double x) { return x * std::log(x); },
        [](double x) { return 0.5 * x * x * std::log(x) - 0.25 * x * x; }, true);
    cat.emplace_back(
        "inverse", std::vector<double>{}, Domain::open_above(0.0, true),
        [](double x) { return 1.0 / x; },
        [](double x) { return std::log(x); }, true);
    return cat;
}

}  // namespace

const std::vector<ConvexFunction>& catalog() {
    static const std::vector<ConvexFunction> cat = build_catalog();
    return cat;
}

const ConvexFunction& catalog_find(const std::string& id) {
    for (const ConvexFunction& fn : catalog()) {
        if (fn.id() == id) return fn;
    }
    std::ostringstream os;
    os << "unknown function id '" << id << "'; known:";
    for (const ConvexFunction& fn : catalog()) os << ' ' << fn.id();
    throw InvalidInput(os.str());
}

ConvexFunction affine_function(double slope, double intercept) {
    return ConvexFunction(
        "affine", {slope, intercept}, Domain::all_reals(),
        [slope, intercept](double x) { return slope * x + intercept; },
        [slope, intercept](double x) { return 0.5 * slope * x * x + intercept * x; },
        true);
}

namespace {

struct Line {
    double slope;
    double intercept;
    double at(double x) const { return slope * x + intercept; }
};

// Upper envelope of a set of lines, as pieces ordered by increasing slope.
// break_after[k] is the x past which piece k+1 takes over.
struct Envelope {
    std::vector<Line> pieces;
    std::vector<double> break_after;

    std::size_t piece_index(double x) const {
        std::size_t k = 0;
        while (k < break_after.size() && x > break_after[k]) ++k;
        return k;
    }
};

Envelope upper_envelope(std::vector<Line> lines) {
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        if (a.slope != b.slope) return a.slope < b.slope;
        return a.intercept < b.intercept;
    });
    Envelope env;
    std::vector<Line>& hull = env.pieces;
    std::vector<double>& bps = env.break_after;
    for (const Line& ln : lines) {
        if (!hull.empty() && hull.back().slope == ln.slope) {
            // same slope: the larger intercept dominates everywhere
            hull.pop_back();
            if (!bps.empty()) bps.pop_back();
        }
        while (!hull.empty()) {
            const Line& top = hull.back();
            const double x = (top.intercept - ln.intercept) / (ln.slope - top.slope);
            if (!bps.empty() && x <= bps.back()) {
                hull.pop_back();
                bps.pop_back();
            } else {
                bps.push_back(x);
                break;
            }
        }
        hull.push_back(ln);
    }
    return env;
}

}  // namespace

ConvexFunction random_convex(std::uint64_t seed, int complexity, const Interval& domain) {
    if (complexity < 1) throw InvalidInput("random_convex: complexity must be >= 1");
    if (!(domain.lo < domain.hi)) {
        throw InvalidInput("random_convex: domain must have positive width");
    }

    Rng rng(seed);
    const double width = domain.hi - domain.lo;
    const double slope_scale = 4.0 / width;

    std::vector<Line> lines;
    lines.reserve(static_cast<std::size_t>(complexity));
    for (int k = 0; k < complexity; ++k) {
        // Line through a random anchor inside the domain with bounded value,
        // so every line matters somewhere on [lo, hi].
        const double anchor = rng.uniform(domain.lo, domain.hi);
        const double value = rng.uniform(-1.0, 1.0);
        const double slope = rng.uniform(-slope_scale, slope_scale);
        lines.push_back(Line{slope, value - slope * anchor});
    }

    Envelope env = upper_envelope(std::move(lines));

    // Cumulative exact integrals of the envelope from domain.lo up to each
    // breakpoint; makes the antiderivative a two-term closed form per piece.
    const std::size_t first = env.piece_index(domain.lo);
    std::vector<double> cum(env.pieces.size(), 0.0);
    std::vector<double> piece_start(env.pieces.size(), domain.lo);
    double running = 0.0;
    double x_prev = domain.lo;
    for (std::size_t k = first; k < env.pieces.size(); ++k) {
        piece_start[k] = x_prev;
        cum[k] = running;
        if (k < env.break_after.size()) {
            const double x_next = env.break_after[k];
            const Line& ln = env.pieces[k];
            running += 0.5 * ln.slope * (x_next * x_next - x_prev * x_prev) +
                       ln.intercept * (x_next - x_prev);
            x_prev = x_next;
        }
    }

    auto env_ptr = std::make_shared<Envelope>(std::move(env));
    auto cum_ptr = std::make_shared<std::vector<double>>(std::move(cum));
    auto start_ptr = std::make_shared<std::vector<double>>(std::move(piece_start));

    ConvexFunction::Eval eval = [env_ptr](double x) {
        const Envelope& e = *env_ptr;
        return e.pieces[e.piece_index(x)].at(x);
    };
    ConvexFunction::Eval anti = [env_ptr, cum_ptr, start_ptr](double x) {
        const Envelope& e = *env_ptr;
        const std::size_t k = e.piece_index(x);
        const Line& ln = e.pieces[k];
        const double xs = (*start_ptr)[k];
        return (*cum_ptr)[k] + 0.5 * ln.slope * (x * x - xs * xs) +
               ln.intercept * (x - xs);
    };

    std::ostringstream id;
    id << "random_convex(seed=" << seed << ",k=" << complexity << ")";
    return ConvexFunction(id.str(),
                          {static_cast<double>(seed), static_cast<double>(complexity)},
                          Domain{domain.lo, domain.hi, false, false}, std::move(eval),
                          std::move(anti), false);
}

double max_midpoint_convexity_defect(const ConvexFunction& fn, const Interval& iv,
                                     int grid_points) {
    if (grid_points < 2) throw InvalidInput("midpoint check: need at least 2 grid points");
    std::vector<double> xs(static_cast<std::size_t>(grid_points));
    std::vector<double> fs(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(grid_points - 1);
        xs[j] = iv.lo + t * (iv.hi - iv.lo);
        fs[j] = fn(xs[j]);
    }
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < xs.size(); ++j) {
        for (std::size_t k = j; k < xs.size(); ++k) {
            const double mid = fn(0.5 * (xs[j] + xs[k]));
            worst = std::max(worst, mid - 0.5 * (fs[j] + fs[k]));
        }
    }
    return worst;
}

}  // namespace mercer
