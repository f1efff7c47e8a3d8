#include "mercer/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>

#include "mercer/quadrature.hpp"

namespace mercer {

const std::vector<std::string>& default_chain_ids() {
    static const std::vector<std::string> ids = {
        "mercer", "theorem6", "corollary14", "theorem15", "final_remark", "corollary18"};
    return ids;
}

namespace {

const std::vector<double> kTheorem6Ts = {0.0, 0.25, 0.5, 0.75, 1.0};

std::vector<ConvexFunction> build_pool(const TrialConfig& cfg) {
    std::vector<ConvexFunction> pool;
    if (cfg.function_set.catalog_ids.empty()) {
        pool = catalog();
    } else {
        for (const std::string& id : cfg.function_set.catalog_ids) {
            pool.push_back(catalog_find(id));
        }
    }
    Rng rng(cfg.seed ^ 0x5eedf00dULL);
    for (int k = 0; k < cfg.function_set.random_count; ++k) {
        const std::uint64_t fn_seed = rng.next_u64();
        const int complexity = static_cast<int>(
            rng.uniform_int(1, static_cast<std::uint64_t>(
                                   std::max(1, cfg.function_set.random_complexity_max))));
        pool.push_back(random_convex(fn_seed, complexity, cfg.interval));
    }
    return pool;
}

bool hits_degenerate_branch(const Instance& inst) {
    const double from = inst.M() + inst.m() - inst.abar();
    for (double a : inst.points()) {
        if (is_degenerate_segment(from, inst.M() + inst.m() - a)) return true;
    }
    return false;
}

std::vector<ChainReport> evaluate_chain(const std::string& chain_id, const Instance& inst,
                                        const ConvexFunction& fn,
                                        const ToleranceModel& tol) {
    if (chain_id == "mercer") return {mercer_chain(inst, fn, tol)};
    if (chain_id == "theorem6") {
        std::vector<ChainReport> reports;
        for (double t : kTheorem6Ts) reports.push_back(theorem6_chain(inst, fn, t, tol));
        return reports;
    }
    if (chain_id == "corollary14") return {corollary14_chain(inst, fn, tol)};
    if (chain_id == "theorem15") return {theorem15_chain(inst, fn, tol)};
    if (chain_id == "final_remark") return {final_remark_chain(inst, fn, tol)};
    if (chain_id == "corollary18") return {corollary18_chain(inst, tol)};
    throw InvalidInput("unknown chain id '" + chain_id + "'");
}

void merge_worst(ChainStats& stats, double slack, const WorstCase& candidate) {
    const bool better =
        slack < stats.worst_slack ||
        (slack == stats.worst_slack &&
         (stats.worst.trial < 0 || candidate.trial < stats.worst.trial));
    if (better) {
        stats.worst_slack = slack;
        stats.worst = candidate;
    }
}

struct Partial {
    std::map<std::string, ChainStats> chains;
    long total_instances = 0;
    long degenerate_instances = 0;
};

Partial run_range(const TrialConfig& cfg, const std::vector<ConvexFunction>& pool,
                  long begin, long end) {
    Partial out;
    for (const std::string& id : cfg.chains) out.chains[id];  // fix key set

    for (long trial = begin; trial < end; ++trial) {
        const std::uint64_t trial_seed =
            cfg.seed ^ static_cast<std::uint64_t>(trial);
        Rng rng(trial_seed);
        const ConvexFunction& fn =
            pool[static_cast<std::size_t>(rng.uniform_int(0, pool.size() - 1))];
        const Instance inst = random_instance(rng.next_u64(), cfg.n_max, cfg.interval);

        ++out.total_instances;
        if (hits_degenerate_branch(inst)) ++out.degenerate_instances;

        for (const std::string& chain_id : cfg.chains) {
            ChainStats& stats = out.chains[chain_id];
            try {
                const std::vector<ChainReport> reports =
                    evaluate_chain(chain_id, inst, fn, cfg.tolerance);
                ++stats.trials_run;
                for (const ChainReport& report : reports) {
                    for (std::size_t j = 0; j < report.slacks.size(); ++j) {
                        switch (report.verdicts[j]) {
                            case Verdict::holds: ++stats.holds; break;
                            case Verdict::holds_at_tolerance:
                                ++stats.holds_at_tolerance;
                                break;
                            case Verdict::violated: ++stats.violated; break;
                        }
                        WorstCase candidate{trial,        trial_seed,     fn.id(), j,
                                            inst.m(),     inst.M(),       inst.points(),
                                            inst.weights()};
                        merge_worst(stats, report.slacks[j], candidate);
                    }
                }
            } catch (const BudgetError&) {
                ++stats.skipped_budget;
            } catch (const DomainError&) {
                ++stats.skipped_domain;
            }
        }
    }
    return out;
}

void merge_partial(Partial& into, const Partial& from) {
    into.total_instances += from.total_instances;
    into.degenerate_instances += from.degenerate_instances;
    for (const auto& [id, stats] : from.chains) {
        ChainStats& dst = into.chains[id];
        dst.trials_run += stats.trials_run;
        dst.holds += stats.holds;
        dst.holds_at_tolerance += stats.holds_at_tolerance;
        dst.violated += stats.violated;
        dst.skipped_domain += stats.skipped_domain;
        dst.skipped_budget += stats.skipped_budget;
        if (stats.worst.trial >= 0) merge_worst(dst, stats.worst_slack, stats.worst);
    }
}

}  // namespace

namespace {

void validate_chain_ids(const std::vector<std::string>& ids) {
    for (const std::string& id : ids) {
        if (std::find(default_chain_ids().begin(), default_chain_ids().end(), id) ==
            default_chain_ids().end()) {
            throw InvalidInput("unknown chain id '" + id + "'");
        }
    }
}

}  // namespace

Instance random_instance(std::uint64_t seed, int n_max, const Interval& interval) {
    if (n_max < 1) throw InvalidInput("random_instance: n_max must be >= 1");
    if (!(interval.lo < interval.hi)) {
        throw InvalidInput("random_instance: interval must have positive width");
    }
    Rng rng(seed);
    const double m = interval.lo;
    const double M = interval.hi;
    const std::size_t n =
        static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::uint64_t>(n_max)));

    auto draw_point = [&]() {
        const double u = rng.uniform01();
        if (u < 0.25) return m;
        if (u < 0.5) return M;
        return rng.uniform(m, M);
    };

    std::vector<double> points(n);
    if (n > 1 && rng.uniform01() < 1.0 / 32.0) {
        // all-points-equal slice: keeps the degenerate integral branch covered
        const double c = draw_point();
        std::fill(points.begin(), points.end(), c);
    } else {
        for (double& p : points) p = draw_point();
    }

    std::vector<double> weights(n);
    double sum = 0.0;
    for (double& w : weights) {
        w = 1.0 - rng.uniform01();  // (0, 1]: strictly positive
        sum += w;
    }
    for (double& w : weights) w /= sum;

    return Instance(m, M, std::move(weights), std::move(points));
}

bool SummaryReport::any_violation() const {
    for (const auto& [id, stats] : chains) {
        if (stats.violated > 0) return true;
    }
    return false;
}

nlohmann::json WorstCase::to_json() const {
    return {{"trial", trial},   {"seed", seed},     {"fn", fn_id},
            {"link", link},     {"m", m},           {"M", M},
            {"points", points}, {"weights", weights}};
}

nlohmann::json SummaryReport::to_json(bool include_wall_clock) const {
    nlohmann::json j;
    j["seed"] = seed;
    j["trials"] = trials;
    nlohmann::json chains_json = nlohmann::json::object();
    for (const auto& [id, stats] : chains) {
        nlohmann::json c;
        c["trials_run"] = stats.trials_run;
        c["worst_slack"] = stats.trials_run > 0 ? stats.worst_slack : 0.0;
        if (stats.worst.trial >= 0) c["worst"] = stats.worst.to_json();
        c["verdicts"] = {{"holds", stats.holds},
                         {"holds_at_tolerance", stats.holds_at_tolerance},
                         {"violated", stats.violated}};
        c["skipped"] = {{"domain", stats.skipped_domain}, {"budget", stats.skipped_budget}};
        chains_json[id] = c;
    }
    j["chains"] = chains_json;
    j["total_instances"] = total_instances;
    j["degenerate_instances"] = degenerate_instances;
    j["degenerate_fraction"] =
        total_instances > 0
            ? static_cast<double>(degenerate_instances) / total_instances
            : 0.0;
    if (include_wall_clock) j["wall_clock_seconds"] = wall_seconds;
    return j;
}

SummaryReport run_trials(const TrialConfig& cfg) {
    if (cfg.trials < 1) throw InvalidInput("run_trials: trials must be >= 1");
    if (cfg.n_max < 1) throw InvalidInput("run_trials: n_max must be >= 1");
    if (cfg.workers < 1) throw InvalidInput("run_trials: workers must be >= 1");
    const std::vector<ConvexFunction> pool = build_pool(cfg);
    validate_chain_ids(cfg.chains);

    const auto t0 = std::chrono::steady_clock::now();
    Partial total;
    for (const std::string& id : cfg.chains) total.chains[id];

    if (cfg.workers == 1) {
        merge_partial(total, run_range(cfg, pool, 0, cfg.trials));
    } else {
        const long chunk = (cfg.trials + cfg.workers - 1) / cfg.workers;
        std::vector<std::future<Partial>> futures;
        for (long begin = 0; begin < cfg.trials; begin += chunk) {
            const long end = std::min<long>(begin + chunk, cfg.trials);
            futures.push_back(std::async(std::launch::async, [&, begin, end] {
                return run_range(cfg, pool, begin, end);
            }));
        }
        for (auto& f : futures) merge_partial(total, f.get());
    }

    SummaryReport report;
    report.seed = cfg.seed;
    report.trials = cfg.trials;
    report.chains = std::move(total.chains);
    report.total_instances = total.total_instances;
    report.degenerate_instances = total.degenerate_instances;
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

nlohmann::json AdversarialResult::to_json() const {
    return {{"fn", fn_id},
            {"chain", chain_id},
            {"objective", objective},
            {"m", instance.m()},
            {"M", instance.M()},
            {"points", instance.points()},
            {"weights", instance.weights()},
            {"report", report.to_json()},
            {"trace", trace}};
}

namespace {

// Tightest link across all configured chains; +inf when everything skips.
double min_slack_objective(const TrialConfig& cfg, const Instance& inst,
                           const ConvexFunction& fn, std::string* chain_out,
                           ChainReport* report_out) {
    double best = std::numeric_limits<double>::infinity();
    for (const std::string& chain_id : cfg.chains) {
        try {
            for (const ChainReport& report :
                 evaluate_chain(chain_id, inst, fn, cfg.tolerance)) {
                const double slack = report.worst_slack();
                if (slack < best) {
                    best = slack;
                    if (chain_out) *chain_out = chain_id;
                    if (report_out) *report_out = report;
                }
            }
        } catch (const Error&) {
            // skipped, same policy as run_trials
        }
    }
    return best;
}

}  // namespace

AdversarialResult adversarial_search(const TrialConfig& cfg, int steps) {
    if (steps < 1) throw InvalidInput("adversarial_search: steps must be >= 1");
    const std::vector<ConvexFunction> pool = build_pool(cfg);
    validate_chain_ids(cfg.chains);

    std::optional<AdversarialResult> best;
    for (std::size_t fi = 0; fi < pool.size(); ++fi) {
        const ConvexFunction& fn = pool[fi];
        Rng rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (fi + 1)));
        Instance inst = random_instance(rng.next_u64(), cfg.n_max, cfg.interval);
        std::vector<double> points = inst.points();
        std::vector<double> weights = inst.weights();
        const double m = inst.m();
        const double M = inst.M();
        const std::size_t n = points.size();

        std::string chain_id;
        ChainReport report;
        double objective = min_slack_objective(cfg, inst, fn, &chain_id, &report);
        std::vector<double> trace;
        trace.reserve(static_cast<std::size_t>(steps));

        for (int k = 0; k < steps; ++k) {
            const double sigma =
                0.4 * (M - m) * std::exp(-3.0 * k / std::max(1, steps));
            const std::size_t coord = static_cast<std::size_t>(
                rng.uniform_int(0, 2 * n - 1));
            const double delta = sigma * (2.0 * rng.uniform01() - 1.0);

            std::vector<double> cand_points = points;
            std::vector<double> cand_weights = weights;
            if (coord < n) {
                cand_points[coord] = std::clamp(cand_points[coord] + delta, m, M);
            } else {
                cand_weights[coord - n] =
                    std::max(0.0, cand_weights[coord - n] + 0.5 * delta);
                double sum = 0.0;
                for (double w : cand_weights) sum += w;
                if (sum <= 0.0) {
                    trace.push_back(objective);
                    continue;
                }
                for (double& w : cand_weights) w /= sum;
            }

            const Instance cand(m, M, cand_weights, cand_points);
            std::string cand_chain;
            ChainReport cand_report;
            const double cand_obj =
                min_slack_objective(cfg, cand, fn, &cand_chain, &cand_report);
            if (cand_obj < objective) {
                objective = cand_obj;
                points = std::move(cand_points);
                weights = std::move(cand_weights);
                inst = cand;
                chain_id = cand_chain;
                report = cand_report;
            }
            trace.push_back(objective);
        }

        if (!best || objective < best->objective) {
            best = AdversarialResult{inst, fn.id(), chain_id, report, objective, trace};
        }
    }
    return *best;
}

}  // namespace mercer
