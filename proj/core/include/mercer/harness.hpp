#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mercer/chain.hpp"
#include "mercer/interval.hpp"
#include "mercer/rng.hpp"

namespace mercer {

// Chains run_trials knows how to evaluate. theorem6 is swept over
// t in {0, 1/4, 1/2, 3/4, 1} per trial.
const std::vector<std::string>& default_chain_ids();

struct FunctionSet {
    // Empty means the full built-in catalog.
    std::vector<std::string> catalog_ids;
    int random_count = 0;
    int random_complexity_max = 6;
};

struct TrialConfig {
    int trials = 1000;
    std::uint64_t seed = 0;
    int n_max = 8;
    Interval interval{0.1, 4.0};
    FunctionSet function_set{};
    ToleranceModel tolerance{};
    std::vector<std::string> chains = default_chain_ids();
    int workers = 1;
};

struct WorstCase {
    long trial = -1;
    std::uint64_t seed = 0;
    std::string fn_id;
    std::size_t link = 0;
    double m = 0, M = 0;
    std::vector<double> points;
    std::vector<double> weights;

    nlohmann::json to_json() const;
};

struct ChainStats {
    long trials_run = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    WorstCase worst;
    long holds = 0;
    long holds_at_tolerance = 0;
    long violated = 0;
    long skipped_domain = 0;
    long skipped_budget = 0;
};

struct SummaryReport {
    std::uint64_t seed = 0;
    int trials = 0;
    // std::map keeps chain order stable so serialized reports are
    // byte-identical across runs and worker counts.
    std::map<std::string, ChainStats> chains;
    long total_instances = 0;
    long degenerate_instances = 0;
    double wall_seconds = 0.0;

    bool any_violation() const;
    nlohmann::json to_json(bool include_wall_clock = true) const;
};

// Deterministic instance generator: n uniform in [1, n_max], points uniform
// in [interval.lo, interval.hi] but pinned to an endpoint with probability
// 1/4 each (equality cases are where tolerance bugs hide), weights positive
// and normalized. A small slice of instances is made all-points-equal to
// keep the degenerate integral branch exercised.
Instance random_instance(std::uint64_t seed, int n_max, const Interval& interval);

// Evaluates every configured chain on `trials` random (instance, function)
// pairs. Per-trial seeds are derived as seed XOR trial-index, so the result
// is identical for any worker count. Domain and budget errors are counted
// as skips; violations are recorded, never fatal.
SummaryReport run_trials(const TrialConfig& cfg);

struct AdversarialResult {
    Instance instance;
    std::string fn_id;
    std::string chain_id;
    ChainReport report;   // chain holding the tightest link found
    double objective = 0; // most negative slack seen
    std::vector<double> trace;  // best objective after each step

    nlohmann::json to_json() const;
};

// Coordinate-wise hill climb on (points, weights) minimizing the tightest
// link slack, projected back to the feasible set each step. A bounded
// stress search, not a certifier.
AdversarialResult adversarial_search(const TrialConfig& cfg, int steps);

}  // namespace mercer
