// mercer: numeric verification of convex bound chains between a function of a
// weighted mean and its reflected upper bound, plus profile sweeps, randomized
// trial campaigns, and Loewner-order checks for Hermitian matrix arguments.
//
// Exit codes: 0 all links hold, 1 some link violated, 2 usage/domain error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mercer/chain.hpp"
#include "mercer/harness.hpp"
#include "mercer/operators.hpp"
#include "mercer/profile.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;

std::string g12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// All floating-point output carries 12 significant digits, in every format,
// so pretty and JSON views encode identical values.
double round12(double x) { return std::strtod(g12(x).c_str(), nullptr); }

nlohmann::json round_floats(const nlohmann::json& j) {
    if (j.is_number_float()) return round12(j.get<double>());
    if (j.is_array()) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& e : j) out.push_back(round_floats(e));
        return out;
    }
    if (j.is_object()) {
        nlohmann::json out = nlohmann::json::object();
        for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = round_floats(it.value());
        return out;
    }
    return j;
}

std::vector<double> parse_csv_doubles(const std::string& text, const std::string& what) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string token = text.substr(pos, comma - pos);
        if (token.empty()) throw mercer::InvalidInput(what + ": empty entry");
        char* end = nullptr;
        const double v = std::strtod(token.c_str(), &end);
        if (end == token.c_str() || *end != '\0') {
            throw mercer::InvalidInput(what + ": cannot parse '" + token + "'");
        }
        values.push_back(v);
        pos = comma + 1;
    }
    return values;
}

std::vector<std::string> parse_csv_strings(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(text.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

void print_chain_pretty(const mercer::ChainReport& report) {
    std::cout << "chain_id: " << report.chain_id << "\n";
    std::cout << "values:  ";
    for (double v : report.values) std::cout << ' ' << g12(v);
    std::cout << "\nslacks:  ";
    for (double s : report.slacks) std::cout << ' ' << g12(s);
    std::cout << "\nverdicts:";
    for (mercer::Verdict v : report.verdicts) std::cout << ' ' << mercer::to_string(v);
    std::cout << "\noverall:  " << mercer::to_string(report.overall()) << "\n";
}

void emit_chain(const mercer::ChainReport& report, const std::string& format) {
    if (format == "json") {
        std::cout << round_floats(report.to_json()).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << report.to_csv();
    } else {
        print_chain_pretty(report);
    }
}

struct ScalarArgs {
    std::string fn_id;
    double m = 0.0;
    double M = 1.0;
    std::string points_text;
    std::string weights_text;
    double tol_abs = 1e-9;
    double tol_rel = 1e-9;
    std::string format = "pretty";
};

mercer::Instance build_instance(const ScalarArgs& args) {
    std::vector<double> points = parse_csv_doubles(args.points_text, "--points");
    std::vector<double> weights;
    if (args.weights_text.empty()) {
        weights.assign(points.size(), 1.0 / static_cast<double>(points.size()));
    } else {
        weights = parse_csv_doubles(args.weights_text, "--weights");
    }
    return mercer::Instance(args.m, args.M, std::move(weights), std::move(points));
}

int run_chain(const ScalarArgs& args, const std::string& chain_id, double t) {
    const mercer::ToleranceModel tol{args.tol_abs, args.tol_rel};
    mercer::ChainReport report;

    if (chain_id == "corollary18") {
        if (!args.fn_id.empty() && args.fn_id != "neg_log") {
            throw mercer::InvalidInput("corollary18 is the neg_log chain; drop --fn or "
                                       "pass --fn neg_log");
        }
        report = mercer::corollary18_chain(build_instance(args), tol);
    } else if (chain_id == "two_point") {
        const std::vector<double> pts = parse_csv_doubles(args.points_text, "--points");
        if (pts.size() != 2) throw mercer::InvalidInput("two_point needs exactly 2 points");
        if (!args.weights_text.empty()) {
            const std::vector<double> w = parse_csv_doubles(args.weights_text, "--weights");
            if (w.size() != 2 || w[0] != 0.5 || w[1] != 0.5) {
                throw mercer::InvalidInput("two_point uses equal weights; drop --weights");
            }
        }
        report = mercer::remark_two_point_chain(args.m, args.M, pts[0], pts[1],
                                                mercer::catalog_find(args.fn_id), tol);
    } else {
        if (args.fn_id.empty()) throw mercer::InvalidInput("--fn is required");
        const mercer::ConvexFunction& fn = mercer::catalog_find(args.fn_id);
        const mercer::Instance inst = build_instance(args);
        if (chain_id == "mercer") report = mercer::mercer_chain(inst, fn, tol);
        else if (chain_id == "theorem6") report = mercer::theorem6_chain(inst, fn, t, tol);
        else if (chain_id == "corollary14") report = mercer::corollary14_chain(inst, fn, tol);
        else if (chain_id == "theorem15") report = mercer::theorem15_chain(inst, fn, tol);
        else if (chain_id == "final_remark") report = mercer::final_remark_chain(inst, fn, tol);
        else throw mercer::InvalidInput("unknown chain '" + chain_id + "'");
    }

    emit_chain(report, args.format);
    return report.overall() == mercer::Verdict::violated ? kExitViolated : kExitHolds;
}

int run_sweep(const ScalarArgs& args, int grid, double check_tol) {
    if (args.fn_id.empty()) throw mercer::InvalidInput("--fn is required");
    const mercer::ConvexFunction& fn = mercer::catalog_find(args.fn_id);
    const mercer::Instance inst = build_instance(args);
    const mercer::FProfile profile = mercer::f_profile(inst, fn, grid);
    const auto monotone = mercer::check_monotone(profile, check_tol);
    const auto convex = mercer::check_midpoint_convex(profile, check_tol);

    if (args.format == "json") {
        nlohmann::json j;
        j["grid"] = profile.grid;
        j["values"] = profile.values;
        j["endpoints"] = {profile.endpoints.first, profile.endpoints.second};
        j["monotone_violations"] = monotone.size();
        j["convexity_violations"] = convex.size();
        std::cout << round_floats(j).dump(2) << "\n";
    } else {
        std::cout << mercer::profile_to_csv(profile);
        std::cerr << "monotone: " << (monotone.empty() ? "ok" : "violated")
                  << ", midpoint-convex: " << (convex.empty() ? "ok" : "violated") << "\n";
    }
    return monotone.empty() && convex.empty() ? kExitHolds : kExitViolated;
}

void print_trials_pretty(const mercer::SummaryReport& report) {
    std::cout << "trials: " << report.trials << "  seed: " << report.seed
              << "  degenerate_fraction: "
              << g12(report.total_instances > 0
                         ? static_cast<double>(report.degenerate_instances) /
                               report.total_instances
                         : 0.0)
              << "\n";
    for (const auto& [id, stats] : report.chains) {
        std::cout << "  " << id << ": run=" << stats.trials_run
                  << " worst_slack=" << g12(stats.trials_run ? stats.worst_slack : 0.0)
                  << " holds=" << stats.holds
                  << " at_tol=" << stats.holds_at_tolerance
                  << " violated=" << stats.violated
                  << " skipped(domain=" << stats.skipped_domain
                  << ",budget=" << stats.skipped_budget << ")\n";
    }
    std::cout << "wall_clock_seconds: " << g12(report.wall_seconds) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numeric checks for convex bound chains on weighted means"};
    app.require_subcommand(1);
    std::string format = "pretty";

    // --- chain ---------------------------------------------------------------
    ScalarArgs chain_args;
    std::string chain_id;
    double theorem6_t = 0.5;
    CLI::App* chain = app.add_subcommand("chain", "evaluate one chain on one instance");
    chain->add_option("--fn", chain_args.fn_id, "catalog function id (see `catalog`)");
    chain->add_option("--m", chain_args.m, "lower bound m")->required();
    chain->add_option("--M", chain_args.M, "upper bound M")->required();
    chain->add_option("--points", chain_args.points_text, "comma-separated points in [m,M]")
        ->required();
    chain->add_option("--weights", chain_args.weights_text,
                      "comma-separated weights (default: equal)");
    chain->add_option("--chain", chain_id, "one of: mercer, theorem6, corollary14, "
                                           "theorem15, corollary18, final_remark, two_point")
        ->required();
    chain->add_option("--t", theorem6_t, "interpolation parameter for theorem6")
        ->check(CLI::Range(0.0, 1.0));
    chain->add_option("--tol-abs", chain_args.tol_abs, "absolute link tolerance");
    chain->add_option("--tol-rel", chain_args.tol_rel, "relative link tolerance");
    chain->add_option("--format", chain_args.format, "json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));

    // --- sweep ---------------------------------------------------------------
    ScalarArgs sweep_args;
    int grid = 101;
    double check_tol = 1e-10;
    CLI::App* sweep = app.add_subcommand("sweep", "sample F(t) on [0,1] and check "
                                                  "monotonicity and midpoint convexity");
    sweep->add_option("--fn", sweep_args.fn_id, "catalog function id")->required();
    sweep->add_option("--m", sweep_args.m, "lower bound m")->required();
    sweep->add_option("--M", sweep_args.M, "upper bound M")->required();
    sweep->add_option("--points", sweep_args.points_text, "comma-separated points")
        ->required();
    sweep->add_option("--weights", sweep_args.weights_text, "weights (default: equal)");
    sweep->add_option("--grid", grid, "grid size (>= 3)");
    sweep->add_option("--check-tol", check_tol, "tolerance for the profile checks");
    sweep->add_option("--format", sweep_args.format, "json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));

    // --- trials ----------------------------------------------------------------
    mercer::TrialConfig cfg;
    std::string functions_text;
    std::string chains_text;
    int adversarial_steps = 0;
    CLI::App* trials = app.add_subcommand("trials", "randomized verification campaign");
    trials->add_option("--trials", cfg.trials, "number of trials");
    trials->add_option("--seed", cfg.seed, "campaign seed");
    trials->add_option("--n-max", cfg.n_max, "maximum points per instance");
    trials->add_option("--lo", cfg.interval.lo, "instance interval lower end");
    trials->add_option("--hi", cfg.interval.hi, "instance interval upper end");
    trials->add_option("--functions", functions_text,
                       "comma-separated catalog ids (default: full catalog)");
    trials->add_option("--random-fns", cfg.function_set.random_count,
                       "number of generated max-of-affine functions");
    trials->add_option("--complexity-max", cfg.function_set.random_complexity_max,
                       "max pieces per generated function");
    trials->add_option("--chains", chains_text,
                       "comma-separated chain ids (default: all)");
    trials->add_option("--tol-abs", cfg.tolerance.tol_abs, "absolute link tolerance");
    trials->add_option("--tol-rel", cfg.tolerance.tol_rel, "relative link tolerance");
    trials->add_option("--workers", cfg.workers, "concurrent workers");
    trials->add_option("--adversarial", adversarial_steps,
                       "run a hill-climb stress search with this many steps instead "
                       "of random trials");
    trials->add_option("--format", format, "json|pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    // --- operator ----------------------------------------------------------------
    std::string op_file, op_fn, op_chain = "mercer";
    mercer::ToleranceModel op_tol{1e-9, 1e-9};
    std::string op_format = "pretty";
    int max_dim = mercer::OperatorInstance::kDefaultMaxDim;
    CLI::App* op = app.add_subcommand("operator", "Loewner-order chain checks for "
                                                  "Hermitian matrices from a JSON file");
    op->add_option("--file", op_file, "instance JSON file")->required();
    op->add_option("--fn", op_fn, "operator-convex catalog function id")->required();
    op->add_option("--chain", op_chain, "mercer|theorem15")
        ->check(CLI::IsMember({"mercer", "theorem15"}));
    op->add_option("--tol-abs", op_tol.tol_abs, "absolute tolerance");
    op->add_option("--tol-rel", op_tol.tol_rel, "relative tolerance");
    op->add_option("--max-dim", max_dim, "dimension cap");
    op->add_option("--format", op_format, "json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));

    // --- catalog ---------------------------------------------------------------
    std::string catalog_format = "pretty";
    CLI::App* cat = app.add_subcommand("catalog", "list the built-in convex functions");
    cat->add_subcommand("list", "list the catalog (default)");
    cat->add_option("--format", catalog_format, "json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*chain) return run_chain(chain_args, chain_id, theorem6_t);
        if (*sweep) return run_sweep(sweep_args, grid, check_tol);
        if (*trials) {
            if (!functions_text.empty()) {
                cfg.function_set.catalog_ids = parse_csv_strings(functions_text);
            }
            if (!chains_text.empty()) cfg.chains = parse_csv_strings(chains_text);
            if (adversarial_steps > 0) {
                const mercer::AdversarialResult result =
                    mercer::adversarial_search(cfg, adversarial_steps);
                if (format == "json") {
                    std::cout << round_floats(result.to_json()).dump(2) << "\n";
                } else {
                    std::cout << "fn: " << result.fn_id << "  chain: " << result.chain_id
                              << "  objective: " << g12(result.objective) << "\n";
                    print_chain_pretty(result.report);
                }
                return result.report.overall() == mercer::Verdict::violated
                           ? kExitViolated
                           : kExitHolds;
            }
            const mercer::SummaryReport report = mercer::run_trials(cfg);
            if (format == "json") {
                std::cout << round_floats(report.to_json()).dump(2) << "\n";
            } else {
                print_trials_pretty(report);
            }
            return report.any_violation() ? kExitViolated : kExitHolds;
        }
        if (*op) {
            const mercer::OperatorInstance inst =
                mercer::operator_instance_from_file(op_file, max_dim);
            const mercer::ConvexFunction& fn = mercer::catalog_find(op_fn);
            const mercer::LoewnerReport report =
                op_chain == "mercer" ? mercer::operator_mercer(inst, fn, op_tol)
                                     : mercer::operator_theorem15(inst, fn, op_tol);
            if (op_format == "json") {
                std::cout << round_floats(report.to_json()).dump(2) << "\n";
            } else if (op_format == "csv") {
                std::cout << "chain_id,link,min_eigenvalue,verdict\n";
                for (std::size_t j = 0; j < report.min_eigenvalues.size(); ++j) {
                    std::cout << report.chain_id << ',' << j << ','
                              << g12(report.min_eigenvalues[j]) << ','
                              << mercer::to_string(report.verdicts[j]) << "\n";
                }
            } else {
                std::cout << "chain_id: " << report.chain_id << "\nmin_eigenvalues:";
                for (double e : report.min_eigenvalues) std::cout << ' ' << g12(e);
                std::cout << "\nverdicts:";
                for (mercer::Verdict v : report.verdicts)
                    std::cout << ' ' << mercer::to_string(v);
                std::cout << "\noverall: " << mercer::to_string(report.overall()) << "\n";
            }
            return report.overall() == mercer::Verdict::violated ? kExitViolated
                                                                 : kExitHolds;
        }
        if (*cat) {
            if (catalog_format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const mercer::ConvexFunction& fn : mercer::catalog()) {
                    j.push_back({{"id", fn.id()},
                                 {"params", fn.params()},
                                 {"domain", fn.domain().to_string()},
                                 {"operator_convex", fn.operator_convex()}});
                }
                std::cout << round_floats(j).dump(2) << "\n";
            } else if (catalog_format == "csv") {
                std::cout << "id,params,domain,operator_convex\n";
                for (const mercer::ConvexFunction& fn : mercer::catalog()) {
                    std::cout << fn.id() << ',';
                    for (std::size_t k = 0; k < fn.params().size(); ++k) {
                        if (k) std::cout << ' ';
                        std::cout << g12(fn.params()[k]);
                    }
                    std::cout << ',' << fn.domain().to_string() << ','
                              << (fn.operator_convex() ? "yes" : "no") << "\n";
                }
            } else {
                std::printf("%-12s %-14s %-14s %s\n", "id", "params", "domain",
                            "operator_convex");
                for (const mercer::ConvexFunction& fn : mercer::catalog()) {
                    std::string params;
                    for (std::size_t k = 0; k < fn.params().size(); ++k) {
                        if (k) params += ' ';
                        params += g12(fn.params()[k]);
                    }
                    std::printf("%-12s %-14s %-14s %s\n", fn.id().c_str(), params.c_str(),
                                fn.domain().to_string().c_str(),
                                fn.operator_convex() ? "yes" : "no");
                }
            }
            return kExitHolds;
        }
    } catch (const mercer::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
