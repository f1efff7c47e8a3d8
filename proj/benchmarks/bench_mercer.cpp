#include <benchmark/benchmark.h>

#include "mercer/chain.hpp"
#include "mercer/harness.hpp"
#include "mercer/operators.hpp"

namespace {

mercer::Instance bench_instance(int n) {
    return mercer::random_instance(42, n, mercer::Interval{0.5, 4.0});
}

void TheoremChainSquare(benchmark::State& state) {
    const mercer::Instance inst = bench_instance(static_cast<int>(state.range(0)));
    const mercer::ConvexFunction& fn = mercer::catalog_find("square");
    for (auto _ : state) {
        benchmark::DoNotOptimize(mercer::theorem15_chain(inst, fn));
    }
}
BENCHMARK(TheoremChainSquare)->Arg(2)->Arg(8)->Arg(32);

void TheoremChainNegLog(benchmark::State& state) {
    const mercer::Instance inst = bench_instance(static_cast<int>(state.range(0)));
    const mercer::ConvexFunction& fn = mercer::catalog_find("neg_log");
    for (auto _ : state) {
        benchmark::DoNotOptimize(mercer::theorem15_chain(inst, fn));
    }
}
BENCHMARK(TheoremChainNegLog)->Arg(2)->Arg(8)->Arg(32);

void IntegralMeanAdaptiveKink(benchmark::State& state) {
    const mercer::ConvexFunction fn =
        mercer::random_convex(7, 6, mercer::Interval{0.0, 4.0});
    mercer::QuadratureOptions opts;
    opts.force_adaptive = true;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mercer::integral_mean(fn, 0.25, 3.75, opts));
    }
}
BENCHMARK(IntegralMeanAdaptiveKink);

void TrialCampaign(benchmark::State& state) {
    mercer::TrialConfig cfg;
    cfg.trials = static_cast<int>(state.range(0));
    cfg.seed = 7;
    cfg.n_max = 8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mercer::run_trials(cfg));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(TrialCampaign)->Arg(100);

void OperatorMercerDim8(benchmark::State& state) {
    mercer::Rng rng(11);
    const int d = 8;
    std::vector<mercer::HermitianMatrix> mats;
    for (int i = 0; i < 4; ++i) {
        mercer::HermitianMatrix A(d, d);
        for (int r = 0; r < d; ++r) {
            for (int c = 0; c < d; ++c) {
                A(r, c) = std::complex<double>(rng.uniform(-1, 1), rng.uniform(-1, 1));
            }
        }
        mercer::HermitianMatrix H = 0.5 * (A + A.adjoint());
        const double lo = H.selfadjointView<Eigen::Lower>().eigenvalues().minCoeff();
        const double hi = H.selfadjointView<Eigen::Lower>().eigenvalues().maxCoeff();
        // squeeze the spectrum into [1, 4]
        H = mercer::HermitianMatrix::Identity(d, d) +
            3.0 * (H - lo * mercer::HermitianMatrix::Identity(d, d)) / (hi - lo);
        mats.push_back(H);
    }
    const mercer::OperatorInstance inst(1.0, 4.0, {0.25, 0.25, 0.25, 0.25}, mats);
    const mercer::ConvexFunction& fn = mercer::catalog_find("neg_log");
    for (auto _ : state) {
        benchmark::DoNotOptimize(mercer::operator_mercer(inst, fn));
    }
}
BENCHMARK(OperatorMercerDim8);

}  // namespace

BENCHMARK_MAIN();
