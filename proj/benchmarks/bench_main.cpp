#include <random>

#include <benchmark/benchmark.h>

#include "indist/circuits.hpp"
#include "indist/fidelity.hpp"
#include "indist/hardy.hpp"
#include "indist/measurement.hpp"
#include "indist/measures.hpp"
#include "indist/protocols.hpp"
#include "indist/trace.hpp"

using namespace indist;

namespace {

void BM_SingletFraction(benchmark::State& state) {
    std::mt19937_64 rng(1);
    Mat g = Mat::Zero(4, 4);
    std::normal_distribution<double> n;
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 4; ++j) g(i, j) = cplx{n(rng), n(rng)};
    Mat rho = g * g.adjoint();
    rho /= rho.trace().real();
    for (auto _ : state) benchmark::DoNotOptimize(fidelity::singlet_fraction(rho));
}
BENCHMARK(BM_SingletFraction);

void BM_CircuitTables(benchmark::State& state) {
    const circuits::PhaseConfig p{0.1, 0.7, -0.4, 1.2};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            measurement::circuit_tables(circuits::li_circuit(circuits::ParticleKind::fermion, p)));
}
BENCHMARK(BM_CircuitTables);

void BM_DofTrace(benchmark::State& state) {
    const auto proj = measures::hhes_projected(circuits::ParticleKind::boson, {});
    for (auto _ : state) benchmark::DoNotOptimize(trace::trace_dof_indist(proj, {"s1", 0}));
}
BENCHMARK(BM_DofTrace);

void BM_GeneralizedSingletFraction(benchmark::State& state) {
    const auto layout = fidelity::reference_layout(fidelity::Kind::distinguishable, static_cast<int>(state.range(0)));
    const auto rho = fidelity::two_param_state(0.6, fidelity::Kind::distinguishable, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fidelity::generalized_singlet_fraction(rho, layout));
}
BENCHMARK(BM_GeneralizedSingletFraction)->Arg(2)->Arg(3);

void BM_HardyExperiment(benchmark::State& state) {
    const hardy::HardyParams p{deg2rad(51.827), deg2rad(51.827)};
    for (auto _ : state) benchmark::DoNotOptimize(hardy::run_experiment(p, {}, 10, 7, 0.01));
}
BENCHMARK(BM_HardyExperiment);

void BM_SignalingMc(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(protocols::signaling_mc(4, state.range(0), 3));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SignalingMc)->Arg(100000);

}  // namespace
BENCHMARK_MAIN();
