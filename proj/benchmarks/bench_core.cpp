#include <benchmark/benchmark.h>

#include "ridgekit/estimators.hpp"
#include "ridgekit/linalg.hpp"
#include "ridgekit/random.hpp"
#include "ridgekit/regression.hpp"
#include "ridgekit/simulation.hpp"

namespace {

using namespace ridgekit;

void BM_StandardNormal(benchmark::State& state) {
    RandomStream stream(1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stream.next_normal());
    }
}
BENCHMARK(BM_StandardNormal);

void BM_SymEig(benchmark::State& state) {
    const Eigen::Index p = state.range(0);
    RandomStream stream(2, 0);
    Eigen::MatrixXd m(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        for (Eigen::Index j = 0; j < p; ++j) m(i, j) = stream.next_normal();
    }
    const Eigen::MatrixXd a = m * m.transpose();
    for (auto _ : state) {
        benchmark::DoNotOptimize(sym_eig(a));
    }
}
BENCHMARK(BM_SymEig)->Arg(4)->Arg(8)->Arg(16);

void BM_EstimateAll(benchmark::State& state) {
    const SimulationCell cell{0.9, 100, static_cast<int>(state.range(0)), 1.0, 1, 3};
    RandomStream stream(cell.seed, cell_stream_id(cell, 0));
    const Eigen::MatrixXd x = generate_x(cell, stream);
    const SimulationTruth truth = make_truth(x);
    const Eigen::MatrixXd z = x * truth.eig.eigenvectors;
    RandomStream noise(cell.seed, cell_stream_id(cell, 1));
    Eigen::VectorXd y(cell.n);
    for (int i = 0; i < cell.n; ++i) {
        y(i) = (x * truth.beta)(i) + noise.next_normal();
    }
    const CanonicalModel m = canonicalize_with_eig(z, truth.eig, y);
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_all(m));
    }
}
BENCHMARK(BM_EstimateAll)->Arg(4)->Arg(8);

void BM_RunCell(benchmark::State& state) {
    const SimulationCell cell{0.9, 50, 4, 1.0, static_cast<int>(state.range(0)), 11};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_cell(cell, 1));
    }
}
BENCHMARK(BM_RunCell)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
