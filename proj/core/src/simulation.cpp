#include "ridgekit/simulation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "ridgekit/errors.hpp"
#include "ridgekit/regression.hpp"

namespace ridgekit {

namespace {

void validate(const SimulationCell& cell) {
    if (!(cell.rho >= 0.0 && cell.rho < 1.0)) {
        throw std::invalid_argument("simulation: rho must lie in [0, 1)");
    }
    if (cell.p < 1 || cell.n <= cell.p) {
        throw std::invalid_argument("simulation: need n > p >= 1");
    }
    if (!(cell.sigma2 > 0.0)) {
        throw std::invalid_argument("simulation: sigma2 must be positive");
    }
    if (cell.replications < 1) {
        throw std::invalid_argument("simulation: replications must be at least 1");
    }
}

std::string describe(const SimulationCell& cell) {
    std::ostringstream out;
    out << "cell (rho=" << cell.rho << ", n=" << cell.n << ", p=" << cell.p
        << ", sigma2=" << cell.sigma2 << ", replications=" << cell.replications
        << ", seed=" << cell.seed << ")";
    return out.str();
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

std::uint64_t cell_stream_id(const SimulationCell& cell, std::uint64_t substream) {
    std::uint64_t h = mix64(std::bit_cast<std::uint64_t>(cell.rho));
    h = mix64(h ^ static_cast<std::uint64_t>(cell.n));
    h = mix64(h ^ static_cast<std::uint64_t>(cell.p));
    h = mix64(h ^ std::bit_cast<std::uint64_t>(cell.sigma2));
    return mix64(h ^ substream);
}

Eigen::MatrixXd generate_x(const SimulationCell& cell, RandomStream& stream) {
    validate(cell);
    const int n = cell.n;
    const int p = cell.p;
    const double mix = std::sqrt(1.0 - cell.rho * cell.rho);
    Eigen::MatrixXd x(n, p);
    // One row of z at a time: p column draws followed by the shared draw.
    std::vector<double> row(static_cast<std::size_t>(p) + 1);
    for (int i = 0; i < n; ++i) {
        for (double& z : row) z = stream.next_normal();
        const double shared = cell.rho * row.back();
        for (int j = 0; j < p; ++j) {
            x(i, j) = mix * row[static_cast<std::size_t>(j)] + shared;
        }
    }
    return x;
}

SimulationTruth make_truth(const Eigen::MatrixXd& x) {
    SimulationTruth truth;
    truth.x = x;
    truth.eig = sym_eig(x.transpose() * x);
    truth.beta = truth.eig.eigenvectors.col(0).normalized();
    truth.alpha = truth.eig.eigenvectors.transpose() * truth.beta;
    return truth;
}

CellResult run_cell(const SimulationCell& cell, int threads) {
    validate(cell);

    RandomStream design_stream(cell.seed, cell_stream_id(cell, 0));
    const Eigen::MatrixXd x = generate_x(cell, design_stream);
    const SimulationTruth truth = make_truth(x);
    const Eigen::MatrixXd z = x * truth.eig.eigenvectors;
    const Eigen::VectorXd signal = x * truth.beta;
    const double noise_scale = std::sqrt(cell.sigma2);

    const int reps = cell.replications;
    constexpr std::size_t kCount = kAllEstimators.size();
    std::vector<double> squared_errors(static_cast<std::size_t>(reps) * kCount);

    const int worker_count = std::min(resolve_threads(threads), reps);
    std::vector<std::array<long, kCount>> degenerate_tallies(
        static_cast<std::size_t>(worker_count), std::array<long, kCount>{});
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(worker_count));

    auto run_range = [&](int worker, int begin, int end) {
        try {
            Eigen::VectorXd y(cell.n);
            for (int r = begin; r < end; ++r) {
                RandomStream noise(cell.seed,
                                   cell_stream_id(cell, 1 + static_cast<std::uint64_t>(r)));
                for (int i = 0; i < cell.n; ++i) {
                    y(i) = signal(i) + noise_scale * noise.next_normal();
                }
                const CanonicalModel m = canonicalize_with_eig(z, truth.eig, y);
                const auto errors = detail::replication_errors(m, truth.alpha);
                for (std::size_t e = 0; e < kCount; ++e) {
                    squared_errors[static_cast<std::size_t>(r) * kCount + e] =
                        errors.squared_error[e];
                    degenerate_tallies[static_cast<std::size_t>(worker)][e] +=
                        errors.degenerate[e];
                }
            }
        } catch (...) {
            failures[static_cast<std::size_t>(worker)] = std::current_exception();
        }
    };

    if (worker_count <= 1) {
        run_range(0, 0, reps);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(worker_count));
        const int chunk = (reps + worker_count - 1) / worker_count;
        for (int w = 0; w < worker_count; ++w) {
            const int begin = w * chunk;
            const int end = std::min(reps, begin + chunk);
            workers.emplace_back(run_range, w, begin, end);
        }
        for (auto& t : workers) t.join();
    }
    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }

    // Fixed-order accumulation keeps the mean independent of thread count.
    CellResult result;
    result.cell = cell;
    for (std::size_t e = 0; e < kCount; ++e) {
        double sum = 0.0;
        for (int r = 0; r < reps; ++r) {
            sum += squared_errors[static_cast<std::size_t>(r) * kCount + e];
        }
        long degenerate = 0;
        for (const auto& tally : degenerate_tallies) degenerate += tally[e];
        result.amse[kAllEstimators[e]] = sum / static_cast<double>(reps);
        result.degenerate_count[kAllEstimators[e]] = degenerate;
    }
    return result;
}

std::vector<CellResult> run_grid(
    std::span<const SimulationCell> cells, int threads,
    const std::function<void(const CellResult&)>& on_cell) {
    if (cells.empty()) {
        throw std::invalid_argument("run_grid: no cells given");
    }
    std::vector<CellResult> results;
    results.reserve(cells.size());
    for (const SimulationCell& cell : cells) {
        try {
            results.push_back(run_cell(cell, threads));
        } catch (const error& e) {
            throw numeric_error(describe(cell) + ": " + e.what());
        } catch (const std::exception& e) {
            throw std::runtime_error(describe(cell) + ": " + e.what());
        }
        if (on_cell) on_cell(results.back());
    }
    return results;
}

std::vector<SimulationCell> paper_grid(std::uint64_t seed, int replications) {
    std::vector<SimulationCell> cells;
    for (int p : {4, 8}) {
        for (double sigma2 : {1.0, 5.0}) {
            for (double rho : {0.90, 0.95, 0.99}) {
                for (int n : {50, 100, 200}) {
                    cells.push_back({rho, n, p, sigma2, replications, seed});
                }
            }
        }
    }
    return cells;
}

namespace detail {

ReplicationErrors replication_errors(const CanonicalModel& m,
                                     const Eigen::VectorXd& alpha_true) {
    ReplicationErrors out;
    const double ols_error = (m.alpha_ols - alpha_true).squaredNorm();
    for (std::size_t e = 0; e < kAllEstimators.size(); ++e) {
        try {
            const KEstimate k = estimate(kAllEstimators[e], m);
            out.squared_error[e] = (ridge_fit(m, k.k) - alpha_true).squaredNorm();
        } catch (const degenerate_coefficient_error&) {
            out.squared_error[e] = ols_error;
            out.degenerate[e] = true;
        }
    }
    return out;
}

}  // namespace detail

}  // namespace ridgekit
