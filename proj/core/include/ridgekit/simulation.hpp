#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ridgekit/estimators.hpp"
#include "ridgekit/random.hpp"

namespace ridgekit {

/// One factor combination of the Monte Carlo experiment.
struct SimulationCell {
    double rho = 0.0;       // pairwise column correlation is rho^2
    int n = 0;              // observations
    int p = 0;              // regressors
    double sigma2 = 1.0;    // error variance
    int replications = 5000;
    std::uint64_t seed = 0;
};

/// Fixed quantities of a cell: the realized design, the unit-norm true
/// coefficient vector (eigenvector of the largest eigenvalue of X'X), and its
/// canonical rotation.
struct SimulationTruth {
    Eigen::MatrixXd x;
    Eigen::VectorXd beta;
    Eigen::VectorXd alpha;  // D' beta
    SymmetricEigen eig;     // of X'X
};

/// Per-estimator average squared estimation error for one cell.
struct CellResult {
    SimulationCell cell;
    std::map<EstimatorId, double> amse;
    std::map<EstimatorId, long> degenerate_count;
};

/// Substream id for one cell. Substream 0 drives the design matrix; substream
/// 1 + r drives replication r. The id hashes the cell parameters (rho, n, p,
/// sigma2, by exact bit pattern) together with the substream index, so a
/// cell's draws depend only on its own parameters and seed, never on its
/// position in a grid or on execution order.
std::uint64_t cell_stream_id(const SimulationCell& cell, std::uint64_t substream);

/// Draws the collinear design: with z an n x (p+1) standard normal matrix
/// drawn row by row from `stream`, x_ij = sqrt(1 - rho^2) z_ij + rho z_i,p+1.
Eigen::MatrixXd generate_x(const SimulationCell& cell, RandomStream& stream);

/// Chooses the true coefficients for a realized design: the unit eigenvector
/// of the largest eigenvalue of X'X, oriented by the eigensolver's sign
/// convention.
SimulationTruth make_truth(const Eigen::MatrixXd& x);

/// Runs one cell: generates the design and truth once, then for each
/// replication redraws the errors, forms the response, evaluates every
/// estimator and accumulates squared estimation errors in canonical
/// coordinates. Replications run on `threads` threads (0 = hardware count);
/// results are identical regardless of thread count.
///
/// If an estimator's formula hits a zero coefficient in some replication,
/// that replication contributes the least-squares error for that estimator
/// and the cell's degenerate count is incremented.
CellResult run_cell(const SimulationCell& cell, int threads = 0);

/// Runs a sequence of cells, invoking `on_cell` (when set) after each one.
/// Per-cell failures are rethrown with the cell parameters prepended.
std::vector<CellResult> run_grid(
    std::span<const SimulationCell> cells, int threads = 0,
    const std::function<void(const CellResult&)>& on_cell = {});

/// The default 36-cell grid: rho in {0.90, 0.95, 0.99}, n in {50, 100, 200},
/// p in {4, 8}, sigma2 in {1.0, 5.0}, ordered by (p, sigma2, rho, n).
std::vector<SimulationCell> paper_grid(std::uint64_t seed, int replications = 5000);

namespace detail {

/// Squared estimation errors of one replication, indexed like
/// kAllEstimators. Where an estimator's formula degenerates on a zero
/// coefficient, the least-squares error is substituted and the flag set.
struct ReplicationErrors {
    std::array<double, kAllEstimators.size()> squared_error{};
    std::array<bool, kAllEstimators.size()> degenerate{};
};

ReplicationErrors replication_errors(const CanonicalModel& m,
                                     const Eigen::VectorXd& alpha_true);

}  // namespace detail

}  // namespace ridgekit
