#pragma once

#include <Eigen/Dense>

namespace ridgekit {

/// Eigendecomposition of a symmetric matrix: A = D diag(lambda) D'.
///
/// Eigenvalues are sorted descending and each eigenvector column is oriented
/// so that its first component of magnitude above 1e-12 is positive, which
/// makes the decomposition deterministic.
struct SymmetricEigen {
    Eigen::VectorXd eigenvalues;   // descending
    Eigen::MatrixXd eigenvectors;  // columns aligned with eigenvalues
};

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// The input must be symmetric up to 1e-10 in any entry; it is symmetrized
/// before iterating. Sweeps stop once the off-diagonal Frobenius norm drops
/// below 1e-12 relative to the input norm; more than 50 sweeps raises
/// convergence_error.
SymmetricEigen sym_eig(const Eigen::MatrixXd& a);

/// Centers each column to mean zero and scales it to unit sum of squared
/// deviations, so that X'X of the result is the sample correlation matrix of
/// the input. A constant column raises degenerate_column_error.
Eigen::MatrixXd center_standardize(const Eigen::MatrixXd& x);

/// Ratio of largest to smallest eigenvalue. Requires all eigenvalues > 0.
double condition_number(const SymmetricEigen& eig);

/// Solves A x = b for symmetric positive definite A (Cholesky).
Eigen::VectorXd solve_spd(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

}  // namespace ridgekit
