#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ridgekit/linalg.hpp"

namespace ridgekit {

/// Raw observations: y is the dependent variable, x holds one regressor per
/// column. Requires more rows than columns and finite entries throughout.
struct Dataset {
    Eigen::VectorXd y;
    Eigen::MatrixXd x;
    std::vector<std::string> column_labels;  // one per regressor
};

/// The model rotated into the eigenbasis of X'X, where the design is
/// orthogonal (Z'Z = diag(lambda)) and ridge shrinkage acts componentwise.
struct CanonicalModel {
    Eigen::MatrixXd z;       // X * D
    SymmetricEigen eig;      // of X'X
    Eigen::VectorXd alpha_ols;
    double sigma2_hat = 0.0;
    Eigen::Index n = 0;
    Eigen::Index p = 0;
};

/// Rotates a dataset into canonical form. The residual variance estimate uses
/// divisor (n - p). Rank-deficient designs raise singular_matrix_error.
CanonicalModel canonicalize(const Dataset& d);
CanonicalModel canonicalize(const Eigen::MatrixXd& x, const Eigen::VectorXd& y);

/// Canonical form for a fixed design whose rotation is already known; only
/// the response changes. Used by the simulation, which redraws errors while
/// keeping the design matrix fixed.
CanonicalModel canonicalize_with_eig(const Eigen::MatrixXd& z,
                                     const SymmetricEigen& eig,
                                     const Eigen::VectorXd& y);

/// Ridge solution in canonical coordinates for a common shrinkage parameter:
/// alpha_j = lambda_j * alpha_ols_j / (lambda_j + k).
Eigen::VectorXd ridge_fit(const CanonicalModel& m, double k);

/// Ridge solution with one shrinkage parameter per coordinate.
Eigen::VectorXd generalized_ridge_fit(const CanonicalModel& m,
                                      const Eigen::VectorXd& ks);

/// The per-coordinate shrinkage minimizing theoretical MSE: sigma2 / alpha_j^2.
/// Any zero alpha_j raises std::domain_error (no finite minimizer exists).
Eigen::VectorXd optimal_k(double sigma2, const Eigen::VectorXd& alpha);

/// Theoretical MSE of the generalized ridge estimator:
/// sum sigma2*lambda_j/(lambda_j+k_j)^2 + sum k_j^2*alpha_j^2/(lambda_j+k_j)^2.
double mse_general(const Eigen::VectorXd& ks, const Eigen::VectorXd& lambdas,
                   const Eigen::VectorXd& alpha, double sigma2);

/// Theoretical MSE of the least-squares estimator: sigma2 * sum 1/lambda_j.
double mse_ols(const Eigen::VectorXd& lambdas, double sigma2);

}  // namespace ridgekit
