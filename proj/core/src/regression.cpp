#include "ridgekit/regression.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ridgekit/errors.hpp"

namespace ridgekit {

namespace {

constexpr double kRankTolerance = 1e-13;  // relative to the largest eigenvalue

void check_dimensions(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
    if (x.cols() < 1 || x.rows() <= x.cols()) {
        throw std::invalid_argument(
            "canonicalize: need n > p >= 1 (got n = " + std::to_string(x.rows()) +
            ", p = " + std::to_string(x.cols()) + ")");
    }
    if (y.size() != x.rows()) {
        throw std::invalid_argument("canonicalize: y length does not match rows of x");
    }
    if (!x.allFinite() || !y.allFinite()) {
        throw std::invalid_argument("canonicalize: non-finite entries in data");
    }
}

}  // namespace

CanonicalModel canonicalize(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
    check_dimensions(x, y);
    const Eigen::MatrixXd xtx = x.transpose() * x;
    SymmetricEigen eig = sym_eig(xtx);
    const Eigen::Index p = x.cols();
    if (!(eig.eigenvalues(p - 1) > kRankTolerance * eig.eigenvalues(0))) {
        throw singular_matrix_error(
            "canonicalize: X'X is numerically rank deficient (smallest eigenvalue " +
            std::to_string(eig.eigenvalues(p - 1)) + ")");
    }
    const Eigen::MatrixXd z = x * eig.eigenvectors;
    return canonicalize_with_eig(z, std::move(eig), y);
}

CanonicalModel canonicalize(const Dataset& d) { return canonicalize(d.x, d.y); }

CanonicalModel canonicalize_with_eig(const Eigen::MatrixXd& z,
                                     const SymmetricEigen& eig,
                                     const Eigen::VectorXd& y) {
    CanonicalModel m;
    m.n = z.rows();
    m.p = z.cols();
    m.z = z;
    m.eig = eig;
    const Eigen::VectorXd zty = z.transpose() * y;
    m.alpha_ols = zty.cwiseQuotient(m.eig.eigenvalues);
    const double rss = y.dot(y) - m.alpha_ols.dot(zty);
    m.sigma2_hat = std::max(0.0, rss / static_cast<double>(m.n - m.p));
    return m;
}

Eigen::VectorXd ridge_fit(const CanonicalModel& m, double k) {
    if (!(k >= 0.0) || !std::isfinite(k)) {
        throw std::invalid_argument("ridge_fit: k must be finite and nonnegative");
    }
    return (m.eig.eigenvalues.array() * m.alpha_ols.array() /
            (m.eig.eigenvalues.array() + k))
        .matrix();
}

Eigen::VectorXd generalized_ridge_fit(const CanonicalModel& m,
                                      const Eigen::VectorXd& ks) {
    if (ks.size() != m.p) {
        throw std::invalid_argument("generalized_ridge_fit: ks has wrong length");
    }
    for (Eigen::Index j = 0; j < ks.size(); ++j) {
        if (!(ks(j) >= 0.0) || !std::isfinite(ks(j))) {
            throw std::invalid_argument(
                "generalized_ridge_fit: k[" + std::to_string(j) +
                "] must be finite and nonnegative");
        }
    }
    return (m.eig.eigenvalues.array() * m.alpha_ols.array() /
            (m.eig.eigenvalues.array() + ks.array()))
        .matrix();
}

Eigen::VectorXd optimal_k(double sigma2, const Eigen::VectorXd& alpha) {
    if (!(sigma2 > 0.0)) {
        throw std::invalid_argument("optimal_k: sigma2 must be positive");
    }
    Eigen::VectorXd ks(alpha.size());
    for (Eigen::Index j = 0; j < alpha.size(); ++j) {
        if (alpha(j) == 0.0) {
            throw std::domain_error("optimal_k: alpha[" + std::to_string(j) +
                                    "] is zero, the minimizing k is unbounded");
        }
        ks(j) = sigma2 / (alpha(j) * alpha(j));
    }
    return ks;
}

double mse_general(const Eigen::VectorXd& ks, const Eigen::VectorXd& lambdas,
                   const Eigen::VectorXd& alpha, double sigma2) {
    const Eigen::Index p = lambdas.size();
    if (ks.size() != p || alpha.size() != p) {
        throw std::invalid_argument("mse_general: dimension mismatch");
    }
    double variance = 0.0;
    double bias2 = 0.0;
    for (Eigen::Index j = 0; j < p; ++j) {
        const double denom = lambdas(j) + ks(j);
        variance += sigma2 * lambdas(j) / (denom * denom);
        bias2 += ks(j) * ks(j) * alpha(j) * alpha(j) / (denom * denom);
    }
    return variance + bias2;
}

double mse_ols(const Eigen::VectorXd& lambdas, double sigma2) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < lambdas.size(); ++j) {
        if (!(lambdas(j) > 0.0)) {
            throw std::invalid_argument("mse_ols: eigenvalue " + std::to_string(j) +
                                        " is not positive");
        }
        sum += 1.0 / lambdas(j);
    }
    return sigma2 * sum;
}

}  // namespace ridgekit
