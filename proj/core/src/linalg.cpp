#include "ridgekit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ridgekit/errors.hpp"

namespace ridgekit {

namespace {

constexpr int kMaxSweeps = 50;
constexpr double kOffDiagonalTolerance = 1e-12;
constexpr double kMaxAsymmetry = 1e-10;

double off_diagonal_norm(const Eigen::MatrixXd& b) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < b.cols(); ++j) {
            sum += 2.0 * b(i, j) * b(i, j);
        }
    }
    return std::sqrt(sum);
}

// Fixes each column so its first component with magnitude above 1e-12 is
// positive. Columns are unit vectors, so such a component always exists.
void apply_sign_convention(Eigen::MatrixXd& v) {
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
        for (Eigen::Index r = 0; r < v.rows(); ++r) {
            if (std::abs(v(r, c)) > 1e-12) {
                if (v(r, c) < 0.0) v.col(c) = -v.col(c);
                break;
            }
        }
    }
}

}  // namespace

SymmetricEigen sym_eig(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols() || a.rows() < 1) {
        throw std::invalid_argument("sym_eig: matrix must be square and non-empty");
    }
    const Eigen::Index n = a.rows();
    const double asymmetry = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (!(asymmetry <= kMaxAsymmetry)) {
        throw std::invalid_argument("sym_eig: matrix is not symmetric (max |A - A'| = " +
                                    std::to_string(asymmetry) + ")");
    }

    Eigen::MatrixXd b = 0.5 * (a + a.transpose());
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double tolerance = kOffDiagonalTolerance * std::max(1.0, b.norm());

    bool converged = off_diagonal_norm(b) <= tolerance;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (Eigen::Index i = 0; i < n - 1; ++i) {
            for (Eigen::Index j = i + 1; j < n; ++j) {
                const double apq = b(i, j);
                if (apq == 0.0) continue;
                const double theta = (b(j, j) - b(i, i)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e154) {
                    t = 0.5 / theta;  // avoids overflow in theta * theta
                } else {
                    t = (theta >= 0.0 ? 1.0 : -1.0) /
                        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // B <- G' B G and V <- V G with G the rotation in the (i,j) plane.
                for (Eigen::Index r = 0; r < n; ++r) {
                    const double bri = b(r, i);
                    const double brj = b(r, j);
                    b(r, i) = c * bri - s * brj;
                    b(r, j) = s * bri + c * brj;
                }
                for (Eigen::Index r = 0; r < n; ++r) {
                    const double bir = b(i, r);
                    const double bjr = b(j, r);
                    b(i, r) = c * bir - s * bjr;
                    b(j, r) = s * bir + c * bjr;
                }
                for (Eigen::Index r = 0; r < n; ++r) {
                    const double vri = v(r, i);
                    const double vrj = v(r, j);
                    v(r, i) = c * vri - s * vrj;
                    v(r, j) = s * vri + c * vrj;
                }
            }
        }
        converged = off_diagonal_norm(b) <= tolerance;
    }
    if (!converged) {
        throw convergence_error("sym_eig: Jacobi iteration did not converge within " +
                                std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index lhs, Eigen::Index rhs) {
                         return b(lhs, lhs) > b(rhs, rhs);
                     });

    SymmetricEigen result;
    result.eigenvalues.resize(n);
    result.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        result.eigenvalues(k) = b(order[static_cast<std::size_t>(k)],
                                  order[static_cast<std::size_t>(k)]);
        result.eigenvectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
    }
    apply_sign_convention(result.eigenvectors);
    return result;
}

Eigen::MatrixXd center_standardize(const Eigen::MatrixXd& x) {
    if (x.rows() < 2) {
        throw std::invalid_argument("center_standardize: need at least two rows");
    }
    Eigen::MatrixXd out(x.rows(), x.cols());
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        const double mean = x.col(j).mean();
        const Eigen::VectorXd centered = x.col(j).array() - mean;
        const double squared_deviation = centered.squaredNorm();
        if (!(squared_deviation > 0.0)) {
            throw degenerate_column_error(
                "center_standardize: column " + std::to_string(j) +
                    " is constant and cannot be scaled",
                static_cast<std::size_t>(j));
        }
        out.col(j) = centered / std::sqrt(squared_deviation);
    }
    return out;
}

double condition_number(const SymmetricEigen& eig) {
    if (eig.eigenvalues.size() < 1) {
        throw std::invalid_argument("condition_number: empty eigenvalue set");
    }
    const double smallest = eig.eigenvalues(eig.eigenvalues.size() - 1);
    if (!(smallest > 0.0)) {
        throw singular_matrix_error(
            "condition_number: smallest eigenvalue is not positive");
    }
    return eig.eigenvalues(0) / smallest;
}

Eigen::VectorXd solve_spd(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
    if (a.rows() != a.cols() || a.rows() != b.size()) {
        throw std::invalid_argument("solve_spd: dimension mismatch");
    }
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success) {
        throw singular_matrix_error("solve_spd: matrix is not positive definite");
    }
    return llt.solve(b);
}

}  // namespace ridgekit
