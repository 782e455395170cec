#include <cmath>

#include <doctest.h>

#include "ridgekit/errors.hpp"
#include "ridgekit/linalg.hpp"
#include "ridgekit/random.hpp"

using namespace ridgekit;

namespace {

Eigen::MatrixXd random_matrix(Eigen::Index rows, Eigen::Index cols,
                              std::uint64_t stream_id) {
    RandomStream stream(99, stream_id);
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = stream.next_normal();
        }
    }
    return m;
}

Eigen::MatrixXd random_symmetric(Eigen::Index n, std::uint64_t stream_id) {
    const Eigen::MatrixXd m = random_matrix(n, n, stream_id);
    return 0.5 * (m + m.transpose());
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("diagonal matrix is its own decomposition") {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
    a(0, 0) = 2.0;
    a(1, 1) = 1.0;
    const SymmetricEigen eig = sym_eig(a);
    CHECK_EQ(eig.eigenvalues(0), doctest::Approx(2.0));
    CHECK_EQ(eig.eigenvalues(1), doctest::Approx(1.0));
    CHECK_LT((eig.eigenvectors - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff(),
             1e-12);
}

TEST_CASE("2x2 equicorrelation has closed-form eigenvalues 1 +- rho") {
    Eigen::MatrixXd a(2, 2);
    a << 1.0, 0.9, 0.9, 1.0;
    const SymmetricEigen eig = sym_eig(a);
    CHECK_EQ(eig.eigenvalues(0), doctest::Approx(1.9));
    CHECK_EQ(eig.eigenvalues(1), doctest::Approx(0.1));
}

TEST_CASE("one-by-one matrix") {
    Eigen::MatrixXd a(1, 1);
    a << 3.5;
    const SymmetricEigen eig = sym_eig(a);
    CHECK_EQ(eig.eigenvalues(0), doctest::Approx(3.5));
    CHECK_EQ(eig.eigenvectors(0, 0), doctest::Approx(1.0));
}

TEST_CASE("asymmetric input is rejected") {
    Eigen::MatrixXd a(2, 2);
    a << 1.0, 0.5, 0.2, 1.0;
    CHECK_THROWS_AS(sym_eig(a), std::invalid_argument);
}

TEST_CASE("decomposition invariants on random symmetric matrices") {
    for (Eigen::Index n = 2; n <= 16; ++n) {
        const Eigen::MatrixXd a = random_symmetric(n, static_cast<std::uint64_t>(n));
        const SymmetricEigen eig = sym_eig(a);
        const Eigen::MatrixXd& d = eig.eigenvectors;

        // Orthogonality.
        CHECK_LT((d.transpose() * d - Eigen::MatrixXd::Identity(n, n))
                     .cwiseAbs()
                     .maxCoeff(),
                 1e-10);
        // Reconstruction.
        const Eigen::MatrixXd reconstructed =
            d * eig.eigenvalues.asDiagonal() * d.transpose();
        CHECK_LT((reconstructed - a).cwiseAbs().maxCoeff() / a.cwiseAbs().maxCoeff(),
                 1e-8);
        // Descending order and trace preservation.
        for (Eigen::Index i = 0; i + 1 < n; ++i) {
            CHECK_GE(eig.eigenvalues(i), eig.eigenvalues(i + 1));
        }
        CHECK_EQ(eig.eigenvalues.sum(), doctest::Approx(a.trace()).epsilon(1e-8));
        // Sign convention.
        for (Eigen::Index c = 0; c < n; ++c) {
            for (Eigen::Index r = 0; r < n; ++r) {
                if (std::abs(d(r, c)) > 1e-12) {
                    CHECK_GT(d(r, c), 0.0);
                    break;
                }
            }
        }
    }
}

TEST_CASE("2x2 determinant equals eigenvalue product") {
    Eigen::MatrixXd a(2, 2);
    a << 3.0, 1.0, 1.0, 2.0;
    const SymmetricEigen eig = sym_eig(a);
    CHECK_EQ(eig.eigenvalues(0) * eig.eigenvalues(1), doctest::Approx(5.0));
}

TEST_CASE("center_standardize on the (1,2,3) column") {
    Eigen::MatrixXd x(3, 1);
    x << 1.0, 2.0, 3.0;
    const Eigen::MatrixXd out = center_standardize(x);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK_EQ(out(0, 0), doctest::Approx(-inv_sqrt2));
    CHECK_EQ(out(1, 0), doctest::Approx(0.0).scale(1.0));
    CHECK_EQ(out(2, 0), doctest::Approx(inv_sqrt2));
}

TEST_CASE("center_standardize is idempotent and correlation-form") {
    const Eigen::MatrixXd x = random_matrix(20, 5, 100);
    const Eigen::MatrixXd s = center_standardize(x);
    for (Eigen::Index j = 0; j < s.cols(); ++j) {
        CHECK_LT(std::abs(s.col(j).mean()), 1e-12);
    }
    const Eigen::MatrixXd sts = s.transpose() * s;
    for (Eigen::Index j = 0; j < s.cols(); ++j) {
        CHECK_LT(std::abs(sts(j, j) - 1.0), 1e-12);
    }
    const Eigen::MatrixXd twice = center_standardize(s);
    CHECK_LT((twice - s).cwiseAbs().maxCoeff(), 1e-12);
}

TEST_CASE("constant column raises degenerate_column_error with its index") {
    Eigen::MatrixXd x(3, 2);
    x << 1.0, 5.0, 2.0, 5.0, 3.0, 5.0;
    try {
        center_standardize(x);
        FAIL("expected degenerate_column_error");
    } catch (const degenerate_column_error& e) {
        CHECK_EQ(e.column(), 1);
    }
    Eigen::MatrixXd one_row(1, 1);
    one_row << 1.0;
    CHECK_THROWS_AS(center_standardize(one_row), std::invalid_argument);
}

TEST_CASE("condition number") {
    SymmetricEigen identity;
    identity.eigenvalues = Eigen::VectorXd::Ones(3);
    identity.eigenvectors = Eigen::MatrixXd::Identity(3, 3);
    CHECK_EQ(condition_number(identity), doctest::Approx(1.0));

    SymmetricEigen singular;
    singular.eigenvalues = Eigen::VectorXd::Zero(2);
    singular.eigenvalues(0) = 1.0;
    CHECK_THROWS_AS(condition_number(singular), singular_matrix_error);
}

TEST_CASE("solve_spd on easy systems") {
    const Eigen::VectorXd b = Eigen::VectorXd::LinSpaced(3, 1.0, 3.0);
    CHECK_LT((solve_spd(Eigen::MatrixXd::Identity(3, 3), b) - b).cwiseAbs().maxCoeff(),
             1e-14);

    Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(2, 2);
    diag(0, 0) = 2.0;
    diag(1, 1) = 4.0;
    Eigen::VectorXd rhs(2);
    rhs << 2.0, 8.0;
    const Eigen::VectorXd x = solve_spd(diag, rhs);
    CHECK_EQ(x(0), doctest::Approx(1.0));
    CHECK_EQ(x(1), doctest::Approx(2.0));
}

TEST_CASE("solve_spd agrees with the eigendecomposition route") {
    const Eigen::MatrixXd m = random_matrix(8, 8, 200);
    const Eigen::MatrixXd a =
        m * m.transpose() + 0.5 * Eigen::MatrixXd::Identity(8, 8);
    const Eigen::VectorXd b = random_matrix(8, 1, 201).col(0);

    const Eigen::VectorXd direct = solve_spd(a, b);
    const SymmetricEigen eig = sym_eig(a);
    const Eigen::VectorXd via_eigen =
        eig.eigenvectors *
        (eig.eigenvectors.transpose() * b).cwiseQuotient(eig.eigenvalues);
    CHECK_LT((direct - via_eigen).cwiseAbs().maxCoeff(), 1e-8);
}

TEST_CASE("solve_spd rejects indefinite matrices") {
    Eigen::MatrixXd a(2, 2);
    a << 1.0, 2.0, 2.0, 1.0;  // eigenvalues 3 and -1
    Eigen::VectorXd b(2);
    b << 1.0, 1.0;
    CHECK_THROWS_AS(solve_spd(a, b), singular_matrix_error);
}

}  // TEST_SUITE
