#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ridgekit {

/// Base class for all ridgekit errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data is unusable: missing files, malformed CSV, invalid datasets.
class data_error : public error {
public:
    using error::error;
};

/// CSV parse failure with 1-based row/column location.
class parse_error : public data_error {
public:
    parse_error(std::string message, std::size_t row, std::size_t column)
        : data_error(std::move(message)), row_(row), column_(column) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::size_t column_;
};

/// A data column has zero variance and cannot be standardized.
class degenerate_column_error : public data_error {
public:
    degenerate_column_error(std::string message, std::size_t column)
        : data_error(std::move(message)), column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// Numerical failure: singular systems, non-convergence, ill-defined formulas.
class numeric_error : public error {
public:
    using error::error;
};

/// Matrix is singular or not positive definite where positivity is required.
class singular_matrix_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// Iterative algorithm exhausted its iteration budget.
class convergence_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// A shrinkage formula divides by a zero coefficient.
class degenerate_coefficient_error : public numeric_error {
public:
    degenerate_coefficient_error(std::string message, std::string estimator,
                                 std::size_t coefficient_index)
        : numeric_error(std::move(message)),
          estimator_(std::move(estimator)),
          coefficient_index_(coefficient_index) {}

    const std::string& estimator() const noexcept { return estimator_; }
    std::size_t coefficient_index() const noexcept { return coefficient_index_; }

private:
    std::string estimator_;
    std::size_t coefficient_index_;
};

}  // namespace ridgekit
