#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "ridgekit/regression.hpp"

namespace ridgekit {

/// The closed registry of shrinkage-parameter estimators, plus the k = 0
/// least-squares baseline. The enumerator names are the stable string ids
/// used in CSV headers and CLI flags.
enum class EstimatorId {
    OLS,
    HK,
    HKB,
    LW,
    AD,
    KM8,
    KM12,
    Y1,
    Y2,
    Y3,
    Y4,
    Y5,
    Y6,
    Y7,
    Y8,
    Y9,
};

inline constexpr std::array<EstimatorId, 16> kAllEstimators = {
    EstimatorId::OLS, EstimatorId::HK,  EstimatorId::HKB, EstimatorId::LW,
    EstimatorId::AD,  EstimatorId::KM8, EstimatorId::KM12, EstimatorId::Y1,
    EstimatorId::Y2,  EstimatorId::Y3,  EstimatorId::Y4,  EstimatorId::Y5,
    EstimatorId::Y6,  EstimatorId::Y7,  EstimatorId::Y8,  EstimatorId::Y9,
};

/// Row order used when emitting result tables.
inline constexpr std::array<EstimatorId, 16> kTableRowOrder = {
    EstimatorId::Y1,  EstimatorId::Y2,  EstimatorId::Y3,  EstimatorId::Y4,
    EstimatorId::Y5,  EstimatorId::Y6,  EstimatorId::Y7,  EstimatorId::Y8,
    EstimatorId::Y9,  EstimatorId::LW,  EstimatorId::HK,  EstimatorId::HKB,
    EstimatorId::AD,  EstimatorId::KM8, EstimatorId::KM12, EstimatorId::OLS,
};

/// Canonical uppercase name of an estimator.
std::string_view name(EstimatorId id);

/// Case-insensitive lookup of an estimator by name.
std::optional<EstimatorId> parse_estimator(std::string_view text);

/// A named scalar ridge parameter.
struct KEstimate {
    EstimatorId id;
    double k;
};

/// Per-coordinate quantities k_j = sqrt(sigma2_hat / (lambda_j * alpha_j^2))
/// underlying the Y-family of estimators. Requires every alpha_j nonzero.
Eigen::VectorXd ky_vector(const CanonicalModel& m);

/// Evaluates one estimator on a canonical model. Requires sigma2_hat > 0.
/// Formulas that would divide by a zero coefficient raise
/// degenerate_coefficient_error naming the estimator and coordinate.
KEstimate estimate(EstimatorId id, const CanonicalModel& m);

/// Evaluates the whole registry; identical to calling estimate per id.
std::map<EstimatorId, KEstimate> estimate_all(const CanonicalModel& m);

}  // namespace ridgekit
