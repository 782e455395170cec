#pragma once

#include <map>
#include <string>
#include <vector>

#include "ridgekit/estimators.hpp"
#include "ridgekit/regression.hpp"

namespace ridgekit {

/// A dataset together with its identity and provenance.
struct NamedDataset {
    std::string id;  // "gruber", "cement", or the user-supplied path
    Dataset dataset;
    std::string source_note;
};

/// Ids of the datasets shipped with the library.
std::vector<std::string> bundled_dataset_ids();

/// Loads a bundled dataset by id, or parses a CSV file (header row, first
/// column the dependent variable, remaining columns the regressors).
NamedDataset load_dataset(const std::string& id_or_path);

/// A dataset fitted on the standardized scale: X centered and scaled so X'X
/// is the correlation matrix, y centered and scaled to unit length. Because
/// centering absorbs an intercept, the residual variance uses divisor
/// (n - p - 1).
struct StandardizedFit {
    CanonicalModel model;
    Eigen::MatrixXd x_standardized;
    Eigen::VectorXd y_standardized;
};

/// Standardizes and canonicalizes a dataset. Requires n > p + 1.
StandardizedFit standardized_fit(const Dataset& d);

/// Estimated theoretical MSE per estimator: each estimator's scalar k is
/// broadcast over coordinates and plugged into the generalized-ridge MSE
/// formula along with the fitted (sigma2, alpha); the OLS entry is the
/// least-squares MSE.
std::map<EstimatorId, double> evaluate_real(const NamedDataset& nd);

}  // namespace ridgekit
