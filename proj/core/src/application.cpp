#include "ridgekit/application.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "ridgekit/csv.hpp"
#include "ridgekit/errors.hpp"
#include "ridgekit/linalg.hpp"
#include "ridgekit_embedded/cement_csv.hpp"
#include "ridgekit_embedded/gruber_csv.hpp"

namespace ridgekit {

namespace {

Dataset dataset_from_table(CsvTable table, const std::string& origin) {
    if (table.header.size() < 2) {
        throw parse_error(origin + ": need a dependent variable column and at least "
                          "one regressor column",
                          1, table.header.size());
    }
    const std::size_t n = table.rows.size();
    const std::size_t p = table.header.size() - 1;
    if (n <= p) {
        throw data_error(origin + ": need more observations than regressors (n = " +
                         std::to_string(n) + ", p = " + std::to_string(p) + ")");
    }
    Dataset d;
    d.y.resize(static_cast<Eigen::Index>(n));
    d.x.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
    for (std::size_t i = 0; i < n; ++i) {
        d.y(static_cast<Eigen::Index>(i)) = table.rows[i][0];
        for (std::size_t j = 0; j < p; ++j) {
            d.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                table.rows[i][j + 1];
        }
    }
    d.column_labels.assign(table.header.begin() + 1, table.header.end());
    return d;
}

}  // namespace

std::vector<std::string> bundled_dataset_ids() { return {"gruber", "cement"}; }

NamedDataset load_dataset(const std::string& id_or_path) {
    if (id_or_path == "gruber") {
        return {"gruber",
                dataset_from_table(parse_numeric_csv(detail::kGruberCsv, "gruber"),
                                   "gruber"),
                "National R&D expenditure shares; Gruber (1998)."};
    }
    if (id_or_path == "cement") {
        return {"cement",
                dataset_from_table(parse_numeric_csv(detail::kCementCsv, "cement"),
                                   "cement"),
                "Portland cement heat-of-hardening data; Woods, Steinour & Starke "
                "(1932), widely analyzed since Hald (1952)."};
    }
    return {id_or_path,
            dataset_from_table(read_numeric_csv(id_or_path), id_or_path),
            "user-supplied CSV"};
}

StandardizedFit standardized_fit(const Dataset& d) {
    const Eigen::Index n = d.x.rows();
    const Eigen::Index p = d.x.cols();
    if (n <= p + 1) {
        throw data_error(
            "standardized_fit: need n > p + 1 observations so residual degrees of "
            "freedom remain after centering (n = " +
            std::to_string(n) + ", p = " + std::to_string(p) + ")");
    }
    StandardizedFit fit;
    fit.x_standardized = center_standardize(d.x);
    fit.y_standardized = center_standardize(d.y);
    fit.model = canonicalize(fit.x_standardized, fit.y_standardized);
    // Centering absorbs an intercept: rescale the (n - p) estimate to n - p - 1.
    fit.model.sigma2_hat *= static_cast<double>(n - p) / static_cast<double>(n - p - 1);
    return fit;
}

std::map<EstimatorId, double> evaluate_real(const NamedDataset& nd) {
    const StandardizedFit fit = standardized_fit(nd.dataset);
    const CanonicalModel& m = fit.model;
    std::map<EstimatorId, double> mse;
    for (EstimatorId id : kAllEstimators) {
        if (id == EstimatorId::OLS) {
            mse[id] = mse_ols(m.eig.eigenvalues, m.sigma2_hat);
            continue;
        }
        const KEstimate k = estimate(id, m);
        const Eigen::VectorXd ks = Eigen::VectorXd::Constant(m.p, k.k);
        mse[id] = mse_general(ks, m.eig.eigenvalues, m.alpha_ols, m.sigma2_hat);
    }
    return mse;
}

}  // namespace ridgekit
