#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ridgekit/application.hpp"
#include "ridgekit/simulation.hpp"

namespace ridgekit {

/// Shortest decimal representation that round-trips the exact double.
std::string format_shortest(double v);

/// Fixed-point representation with the given number of decimals.
std::string format_fixed(double v, int precision);

/// Long-format results: one row per (cell, estimator), full precision.
/// Columns: rho,n,p,sigma2,replications,seed,estimator,amse,degenerate_count.
std::string long_csv(std::span<const CellResult> results);

/// Results of one (p, sigma2) group laid out rows = estimators,
/// columns = (rho, n) combinations.
struct WideTable {
    int p = 0;
    double sigma2 = 0.0;
    std::vector<std::string> column_labels;           // e.g. "rho0.9_n50"
    std::vector<std::vector<double>> rows;            // kTableRowOrder x columns
};

/// Groups cell results by (p, sigma2), columns sorted by (rho, n).
std::vector<WideTable> wide_tables(std::span<const CellResult> results);

std::string wide_csv(const WideTable& table);
std::string wide_markdown(const WideTable& table);

/// Estimated theoretical MSE table for a real dataset, with the
/// eigenvalue/condition-number diagnostics that accompany it.
struct RealDataReport {
    std::string id;
    Eigen::Index n = 0;
    Eigen::Index p = 0;
    Eigen::VectorXd eigenvalues;
    double condition_number = 0.0;
    double sigma2_hat = 0.0;
    std::map<EstimatorId, double> k;
    std::map<EstimatorId, double> mse;
};

RealDataReport real_data_report(const NamedDataset& nd);
std::string real_data_csv(const RealDataReport& report);
std::string real_data_markdown(const RealDataReport& report);

/// Coefficient-level report of ridge fits on the standardized scale.
struct FitReport {
    std::string id;
    Eigen::Index n = 0;
    Eigen::Index p = 0;
    std::vector<std::string> labels;
    Eigen::VectorXd eigenvalues;
    double condition_number = 0.0;
    double sigma2_hat = 0.0;
    struct Entry {
        EstimatorId id;
        double k = 0.0;
        double mse = 0.0;
        Eigen::VectorXd alpha_r;  // canonical coordinates
        Eigen::VectorXd beta_r;   // original (standardized) coordinates
    };
    std::vector<Entry> entries;
};

FitReport fit_report(const NamedDataset& nd, std::span<const EstimatorId> ids);
std::string fit_csv(const FitReport& report);
std::string fit_markdown(const FitReport& report);

}  // namespace ridgekit
