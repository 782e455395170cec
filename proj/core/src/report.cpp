#include "ridgekit/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ridgekit {

std::string format_shortest(double v) {
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, v);
    if (ec != std::errc{}) throw std::runtime_error("format_shortest: conversion failed");
    return std::string(buffer, end);
}

std::string format_fixed(double v, int precision) {
    char buffer[512];
    const auto [end, ec] =
        std::to_chars(buffer, buffer + sizeof buffer, v, std::chars_format::fixed,
                      precision);
    if (ec != std::errc{}) throw std::runtime_error("format_fixed: conversion failed");
    return std::string(buffer, end);
}

std::string long_csv(std::span<const CellResult> results) {
    std::string out =
        "rho,n,p,sigma2,replications,seed,estimator,amse,degenerate_count\n";
    for (const CellResult& result : results) {
        const SimulationCell& c = result.cell;
        const std::string prefix = format_shortest(c.rho) + "," +
                                   std::to_string(c.n) + "," + std::to_string(c.p) +
                                   "," + format_shortest(c.sigma2) + "," +
                                   std::to_string(c.replications) + "," +
                                   std::to_string(c.seed) + ",";
        for (EstimatorId id : kTableRowOrder) {
            out += prefix;
            out += name(id);
            out += ",";
            out += format_shortest(result.amse.at(id));
            out += ",";
            out += std::to_string(result.degenerate_count.at(id));
            out += "\n";
        }
    }
    return out;
}

std::vector<WideTable> wide_tables(std::span<const CellResult> results) {
    // Group keys in first-appearance order.
    std::vector<std::pair<int, double>> keys;
    for (const CellResult& r : results) {
        const std::pair<int, double> key{r.cell.p, r.cell.sigma2};
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            keys.push_back(key);
        }
    }
    std::vector<WideTable> tables;
    for (const auto& [p, sigma2] : keys) {
        std::vector<const CellResult*> members;
        for (const CellResult& r : results) {
            if (r.cell.p == p && r.cell.sigma2 == sigma2) members.push_back(&r);
        }
        std::stable_sort(members.begin(), members.end(),
                         [](const CellResult* a, const CellResult* b) {
                             return std::tie(a->cell.rho, a->cell.n) <
                                    std::tie(b->cell.rho, b->cell.n);
                         });
        WideTable table;
        table.p = p;
        table.sigma2 = sigma2;
        for (const CellResult* r : members) {
            table.column_labels.push_back("rho" + format_shortest(r->cell.rho) + "_n" +
                                          std::to_string(r->cell.n));
        }
        for (EstimatorId id : kTableRowOrder) {
            std::vector<double> row;
            row.reserve(members.size());
            for (const CellResult* r : members) row.push_back(r->amse.at(id));
            table.rows.push_back(std::move(row));
        }
        tables.push_back(std::move(table));
    }
    return tables;
}

std::string wide_csv(const WideTable& table) {
    std::string out = "estimator";
    for (const std::string& label : table.column_labels) out += "," + label;
    out += "\n";
    for (std::size_t r = 0; r < kTableRowOrder.size(); ++r) {
        out += name(kTableRowOrder[r]);
        for (double v : table.rows[r]) out += "," + format_fixed(v, 4);
        out += "\n";
    }
    return out;
}

std::string wide_markdown(const WideTable& table) {
    std::string out = "AMSE for p = " + std::to_string(table.p) +
                      ", sigma2 = " + format_shortest(table.sigma2) + "\n\n";
    out += "| estimator |";
    for (const std::string& label : table.column_labels) out += " " + label + " |";
    out += "\n|---|";
    for (std::size_t i = 0; i < table.column_labels.size(); ++i) out += "---|";
    out += "\n";
    for (std::size_t r = 0; r < kTableRowOrder.size(); ++r) {
        out += "| ";
        out += name(kTableRowOrder[r]);
        out += " |";
        for (double v : table.rows[r]) out += " " + format_fixed(v, 4) + " |";
        out += "\n";
    }
    return out;
}

RealDataReport real_data_report(const NamedDataset& nd) {
    const StandardizedFit fit = standardized_fit(nd.dataset);
    RealDataReport report;
    report.id = nd.id;
    report.n = fit.model.n;
    report.p = fit.model.p;
    report.eigenvalues = fit.model.eig.eigenvalues;
    report.condition_number = condition_number(fit.model.eig);
    report.sigma2_hat = fit.model.sigma2_hat;
    for (EstimatorId id : kAllEstimators) {
        report.k[id] = estimate(id, fit.model).k;
    }
    report.mse = evaluate_real(nd);
    return report;
}

namespace {

std::string eigenvalue_list(const Eigen::VectorXd& values) {
    std::string out;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (i > 0) out += " ";
        out += format_fixed(values(i), 4);
    }
    return out;
}

}  // namespace

std::string real_data_csv(const RealDataReport& report) {
    std::string out;
    out += "# dataset: " + report.id + "\n";
    out += "# n: " + std::to_string(report.n) + ", p: " + std::to_string(report.p) + "\n";
    out += "# eigenvalues: " + eigenvalue_list(report.eigenvalues) + "\n";
    out += "# condition_number: " + format_fixed(report.condition_number, 4) + "\n";
    out += "# sigma2_hat: " + format_shortest(report.sigma2_hat) + "\n";
    out += "estimator,k,mse\n";
    for (EstimatorId id : kTableRowOrder) {
        out += std::string(name(id)) + "," + format_shortest(report.k.at(id)) + "," +
               format_fixed(report.mse.at(id), 4) + "\n";
    }
    return out;
}

std::string real_data_markdown(const RealDataReport& report) {
    std::string out = "Dataset: " + report.id + " (n = " + std::to_string(report.n) +
                      ", p = " + std::to_string(report.p) + ")\n";
    out += "Eigenvalues of standardized X'X: " + eigenvalue_list(report.eigenvalues) +
           "\n";
    out += "Condition number: " + format_fixed(report.condition_number, 4) + "\n";
    out += "Residual variance estimate: " + format_shortest(report.sigma2_hat) + "\n\n";
    out += "| estimator | k | MSE |\n|---|---|---|\n";
    for (EstimatorId id : kTableRowOrder) {
        out += "| " + std::string(name(id)) + " | " +
               format_shortest(report.k.at(id)) + " | " +
               format_fixed(report.mse.at(id), 4) + " |\n";
    }
    return out;
}

FitReport fit_report(const NamedDataset& nd, std::span<const EstimatorId> ids) {
    const StandardizedFit fit = standardized_fit(nd.dataset);
    const CanonicalModel& m = fit.model;
    FitReport report;
    report.id = nd.id;
    report.n = m.n;
    report.p = m.p;
    report.labels = nd.dataset.column_labels;
    report.eigenvalues = m.eig.eigenvalues;
    report.condition_number = condition_number(m.eig);
    report.sigma2_hat = m.sigma2_hat;
    for (EstimatorId id : ids) {
        FitReport::Entry entry;
        entry.id = id;
        entry.k = estimate(id, m).k;
        entry.alpha_r = ridge_fit(m, entry.k);
        entry.beta_r = m.eig.eigenvectors * entry.alpha_r;
        entry.mse = id == EstimatorId::OLS
                        ? mse_ols(m.eig.eigenvalues, m.sigma2_hat)
                        : mse_general(Eigen::VectorXd::Constant(m.p, entry.k),
                                      m.eig.eigenvalues, m.alpha_ols, m.sigma2_hat);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::string fit_csv(const FitReport& report) {
    std::string out;
    out += "# dataset: " + report.id + "\n";
    out += "# n: " + std::to_string(report.n) + ", p: " + std::to_string(report.p) + "\n";
    out += "# eigenvalues: " + eigenvalue_list(report.eigenvalues) + "\n";
    out += "# condition_number: " + format_fixed(report.condition_number, 4) + "\n";
    out += "# sigma2_hat: " + format_shortest(report.sigma2_hat) + "\n";
    out += "estimator,k,mse,coefficient,label,alpha_r,beta_r\n";
    for (const auto& entry : report.entries) {
        for (Eigen::Index j = 0; j < report.p; ++j) {
            out += std::string(name(entry.id)) + "," + format_shortest(entry.k) + "," +
                   format_shortest(entry.mse) + "," + std::to_string(j) + "," +
                   report.labels[static_cast<std::size_t>(j)] + "," +
                   format_shortest(entry.alpha_r(j)) + "," +
                   format_shortest(entry.beta_r(j)) + "\n";
        }
    }
    return out;
}

std::string fit_markdown(const FitReport& report) {
    std::string out = "Dataset: " + report.id + " (n = " + std::to_string(report.n) +
                      ", p = " + std::to_string(report.p) +
                      "), variables centered and scaled to unit length\n";
    out += "Eigenvalues of standardized X'X: " + eigenvalue_list(report.eigenvalues) +
           "\n";
    out += "Condition number: " + format_fixed(report.condition_number, 4) + "\n";
    out += "Residual variance estimate: " + format_shortest(report.sigma2_hat) + "\n";
    for (const auto& entry : report.entries) {
        out += "\n## " + std::string(name(entry.id)) +
               ": k = " + format_shortest(entry.k) +
               ", MSE = " + format_fixed(entry.mse, 4) + "\n\n";
        out += "| coefficient | alpha_r | beta_r |\n|---|---|---|\n";
        for (Eigen::Index j = 0; j < report.p; ++j) {
            out += "| " + report.labels[static_cast<std::size_t>(j)] + " | " +
                   format_fixed(entry.alpha_r(j), 6) + " | " +
                   format_fixed(entry.beta_r(j), 6) + " |\n";
        }
    }
    return out;
}

}  // namespace ridgekit
