#include <string>
#include <vector>

#include <doctest.h>

#include "ridgekit/report.hpp"
#include "ridgekit/simulation.hpp"

using namespace ridgekit;

TEST_SUITE("report") {

TEST_CASE("double formatting") {
    CHECK_EQ(format_shortest(0.9), "0.9");
    CHECK_EQ(format_shortest(1.0), "1");
    CHECK_EQ(format_shortest(0.1 + 0.2), "0.30000000000000004");
    CHECK_EQ(format_fixed(0.41911, 4), "0.4191");
    CHECK_EQ(format_fixed(2.0, 4), "2.0000");
}

TEST_CASE("long and wide emitters agree cell by cell") {
    const std::vector<SimulationCell> cells = {
        {0.9, 20, 3, 1.0, 50, 7},
        {0.9, 30, 3, 1.0, 50, 7},
        {0.95, 20, 3, 5.0, 50, 7},
    };
    const auto results = run_grid(cells);

    const auto tables = wide_tables(results);
    REQUIRE_EQ(tables.size(), 2);  // (3, 1.0) with two columns, (3, 5.0) with one
    CHECK_EQ(tables[0].p, 3);
    CHECK_EQ(tables[0].sigma2, 1.0);
    REQUIRE_EQ(tables[0].column_labels.size(), 2);
    CHECK_EQ(tables[0].column_labels[0], "rho0.9_n20");
    CHECK_EQ(tables[0].column_labels[1], "rho0.9_n30");
    CHECK_EQ(tables[1].column_labels[0], "rho0.95_n20");

    // Wide values are exactly the per-cell AMSE values.
    for (std::size_t r = 0; r < kTableRowOrder.size(); ++r) {
        CHECK_EQ(tables[0].rows[r][0], results[0].amse.at(kTableRowOrder[r]));
        CHECK_EQ(tables[0].rows[r][1], results[1].amse.at(kTableRowOrder[r]));
        CHECK_EQ(tables[1].rows[r][0], results[2].amse.at(kTableRowOrder[r]));
    }

    const std::string narrow = long_csv(results);
    std::size_t lines = 0;
    for (char c : narrow) lines += c == '\n';
    CHECK_EQ(lines, 1 + 16 * results.size());
    // Full-precision long values round to the wide 4-decimal entries.
    CHECK_NE(narrow.find(format_shortest(results[0].amse.at(EstimatorId::OLS))),
             std::string::npos);
    const std::string wide = wide_csv(tables[0]);
    CHECK_NE(wide.find(format_fixed(results[0].amse.at(EstimatorId::OLS), 4)),
             std::string::npos);
}

TEST_CASE("wide csv and markdown carry the header and all rows") {
    const std::vector<SimulationCell> cells = {{0.9, 20, 3, 1.0, 20, 7}};
    const auto results = run_grid(cells);
    const auto tables = wide_tables(results);
    REQUIRE_EQ(tables.size(), 1);

    const std::string csv = wide_csv(tables[0]);
    CHECK_EQ(csv.rfind("estimator,rho0.9_n20\n", 0), 0);
    const std::string markdown = wide_markdown(tables[0]);
    for (EstimatorId id : kAllEstimators) {
        CHECK_NE(csv.find(name(id)), std::string::npos);
        CHECK_NE(markdown.find(name(id)), std::string::npos);
    }
}

TEST_CASE("real-data report carries diagnostics and table") {
    const RealDataReport report = real_data_report(load_dataset("cement"));
    CHECK_EQ(report.id, "cement");
    CHECK_EQ(report.n, 13);
    CHECK_EQ(report.p, 4);
    CHECK_EQ(report.mse.size(), 16);

    const std::string csv = real_data_csv(report);
    CHECK_NE(csv.find("# dataset: cement"), std::string::npos);
    CHECK_NE(csv.find("# condition_number: 1376.8806"), std::string::npos);
    CHECK_NE(csv.find("estimator,k,mse"), std::string::npos);
    CHECK_NE(csv.find("Y8,"), std::string::npos);

    const std::string markdown = real_data_markdown(report);
    CHECK_NE(markdown.find("Condition number: 1376.8806"), std::string::npos);
    CHECK_NE(markdown.find("| OLS |"), std::string::npos);
}

TEST_CASE("fit report recovers least squares for k = 0") {
    const NamedDataset nd = load_dataset("gruber");
    const std::vector<EstimatorId> ids = {EstimatorId::OLS, EstimatorId::Y8};
    const FitReport report = fit_report(nd, ids);
    REQUIRE_EQ(report.entries.size(), 2);
    CHECK_EQ(report.entries[0].k, 0.0);

    // beta for k = 0 equals the direct least-squares solution on the
    // standardized scale.
    const StandardizedFit fit = standardized_fit(nd.dataset);
    const Eigen::VectorXd direct =
        solve_spd(fit.x_standardized.transpose() * fit.x_standardized,
                  fit.x_standardized.transpose() * fit.y_standardized);
    CHECK_LT((report.entries[0].beta_r - direct).cwiseAbs().maxCoeff(), 1e-10);

    // Shrinkage pulls every canonical coordinate toward zero.
    const auto& shrunk = report.entries[1];
    CHECK_GT(shrunk.k, 0.0);
    for (Eigen::Index j = 0; j < report.p; ++j) {
        CHECK_LE(std::abs(shrunk.alpha_r(j)),
                 std::abs(report.entries[0].alpha_r(j)) + 1e-15);
    }

    const std::string csv = fit_csv(report);
    CHECK_NE(csv.find("estimator,k,mse,coefficient,label,alpha_r,beta_r"),
             std::string::npos);
    CHECK_NE(csv.find("france"), std::string::npos);
    const std::string markdown = fit_markdown(report);
    CHECK_NE(markdown.find("## OLS"), std::string::npos);
    CHECK_NE(markdown.find("## Y8"), std::string::npos);
}

}  // TEST_SUITE
