#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "manifest.hpp"
#include "ridgekit/application.hpp"
#include "ridgekit/csv.hpp"
#include "ridgekit/errors.hpp"
#include "ridgekit/report.hpp"
#include "ridgekit/simulation.hpp"
#include "ridgekit/version.hpp"

namespace {

namespace fs = std::filesystem;
using namespace ridgekit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

struct SimulateOptions {
    bool paper_grid = false;
    std::string grid_path;
    double rho = -1.0;
    int n = 0;
    int p = 0;
    double sigma2 = -1.0;
    int reps = 5000;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string out_dir = ".";
    std::string format = "csv";
};

struct FitOptions {
    std::string dataset;
    std::vector<std::string> estimators;
    bool all = false;
    std::string out_dir;
    std::string format = "markdown";
};

struct RealDataOptions {
    std::string id;
    std::string out_dir;
    std::string format = "markdown";
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("cannot open '" + path + "' for writing");
    out << content;
}

nlohmann::json cell_to_json(const SimulationCell& c) {
    return {{"rho", c.rho},           {"n", c.n},
            {"p", c.p},               {"sigma2", c.sigma2},
            {"replications", c.replications}, {"seed", c.seed}};
}

std::vector<SimulationCell> load_grid_file(const std::string& path, int default_reps,
                                           std::uint64_t default_seed) {
    const CsvTable table = read_numeric_csv(path);
    auto column = [&](const std::string& name) -> int {
        for (std::size_t c = 0; c < table.header.size(); ++c) {
            if (table.header[c] == name) return static_cast<int>(c);
        }
        return -1;
    };
    const int rho_col = column("rho");
    const int n_col = column("n");
    const int p_col = column("p");
    const int sigma2_col = column("sigma2");
    if (rho_col < 0 || n_col < 0 || p_col < 0 || sigma2_col < 0) {
        throw data_error(path + ": grid file needs columns rho, n, p, sigma2 "
                                "(optional: replications, seed)");
    }
    const int reps_col = column("replications");
    const int seed_col = column("seed");
    std::vector<SimulationCell> cells;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        SimulationCell cell;
        cell.rho = row[static_cast<std::size_t>(rho_col)];
        cell.n = static_cast<int>(row[static_cast<std::size_t>(n_col)]);
        cell.p = static_cast<int>(row[static_cast<std::size_t>(p_col)]);
        cell.sigma2 = row[static_cast<std::size_t>(sigma2_col)];
        cell.replications = reps_col >= 0
                                ? static_cast<int>(row[static_cast<std::size_t>(reps_col)])
                                : default_reps;
        cell.seed = seed_col >= 0
                        ? static_cast<std::uint64_t>(row[static_cast<std::size_t>(seed_col)])
                        : default_seed;
        if (!(cell.rho >= 0.0 && cell.rho < 1.0) || cell.p < 1 || cell.n <= cell.p ||
            !(cell.sigma2 > 0.0) || cell.replications < 1) {
            throw data_error(path + ": row " + std::to_string(r + 2) +
                             " is not a valid cell (need 0 <= rho < 1, n > p >= 1, "
                             "sigma2 > 0, replications >= 1)");
        }
        cells.push_back(cell);
    }
    if (cells.empty()) throw data_error(path + ": grid file has no cells");
    return cells;
}

std::string wide_table_filename(const WideTable& t, const std::string& extension) {
    return "amse_wide_p" + std::to_string(t.p) + "_sigma2_" +
           format_shortest(t.sigma2) + "." + extension;
}

int run_simulate(const SimulateOptions& options) {
    std::vector<SimulationCell> cells;
    const bool single_cell_flags =
        options.rho >= 0.0 || options.n > 0 || options.p > 0 || options.sigma2 >= 0.0;
    const int sources = int(options.paper_grid) + int(!options.grid_path.empty()) +
                        int(single_cell_flags);
    if (sources > 1) {
        std::cerr << "simulate: --paper-grid, --grid, and the single-cell flags are "
                     "mutually exclusive\n";
        return kExitUsage;
    }
    if (options.paper_grid) {
        cells = paper_grid(options.seed, options.reps);
    } else if (!options.grid_path.empty()) {
        cells = load_grid_file(options.grid_path, options.reps, options.seed);
    } else if (single_cell_flags) {
        if (options.rho < 0.0 || options.n <= 0 || options.p <= 0 ||
            options.sigma2 <= 0.0) {
            std::cerr << "simulate: single-cell runs need all of --rho, --n, --p, "
                         "--sigma2\n";
            return kExitUsage;
        }
        cells.push_back({options.rho, options.n, options.p, options.sigma2,
                         options.reps, options.seed});
    } else {
        std::cerr << "simulate: choose --paper-grid, --grid FILE, or the single-cell "
                     "flags --rho/--n/--p/--sigma2\n";
        return kExitUsage;
    }

    fs::create_directories(options.out_dir);
    cli::RunManifest manifest("simulate");
    manifest.set_seed(options.seed);
    manifest.config()["threads"] = options.threads;
    manifest.config()["format"] = options.format;
    manifest.config()["out"] = options.out_dir;
    for (const SimulationCell& cell : cells) {
        manifest.config()["cells"].push_back(cell_to_json(cell));
    }

    std::vector<CellResult> results;
    results.reserve(cells.size());
    bool failed = false;
    std::string failure;
    try {
        std::size_t done = 0;
        run_grid(cells, options.threads, [&](const CellResult& result) {
            results.push_back(result);
            ++done;
            std::cerr << "simulate: finished cell " << done << "/" << cells.size()
                      << "\n";
        });
    } catch (const std::exception& e) {
        failed = true;
        failure = e.what();
    }

    const fs::path out_dir(options.out_dir);
    if (!results.empty()) {
        const std::string long_path = (out_dir / "amse_long.csv").string();
        write_file(long_path, long_csv(results));
        manifest.add_output("amse_long.csv");
        for (const WideTable& table : wide_tables(results)) {
            const bool markdown = options.format == "markdown";
            const std::string file =
                wide_table_filename(table, markdown ? "md" : "csv");
            write_file((out_dir / file).string(),
                       markdown ? wide_markdown(table) : wide_csv(table));
            manifest.add_output(file);
        }
    }
    if (failed) manifest.config()["error"] = failure;
    manifest.write((out_dir / "manifest.json").string());

    if (failed) {
        std::cerr << "simulate: " << failure << "\n"
                  << "simulate: results for " << results.size() << " completed cell(s) "
                  << "were written to " << options.out_dir << "\n";
        return kExitNumeric;
    }
    std::cerr << "simulate: wrote results for " << results.size() << " cell(s) to "
              << options.out_dir << "\n";
    return kExitOk;
}

int run_fit(const FitOptions& options) {
    std::vector<EstimatorId> ids;
    if (options.all) {
        ids.assign(kTableRowOrder.begin(), kTableRowOrder.end());
    } else {
        for (const std::string& text : options.estimators) {
            const auto id = parse_estimator(text);
            if (!id) {
                std::cerr << "fit: unknown estimator '" << text << "'; valid names:";
                for (EstimatorId known : kTableRowOrder) std::cerr << " " << name(known);
                std::cerr << "\n";
                return kExitUsage;
            }
            ids.push_back(*id);
        }
    }
    if (ids.empty()) {
        std::cerr << "fit: choose estimators with --estimator NAME or --all\n";
        return kExitUsage;
    }

    const NamedDataset nd = load_dataset(options.dataset);
    const FitReport report = fit_report(nd, ids);
    std::cout << (options.format == "csv" ? fit_csv(report) : fit_markdown(report));

    if (!options.out_dir.empty()) {
        fs::create_directories(options.out_dir);
        cli::RunManifest manifest("fit");
        manifest.config()["dataset"] = options.dataset;
        manifest.config()["format"] = options.format;
        manifest.config()["out"] = options.out_dir;
        for (EstimatorId id : ids) {
            manifest.config()["estimators"].push_back(std::string(name(id)));
        }
        const fs::path out_dir(options.out_dir);
        write_file((out_dir / "fit_report.csv").string(), fit_csv(report));
        manifest.add_output("fit_report.csv");
        write_file((out_dir / "fit_report.md").string(), fit_markdown(report));
        manifest.add_output("fit_report.md");
        manifest.write((out_dir / "manifest.json").string());
    }
    return kExitOk;
}

int run_realdata(const RealDataOptions& options) {
    bool known = false;
    for (const std::string& id : bundled_dataset_ids()) {
        if (id == options.id) known = true;
    }
    if (!known) {
        std::cerr << "realdata: unknown dataset '" << options.id << "'; valid ids:";
        for (const std::string& id : bundled_dataset_ids()) std::cerr << " " << id;
        std::cerr << "\n";
        return kExitData;
    }

    const NamedDataset nd = load_dataset(options.id);
    const RealDataReport report = real_data_report(nd);
    std::cout << (options.format == "csv" ? real_data_csv(report)
                                          : real_data_markdown(report));

    if (!options.out_dir.empty()) {
        fs::create_directories(options.out_dir);
        cli::RunManifest manifest("realdata");
        manifest.config()["dataset"] = options.id;
        manifest.config()["format"] = options.format;
        manifest.config()["out"] = options.out_dir;
        const fs::path out_dir(options.out_dir);
        const std::string csv_file = "realdata_" + options.id + ".csv";
        const std::string md_file = "realdata_" + options.id + ".md";
        write_file((out_dir / csv_file).string(), real_data_csv(report));
        manifest.add_output(csv_file);
        write_file((out_dir / md_file).string(), real_data_markdown(report));
        manifest.add_output(md_file);
        manifest.write((out_dir / "manifest.json").string());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ridge-regression shrinkage estimation, Monte Carlo benchmarking, "
                 "and real-data MSE tables"};
    app.set_version_flag("--version", ridgekit::kVersion);
    app.require_subcommand(1);

    SimulateOptions simulate_options;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Run Monte Carlo cells and write AMSE tables");
    simulate->add_flag("--paper-grid", simulate_options.paper_grid,
                       "Run the default 36-cell factor grid");
    simulate->add_option("--grid", simulate_options.grid_path,
                         "CSV grid file with columns rho,n,p,sigma2[,replications,seed]");
    simulate->add_option("--rho", simulate_options.rho, "Correlation parameter in [0,1)")
        ->check(CLI::Range(0.0, 0.9999999));
    simulate->add_option("--n", simulate_options.n, "Observations per replication")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--p", simulate_options.p, "Number of regressors")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--sigma2", simulate_options.sigma2, "Error variance")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--reps", simulate_options.reps, "Replications per cell")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--seed", simulate_options.seed, "64-bit generator seed");
    simulate->add_option("--threads", simulate_options.threads,
                         "Worker threads (0 = hardware)")
        ->check(CLI::NonNegativeNumber);
    simulate->add_option("--out", simulate_options.out_dir, "Output directory");
    simulate->add_option("--format", simulate_options.format, "Wide-table format")
        ->check(CLI::IsMember({"csv", "markdown"}));

    FitOptions fit_options;
    CLI::App* fit = app.add_subcommand(
        "fit", "Fit ridge estimators to a dataset (standardized scale)");
    fit->add_option("dataset", fit_options.dataset,
                    "CSV path (header row, first column dependent) or bundled id")
        ->required();
    fit->add_option("--estimator", fit_options.estimators,
                    "Estimator name, repeatable");
    fit->add_flag("--all", fit_options.all, "Fit every registered estimator");
    fit->add_option("--out", fit_options.out_dir, "Directory for report files");
    fit->add_option("--format", fit_options.format, "Stdout format")
        ->check(CLI::IsMember({"csv", "markdown"}));

    RealDataOptions realdata_options;
    CLI::App* realdata = app.add_subcommand(
        "realdata", "Estimated theoretical MSE table for a bundled dataset");
    realdata->add_option("id", realdata_options.id, "Dataset id")->required();
    realdata->add_option("--out", realdata_options.out_dir,
                         "Directory for report files");
    realdata->add_option("--format", realdata_options.format, "Stdout format")
        ->check(CLI::IsMember({"csv", "markdown"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (simulate->parsed()) return run_simulate(simulate_options);
        if (fit->parsed()) return run_fit(fit_options);
        if (realdata->parsed()) return run_realdata(realdata_options);
    } catch (const data_error& e) {
        std::cerr << app.get_name() << ": " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << app.get_name() << ": " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
