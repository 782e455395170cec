// End-to-end checks of the command-line tool: exit codes, output shapes,
// and determinism of the emitted files. The binary path arrives in the
// RIDGEKIT_CLI environment variable.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
    const char* path = std::getenv("RIDGEKIT_CLI");
    REQUIRE_MESSAGE(path != nullptr, "RIDGEKIT_CLI must point at the binary");
    return path;
}

int run(const std::string& args) {
    const std::string command = "\"" + cli_path() + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WEXITSTATUS(status);
}

std::string run_stdout(const std::string& args) {
    const fs::path capture = fs::temp_directory_path() / "ridgekit_cli_stdout.txt";
    const std::string command =
        "\"" + cli_path() + "\" " + args + " >\"" + capture.string() + "\" 2>/dev/null";
    REQUIRE_EQ(std::system(command.c_str()), 0);
    std::ifstream in(capture);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    fs::remove(capture);
    return buffer.str();
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text) lines += c == '\n';
    return lines;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
    CHECK_EQ(run(""), 1);                                   // missing subcommand
    CHECK_EQ(run("simulate"), 1);                           // no cell source
    CHECK_EQ(run("simulate --rho 0.9"), 1);                 // incomplete cell
    CHECK_EQ(run("fit /nonexistent.csv --all"), 2);         // missing file
    CHECK_EQ(run("realdata nosuch"), 2);                    // unknown id
    CHECK_EQ(run("fit cement --estimator bogus"), 1);       // unknown estimator
    CHECK_EQ(run("realdata cement"), 0);
    CHECK_EQ(run("--help"), 0);

    // Numerical failures exit with 3: duplicated regressor makes X'X singular.
    const fs::path bad = fs::temp_directory_path() / "ridgekit_cli_singular.csv";
    {
        std::ofstream out(bad);
        out << "y,a,b\n1,1,2\n2,2,4\n3,3,6\n1,4,8\n2,5,10\n";
    }
    CHECK_EQ(run("fit \"" + bad.string() + "\" --all"), 3);
    fs::remove(bad);
}

TEST_CASE("unknown realdata id lists the valid ones") {
    const fs::path capture = fs::temp_directory_path() / "ridgekit_cli_stderr.txt";
    const std::string command = "\"" + cli_path() + "\" realdata nosuch 2>\"" +
                                capture.string() + "\" >/dev/null";
    CHECK_NE(std::system(command.c_str()), 0);
    const std::string message = slurp(capture);
    fs::remove(capture);
    CHECK_NE(message.find("gruber"), std::string::npos);
    CHECK_NE(message.find("cement"), std::string::npos);
}

TEST_CASE("single-cell simulate emits one wide table with all rows") {
    const fs::path dir = fs::temp_directory_path() / "ridgekit_cli_single";
    fs::remove_all(dir);
    CHECK_EQ(run("simulate --rho 0.9 --n 50 --p 4 --sigma2 1 --reps 100 --seed 1 "
                 "--out \"" + dir.string() + "\""),
             0);
    const std::string wide = slurp(dir / "amse_wide_p4_sigma2_1.csv");
    CHECK_EQ(count_lines(wide), 17);  // header plus sixteen estimator rows
    const std::string narrow = slurp(dir / "amse_long.csv");
    CHECK_EQ(count_lines(narrow), 17);
    CHECK(fs::exists(dir / "manifest.json"));
    const std::string manifest = slurp(dir / "manifest.json");
    CHECK_NE(manifest.find("\"command\": \"simulate\""), std::string::npos);
    CHECK_NE(manifest.find("\"seed\": 1"), std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("repeated runs are byte-identical") {
    const fs::path dir1 = fs::temp_directory_path() / "ridgekit_cli_rep1";
    const fs::path dir2 = fs::temp_directory_path() / "ridgekit_cli_rep2";
    fs::remove_all(dir1);
    fs::remove_all(dir2);
    const std::string flags =
        "simulate --rho 0.95 --n 40 --p 4 --sigma2 1 --reps 200 --seed 9 --out ";
    CHECK_EQ(run(flags + "\"" + dir1.string() + "\""), 0);
    CHECK_EQ(run(flags + "\"" + dir2.string() + "\""), 0);
    CHECK_EQ(slurp(dir1 / "amse_long.csv"), slurp(dir2 / "amse_long.csv"));
    CHECK_EQ(slurp(dir1 / "amse_wide_p4_sigma2_1.csv"),
             slurp(dir2 / "amse_wide_p4_sigma2_1.csv"));
    fs::remove_all(dir1);
    fs::remove_all(dir2);
}

TEST_CASE("markdown format emits markdown wide tables") {
    const fs::path dir = fs::temp_directory_path() / "ridgekit_cli_md";
    fs::remove_all(dir);
    CHECK_EQ(run("simulate --rho 0.9 --n 30 --p 3 --sigma2 1 --reps 50 --seed 2 "
                 "--format markdown --out \"" + dir.string() + "\""),
             0);
    CHECK(fs::exists(dir / "amse_wide_p3_sigma2_1.md"));
    const std::string table = slurp(dir / "amse_wide_p3_sigma2_1.md");
    CHECK_NE(table.find("| estimator |"), std::string::npos);
    CHECK_NE(table.find("| OLS |"), std::string::npos);
    CHECK(fs::exists(dir / "amse_long.csv"));  // long output stays CSV
    fs::remove_all(dir);
}

TEST_CASE("grid file drives the cells") {
    const fs::path grid = fs::temp_directory_path() / "ridgekit_cli_grid.csv";
    {
        std::ofstream out(grid);
        out << "rho,n,p,sigma2,replications,seed\n"
               "0.9,30,3,1,50,4\n"
               "0.95,30,3,1,50,4\n";
    }
    const fs::path dir = fs::temp_directory_path() / "ridgekit_cli_gridout";
    fs::remove_all(dir);
    CHECK_EQ(run("simulate --grid \"" + grid.string() + "\" --out \"" + dir.string() +
                 "\""),
             0);
    const std::string narrow = slurp(dir / "amse_long.csv");
    CHECK_EQ(count_lines(narrow), 1 + 2 * 16);
    const std::string wide = slurp(dir / "amse_wide_p3_sigma2_1.csv");
    CHECK_NE(wide.find("rho0.9_n30"), std::string::npos);
    CHECK_NE(wide.find("rho0.95_n30"), std::string::npos);
    fs::remove(grid);
    fs::remove_all(dir);
}

TEST_CASE("fit on the bundled cement data reports the Y8 table entry") {
    const std::string report = run_stdout("fit cement --estimator Y8 --format csv");
    CHECK_NE(report.find("estimator,k,mse"), std::string::npos);
    // The Y8 MSE rounds to 0.1753 on this dataset.
    CHECK_NE(report.find("Y8,"), std::string::npos);
    const std::string markdown = run_stdout("fit cement --estimator Y8");
    CHECK_NE(markdown.find("MSE = 0.1753"), std::string::npos);
}

TEST_CASE("fit --all covers the registry") {
    const std::string report = run_stdout("fit gruber --all --format csv");
    for (const char* label : {"Y1", "Y9", "HK", "HKB", "LW", "AD", "KM8", "KM12",
                              "OLS"}) {
        CHECK_NE(report.find(label), std::string::npos);
    }
}

TEST_CASE("realdata writes csv, markdown and manifest") {
    const fs::path dir = fs::temp_directory_path() / "ridgekit_cli_realdata";
    fs::remove_all(dir);
    CHECK_EQ(run("realdata gruber --out \"" + dir.string() + "\""), 0);
    CHECK(fs::exists(dir / "realdata_gruber.csv"));
    CHECK(fs::exists(dir / "realdata_gruber.md"));
    CHECK(fs::exists(dir / "manifest.json"));
    const std::string csv = slurp(dir / "realdata_gruber.csv");
    CHECK_NE(csv.find("# condition_number: 146.4222"), std::string::npos);
    CHECK_NE(csv.find("OLS,0,0.2833"), std::string::npos);
    fs::remove_all(dir);
}

}  // TEST_SUITE
