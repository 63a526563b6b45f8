#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch_dir() {
    fs::path d = fs::temp_directory_path() / "randers_cli_test";
    fs::create_directories(d);
    return d;
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path out = scratch_dir() / ("stdout_" + std::to_string(counter++) + ".txt");
    std::string cmd = std::string(RANDERS_LAB_CLI_PATH) + " " + args + " > " +
                      out.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return {WEXITSTATUS(rc), slurp(out)};
}

const std::string kFast = " --steps 128 --samples 16 --grid 64 --n-max 4 --fourier-order 24";

}  // namespace

TEST_CASE("curvature run passes and reports its configuration") {
    CliResult r = run_cli("curvature --a1 0.5" + kFast);
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "curvature");
    CHECK(j["config"]["a1"] == 0.5);
    CHECK(j["pass"] == true);
}

TEST_CASE("domain and usage errors exit with code 2") {
    CHECK(run_cli("curvature --a1 1.5").code == 2);
    CHECK(run_cli("curvature --epsilon 3").code == 2);
    CHECK(run_cli("curvature --bogus 1").code == 2);
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("curvature --config /no/such/file.cfg").code == 2);
}

TEST_CASE("help exits cleanly") {
    CliResult r = run_cli("--help");
    CHECK(r.code == 0);
    CHECK(r.out.find("verify-all") != std::string::npos);
}

TEST_CASE("config file values are used and flags override them") {
    fs::path cfg = scratch_dir() / "override.cfg";
    std::ofstream(cfg) << "a1 = 0.9\nsteps = 128\nsamples = 16\ngrid = 64\n"
                       << "n_max = 4\nfourier_order = 24\n# comment line\n";

    CliResult file_only = run_cli("curvature --config " + cfg.string());
    CHECK(file_only.code == 0);
    CHECK(nlohmann::json::parse(file_only.out)["config"]["a1"] == 0.9);

    CliResult overridden = run_cli("curvature --config " + cfg.string() + " --a1 0.5");
    CHECK(overridden.code == 0);
    CHECK(nlohmann::json::parse(overridden.out)["config"]["a1"] == 0.5);

    fs::path bad = scratch_dir() / "bad.cfg";
    std::ofstream(bad) << "no_such_key = 1\n";
    CHECK(run_cli("curvature --config " + bad.string()).code == 2);
}

TEST_CASE("reports and tables land in the output directory") {
    fs::path out = scratch_dir() / "holonomy_out";
    fs::remove_all(out);
    CliResult r = run_cli("holonomy --a1 0.5" + kFast + " --out " + out.string());
    CHECK(r.code == 0);
    CHECK(fs::exists(out / "report_holonomy.json"));
    CHECK(fs::exists(out / "holonomy_shen.csv"));
    CHECK(fs::exists(out / "small_loop_profile.csv"));
    std::string csv = slurp(out / "holonomy_shen.csv");
    CHECK(csv.find("t_in,t_out,displacement\n") == 0);
}

TEST_CASE("algebra run on the curvature-free model passes via zero ranks") {
    CliResult r = run_cli("algebra --model flat --a1 0.4" + kFast);
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    bool found = false;
    for (auto& check : j["checks"]) {
        if (check["name"] != "sigma_rank_law") continue;
        found = true;
        for (auto& row : check["table"]) CHECK(row["rank"] == 0);
    }
    CHECK(found);
}

TEST_CASE("verify-all is deterministic byte for byte") {
    fs::path out1 = scratch_dir() / "va1";
    fs::path out2 = scratch_dir() / "va2";
    fs::remove_all(out1);
    fs::remove_all(out2);
    CliResult r1 = run_cli("verify-all --a1 0.5 --seed 7" + kFast + " --out " + out1.string());
    CliResult r2 = run_cli("verify-all --a1 0.5 --seed 7" + kFast + " --out " + out2.string());
    CHECK(r1.code == 0);
    CHECK(r2.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(slurp(out1 / "report_verify_all.json") == slurp(out2 / "report_verify_all.json"));
    CHECK(!slurp(out1 / "report_verify_all.json").empty());
    auto j = nlohmann::json::parse(r1.out);
    CHECK(j["pass"] == true);
    CHECK(j["suites"]["curvature"]["pass"] == true);
    CHECK(j["matrix"].size() > 10);
}
