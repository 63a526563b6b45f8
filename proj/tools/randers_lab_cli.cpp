#include <cstdio>
#include <filesystem>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "randerslab/suites.hpp"

using namespace randerslab;

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for negatively curved Randers disk models: "
                 "curvature identities, indicatrix vector-field algebra, and "
                 "parallel-transport holonomy."};
    app.fallthrough();
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "flat key=value config file (flags override)");

    // Overrides are collected as raw strings so only flags that were actually
    // given shadow the config file.
    std::map<std::string, std::string> overrides;
    auto opt = [&](const char* flag, const char* key, const char* help) {
        app.add_option_function<std::string>(
            flag, [&overrides, key](const std::string& v) { overrides[key] = v; }, help);
    };
    opt("--model", "model", "shen | klein | flat");
    opt("--a1", "a1", "linear-term coefficient, |a1| < 1");
    opt("--epsilon", "epsilon", "+1 or -1");
    opt("--n-max", "n_max", "largest n in the rank-law table");
    opt("--fourier-order", "fourier_order", "max Fourier order for projections and Fejer means");
    opt("--steps", "steps", "RK4 steps per path segment");
    opt("--samples", "samples", "indicatrix samples per holonomy map");
    opt("--grid", "grid", "sample grid for restriction and closed-form checks");
    opt("--tol", "tol", "tolerance for sampled curvature checks");
    opt("--fejer-tol", "fejer_tol", "reporting threshold for terminal Fejer errors");
    opt("--seed", "seed", "RNG seed for sampled checks");
    opt("--out", "out", "directory for the JSON report and CSV files");

    CLI::App* cmd_curvature = app.add_subcommand(
        "curvature", "constant flag curvature, Ricci law, curvature-field closed forms");
    CLI::App* cmd_algebra = app.add_subcommand(
        "algebra", "rank law, bracket recursions, multiple-angle identities, Fejer curves");
    CLI::App* cmd_holonomy = app.add_subcommand(
        "holonomy", "transport invariants, holonomy trichotomy, small-loop generator");
    CLI::App* cmd_all = app.add_subcommand("verify-all", "every suite plus a result matrix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags are config errors
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) cfg = load_config_file(config_path);
        for (const auto& [k, v] : overrides) apply_key(cfg, k, v);
        cfg.validate();

        SuiteResult result;
        std::string name;
        if (cmd_curvature->parsed()) {
            result = run_curvature_suite(cfg);
            name = "curvature";
        } else if (cmd_algebra->parsed()) {
            result = run_algebra_suite(cfg);
            name = "algebra";
        } else if (cmd_holonomy->parsed()) {
            result = run_holonomy_suite(cfg);
            name = "holonomy";
        } else if (cmd_all->parsed()) {
            result = run_verify_all(cfg);
            name = "verify_all";
        }

        std::string text = result.report.dump();
        std::fputs(text.c_str(), stdout);
        if (!cfg.out_dir.empty()) {
            std::filesystem::create_directories(cfg.out_dir);
            write_text_file(
                (std::filesystem::path(cfg.out_dir) / ("report_" + name + ".json")).string(),
                text);
        }
        return result.gate ? 0 : 1;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
