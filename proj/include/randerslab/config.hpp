#pragma once

#include <stdexcept>
#include <string>

#include "randerslab/model.hpp"

namespace randerslab {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Run parameters shared by every subcommand. File format is flat key=value
// (one per line, # comments); command-line flags override file entries.
struct RunConfig {
    std::string model = "shen";  // shen | klein | flat
    double a1 = 0.5;
    int epsilon = 1;
    int n_max = 10;          // largest n in the rank-law table
    int fourier_order = 64;  // N for Fejer/projection work
    int steps = 512;         // RK4 steps per path segment
    int samples = 64;        // indicatrix samples per holonomy map
    int grid = 256;          // restriction/closed-form comparison grid
    double tol = 1e-6;
    double fejer_tol = 1e-2;
    unsigned long long seed = 1;
    std::string out_dir;

    void validate() const;           // throws ConfigError
    ModelVariant variant() const;    // validates the model fields too
};

// Both throw ConfigError on unknown keys or malformed values.
void apply_key(RunConfig& cfg, const std::string& key, const std::string& value);
RunConfig load_config_file(const std::string& path);

}  // namespace randerslab
