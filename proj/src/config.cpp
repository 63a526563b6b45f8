#include "randerslab/config.hpp"

#include <fstream>

#include "randerslab/circle_field.hpp"

namespace randerslab {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    size_t pos = 0;
    double d;
    try {
        d = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value for " + key + ": '" + value + "'");
    }
    if (pos != value.size()) throw ConfigError("bad numeric value for " + key + ": '" + value + "'");
    return d;
}

long long parse_int(const std::string& key, const std::string& value) {
    size_t pos = 0;
    long long i;
    try {
        i = std::stoll(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError("bad integer value for " + key + ": '" + value + "'");
    }
    if (pos != value.size()) throw ConfigError("bad integer value for " + key + ": '" + value + "'");
    return i;
}

}  // namespace

void RunConfig::validate() const {
    if (model != "shen" && model != "klein" && model != "flat")
        throw ConfigError("model must be one of shen, klein, flat (got '" + model + "')");
    if (epsilon != 1 && epsilon != -1) throw ConfigError("epsilon must be +1 or -1");
    if (tol <= 0.0 || fejer_tol <= 0.0) throw ConfigError("tolerances must be positive");
    if (n_max < 0) throw ConfigError("n_max must be >= 0");
    if (fourier_order < 1 || fourier_order > kMaxFourierOrder)
        throw ConfigError("fourier_order out of range");
    if (steps < 8) throw ConfigError("steps must be >= 8");
    if (samples < 16) throw ConfigError("samples must be >= 16");
    if (grid < 16) throw ConfigError("grid must be >= 16");
}

ModelVariant RunConfig::variant() const {
    validate();
    try {
        if (model == "shen") return shen_randers(a1, epsilon);
        if (model == "klein") return klein_riemannian();
        return flat_minkowski(a1);
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }
}

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "model") cfg.model = value;
    else if (key == "a1") cfg.a1 = parse_double(key, value);
    else if (key == "epsilon") cfg.epsilon = (int)parse_int(key, value);
    else if (key == "n_max") cfg.n_max = (int)parse_int(key, value);
    else if (key == "fourier_order") cfg.fourier_order = (int)parse_int(key, value);
    else if (key == "steps") cfg.steps = (int)parse_int(key, value);
    else if (key == "samples") cfg.samples = (int)parse_int(key, value);
    else if (key == "grid") cfg.grid = (int)parse_int(key, value);
    else if (key == "tol") cfg.tol = parse_double(key, value);
    else if (key == "fejer_tol") cfg.fejer_tol = parse_double(key, value);
    else if (key == "seed") cfg.seed = (unsigned long long)parse_int(key, value);
    else if (key == "out") cfg.out_dir = value;
    else throw ConfigError("unknown config key: " + key);
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
        apply_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

}  // namespace randerslab
