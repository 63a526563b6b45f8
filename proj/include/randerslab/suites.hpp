#pragma once

#include "randerslab/config.hpp"
#include "randerslab/report.hpp"

namespace randerslab {

// One subcommand's outcome. `pass` is the conjunction of every check in the
// report; `gate` is the subset that drives the exit code (the rank law for
// the algebra suite, lift monotonicity and F-drift for the holonomy suite,
// everything for the others).
struct SuiteResult {
    Json report;
    bool pass = true;
    bool gate = true;
};

SuiteResult run_curvature_suite(const RunConfig& cfg);
SuiteResult run_algebra_suite(const RunConfig& cfg);
SuiteResult run_holonomy_suite(const RunConfig& cfg);
SuiteResult run_verify_all(const RunConfig& cfg);

}  // namespace randerslab
