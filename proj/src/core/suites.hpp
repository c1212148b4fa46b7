#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flokit {

// one verification suite = one lemma/theorem/identity block, run to tolerance
struct suite_config {
    std::string suite;
    int trials = -1;     // -1 = suite default
    uint64_t seed = 1;
    int n = 0;           // lemma1 only: 0 = sweep n in 1..4
    int factors = 0;     // theorem1 only: 0 = run both 2 and 3
    double tol = -1;     // -1 = suite default
    int restarts = 0;    // 0 = optimizer default (32)
    int threads = 0;
    std::string out_prefix; // empty = compute only, no files
};

struct suite_check {
    std::string name;
    double max_error = 0;
    double tolerance = 0;
    int failures = 0;
};

struct suite_summary {
    std::string suite;
    int trials = 0;
    uint64_t seed = 0;
    int failures = 0;
    double max_error = 0;
    double tolerance = 0;
    bool passed = false;
    std::vector<suite_check> checks; // per-check breakdown where a suite has several
};

const std::vector<std::string>& suite_names();

suite_summary run_suite(const suite_config& cfg);

struct table_summary {
    int grid = 0;
    double max_formula_error = 0;   // closed-form columns vs analytic formulas
    double max_optimizer_error = 0; // optimizer fidelity vs closed form
    bool passed = false;
};

// the magic-family table: phi, closed/bracketed extent, closed/optimized fidelity
table_summary write_mphi_table(const std::string& path, int grid, int restarts, uint64_t seed,
                               int threads = 0);

} // namespace flokit
