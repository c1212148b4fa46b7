#pragma once

#include "core/circuit.hpp"
#include "core/state.hpp"

#include <cstdint>
#include <vector>

namespace flokit {

struct fidelity_config {
    int restarts = 32;
    double tol = 1e-10;      // per-sweep improvement threshold
    int sweep_limit = 500;
    uint64_t seed = 0;
    parity_class sector = parity_class::mixed; // mixed = automatic
    int threads = 0;                           // 0 = resolve from environment
};

struct fidelity_result {
    double value = 0.0;         // best squared overlap found (a certified lower bound)
    flo_circuit witness;        // circuit reproducing exactly that overlap
    int restarts_used = 0;
    bool converged = false;     // winning run's sweep loop reached its tolerance
    parity_class sector = parity_class::even; // sector of the winning witness
    std::vector<double> trace;  // winning run's per-sweep objective (non-decreasing)
};

// angle maximizing |A cos(t/2) + B sin(t/2)|^2, ties broken toward 0
double coordinate_update(cx A, cx B);

// Jacobi-sweep ascent of |<omega|psi>|^2 over Gaussian states omega: each step
// replaces omega by exp(t* c_i c_j / 2) omega with the exact 1-D maximizer t*.
// Runs from a deterministic basis-state start, cfg.restarts - 1 random starts
// (plus warm_start as one extra run when given), over the relevant parity
// sectors, and returns the best run.
fidelity_result optimize_fidelity(const pure_state& psi, const fidelity_config& cfg = {},
                                  const flo_circuit* warm_start = nullptr);

struct mult_trial {
    int trial = 0;
    int n = 0;
    double f_single = 0, f_product = 0, gap = 0;
    bool converged = false;
};

struct mult_report {
    std::vector<mult_trial> trials;
    double max_gap = 0;
    bool all_converged = true;
};

// for random fixed-parity psi (alternating parity per trial), compares
// F(psi tensor a8) against F(psi)/2; the true gap is 0
mult_report verify_fidelity_multiplicativity(int n, int trials, uint64_t seed,
                                             const fidelity_config& cfg = {});

} // namespace flokit
