#pragma once

#include "core/circuit.hpp"
#include "core/state.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace flokit {

// prod_i cos(theta_i)^(1-y_i) sin(theta_i)^(y_i); bit i of y in qubit order
double t_theta(const std::vector<double>& thetas, uint64_t y);

// the four pairwise |t| sums over (0000,1111), (1100,0011), (1010,0101), (1001,0110)
std::array<double, 4> tau_vector(const std::array<double, 4>& thetas);

// closed form for ||tau||^2: (1 + |prod sin 2theta_i| + prod cos 2theta_i) / 2
double tau_norm_squared_closed(const std::array<double, 4>& thetas);

// (|r1+ir2|, |r3+ir4|, |r5+ir6|, |r7+ir8|) / sqrt(2) for a unit 8-vector
std::array<double, 4> rho_vector(const std::array<double, 8>& r);

// fermionic Schmidt normal form across the (n_a, n_b) cut: the correlated
// basis state sum_y t_theta(y)|y>_A|y 0..0>_B dressed with local circuits
// (rotation parts only; pass nullptr for identity locals)
pure_state synthesize_botero(const std::vector<double>& thetas, const flo_circuit* local_a,
                             const flo_circuit* local_b, int n_a, int n_b);

// recover the angles from the Schmidt spectrum across the cut; fails with
// residual_too_large when the spectrum is not of product form (non-Gaussian
// input); result is descending in [0, pi/4]
std::vector<double> extract_thetas(const pure_state& psi, int n_a, int n_b);

// one audited instance of the fidelity proof's inequality chain
struct chain_row {
    double raw = 0;         // |sum_y t A_y B_y|
    double triangle = 0;    // sum_y |t A_y B_y|
    double holder = 0;      // (sum_y |t A_y|) max_y |B_y|
    double final_bound = 0; // ||tau|| ||rho|| max_y |B_y|
    double cap = 0;         // sqrt(F(psi))/sqrt(2), certified in closed form
    bool ok = false;        // chain monotone and capped
};

struct chain_report {
    std::vector<chain_row> rows;
    bool all_ok = true;
    double max_violation = 0; // worst monotonicity/cap breach observed
};

// A_y = sum_j r_j <eta_j|y>, B_y = <psi4|W|y>
chain_row holder_chain_point(const pure_state& psi4, const std::array<double, 4>& thetas,
                             const std::array<double, 8>& r, const flo_circuit& w);

// random-instance audit for a fixed-parity state on up to 4 qubits (padded
// with trailing |0>s to exactly 4)
chain_report holder_chain_audit(const pure_state& psi, int trials, uint64_t seed);

} // namespace flokit
