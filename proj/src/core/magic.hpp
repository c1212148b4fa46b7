#pragma once

#include "core/state.hpp"

#include <array>

namespace flokit {

// Orbit coordinates of an even 4-qubit state in the magic basis:
// e^{i gauge} psi = sum_j (cos(a) r_j + i sin(a) s_j) eta_j with r, s real
// orthonormal 8-vectors and a in [0, pi/4].  a = pi/4 is the Gaussian orbit,
// a = 0 the maximally magic one (where s is an arbitrary flagged completion).
struct magic_coords {
    std::array<cx, 8> z{};      // z_j = <eta_j|psi>
    std::array<double, 8> r{}, s{};
    double a = 0;
    double gauge = 0;           // gamma
    double orbit_invariant = 0; // |sum_j z_j^2| = cos(2a)
    bool s_degenerate = false;
};

// the eight magic basis states eta_1..eta_8 (orthonormal, even, 4 qubits)
const std::array<pure_state, 8>& magic_basis();

void require_even4(const pure_state& psi, const char* who);

std::array<cx, 8> to_magic_coords(const pure_state& psi);
pure_state from_magic_coords(const std::array<cx, 8>& z);

magic_coords extract_rsa(const pure_state& psi);

// |sum_j z_j^2|: conserved under even 4-qubit Gaussian circuits
double orbit_invariant(const pure_state& psi);

// best squared overlap with a Gaussian state: (1 + sqrt(1 - inv^2)) / 2
double closed_fidelity(const pure_state& psi);
// minimal l1^2 over Gaussian decompositions: 1 + inv
double closed_extent(const pure_state& psi);

bool is_flo_even4(const pure_state& psi, double tol = 1e-10);

// the magic family: (|0000> + |0011> + |1100> + e^{i phi}|1111>) / 2
pure_state m_phi(double phi);
// a_8 = (|0000> + |1111>)/sqrt(2) = eta_1: maximally magic, fidelity 1/2
pure_state a8_state();

} // namespace flokit
