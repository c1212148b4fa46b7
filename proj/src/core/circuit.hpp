#pragma once

#include "core/pauli.hpp"
#include "core/state.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace flokit {

// one Givens generator exp(theta * c_i * c_j / 2) on Majorana modes i < j
struct majorana_rotation {
    int i = 0, j = 0;
    double theta = 0.0;
};

// a fermionic linear optical circuit: a computational basis start state
// followed by a list of Majorana-pair rotations applied in order
struct flo_circuit {
    int n = 0;
    uint64_t initial = 0;
    std::vector<majorana_rotation> rotations;
};

flo_circuit make_circuit(int n, uint64_t initial = 0);
void push_rotation(flo_circuit& c, int i, int j, double theta);

// in-place fused pair update of raw amplitudes by exp(theta c_i c_j / 2)
void apply_rotation(std::vector<cx>& amp, int n, const majorana_rotation& r);

// apply only the rotation part of c to an arbitrary state
pure_state apply_circuit_unitary(const flo_circuit& c, const pure_state& s);

// the state the circuit prepares from its initial basis state
pure_state circuit_state(const flo_circuit& c);

// R with U c_k U^dag = sum_l R_kl c_l; rotations compose left to right, so
// the first rotation applied contributes the leftmost Givens factor
Eigen::MatrixXd induced_orthogonal(const flo_circuit& c);

// recover a circuit inducing R (special orthogonal, 2n x 2n) by Givens
// elimination; rejects reflections (determinant -1)
flo_circuit circuit_from_orthogonal(const Eigen::MatrixXd& R, uint64_t initial = 0);

// a generically-random circuit: every Majorana pair once, angles uniform
flo_circuit random_flo_circuit(int n, parity_class sector, uint64_t seed);
pure_state random_flo_state(int n, parity_class sector, uint64_t seed);

} // namespace flokit
