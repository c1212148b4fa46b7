#pragma once

// independent dense-linear-algebra reference implementations used only by the
// tests: Kronecker-built Pauli matrices, matrix-exponential rotations, trace
// recovery of the conjugation action, and Haar-ish special orthogonal samples

#include "core/circuit.hpp"
#include "core/pauli.hpp"
#include "core/state.hpp"

#include <Eigen/Dense>

#include <cstdint>

namespace flokit::oracle {

// dense 2^n x 2^n matrix of a Pauli string, including its global phase
Eigen::MatrixXcd pauli_matrix(const pauli_string& p);

// exp(theta/2 c_i c_j) through Eigen's generic matrix exponential
Eigen::MatrixXcd rotation_matrix(int n, const majorana_rotation& r);

// full circuit unitary (rotations only; initial state not included)
Eigen::MatrixXcd circuit_matrix(const flo_circuit& c);

// R with U c_l U^dag = sum_k R_lk c_k, each entry recovered from traces
Eigen::MatrixXd conjugation_action(const flo_circuit& c);

// Haar-distributed orthogonal matrix from Gaussian QR, sign-fixed to det +1
Eigen::MatrixXd random_special_orthogonal(int d, uint64_t seed);

Eigen::VectorXcd to_vec(const pure_state& s);
pure_state to_state(int n, const Eigen::VectorXcd& v);

double max_abs_diff(const pure_state& a, const pure_state& b);

} // namespace flokit::oracle
