#pragma once

#include "core/common.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace flokit {

enum class parity_class { even, odd, mixed };

const char* parity_name(parity_class p);

// parity of a basis index = Hamming weight mod 2
inline int index_parity(uint64_t idx) { return std::popcount(idx) & 1; }

parity_class classify_parity(const std::vector<cx>& amp);

// Dense n-qubit state vector.  The amplitude index encodes the bit string with
// qubit 0 as the most significant bit, so for n = 4 amp[0b1100] is <1100|psi>.
struct pure_state {
    int n = 0;
    std::vector<cx> amp;
    parity_class parity = parity_class::even;

    pure_state() = default;
    pure_state(int nq, std::vector<cx> a);
    std::size_t dim() const { return amp.size(); }
};

pure_state basis_state(int n, uint64_t bits);

// external entry point: checks the 2-norm (1e-10) as well as the shape
pure_state state_from_amplitudes(int n, std::vector<cx> amp);

cx inner(const pure_state& a, const pure_state& b); // <a|b>
double norm(const pure_state& a);
pure_state normalized(pure_state a);

// b's qubits are appended after a's, i.e. they occupy the highest qubit
// indices and therefore the least significant index bits:
// index = (ia << b.n) | ib
pure_state tensor(const pure_state& a, const pure_state& b);

// sum_k coeff[k] * states[k]; all states on the same qubit count
pure_state superpose(const std::vector<cx>& coeff, const std::vector<pure_state>& states);

struct parity_split_result {
    double even_weight = 0; // >= 0; exactly 0 when the sector is empty
    double odd_weight = 0;
    std::optional<pure_state> even; // normalized component, absent when weight 0
    std::optional<pure_state> odd;
};

// psi = even_weight * even + odd_weight * odd (when both are present)
parity_split_result parity_split(const pure_state& psi);

void require_normalized(const pure_state& psi, double tol = 1e-10);

} // namespace flokit
