#pragma once

#include "core/state.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace flokit {

// Pauli string: i^phase_pow times a tensor product of single-qubit letters.
// Letters live in x/z bit masks indexed by qubit number (bit j <-> qubit j):
// (x,z) = (0,0) I, (1,0) X, (1,1) Y, (0,1) Z.  Phases are tracked exactly as
// an integer power of i, so products of strings have no rounding at all.
struct pauli_string {
    int n = 0;
    unsigned phase_pow = 0; // factor i^phase_pow, 0..3
    uint32_t x = 0, z = 0;
};

// the four exact phase values i^k
inline cx phase_of(unsigned pow) {
    static const std::array<cx, 4> tab{cx{1, 0}, cx{0, 1}, cx{-1, 0}, cx{0, -1}};
    return tab[pow & 3];
}

pauli_string pauli_identity(int n);

// Majorana operator c_k under Jordan-Wigner:
// c_{2j} = Z_0..Z_{j-1} X_j,  c_{2j+1} = Z_0..Z_{j-1} Y_j
pauli_string majorana_op(int n, int k);

pauli_string mul(const pauli_string& a, const pauli_string& b);

pure_state apply_pauli(const pauli_string& p, const pure_state& s);

inline bool is_hermitian(const pauli_string& p) { return (p.phase_pow & 1) == 0; }
inline bool same_letters(const pauli_string& a, const pauli_string& b) {
    return a.n == b.n && a.x == b.x && a.z == b.z;
}
inline bool pauli_equal(const pauli_string& a, const pauli_string& b) {
    return same_letters(a, b) && ((a.phase_pow ^ b.phase_pow) & 3) == 0;
}

std::string letters_string(const pauli_string& p); // e.g. "ZZXI"

// Precomputed data for applying a string to amplitude indices: the x-letters
// become an index-space flip mask, the z-letters a sign mask, and base folds
// in the global phase together with one factor of i per Y letter, so that
// P|b> = i^{base} * (-1)^{|b & sign|} |b ^ flip>.
struct pauli_kernel {
    uint64_t flip = 0, sign = 0;
    unsigned base = 0;
};
pauli_kernel make_kernel(const pauli_string& p);

} // namespace flokit
