#include "core/pauli.hpp"

#include <bit>

namespace flokit {

pauli_string pauli_identity(int n) {
    if (n < 1 || n > 24) fail(errc::invalid_argument, "pauli_identity: bad qubit count");
    return pauli_string{n, 0, 0, 0};
}

pauli_string majorana_op(int n, int k) {
    if (n < 1 || n > 24) fail(errc::invalid_argument, "majorana_op: bad qubit count");
    if (k < 0 || k >= 2 * n) fail(errc::bad_index, "majorana_op: index out of range");
    int j = k / 2;
    pauli_string p = pauli_identity(n);
    p.z = static_cast<uint32_t>((1u << j) - 1u); // Z on qubits 0..j-1
    if (k % 2 == 0) {
        p.x |= 1u << j; // X_j
    } else {
        p.x |= 1u << j; // Y_j = (x=1, z=1)
        p.z |= 1u << j;
    }
    return p;
}

pauli_string mul(const pauli_string& a, const pauli_string& b) {
    if (a.n != b.n) fail(errc::size_mismatch, "pauli mul: qubit counts differ");
    // per-letter phase i^tab[idx] for the product a_j * b_j, idx = ax<<3|az<<2|bx<<1|bz
    static const unsigned tab[16] = {0, 0, 0, 0, 0, 0, 1, 3, 0, 3, 0, 1, 0, 1, 3, 0};
    unsigned pow = a.phase_pow + b.phase_pow;
    for (int j = 0; j < a.n; ++j) {
        unsigned idx = ((a.x >> j & 1u) << 3) | ((a.z >> j & 1u) << 2) |
                       ((b.x >> j & 1u) << 1) | (b.z >> j & 1u);
        pow += tab[idx];
    }
    return pauli_string{a.n, pow & 3u, a.x ^ b.x, a.z ^ b.z};
}

pauli_kernel make_kernel(const pauli_string& p) {
    pauli_kernel k;
    for (int j = 0; j < p.n; ++j) {
        uint64_t bit = uint64_t{1} << (p.n - 1 - j); // qubit j is index bit n-1-j
        if (p.x >> j & 1u) k.flip |= bit;
        if (p.z >> j & 1u) k.sign |= bit;
    }
    // fold one factor of i per Y letter into the base phase: Y = i X Z
    k.base = (p.phase_pow + std::popcount(p.x & p.z)) & 3u;
    return k;
}

pure_state apply_pauli(const pauli_string& p, const pure_state& s) {
    if (p.n != s.n) fail(errc::size_mismatch, "apply_pauli: qubit counts differ");
    pauli_kernel k = make_kernel(p);
    std::vector<cx> out(s.amp.size());
    for (uint64_t b = 0; b < s.amp.size(); ++b) {
        unsigned pow = (k.base + 2u * (std::popcount(b & k.sign) & 1u)) & 3u;
        out[b ^ k.flip] = phase_of(pow) * s.amp[b];
    }
    return pure_state(p.n, std::move(out));
}

std::string letters_string(const pauli_string& p) {
    std::string s;
    s.reserve(p.n);
    for (int j = 0; j < p.n; ++j) {
        bool x = p.x >> j & 1u, z = p.z >> j & 1u;
        s += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }
    return s;
}

} // namespace flokit
