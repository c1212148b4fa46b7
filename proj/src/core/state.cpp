#include "core/state.hpp"

#include <cmath>

namespace flokit {

const char* parity_name(parity_class p) {
    switch (p) {
    case parity_class::even: return "even";
    case parity_class::odd: return "odd";
    default: return "mixed";
    }
}

parity_class classify_parity(const std::vector<cx>& amp) {
    bool has_even = false, has_odd = false;
    for (std::size_t b = 0; b < amp.size(); ++b) {
        if (std::abs(amp[b]) <= parity_dust) continue;
        (index_parity(b) ? has_odd : has_even) = true;
    }
    if (has_odd && has_even) return parity_class::mixed;
    if (has_odd) return parity_class::odd;
    return parity_class::even; // the zero vector counts as even
}

pure_state::pure_state(int nq, std::vector<cx> a) : n(nq), amp(std::move(a)) {
    if (n < 0 || n > 24) fail(errc::invalid_argument, "qubit count out of range: " + std::to_string(n));
    if (amp.size() != (std::size_t{1} << n))
        fail(errc::size_mismatch, "amplitude vector has " + std::to_string(amp.size()) +
                                      " entries, expected 2^" + std::to_string(n));
    parity = classify_parity(amp);
}

pure_state basis_state(int n, uint64_t bits) {
    if (n < 1 || n > 24) fail(errc::invalid_argument, "qubit count out of range: " + std::to_string(n));
    if (bits >> n) fail(errc::bad_index, "basis index " + std::to_string(bits) + " out of range for n=" + std::to_string(n));
    std::vector<cx> amp(std::size_t{1} << n, cx{0, 0});
    amp[bits] = 1.0;
    return pure_state(n, std::move(amp));
}

pure_state state_from_amplitudes(int n, std::vector<cx> amp) {
    pure_state s(n, std::move(amp));
    double nrm = norm(s);
    if (std::abs(nrm - 1.0) > 1e-10)
        fail(errc::not_normalized, "state is not normalized: |amp| = " + std::to_string(nrm));
    return s;
}

cx inner(const pure_state& a, const pure_state& b) {
    if (a.n != b.n) fail(errc::size_mismatch, "inner product of states with different qubit counts");
    cx acc{0, 0};
    for (std::size_t k = 0; k < a.amp.size(); ++k) acc += std::conj(a.amp[k]) * b.amp[k];
    return acc;
}

double norm(const pure_state& a) {
    double acc = 0;
    for (const cx& v : a.amp) acc += std::norm(v);
    return std::sqrt(acc);
}

pure_state normalized(pure_state a) {
    double nrm = norm(a);
    if (nrm <= 0) fail(errc::invalid_argument, "cannot normalize the zero vector");
    for (cx& v : a.amp) v /= nrm;
    a.parity = classify_parity(a.amp);
    return a;
}

pure_state tensor(const pure_state& a, const pure_state& b) {
    if (a.n + b.n > 24) fail(errc::invalid_argument, "tensor product too large");
    std::vector<cx> amp(std::size_t{1} << (a.n + b.n));
    for (std::size_t ia = 0; ia < a.amp.size(); ++ia) {
        const cx va = a.amp[ia];
        for (std::size_t ib = 0; ib < b.amp.size(); ++ib)
            amp[(ia << b.n) | ib] = va * b.amp[ib];
    }
    return pure_state(a.n + b.n, std::move(amp));
}

pure_state superpose(const std::vector<cx>& coeff, const std::vector<pure_state>& states) {
    if (coeff.size() != states.size() || states.empty())
        fail(errc::size_mismatch, "superpose: coefficient/state count mismatch");
    std::vector<cx> amp(states[0].dim(), cx{0, 0});
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (states[k].n != states[0].n) fail(errc::size_mismatch, "superpose: mixed qubit counts");
        for (std::size_t b = 0; b < amp.size(); ++b) amp[b] += coeff[k] * states[k].amp[b];
    }
    return pure_state(states[0].n, std::move(amp));
}

parity_split_result parity_split(const pure_state& psi) {
    double we2 = 0, wo2 = 0;
    for (std::size_t b = 0; b < psi.amp.size(); ++b)
        (index_parity(b) ? wo2 : we2) += std::norm(psi.amp[b]);
    parity_split_result out;
    const double we = std::sqrt(we2), wo = std::sqrt(wo2);
    auto component = [&](int par, double w) {
        std::vector<cx> amp(psi.dim(), cx{0, 0});
        for (std::size_t b = 0; b < amp.size(); ++b)
            if (index_parity(b) == par) amp[b] = psi.amp[b] / w;
        return pure_state(psi.n, std::move(amp));
    };
    if (we > parity_dust) {
        out.even_weight = we;
        out.even = component(0, we);
    }
    if (wo > parity_dust) {
        out.odd_weight = wo;
        out.odd = component(1, wo);
    }
    // a one-sided state owns the full weight exactly
    if (!out.even) out.odd_weight = 1.0;
    if (!out.odd) out.even_weight = 1.0;
    if (!out.even && !out.odd) fail(errc::invalid_argument, "parity_split of the zero vector");
    return out;
}

void require_normalized(const pure_state& psi, double tol) {
    double nrm = norm(psi);
    if (std::abs(nrm - 1.0) > tol)
        fail(errc::not_normalized, "state is not normalized: |amp| = " + std::to_string(nrm));
}

} // namespace flokit
