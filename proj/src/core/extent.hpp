#pragma once

#include "core/magic.hpp"
#include "core/state.hpp"

#include <vector>

namespace flokit {

struct decomposition_term {
    cx coefficient;
    pure_state state; // Gaussian component
};

// psi = sum_k coefficient_k * state_k with every component Gaussian
struct gaussian_decomposition {
    std::vector<decomposition_term> terms;
    double l1_squared = 1.0; // (sum |coefficient_k|)^2
};

enum class fidelity_provenance { closed_form, optimizer, product_rule };
const char* provenance_name(fidelity_provenance p);

// witness omega with a certified fidelity value; lower_bound = |<omega|psi>|^2 / F
struct dual_certificate {
    pure_state witness;
    double witness_fidelity = 1.0;
    fidelity_provenance provenance = fidelity_provenance::closed_form;
    double lower_bound = 1.0;
};

// optimal two-term Gaussian decomposition of an even 4-qubit state;
// l1_squared equals the closed-form extent
gaussian_decomposition decompose_even4(const pure_state& psi);

// matching dual witness (maximally magic orbit) realizing the same value
dual_certificate witness_even4(const pure_state& psi);

double dual_ratio(const pure_state& psi, const pure_state& omega, double f_omega);

struct product_bounds {
    double lower = 1.0, upper = 1.0, gap = 0.0;
    std::vector<double> per_factor; // each factor's l1_squared
};

// two-sided extent bounds for a tensor product of even 4-qubit factors:
// upper from tensored decompositions, lower from tensored witnesses with the
// product fidelity rule (a vacuum-orbit factor multiplies F by 1, a maximally
// magic one by 1/2)
product_bounds product_extent_bounds(const std::vector<pure_state>& factors);

// (|a| sqrt(xi_e) + |b| sqrt(xi_o))^2 for the parity weights of psi
double parity_split_extent(const pure_state& psi, double xi_e, double xi_o);

// exact extent of a fixed-parity state on n <= 4 qubits (n <= 3 states are all
// Gaussian; 4-qubit odd states map to even ones through the first Majorana mode)
double small_n_extent(const pure_state& psi);

struct extent_bracket {
    double lower = 1.0, upper = 1.0, gap = 0.0;
};

// bracket for xi(psi tensor M), psi any state on n <= 4 qubits, M even 4-qubit:
// upper through the parity-split formula, lower through an equalized mixed
// dual witness; the two coincide when extent is multiplicative
extent_bracket extent_bracket_general(const pure_state& psi, const pure_state& m);

} // namespace flokit
