#include "core/extent.hpp"
#include "core/fidelity.hpp"
#include "core/magic.hpp"
#include "core/pauli.hpp"
#include "core/rng.hpp"
#include "core/state.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace flokit;

namespace {

pure_state rebuild(const gaussian_decomposition& dec) {
    std::vector<cx> coeff;
    std::vector<pure_state> states;
    for (const auto& t : dec.terms) {
        coeff.push_back(t.coefficient);
        states.push_back(t.state);
    }
    return superpose(coeff, states);
}

} // namespace

TEST_CASE("two-term decomposition of the maximally magic state") {
    gaussian_decomposition dec = decompose_even4(a8_state());
    REQUIRE(dec.terms.size() == 2);
    CHECK(dec.l1_squared == doctest::Approx(2.0).epsilon(1e-12));
    for (const auto& term : dec.terms) {
        CHECK(is_flo_even4(term.state, 1e-9));
        CHECK(std::abs(term.coefficient) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
    }
    CHECK(oracle::max_abs_diff(rebuild(dec), a8_state()) < 1e-12);
}

TEST_CASE("Gaussian input collapses to one term") {
    pure_state flo = random_flo_state(4, parity_class::even, 1000);
    gaussian_decomposition dec = decompose_even4(flo);
    REQUIRE(dec.terms.size() == 1);
    CHECK(dec.l1_squared == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(oracle::max_abs_diff(rebuild(dec), flo) < 1e-12);
}

TEST_CASE("decomposition components are Gaussian and the l1 norm is the closed extent") {
    for (int trial = 0; trial < 25; ++trial) {
        pure_state psi = random_state_in_sector(4, parity_class::even, 1100 + trial);
        gaussian_decomposition dec = decompose_even4(psi);
        REQUIRE(dec.terms.size() == 2);
        for (const auto& term : dec.terms) CHECK(is_flo_even4(term.state, 1e-9));
        CHECK(oracle::max_abs_diff(rebuild(dec), psi) < 1e-10);
        CHECK(std::abs(dec.l1_squared - closed_extent(psi)) < 1e-10);
    }
}

TEST_CASE("dual witness certifies the same value") {
    SUBCASE("the maximally magic state is its own witness") {
        dual_certificate cert = witness_even4(a8_state());
        CHECK(cert.witness_fidelity == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(cert.lower_bound == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(cert.provenance == fidelity_provenance::closed_form);
        CHECK(std::abs(std::abs(inner(cert.witness, a8_state())) - 1.0) < 1e-12);
    }
    SUBCASE("strong duality on random even states") {
        for (int trial = 0; trial < 25; ++trial) {
            pure_state psi = random_state_in_sector(4, parity_class::even, 1200 + trial);
            gaussian_decomposition dec = decompose_even4(psi);
            dual_certificate cert = witness_even4(psi);
            CHECK(cert.lower_bound <= dec.l1_squared + 1e-8); // weak duality
            CHECK(std::abs(dec.l1_squared - cert.lower_bound) < 1e-9);
            // the witness sits on the maximally magic orbit (invariant 1);
            // the fidelity formula's sqrt(1 - inv^2) amplifies the rounding
            // in inv to ~1e-8, so check the linear quantity tightly
            CHECK(std::abs(orbit_invariant(cert.witness) - 1.0) < 1e-12);
            CHECK(std::abs(closed_fidelity(cert.witness) - 0.5) < 1e-7);
        }
    }
    SUBCASE("Gaussian input: the state itself with fidelity 1") {
        pure_state flo = random_flo_state(4, parity_class::even, 1250);
        dual_certificate cert = witness_even4(flo);
        CHECK(cert.witness_fidelity == doctest::Approx(1.0));
        CHECK(cert.lower_bound == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("dual_ratio: any witness with a true fidelity stays below the extent") {
    pauli_string c0 = majorana_op(4, 0);
    for (int trial = 0; trial < 20; ++trial) {
        pure_state psi = random_state_in_sector(4, parity_class::even, 1300 + trial);
        double xi = closed_extent(psi);
        pure_state omega = random_state_in_sector(4, parity_class::even, 1350 + trial);
        CHECK(dual_ratio(psi, omega, closed_fidelity(omega)) <= xi + 1e-8);
        pure_state omega_odd = random_state_in_sector(4, parity_class::odd, 1380 + trial);
        double f_odd = closed_fidelity(apply_pauli(c0, omega_odd));
        CHECK(dual_ratio(psi, omega_odd, f_odd) <= xi + 1e-8);
    }
    CHECK_THROWS_AS(dual_ratio(a8_state(), a8_state(), 0.0), error);
}

TEST_CASE("product bounds: tensored decompositions vs tensored witnesses") {
    SUBCASE("one factor reduces to the closed extent") {
        pure_state psi = random_state_in_sector(4, parity_class::even, 1400);
        product_bounds pb = product_extent_bounds({psi});
        CHECK(pb.upper == doctest::Approx(closed_extent(psi)).epsilon(1e-12));
        CHECK(std::abs(pb.gap) < 1e-9);
    }
    SUBCASE("two and three factors close the duality gap") {
        for (int count : {2, 3}) {
            std::vector<pure_state> factors;
            for (int k = 0; k < count; ++k)
                factors.push_back(random_state_in_sector(4, parity_class::even, 1500 + 10 * count + k));
            product_bounds pb = product_extent_bounds(factors);
            REQUIRE(static_cast<int>(pb.per_factor.size()) == count);
            double prod = 1;
            for (double v : pb.per_factor) prod *= v;
            CHECK(pb.upper == doctest::Approx(prod).epsilon(1e-12)); // submultiplicative by construction
            CHECK(std::abs(pb.gap) < 1e-9);
            CHECK(pb.lower <= pb.upper + 1e-12);
        }
    }
    SUBCASE("factor list size is validated") {
        CHECK_THROWS_AS(product_extent_bounds({}), error);
        std::vector<pure_state> four(4, a8_state());
        CHECK_THROWS_AS(product_extent_bounds(four), error);
        CHECK_THROWS_AS(product_extent_bounds({basis_state(3, 0)}), error);
    }
}

TEST_CASE("parity-split extent formula") {
    pure_state even4 = random_state_in_sector(4, parity_class::even, 1600);
    double xi = closed_extent(even4);
    CHECK(parity_split_extent(even4, xi, 7.0) == doctest::Approx(xi).epsilon(1e-12));

    double we = std::sqrt(0.3), wo = std::sqrt(0.7);
    pure_state mixed = superpose({we, wo}, {basis_state(1, 0), basis_state(1, 1)});
    double expect = (we * std::sqrt(1.0) + wo * std::sqrt(1.0)) * (we + wo);
    CHECK(parity_split_extent(mixed, 1.0, 1.0) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("small-n extent: everything below four qubits is Gaussian") {
    CHECK(small_n_extent(random_state_in_sector(1, parity_class::odd, 1700)) == 1.0);
    CHECK(small_n_extent(random_state_in_sector(2, parity_class::even, 1701)) == 1.0);
    CHECK(small_n_extent(random_state_in_sector(3, parity_class::odd, 1702)) == 1.0);

    pure_state even4 = random_state_in_sector(4, parity_class::even, 1703);
    CHECK(small_n_extent(even4) == doctest::Approx(closed_extent(even4)).epsilon(1e-12));

    // odd 4-qubit states map through the first Majorana mode
    pure_state odd4 = random_state_in_sector(4, parity_class::odd, 1704);
    double expect = closed_extent(apply_pauli(majorana_op(4, 0), odd4));
    CHECK(small_n_extent(odd4) == doctest::Approx(expect).epsilon(1e-12));

    CHECK_THROWS_AS(small_n_extent(random_state_in_sector(2, parity_class::mixed, 1705)), error);
    CHECK_THROWS_AS(small_n_extent(random_state_in_sector(5, parity_class::even, 1706)), error);
}

TEST_CASE("general bracket: fixed-parity and mixed-parity companions") {
    pure_state m = random_state_in_sector(4, parity_class::even, 1800);

    SUBCASE("even 4-qubit companion reproduces the product result") {
        pure_state psi = random_state_in_sector(4, parity_class::even, 1801);
        extent_bracket br = extent_bracket_general(psi, m);
        CHECK(br.upper == doctest::Approx(closed_extent(psi) * closed_extent(m)).epsilon(1e-12));
        CHECK(std::abs(br.gap) < 1e-9);
    }
    SUBCASE("mixed-parity one-qubit companion closes the gap too") {
        std::mt19937_64 gen = make_rng(1802);
        std::uniform_real_distribution<double> u01(0.1, 0.9);
        double w = u01(gen);
        pure_state psi = superpose({std::sqrt(w), std::polar(std::sqrt(1 - w), 0.9)},
                                   {basis_state(1, 0), basis_state(1, 1)});
        extent_bracket br = extent_bracket_general(psi, m);
        double split = parity_split_extent(psi, 1.0, 1.0);
        CHECK(br.upper == doctest::Approx(split * closed_extent(m)).epsilon(1e-12));
        CHECK(br.lower <= br.upper + 1e-12);
        CHECK(std::abs(br.gap) < 1e-9);
    }
    SUBCASE("odd 4-qubit psi works through the Majorana mapping") {
        pure_state psi = random_state_in_sector(4, parity_class::odd, 1803);
        extent_bracket br = extent_bracket_general(psi, m);
        CHECK(br.upper ==
              doctest::Approx(small_n_extent(psi) * closed_extent(m)).epsilon(1e-12));
        CHECK(std::abs(br.gap) < 1e-9);
    }
    SUBCASE("the companion must be even 4-qubit") {
        CHECK_THROWS_AS(extent_bracket_general(basis_state(1, 0), basis_state(3, 0)), error);
        CHECK_THROWS_AS(
            extent_bracket_general(basis_state(1, 0), random_state_in_sector(4, parity_class::odd, 1804)),
            error);
    }
}
