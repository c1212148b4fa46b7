#include "core/circuit.hpp"
#include "core/fidelity.hpp"
#include "core/magic.hpp"
#include "core/rng.hpp"
#include "core/schmidt.hpp"
#include "core/state.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

using namespace flokit;

namespace {

// Schmidt spectrum across the (n_a, n_b) cut by plain dense SVD
std::vector<double> svd_spectrum(const pure_state& psi, int n_a, int n_b) {
    const Eigen::Index rows = Eigen::Index{1} << n_a, cols = Eigen::Index{1} << n_b;
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index ya = 0; ya < rows; ++ya)
        for (Eigen::Index yb = 0; yb < cols; ++yb)
            m(ya, yb) = psi.amp[(static_cast<uint64_t>(ya) << n_b) | static_cast<uint64_t>(yb)];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    std::vector<double> sigma(svd.singularValues().data(),
                              svd.singularValues().data() + svd.singularValues().size());
    std::sort(sigma.begin(), sigma.end(), std::greater<double>());
    return sigma;
}

} // namespace

TEST_CASE("t_theta products") {
    std::vector<double> zero(4, 0.0), quarter(4, pi / 4);
    CHECK(t_theta(zero, 0) == 1.0);
    for (uint64_t y = 1; y < 16; ++y) CHECK(t_theta(zero, y) == 0.0);
    for (uint64_t y = 0; y < 16; ++y)
        CHECK(t_theta(quarter, y) == doctest::Approx(0.25).epsilon(1e-14));

    // bit order: bit (k-1-i) of y carries angle i
    std::vector<double> single{0.3};
    CHECK(t_theta(single, 0) == doctest::Approx(std::cos(0.3)));
    CHECK(t_theta(single, 1) == doctest::Approx(std::sin(0.3)));
    std::vector<double> two{0.3, 0.0};
    CHECK(t_theta(two, 0b10) == doctest::Approx(std::sin(0.3))); // angle 0 excited

    std::mt19937_64 gen = make_rng(2000);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> th = random_angles(gen, 4);
        double sum = 0;
        for (uint64_t y = 0; y < 16; ++y) sum += t_theta(th, y) * t_theta(th, y);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("tau vector and its closed-form norm") {
    std::array<double, 4> zero{0, 0, 0, 0}, quarter{pi / 4, pi / 4, pi / 4, pi / 4};
    std::array<double, 4> tz = tau_vector(zero);
    CHECK(tz[0] == doctest::Approx(1.0));
    CHECK(tz[1] == doctest::Approx(0.0));
    CHECK(tz[2] == doctest::Approx(0.0));
    CHECK(tz[3] == doctest::Approx(0.0));
    std::array<double, 4> tq = tau_vector(quarter);
    for (double v : tq) CHECK(v == doctest::Approx(0.5).epsilon(1e-14));

    std::mt19937_64 gen = make_rng(2100);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> a = random_angles(gen, 4);
        std::array<double, 4> th{a[0], a[1], a[2], a[3]};
        std::array<double, 4> tau = tau_vector(th);
        double brute = 0;
        for (double v : tau) brute += v * v;
        CHECK(std::abs(brute - tau_norm_squared_closed(th)) < 1e-12);
        CHECK(brute <= 1.0 + 1e-12); // the norm never exceeds one
    }
}

TEST_CASE("rho vector: normalization identity and the magic-family pattern") {
    std::array<double, 8> e1{1, 0, 0, 0, 0, 0, 0, 0};
    std::array<double, 4> r1 = rho_vector(e1);
    CHECK(r1[0] == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(r1[1] == 0.0);

    std::mt19937_64 gen = make_rng(2200);
    for (int trial = 0; trial < 200; ++trial) {
        std::array<double, 8> r = random_unit8(gen);
        std::array<double, 4> rho = rho_vector(r);
        double n2 = 0;
        for (double v : rho) n2 += v * v;
        CHECK(std::abs(n2 - 0.5) < 1e-12);
    }

    std::array<double, 8> not_unit{1, 1, 0, 0, 0, 0, 0, 0};
    CHECK_THROWS_AS(rho_vector(not_unit), error);

    // the r-frame of every magic-family state projects to (1/2, 1/2, 0, 0)
    for (double phi : {0.4, 1.3, 2.2, 3.0}) {
        magic_coords mc = extract_rsa(m_phi(phi));
        std::array<double, 4> rho = rho_vector(mc.r);
        CHECK(std::abs(rho[0] - 0.5) < 1e-10);
        CHECK(std::abs(rho[1] - 0.5) < 1e-10);
        CHECK(std::abs(rho[2]) < 1e-10);
        CHECK(std::abs(rho[3]) < 1e-10);
    }
}

TEST_CASE("synthesize_botero builds the correlated normal form") {
    SUBCASE("theta = (pi/4, 0) across the (2,2) cut") {
        pure_state s = synthesize_botero({pi / 4, 0}, nullptr, nullptr, 2, 2);
        const double h = 1 / std::sqrt(2.0);
        CHECK(std::abs(s.amp[0b0000] - h) < 1e-14);
        CHECK(std::abs(s.amp[0b1010] - h) < 1e-14);
        double rest = 0;
        for (uint64_t b = 0; b < 16; ++b)
            if (b != 0b0000 && b != 0b1010) rest += std::abs(s.amp[b]);
        CHECK(rest == 0.0);
    }
    SUBCASE("zero angles give the vacuum") {
        pure_state s = synthesize_botero({0, 0}, nullptr, nullptr, 2, 2);
        CHECK(oracle::max_abs_diff(s, basis_state(4, 0)) == 0.0);
    }
    SUBCASE("dressed output is an even Gaussian state") {
        std::mt19937_64 gen = make_rng(2300);
        std::vector<double> th = random_angles(gen, 2, 0, pi / 4);
        flo_circuit la = random_flo_circuit(2, parity_class::even, 2301);
        flo_circuit lb = random_flo_circuit(2, parity_class::even, 2302);
        pure_state s = synthesize_botero(th, &la, &lb, 2, 2);
        CHECK(s.parity == parity_class::even);
        CHECK(norm(s) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(orbit_invariant(s) < 1e-9); // Gaussian by construction
    }
    SUBCASE("shape validation") {
        CHECK_THROWS_AS(synthesize_botero({0.1}, nullptr, nullptr, 2, 2), error);
        CHECK_THROWS_AS(synthesize_botero({0.1, 0.2, 0.3}, nullptr, nullptr, 3, 2), error);
        flo_circuit wrong = random_flo_circuit(3, parity_class::even, 2303);
        CHECK_THROWS_AS(synthesize_botero({0.1, 0.2}, &wrong, nullptr, 2, 2), error);
    }
}

TEST_CASE("extract_thetas recovers the angle parameters") {
    SUBCASE("one angle across the (1,1) cut") {
        double th = 0.3;
        pure_state s(2, {std::cos(th), 0, 0, std::sin(th)});
        std::vector<double> got = extract_thetas(s, 1, 1);
        REQUIRE(got.size() == 1);
        CHECK(got[0] == doctest::Approx(th).epsilon(1e-12));
    }
    SUBCASE("the maximally magic state has spectrum {1/sqrt2, 1/sqrt2, 0, 0}") {
        std::vector<double> got = extract_thetas(a8_state(), 2, 2);
        REQUIRE(got.size() == 2);
        CHECK(got[0] == doctest::Approx(pi / 4).epsilon(1e-12));
        CHECK(got[1] == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("random Gaussian states match the dense SVD spectrum") {
        for (int n : {4, 6}) {
            pure_state flo = random_flo_state(n, parity_class::even, 2400 + n);
            std::vector<double> th = extract_thetas(flo, n / 2, n / 2);
            std::vector<double> sigma = svd_spectrum(flo, n / 2, n / 2);
            std::vector<double> rebuilt;
            for (uint64_t y = 0; y < (uint64_t{1} << (n / 2)); ++y)
                rebuilt.push_back(std::abs(t_theta(th, y)));
            std::sort(rebuilt.begin(), rebuilt.end(), std::greater<double>());
            for (std::size_t k = 0; k < sigma.size(); ++k)
                CHECK(std::abs(rebuilt[k] - sigma[k]) < 1e-9);
        }
    }
    SUBCASE("descending canonical order in [0, pi/4]") {
        pure_state flo = random_flo_state(6, parity_class::even, 2500);
        std::vector<double> th = extract_thetas(flo, 3, 3);
        REQUIRE(th.size() == 3);
        for (std::size_t k = 0; k < th.size(); ++k) {
            CHECK(th[k] >= -1e-12);
            CHECK(th[k] <= pi / 4 + 1e-12);
            if (k > 0) CHECK(th[k] <= th[k - 1] + 1e-12);
        }
    }
    SUBCASE("a spectrum without product structure is rejected") {
        // diag singular values (0.8, 0.5, 0.3, sqrt(0.02)): extremes times
        // middles differ, so no angle pair reproduces them
        std::vector<cx> amp(16, cx{0, 0});
        amp[0b0000] = 0.8;
        amp[0b0101] = 0.5;
        amp[0b1010] = 0.3;
        amp[0b1111] = std::sqrt(0.02);
        pure_state psi(4, std::move(amp));
        CHECK_THROWS_AS(extract_thetas(psi, 2, 2), error);
        pure_state generic = random_state_in_sector(4, parity_class::even, 2600);
        CHECK_THROWS_AS(extract_thetas(generic, 2, 2), error);
    }
}

TEST_CASE("round trip: synthesize then extract") {
    std::mt19937_64 gen = make_rng(2700);
    for (int trial = 0; trial < 6; ++trial) {
        int n = trial % 2 == 0 ? 4 : 6;
        int k = n / 2;
        std::vector<double> th_in = random_angles(gen, k, 0, pi / 4);
        std::sort(th_in.begin(), th_in.end(), std::greater<double>());
        flo_circuit la = random_flo_circuit(k, parity_class::even, 2710 + trial);
        flo_circuit lb = random_flo_circuit(n - k, parity_class::even, 2720 + trial);
        pure_state s = synthesize_botero(th_in, &la, &lb, k, n - k);
        std::vector<double> th_out = extract_thetas(s, k, n - k);
        for (int i = 0; i < k; ++i) CHECK(std::abs(th_in[i] - th_out[i]) < 1e-9);
    }
}

TEST_CASE("the inequality chain collapses to equalities on Gaussian instances") {
    flo_circuit c = random_flo_circuit(4, parity_class::even, 2800);
    pure_state psi = circuit_state(c);
    std::array<double, 4> zero{0, 0, 0, 0};
    std::array<double, 8> e1{1, 0, 0, 0, 0, 0, 0, 0};
    chain_row row = holder_chain_point(psi, zero, e1, c);
    const double h = 1 / std::sqrt(2.0);
    CHECK(std::abs(row.raw - h) < 1e-10);
    CHECK(std::abs(row.triangle - h) < 1e-10);
    CHECK(std::abs(row.holder - h) < 1e-10);
    CHECK(std::abs(row.final_bound - h) < 1e-10);
    CHECK(std::abs(row.cap - h) < 1e-10);
    CHECK(row.ok);
}

TEST_CASE("random chain audits stay monotone and capped") {
    for (const pure_state& psi :
         {a8_state(), m_phi(0.9), random_state_in_sector(4, parity_class::odd, 2900),
          random_state_in_sector(2, parity_class::even, 2901)}) {
        chain_report rep = holder_chain_audit(psi, 10, 3000);
        CHECK(rep.all_ok);
        CHECK(rep.max_violation <= 1e-10);
        REQUIRE(rep.rows.size() == 10);
        for (const chain_row& r : rep.rows) {
            CHECK(r.raw <= r.triangle + 1e-12);
            CHECK(r.triangle <= r.holder + 1e-12);
            CHECK(r.holder <= r.final_bound + 1e-12);
            CHECK(r.final_bound <= r.cap + 1e-10);
        }
    }
}
