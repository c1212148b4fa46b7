#include "core/schmidt.hpp"

#include "core/magic.hpp"
#include "core/pauli.hpp"
#include "core/rng.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <bit>
#include <cmath>

namespace flokit {

double t_theta(const std::vector<double>& thetas, uint64_t y) {
    int k = static_cast<int>(thetas.size());
    if (y >> k) fail(errc::bad_index, "t_theta: bit string longer than angle list");
    double t = 1.0;
    for (int i = 0; i < k; ++i) {
        bool yi = (y >> (k - 1 - i)) & 1u;
        t *= yi ? std::sin(thetas[i]) : std::cos(thetas[i]);
    }
    return t;
}

std::array<double, 4> tau_vector(const std::array<double, 4>& thetas) {
    std::vector<double> th(thetas.begin(), thetas.end());
    auto at = [&](uint64_t y) { return std::abs(t_theta(th, y)); };
    return {at(0b0000) + at(0b1111), at(0b1100) + at(0b0011), at(0b1010) + at(0b0101),
            at(0b1001) + at(0b0110)};
}

double tau_norm_squared_closed(const std::array<double, 4>& thetas) {
    double ps = 1.0, pc = 1.0;
    for (double th : thetas) {
        ps *= std::sin(2.0 * th);
        pc *= std::cos(2.0 * th);
    }
    return 0.5 * (1.0 + std::abs(ps) + pc);
}

std::array<double, 4> rho_vector(const std::array<double, 8>& r) {
    double n2 = 0;
    for (double v : r) n2 += v * v;
    if (std::abs(n2 - 1.0) > 1e-10) fail(errc::not_normalized, "rho_vector: r must be a unit vector");
    const double h = 1.0 / std::sqrt(2.0);
    return {h * std::hypot(r[0], r[1]), h * std::hypot(r[2], r[3]), h * std::hypot(r[4], r[5]),
            h * std::hypot(r[6], r[7])};
}

pure_state synthesize_botero(const std::vector<double>& thetas, const flo_circuit* local_a,
                             const flo_circuit* local_b, int n_a, int n_b) {
    if (n_a < 1 || n_a > n_b) fail(errc::invalid_argument, "synthesize_botero: need 1 <= n_a <= n_b");
    if (static_cast<int>(thetas.size()) != n_a)
        fail(errc::size_mismatch, "synthesize_botero: need one angle per A qubit");
    if (local_a && local_a->n != n_a)
        fail(errc::size_mismatch, "synthesize_botero: local_a acts on the wrong block size");
    if (local_b && local_b->n != n_b)
        fail(errc::size_mismatch, "synthesize_botero: local_b acts on the wrong block size");
    int n = n_a + n_b;
    std::vector<cx> amp(std::size_t{1} << n, cx{0, 0});
    for (uint64_t y = 0; y < (uint64_t{1} << n_a); ++y) {
        // |y>_A |y 0..0>_B: the B block repeats y on its first n_a qubits.
        // w excited pairs contribute (a_A1 a_B1)(a_A2 a_B2).. of creation
        // operators; sorting them into qubit order costs w(w-1)/2 swaps, so
        // the amplitude carries that parity (without it the sum is not the
        // Gaussian pair-condensate normal form)
        uint64_t idx = (y << n_b) | (y << (n_b - n_a));
        int w = std::popcount(y);
        double sign = (w * (w - 1) / 2) % 2 ? -1.0 : 1.0;
        amp[idx] = sign * t_theta(thetas, y);
    }
    if (local_a)
        for (const auto& r : local_a->rotations) apply_rotation(amp, n, r);
    if (local_b)
        for (const auto& r : local_b->rotations) {
            // an even rotation on B-block modes commutes with the A-block
            // Jordan-Wigner tails, so shifting the mode indices is exact
            majorana_rotation shifted{r.i + 2 * n_a, r.j + 2 * n_a, r.theta};
            apply_rotation(amp, n, shifted);
        }
    return pure_state(n, std::move(amp));
}

namespace {

// peel the largest angle off a descending |t| multiset and recurse
std::vector<double> recover_thetas(std::vector<double> vals, int k) {
    if (k == 0) return {};
    double s1 = vals[0], s2 = vals[1];
    if (s2 <= 1e-12 * std::max(s1, 1.0)) return std::vector<double>(k, 0.0);
    double theta = std::atan2(s2, s1); // largest angle: in [0, pi/4] since s2 <= s1
    double c = std::cos(theta), t = std::tan(theta);
    std::vector<char> used(vals.size(), 0);
    std::vector<double> reduced;
    for (std::size_t a = 0; a < vals.size(); ++a) {
        if (used[a]) continue;
        used[a] = 1;
        double target = vals[a] * t;
        std::size_t best = vals.size();
        double best_d = 0;
        for (std::size_t b = a + 1; b < vals.size(); ++b) {
            if (used[b]) continue;
            double d = std::abs(vals[b] - target);
            if (best == vals.size() || d < best_d) {
                best = b;
                best_d = d;
            }
        }
        if (best == vals.size())
            fail(errc::residual_too_large, "extract_thetas: spectrum has no product pairing");
        used[best] = 1;
        reduced.push_back(vals[a] / c); // c >= 1/sqrt(2), never small
    }
    std::sort(reduced.begin(), reduced.end(), std::greater<double>());
    std::vector<double> rest = recover_thetas(std::move(reduced), k - 1);
    rest.insert(rest.begin(), theta);
    return rest;
}

} // namespace

std::vector<double> extract_thetas(const pure_state& psi, int n_a, int n_b) {
    if (n_a < 1 || n_a > n_b || n_a + n_b != psi.n)
        fail(errc::invalid_argument, "extract_thetas: cut does not match the state");
    const std::size_t rows = std::size_t{1} << n_a, cols = std::size_t{1} << n_b;
    Eigen::MatrixXcd m(rows, cols);
    for (std::size_t ya = 0; ya < rows; ++ya)
        for (std::size_t yb = 0; yb < cols; ++yb)
            m(static_cast<Eigen::Index>(ya), static_cast<Eigen::Index>(yb)) =
                psi.amp[(ya << n_b) | yb];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    std::vector<double> sigma(svd.singularValues().data(),
                              svd.singularValues().data() + svd.singularValues().size());
    std::sort(sigma.begin(), sigma.end(), std::greater<double>());

    std::vector<double> thetas = recover_thetas(sigma, n_a);

    // certify: the |t| multiset of the recovered angles must match the spectrum
    std::vector<double> rebuilt;
    for (uint64_t y = 0; y < rows; ++y) rebuilt.push_back(std::abs(t_theta(thetas, y)));
    std::sort(rebuilt.begin(), rebuilt.end(), std::greater<double>());
    double resid = 0;
    for (std::size_t k = 0; k < rows; ++k) resid = std::max(resid, std::abs(rebuilt[k] - sigma[k]));
    if (resid > 1e-8)
        fail(errc::residual_too_large,
             "extract_thetas: Schmidt spectrum is not of Gaussian product form (residual " +
                 std::to_string(resid) + ")");
    return thetas;
}

chain_row holder_chain_point(const pure_state& psi4, const std::array<double, 4>& thetas,
                             const std::array<double, 8>& r, const flo_circuit& w) {
    if (psi4.n != 4) fail(errc::size_mismatch, "holder_chain_point: need a 4-qubit state");
    if (w.n != 4) fail(errc::size_mismatch, "holder_chain_point: witness circuit must act on 4 qubits");
    require_normalized(psi4, 1e-10);
    if (psi4.parity == parity_class::mixed)
        fail(errc::parity_mismatch, "holder_chain_point: need a fixed-parity state");

    const auto& basis = magic_basis();
    std::vector<double> th(thetas.begin(), thetas.end());
    cx raw{0, 0};
    double triangle = 0, sum_ta = 0, max_b = 0;
    for (uint64_t y = 0; y < 16; ++y) {
        cx a{0, 0};
        for (int j = 0; j < 8; ++j) a += r[j] * std::conj(basis[j].amp[y]);
        cx b = inner(psi4, apply_circuit_unitary(w, basis_state(4, y)));
        double t = t_theta(th, y);
        raw += t * a * b;
        triangle += std::abs(t) * std::abs(a) * std::abs(b);
        sum_ta += std::abs(t) * std::abs(a);
        max_b = std::max(max_b, std::abs(b));
    }

    std::array<double, 4> tau = tau_vector(thetas), rho = rho_vector(r);
    double tau_n = 0, rho_n = 0;
    for (int k = 0; k < 4; ++k) {
        tau_n += tau[k] * tau[k];
        rho_n += rho[k] * rho[k];
    }

    chain_row row;
    row.raw = std::abs(raw);
    row.triangle = triangle;
    row.holder = sum_ta * max_b;
    row.final_bound = std::sqrt(tau_n) * std::sqrt(rho_n) * max_b;
    // max_y |B_y| never beats the best Gaussian overlap, so the chain is capped
    // by sqrt(F)/sqrt(2); fidelity in closed form (odd states through mode 0)
    pure_state even_rep = psi4.parity == parity_class::even
                              ? psi4
                              : apply_pauli(majorana_op(4, 0), psi4);
    row.cap = std::sqrt(closed_fidelity(even_rep)) / std::sqrt(2.0);
    row.ok = row.raw <= row.triangle + 1e-12 && row.triangle <= row.holder + 1e-12 &&
             row.holder <= row.final_bound + 1e-12 && row.final_bound <= row.cap + 1e-10;
    return row;
}

chain_report holder_chain_audit(const pure_state& psi, int trials, uint64_t seed) {
    if (psi.n < 1 || psi.n > 4)
        fail(errc::invalid_argument, "holder_chain_audit: state must have 1..4 qubits");
    if (psi.parity == parity_class::mixed)
        fail(errc::parity_mismatch, "holder_chain_audit: need a fixed-parity state");
    require_normalized(psi, 1e-10);
    pure_state psi4 = psi;
    if (psi.n < 4) psi4 = tensor(psi, basis_state(4 - psi.n, 0));

    chain_report rep;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 gen = make_rng(derive_seed(seed, 2u * t));
        std::vector<double> angles = random_angles(gen, 4);
        std::array<double, 4> thetas{angles[0], angles[1], angles[2], angles[3]};
        std::array<double, 8> r = random_unit8(gen);
        flo_circuit w = random_flo_circuit(4, parity_class::even, derive_seed(seed, 2u * t + 1));
        chain_row row = holder_chain_point(psi4, thetas, r, w);

        double viol = 0;
        viol = std::max(viol, row.raw - row.triangle);
        viol = std::max(viol, row.triangle - row.holder);
        viol = std::max(viol, row.holder - row.final_bound);
        viol = std::max(viol, row.final_bound - row.cap);
        rep.max_violation = std::max(rep.max_violation, viol);
        rep.all_ok = rep.all_ok && row.ok;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace flokit
