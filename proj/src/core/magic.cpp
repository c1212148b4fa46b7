#include "core/magic.hpp"

#include <cmath>

namespace flokit {

namespace {

pure_state two_point(uint64_t b0, cx a0, uint64_t b1, cx a1) {
    std::vector<cx> amp(16, cx{0, 0});
    amp[b0] = a0;
    amp[b1] = a1;
    return pure_state(4, std::move(amp));
}

} // namespace

const std::array<pure_state, 8>& magic_basis() {
    static const std::array<pure_state, 8> basis = [] {
        const double h = 1.0 / std::sqrt(2.0);
        const cx ih{0, 1.0 / std::sqrt(2.0)};
        return std::array<pure_state, 8>{
            two_point(0b0000, h, 0b1111, h),    // eta_1
            two_point(0b0000, ih, 0b1111, -ih), // eta_2
            two_point(0b0011, h, 0b1100, -h),   // eta_3
            two_point(0b0011, ih, 0b1100, ih),  // eta_4
            two_point(0b0101, h, 0b1010, h),    // eta_5
            two_point(0b0101, ih, 0b1010, -ih), // eta_6
            two_point(0b1001, h, 0b0110, -h),   // eta_7
            two_point(0b1001, ih, 0b0110, ih),  // eta_8
        };
    }();
    return basis;
}

void require_even4(const pure_state& psi, const char* who) {
    if (psi.n != 4) fail(errc::size_mismatch, std::string(who) + ": need a 4-qubit state");
    if (psi.parity != parity_class::even)
        fail(errc::parity_mismatch, std::string(who) + ": need an even-parity state");
}

std::array<cx, 8> to_magic_coords(const pure_state& psi) {
    require_even4(psi, "to_magic_coords");
    std::array<cx, 8> z{};
    const auto& basis = magic_basis();
    for (int j = 0; j < 8; ++j) z[j] = inner(basis[j], psi);
    return z;
}

pure_state from_magic_coords(const std::array<cx, 8>& z) {
    std::vector<cx> amp(16, cx{0, 0});
    const auto& basis = magic_basis();
    for (int j = 0; j < 8; ++j) {
        if (z[j] == cx{0, 0}) continue;
        for (uint64_t b = 0; b < 16; ++b) amp[b] += z[j] * basis[j].amp[b];
    }
    return pure_state(4, std::move(amp));
}

magic_coords extract_rsa(const pure_state& psi) {
    magic_coords mc;
    mc.z = to_magic_coords(psi);
    cx S{0, 0};
    for (const cx& zj : mc.z) S += zj * zj;
    mc.orbit_invariant = std::abs(S);
    mc.gauge = -std::arg(S) / 2.0; // makes sum z'^2 real and >= 0
    cx phase = std::polar(1.0, mc.gauge);
    std::array<double, 8> u{}, v{};
    double nu2 = 0, nv2 = 0;
    for (int j = 0; j < 8; ++j) {
        cx zp = phase * mc.z[j];
        u[j] = zp.real();
        v[j] = zp.imag();
        nu2 += u[j] * u[j];
        nv2 += v[j] * v[j];
    }
    // the gauge guarantees ||u|| >= ||v|| and u.v = 0, so a lands in [0, pi/4]
    double nu = std::sqrt(nu2), nv = std::sqrt(nv2);
    mc.a = std::atan2(nv, nu);
    for (int j = 0; j < 8; ++j) mc.r[j] = u[j] / nu;
    if (nv <= 1e-10 * nu) {
        // s is undefined on the maximally magic orbit; deterministic completion:
        // Gram-Schmidt the coordinate axis where r is smallest
        mc.s_degenerate = true;
        int k = 0;
        for (int j = 1; j < 8; ++j)
            if (std::abs(mc.r[j]) < std::abs(mc.r[k])) k = j;
        std::array<double, 8> e{};
        double dot = mc.r[k];
        for (int j = 0; j < 8; ++j) e[j] = (j == k ? 1.0 : 0.0) - dot * mc.r[j];
        double en = 0;
        for (double x : e) en += x * x;
        en = std::sqrt(en);
        for (int j = 0; j < 8; ++j) mc.s[j] = e[j] / en;
    } else {
        for (int j = 0; j < 8; ++j) mc.s[j] = v[j] / nv;
    }
    return mc;
}

double orbit_invariant(const pure_state& psi) {
    std::array<cx, 8> z = to_magic_coords(psi);
    cx S{0, 0};
    for (const cx& zj : z) S += zj * zj;
    return std::abs(S);
}

double closed_fidelity(const pure_state& psi) {
    // (1 + sqrt(1 - inv^2)) / 2 with sqrt(1 - inv^2) = sin(2a); the angle form
    // avoids the square root's error blow-up when inv is within rounding of 1
    return 0.5 * (1.0 + std::sin(2.0 * extract_rsa(psi).a));
}

double closed_extent(const pure_state& psi) { return 1.0 + orbit_invariant(psi); }

bool is_flo_even4(const pure_state& psi, double tol) { return orbit_invariant(psi) < tol; }

pure_state m_phi(double phi) {
    std::vector<cx> amp(16, cx{0, 0});
    amp[0b0000] = 0.5;
    amp[0b0011] = 0.5;
    amp[0b1100] = 0.5;
    amp[0b1111] = std::polar(0.5, phi);
    return pure_state(4, std::move(amp));
}

pure_state a8_state() {
    const double h = 1.0 / std::sqrt(2.0);
    return two_point(0b0000, h, 0b1111, h);
}

} // namespace flokit
