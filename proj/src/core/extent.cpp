#include "core/extent.hpp"

#include "core/pauli.hpp"

#include <cmath>

namespace flokit {

const char* provenance_name(fidelity_provenance p) {
    switch (p) {
    case fidelity_provenance::closed_form: return "closed_form";
    case fidelity_provenance::optimizer: return "optimizer";
    default: return "product_rule";
    }
}

gaussian_decomposition decompose_even4(const pure_state& psi) {
    require_even4(psi, "decompose_even4");
    require_normalized(psi, 1e-10);
    magic_coords mc = extract_rsa(psi);
    gaussian_decomposition dec;
    if (mc.orbit_invariant < 1e-12) {
        dec.terms.push_back({cx{1, 0}, psi});
        dec.l1_squared = 1.0;
        return dec;
    }
    const double h = 1.0 / std::sqrt(2.0);
    std::array<cx, 8> zp{}, zm{};
    for (int j = 0; j < 8; ++j) {
        zp[j] = cx{mc.r[j] * h, mc.s[j] * h};  // (r + i s)/sqrt(2): Gaussian branch
        zm[j] = cx{mc.r[j] * h, -mc.s[j] * h}; // (r - i s)/sqrt(2)
    }
    cx undo_gauge = std::polar(1.0, -mc.gauge);
    double ca = std::cos(mc.a), sa = std::sin(mc.a);
    cx cp = undo_gauge * ((ca + sa) * h);
    cx cm = undo_gauge * ((ca - sa) * h);
    dec.terms.push_back({cp, from_magic_coords(zp)});
    dec.terms.push_back({cm, from_magic_coords(zm)});
    double l1 = std::abs(cp) + std::abs(cm);
    dec.l1_squared = l1 * l1;
    return dec;
}

dual_certificate witness_even4(const pure_state& psi) {
    require_even4(psi, "witness_even4");
    require_normalized(psi, 1e-10);
    magic_coords mc = extract_rsa(psi);
    dual_certificate cert;
    if (mc.orbit_invariant < 1e-10) {
        cert.witness = psi; // Gaussian input certifies itself
        cert.witness_fidelity = 1.0;
        cert.provenance = fidelity_provenance::closed_form;
        cert.lower_bound = 1.0;
        return cert;
    }
    cx undo_gauge = std::polar(1.0, -mc.gauge);
    std::array<cx, 8> zw{};
    for (int j = 0; j < 8; ++j) zw[j] = undo_gauge * mc.r[j];
    cert.witness = from_magic_coords(zw); // maximally magic orbit: fidelity 1/2
    cert.witness_fidelity = 0.5;
    cert.provenance = fidelity_provenance::closed_form;
    cert.lower_bound = dual_ratio(psi, cert.witness, cert.witness_fidelity);
    return cert;
}

double dual_ratio(const pure_state& psi, const pure_state& omega, double f_omega) {
    require_normalized(psi, 1e-10);
    require_normalized(omega, 1e-10);
    if (!(f_omega > 0)) fail(errc::invalid_argument, "dual_ratio: witness fidelity must be > 0");
    return std::norm(inner(omega, psi)) / f_omega;
}

product_bounds product_extent_bounds(const std::vector<pure_state>& factors) {
    if (factors.empty() || factors.size() > 3)
        fail(errc::invalid_argument, "product_extent_bounds: need 1 to 3 factors");
    product_bounds pb;
    pure_state psi_total, omega_total;
    double f_total = 1.0;
    for (size_t k = 0; k < factors.size(); ++k) {
        const pure_state& f = factors[k];
        gaussian_decomposition dec = decompose_even4(f);
        dual_certificate wit = witness_even4(f);
        pb.per_factor.push_back(dec.l1_squared);
        pb.upper *= dec.l1_squared;
        f_total *= wit.witness_fidelity;
        psi_total = k == 0 ? f : tensor(psi_total, f);
        omega_total = k == 0 ? wit.witness : tensor(omega_total, wit.witness);
    }
    pb.lower = dual_ratio(psi_total, omega_total, f_total);
    pb.gap = pb.upper - pb.lower;
    return pb;
}

double parity_split_extent(const pure_state& psi, double xi_e, double xi_o) {
    require_normalized(psi, 1e-10);
    parity_split_result ps = parity_split(psi);
    double val = 0;
    if (ps.even) val += ps.even_weight * std::sqrt(xi_e);
    if (ps.odd) val += ps.odd_weight * std::sqrt(xi_o);
    return val * val;
}

double small_n_extent(const pure_state& psi) {
    require_normalized(psi, 1e-10);
    if (psi.parity == parity_class::mixed)
        fail(errc::parity_mismatch, "small_n_extent: need a fixed-parity state");
    if (psi.n <= 3) return 1.0; // every fixed-parity state this small is Gaussian
    if (psi.n == 4) {
        if (psi.parity == parity_class::even) return closed_extent(psi);
        // first Majorana mode maps the odd sector onto the even one, preserving
        // Gaussianity and hence the extent
        return closed_extent(apply_pauli(majorana_op(4, 0), psi));
    }
    fail(errc::invalid_argument, "small_n_extent: only n <= 4 is certified");
}

namespace {

struct component_witness {
    pure_state chi;
    double fidelity;
};

// certified witness for a fixed-parity state on n <= 4 qubits
component_witness small_n_witness(const pure_state& psi) {
    if (psi.n <= 3) return {psi, 1.0};
    if (psi.parity == parity_class::even) {
        dual_certificate c = witness_even4(psi);
        return {c.witness, c.witness_fidelity};
    }
    pauli_string c0 = majorana_op(4, 0);
    dual_certificate c = witness_even4(apply_pauli(c0, psi));
    return {apply_pauli(c0, c.witness), c.witness_fidelity};
}

} // namespace

extent_bracket extent_bracket_general(const pure_state& psi, const pure_state& m) {
    if (psi.n < 1 || psi.n > 4)
        fail(errc::invalid_argument, "extent_bracket_general: first factor must have 1..4 qubits");
    require_even4(m, "extent_bracket_general");
    require_normalized(psi, 1e-10);
    require_normalized(m, 1e-10);

    parity_split_result ps = parity_split(psi);
    double xi_e = ps.even ? small_n_extent(*ps.even) : 1.0;
    double xi_o = ps.odd ? small_n_extent(*ps.odd) : 1.0;

    extent_bracket br;
    br.upper = parity_split_extent(psi, xi_e, xi_o) * closed_extent(m);

    dual_certificate wit_m = witness_even4(m);
    pure_state big = tensor(psi, m);

    struct part {
        pure_state omega;
        double fid;
        cx ov;
    };
    std::vector<part> parts;
    auto add_part = [&](const pure_state& comp) {
        component_witness cw = small_n_witness(comp);
        pure_state omega = tensor(cw.chi, wit_m.witness);
        cx ov = inner(omega, big);
        parts.push_back({std::move(omega), cw.fidelity * wit_m.witness_fidelity, ov});
    };
    if (ps.even) add_part(*ps.even);
    if (ps.odd) add_part(*ps.odd);

    if (parts.size() == 1) {
        br.lower = std::norm(parts[0].ov) / parts[0].fid;
    } else {
        // equalized mixed witness: weights 1/fid make both sectors' Gaussian
        // overlap ceilings equal, so the combined fidelity is exactly d
        double d = 1.0 / (1.0 / parts[0].fid + 1.0 / parts[1].fid);
        std::vector<cx> coeff(2);
        for (int k = 0; k < 2; ++k) {
            double alpha = std::sqrt(d / parts[k].fid);
            double mag = std::abs(parts[k].ov);
            coeff[k] = mag > 0 ? cx{alpha} * (parts[k].ov / mag) : cx{alpha};
        }
        pure_state omega = superpose(coeff, {parts[0].omega, parts[1].omega});
        br.lower = dual_ratio(big, omega, d);
    }
    br.gap = br.upper - br.lower;
    return br;
}

} // namespace flokit
