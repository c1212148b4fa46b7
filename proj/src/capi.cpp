#include "flokit.h"

#include "core/circuit.hpp"
#include "core/common.hpp"
#include "core/extent.hpp"
#include "core/fidelity.hpp"
#include "core/magic.hpp"
#include "core/schmidt.hpp"
#include "core/state.hpp"
#include "core/suites.hpp"

#include <cstdio>
#include <exception>
#include <string>
#include <utility>
#include <vector>

struct flokit_state {
    flokit::pure_state v;
};

struct flokit_circuit {
    flokit::flo_circuit v;
};

namespace {

thread_local std::string g_last_error;

flokit_status to_status(flokit::errc c) {
    switch (c) {
        case flokit::errc::invalid_argument: return FLOKIT_ERR_INVALID_ARGUMENT;
        case flokit::errc::size_mismatch: return FLOKIT_ERR_SIZE_MISMATCH;
        case flokit::errc::parity_mismatch: return FLOKIT_ERR_PARITY;
        case flokit::errc::not_normalized: return FLOKIT_ERR_NOT_NORMALIZED;
        case flokit::errc::bad_index: return FLOKIT_ERR_BAD_INDEX;
        case flokit::errc::non_orthogonal: return FLOKIT_ERR_NON_ORTHOGONAL;
        case flokit::errc::negative_determinant: return FLOKIT_ERR_NEGATIVE_DETERMINANT;
        case flokit::errc::residual_too_large: return FLOKIT_ERR_RESIDUAL_TOO_LARGE;
        case flokit::errc::unknown_suite: return FLOKIT_ERR_UNKNOWN_SUITE;
        case flokit::errc::io_failure: return FLOKIT_ERR_IO;
    }
    return FLOKIT_ERR_INTERNAL;
}

template <typename F>
flokit_status guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return FLOKIT_OK;
    } catch (const flokit::error& e) {
        g_last_error = e.what();
        return to_status(e.code);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FLOKIT_ERR_INTERNAL;
    }
}

flokit_status null_arg(const char* what) {
    g_last_error = std::string("null pointer: ") + what;
    return FLOKIT_ERR_NULL_POINTER;
}

flokit::parity_class to_parity(int code) {
    switch (code) {
        case 0: return flokit::parity_class::even;
        case 1: return flokit::parity_class::odd;
        case 2: return flokit::parity_class::mixed;
    }
    flokit::fail(flokit::errc::invalid_argument, "parity code must be 0, 1, or 2");
}

int from_parity(flokit::parity_class p) {
    switch (p) {
        case flokit::parity_class::even: return 0;
        case flokit::parity_class::odd: return 1;
        default: return 2;
    }
}

flokit_state* wrap(flokit::pure_state s) { return new flokit_state{std::move(s)}; }

} // namespace

extern "C" {

const char* flokit_version(void) { return "0.1.0"; }

const char* flokit_last_error(void) { return g_last_error.c_str(); }

const char* flokit_status_name(flokit_status s) {
    switch (s) {
        case FLOKIT_OK: return "ok";
        case FLOKIT_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case FLOKIT_ERR_SIZE_MISMATCH: return "size_mismatch";
        case FLOKIT_ERR_PARITY: return "parity_mismatch";
        case FLOKIT_ERR_NOT_NORMALIZED: return "not_normalized";
        case FLOKIT_ERR_BAD_INDEX: return "bad_index";
        case FLOKIT_ERR_NON_ORTHOGONAL: return "non_orthogonal";
        case FLOKIT_ERR_NEGATIVE_DETERMINANT: return "negative_determinant";
        case FLOKIT_ERR_RESIDUAL_TOO_LARGE: return "residual_too_large";
        case FLOKIT_ERR_UNKNOWN_SUITE: return "unknown_suite";
        case FLOKIT_ERR_IO: return "io_failure";
        case FLOKIT_ERR_NULL_POINTER: return "null_pointer";
        case FLOKIT_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

/* ------------------------------------------------------------------ states */

flokit_status flokit_state_basis(int qubits, uint64_t bits, flokit_state** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = wrap(flokit::basis_state(qubits, bits)); });
}

flokit_status flokit_state_from_amplitudes(int qubits, const double* re_im, flokit_state** out) {
    if (!out) return null_arg("out");
    if (!re_im) return null_arg("re_im");
    return guarded([&] {
        if (qubits < 0 || qubits > 24)
            flokit::fail(flokit::errc::invalid_argument, "qubit count out of range");
        std::vector<flokit::cx> amp(std::size_t{1} << qubits);
        for (std::size_t b = 0; b < amp.size(); ++b)
            amp[b] = flokit::cx{re_im[2 * b], re_im[2 * b + 1]};
        *out = wrap(flokit::state_from_amplitudes(qubits, amp));
    });
}

flokit_status flokit_state_mphi(double phi, flokit_state** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = wrap(flokit::m_phi(phi)); });
}

flokit_status flokit_state_a8(flokit_state** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = wrap(flokit::a8_state()); });
}

flokit_status flokit_state_clone(const flokit_state* s, flokit_state** out) {
    if (!out) return null_arg("out");
    if (!s) return null_arg("s");
    return guarded([&] { *out = new flokit_state{s->v}; });
}

void flokit_state_free(flokit_state* s) { delete s; }

int flokit_state_qubits(const flokit_state* s) { return s ? s->v.n : -1; }

int flokit_state_parity(const flokit_state* s) { return s ? from_parity(s->v.parity) : -1; }

flokit_status flokit_state_amplitudes(const flokit_state* s, double* re_im) {
    if (!s) return null_arg("s");
    if (!re_im) return null_arg("re_im");
    return guarded([&] {
        for (std::size_t b = 0; b < s->v.amp.size(); ++b) {
            re_im[2 * b] = s->v.amp[b].real();
            re_im[2 * b + 1] = s->v.amp[b].imag();
        }
    });
}

flokit_status flokit_state_tensor(const flokit_state* a, const flokit_state* b,
                                  flokit_state** out) {
    if (!out) return null_arg("out");
    if (!a) return null_arg("a");
    if (!b) return null_arg("b");
    return guarded([&] { *out = wrap(flokit::tensor(a->v, b->v)); });
}

flokit_status flokit_state_inner(const flokit_state* a, const flokit_state* b, double* re,
                                 double* im) {
    if (!a) return null_arg("a");
    if (!b) return null_arg("b");
    if (!re) return null_arg("re");
    if (!im) return null_arg("im");
    return guarded([&] {
        flokit::cx v = flokit::inner(a->v, b->v);
        *re = v.real();
        *im = v.imag();
    });
}

flokit_status flokit_random_flo_state(int qubits, int parity, uint64_t seed, flokit_state** out) {
    if (!out) return null_arg("out");
    return guarded(
        [&] { *out = wrap(flokit::random_flo_state(qubits, to_parity(parity), seed)); });
}

/* ---------------------------------------------------------------- circuits */

flokit_status flokit_circuit_create(int qubits, uint64_t initial_bits, flokit_circuit** out) {
    if (!out) return null_arg("out");
    return guarded([&] { *out = new flokit_circuit{flokit::make_circuit(qubits, initial_bits)}; });
}

flokit_status flokit_circuit_push_rotation(flokit_circuit* c, int i, int j, double theta) {
    if (!c) return null_arg("c");
    return guarded([&] { flokit::push_rotation(c->v, i, j, theta); });
}

int flokit_circuit_qubits(const flokit_circuit* c) { return c ? c->v.n : -1; }

uint64_t flokit_circuit_initial(const flokit_circuit* c) { return c ? c->v.initial : 0; }

size_t flokit_circuit_size(const flokit_circuit* c) { return c ? c->v.rotations.size() : 0; }

flokit_status flokit_circuit_rotation(const flokit_circuit* c, size_t index, int* i, int* j,
                                      double* theta) {
    if (!c) return null_arg("c");
    if (!i) return null_arg("i");
    if (!j) return null_arg("j");
    if (!theta) return null_arg("theta");
    return guarded([&] {
        if (index >= c->v.rotations.size())
            flokit::fail(flokit::errc::bad_index, "rotation index out of range");
        const flokit::majorana_rotation& r = c->v.rotations[index];
        *i = r.i;
        *j = r.j;
        *theta = r.theta;
    });
}

flokit_status flokit_circuit_state(const flokit_circuit* c, flokit_state** out) {
    if (!c) return null_arg("c");
    if (!out) return null_arg("out");
    return guarded([&] { *out = wrap(flokit::circuit_state(c->v)); });
}

void flokit_circuit_free(flokit_circuit* c) { delete c; }

/* -------------------------------------------- magic-basis orbit coordinates */

flokit_status flokit_magic_analyze(const flokit_state* s, flokit_magic_info* out) {
    if (!s) return null_arg("s");
    if (!out) return null_arg("out");
    return guarded([&] {
        flokit::magic_coords mc = flokit::extract_rsa(s->v);
        for (int j = 0; j < 8; ++j) {
            out->z_re[j] = mc.z[j].real();
            out->z_im[j] = mc.z[j].imag();
            out->r[j] = mc.r[j];
            out->s[j] = mc.s[j];
        }
        out->a = mc.a;
        out->gauge = mc.gauge;
        out->orbit_invariant = mc.orbit_invariant;
        out->s_degenerate = mc.s_degenerate ? 1 : 0;
        out->fidelity = flokit::closed_fidelity(s->v);
        out->extent = flokit::closed_extent(s->v);
    });
}

flokit_status flokit_orbit_invariant(const flokit_state* s, double* out) {
    if (!s) return null_arg("s");
    if (!out) return null_arg("out");
    return guarded([&] { *out = flokit::orbit_invariant(s->v); });
}

/* ------------------------------------------------------- fidelity optimizer */

flokit_status flokit_optimize_fidelity(const flokit_state* s, const flokit_fidelity_opts* opts,
                                       flokit_circuit** witness, flokit_fidelity_outcome* out) {
    if (!s) return null_arg("s");
    if (!out) return null_arg("out");
    return guarded([&] {
        flokit::fidelity_config cfg;
        if (opts) {
            if (opts->restarts > 0) cfg.restarts = opts->restarts;
            if (opts->tol > 0) cfg.tol = opts->tol;
            if (opts->sweep_limit > 0) cfg.sweep_limit = opts->sweep_limit;
            cfg.seed = opts->seed;
            cfg.sector = to_parity(opts->sector);
            cfg.threads = opts->threads;
        }
        flokit::fidelity_result res = flokit::optimize_fidelity(s->v, cfg);
        out->value = res.value;
        out->restarts_used = res.restarts_used;
        out->converged = res.converged ? 1 : 0;
        out->sector = from_parity(res.sector);
        if (witness) *witness = new flokit_circuit{std::move(res.witness)};
    });
}

/* ------------------------------------------------------ extent and duality */

flokit_status flokit_decompose_even4(const flokit_state* s, double coeff_re[2],
                                     double coeff_im[2], flokit_state* components[2],
                                     int* term_count, double* l1_squared) {
    if (!s) return null_arg("s");
    if (!coeff_re) return null_arg("coeff_re");
    if (!coeff_im) return null_arg("coeff_im");
    if (!components) return null_arg("components");
    if (!term_count) return null_arg("term_count");
    if (!l1_squared) return null_arg("l1_squared");
    return guarded([&] {
        flokit::gaussian_decomposition dec = flokit::decompose_even4(s->v);
        *term_count = static_cast<int>(dec.terms.size());
        *l1_squared = dec.l1_squared;
        for (int k = 0; k < 2; ++k) {
            if (k < *term_count) {
                coeff_re[k] = dec.terms[k].coefficient.real();
                coeff_im[k] = dec.terms[k].coefficient.imag();
                components[k] = wrap(std::move(dec.terms[k].state));
            } else {
                coeff_re[k] = 0;
                coeff_im[k] = 0;
                components[k] = nullptr;
            }
        }
    });
}

flokit_status flokit_witness_even4(const flokit_state* s, flokit_state** witness,
                                   double* witness_fidelity, int* provenance,
                                   double* lower_bound) {
    if (!s) return null_arg("s");
    if (!witness) return null_arg("witness");
    if (!witness_fidelity) return null_arg("witness_fidelity");
    if (!provenance) return null_arg("provenance");
    if (!lower_bound) return null_arg("lower_bound");
    return guarded([&] {
        flokit::dual_certificate cert = flokit::witness_even4(s->v);
        *witness = wrap(std::move(cert.witness));
        *witness_fidelity = cert.witness_fidelity;
        *provenance = static_cast<int>(cert.provenance);
        *lower_bound = cert.lower_bound;
    });
}

flokit_status flokit_dual_ratio(const flokit_state* psi, const flokit_state* omega,
                                double f_omega, double* out) {
    if (!psi) return null_arg("psi");
    if (!omega) return null_arg("omega");
    if (!out) return null_arg("out");
    return guarded([&] { *out = flokit::dual_ratio(psi->v, omega->v, f_omega); });
}

flokit_status flokit_product_extent_bounds(const flokit_state* const* factors, size_t count,
                                           double* lower, double* upper, double* gap) {
    if (!factors) return null_arg("factors");
    if (!lower) return null_arg("lower");
    if (!upper) return null_arg("upper");
    if (!gap) return null_arg("gap");
    return guarded([&] {
        std::vector<flokit::pure_state> fs;
        for (size_t k = 0; k < count; ++k) {
            if (!factors[k]) flokit::fail(flokit::errc::invalid_argument, "null factor handle");
            fs.push_back(factors[k]->v);
        }
        flokit::product_bounds pb = flokit::product_extent_bounds(fs);
        *lower = pb.lower;
        *upper = pb.upper;
        *gap = pb.gap;
    });
}

flokit_status flokit_small_n_extent(const flokit_state* s, double* out) {
    if (!s) return null_arg("s");
    if (!out) return null_arg("out");
    return guarded([&] { *out = flokit::small_n_extent(s->v); });
}

flokit_status flokit_extent_bracket(const flokit_state* psi, const flokit_state* m,
                                    double* lower, double* upper, double* gap) {
    if (!psi) return null_arg("psi");
    if (!m) return null_arg("m");
    if (!lower) return null_arg("lower");
    if (!upper) return null_arg("upper");
    if (!gap) return null_arg("gap");
    return guarded([&] {
        flokit::extent_bracket br = flokit::extent_bracket_general(psi->v, m->v);
        *lower = br.lower;
        *upper = br.upper;
        *gap = br.gap;
    });
}

/* -------------------------------------------------- Schmidt spectrum angles */

flokit_status flokit_extract_thetas(const flokit_state* s, int n_a, int n_b, double* thetas) {
    if (!s) return null_arg("s");
    if (!thetas) return null_arg("thetas");
    return guarded([&] {
        std::vector<double> th = flokit::extract_thetas(s->v, n_a, n_b);
        for (std::size_t i = 0; i < th.size(); ++i) thetas[i] = th[i];
    });
}

/* ------------------------------------------------------ verification suites */

int flokit_suite_count(void) { return static_cast<int>(flokit::suite_names().size()); }

const char* flokit_suite_name(int index) {
    const auto& names = flokit::suite_names();
    if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
    return names[static_cast<std::size_t>(index)].c_str();
}

flokit_status flokit_run_suite(const char* suite, const flokit_suite_opts* opts,
                               flokit_suite_outcome* out) {
    if (!suite) return null_arg("suite");
    if (!out) return null_arg("out");
    return guarded([&] {
        flokit::suite_config cfg;
        cfg.suite = suite;
        if (opts) {
            cfg.trials = opts->trials;
            cfg.seed = opts->seed;
            cfg.n = opts->n;
            cfg.factors = opts->factors;
            cfg.tol = opts->tol;
            cfg.restarts = opts->restarts;
            cfg.threads = opts->threads;
            if (opts->out_prefix) cfg.out_prefix = opts->out_prefix;
        }
        flokit::suite_summary sum = flokit::run_suite(cfg);
        out->trials = sum.trials;
        out->failures = sum.failures;
        out->max_error = sum.max_error;
        out->tolerance = sum.tolerance;
        out->passed = sum.passed ? 1 : 0;
        out->check_count = 0;
        for (const flokit::suite_check& c : sum.checks) {
            if (out->check_count >= 8) break;
            flokit_suite_check& dst = out->checks[out->check_count++];
            std::snprintf(dst.name, sizeof dst.name, "%s", c.name.c_str());
            dst.max_error = c.max_error;
            dst.tolerance = c.tolerance;
            dst.failures = c.failures;
        }
    });
}

flokit_status flokit_table_mphi(const char* path, int grid, int restarts, uint64_t seed,
                                int threads, flokit_table_outcome* out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        flokit::table_summary sum =
            flokit::write_mphi_table(path ? path : "", grid, restarts, seed, threads);
        out->grid = sum.grid;
        out->max_formula_error = sum.max_formula_error;
        out->max_optimizer_error = sum.max_optimizer_error;
        out->passed = sum.passed ? 1 : 0;
    });
}

} /* extern "C" */
