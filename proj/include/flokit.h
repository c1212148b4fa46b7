#ifndef FLOKIT_H
#define FLOKIT_H

/* flokit: fermionic-linear-optics resource computations on small statevectors.
 *
 * Conventions shared by every entry point:
 *   - qubit 0 is the MOST significant bit of a basis index, so for n = 4 the
 *     amplitude of |1100> sits at index 0b1100;
 *   - amplitudes cross the boundary as interleaved doubles re0, im0, re1, ...;
 *   - Majorana modes are indexed 0 .. 2n-1; rotations are exp(theta c_i c_j / 2);
 *   - parity codes: 0 = even, 1 = odd, 2 = mixed (and "mixed" as an optimizer
 *     sector request means "choose automatically").
 *
 * Every fallible function returns a status code and writes results through out
 * parameters; flokit_last_error() describes the most recent failure on the
 * calling thread.  Handles are freed with their matching *_free function.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FLOKIT_API __declspec(dllexport)
#else
#define FLOKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum flokit_status {
    FLOKIT_OK = 0,
    FLOKIT_ERR_INVALID_ARGUMENT = 1,
    FLOKIT_ERR_SIZE_MISMATCH = 2,
    FLOKIT_ERR_PARITY = 3,
    FLOKIT_ERR_NOT_NORMALIZED = 4,
    FLOKIT_ERR_BAD_INDEX = 5,
    FLOKIT_ERR_NON_ORTHOGONAL = 6,
    FLOKIT_ERR_NEGATIVE_DETERMINANT = 7,
    FLOKIT_ERR_RESIDUAL_TOO_LARGE = 8,
    FLOKIT_ERR_UNKNOWN_SUITE = 9,
    FLOKIT_ERR_IO = 10,
    FLOKIT_ERR_NULL_POINTER = 11,
    FLOKIT_ERR_INTERNAL = 12
} flokit_status;

typedef struct flokit_state flokit_state;     /* immutable normalized pure state */
typedef struct flokit_circuit flokit_circuit; /* basis start + Majorana rotations */

FLOKIT_API const char* flokit_version(void);
FLOKIT_API const char* flokit_status_name(flokit_status s);
/* message for the last failing call on this thread ("" when none) */
FLOKIT_API const char* flokit_last_error(void);

/* ------------------------------------------------------------------ states */

FLOKIT_API flokit_status flokit_state_basis(int qubits, uint64_t bits, flokit_state** out);
/* re_im holds 2^qubits (re, im) pairs; must be normalized to 1e-10 */
FLOKIT_API flokit_status flokit_state_from_amplitudes(int qubits, const double* re_im,
                                                      flokit_state** out);
/* the 4-qubit magic family (|0000> + |0011> + |1100> + e^{i phi}|1111>) / 2 */
FLOKIT_API flokit_status flokit_state_mphi(double phi, flokit_state** out);
/* a8 = (|0000> + |1111>) / sqrt(2) */
FLOKIT_API flokit_status flokit_state_a8(flokit_state** out);
FLOKIT_API flokit_status flokit_state_clone(const flokit_state* s, flokit_state** out);
FLOKIT_API void flokit_state_free(flokit_state* s);

FLOKIT_API int flokit_state_qubits(const flokit_state* s);
FLOKIT_API int flokit_state_parity(const flokit_state* s);
/* writes 2^qubits (re, im) pairs into re_im (caller allocates) */
FLOKIT_API flokit_status flokit_state_amplitudes(const flokit_state* s, double* re_im);
/* product state a (tensor) b; b's qubits are appended after a's */
FLOKIT_API flokit_status flokit_state_tensor(const flokit_state* a, const flokit_state* b,
                                             flokit_state** out);
FLOKIT_API flokit_status flokit_state_inner(const flokit_state* a, const flokit_state* b,
                                            double* re, double* im);
/* Gaussian state from a random rotation circuit in the given parity sector */
FLOKIT_API flokit_status flokit_random_flo_state(int qubits, int parity, uint64_t seed,
                                                 flokit_state** out);

/* ---------------------------------------------------------------- circuits */

FLOKIT_API flokit_status flokit_circuit_create(int qubits, uint64_t initial_bits,
                                               flokit_circuit** out);
/* appends exp(theta c_i c_j / 2); modes must satisfy 0 <= i != j < 2 qubits */
FLOKIT_API flokit_status flokit_circuit_push_rotation(flokit_circuit* c, int i, int j,
                                                      double theta);
FLOKIT_API int flokit_circuit_qubits(const flokit_circuit* c);
FLOKIT_API uint64_t flokit_circuit_initial(const flokit_circuit* c);
FLOKIT_API size_t flokit_circuit_size(const flokit_circuit* c);
FLOKIT_API flokit_status flokit_circuit_rotation(const flokit_circuit* c, size_t index, int* i,
                                                 int* j, double* theta);
/* the state the circuit prepares from its initial basis state */
FLOKIT_API flokit_status flokit_circuit_state(const flokit_circuit* c, flokit_state** out);
FLOKIT_API void flokit_circuit_free(flokit_circuit* c);

/* -------------------------------------------- magic-basis orbit coordinates */

/* decomposition e^{i gauge} psi = sum_j (cos(a) r_j + i sin(a) s_j) eta_j of an
 * even 4-qubit state over the magic basis, plus the closed-form fidelity
 * (1 + sqrt(1 - inv^2))/2 and extent 1 + inv for inv = |sum_j z_j^2| */
typedef struct flokit_magic_info {
    double z_re[8];
    double z_im[8];
    double r[8];
    double s[8];
    double a;               /* orbit angle in [0, pi/4]; pi/4 = Gaussian orbit */
    double gauge;
    double orbit_invariant; /* |sum z_j^2| = cos(2a) */
    int s_degenerate;       /* 1 when a = 0 leaves s arbitrary (flagged completion) */
    double fidelity;        /* best squared overlap with a Gaussian state */
    double extent;          /* minimal squared l1 norm over Gaussian decompositions */
} flokit_magic_info;

FLOKIT_API flokit_status flokit_magic_analyze(const flokit_state* s, flokit_magic_info* out);
FLOKIT_API flokit_status flokit_orbit_invariant(const flokit_state* s, double* out);

/* ------------------------------------------------------- fidelity optimizer */

typedef struct flokit_fidelity_opts {
    int restarts;     /* <= 0: default 32 */
    double tol;       /* <= 0: default 1e-10 per-sweep improvement threshold */
    int sweep_limit;  /* <= 0: default 500 */
    uint64_t seed;
    int sector;       /* 0 even, 1 odd, 2 automatic */
    int threads;      /* 0: FLO_KIT_THREADS env or hardware */
} flokit_fidelity_opts;

typedef struct flokit_fidelity_outcome {
    double value;      /* best squared overlap found (a certified lower bound) */
    int restarts_used;
    int converged;     /* winning sweep loop reached its tolerance */
    int sector;        /* parity sector of the winning witness */
} flokit_fidelity_outcome;

/* Jacobi-sweep ascent of |<omega|psi>|^2 over Gaussian omega.  opts may be
 * NULL (all defaults); witness receives the optimizing circuit when non-NULL */
FLOKIT_API flokit_status flokit_optimize_fidelity(const flokit_state* s,
                                                  const flokit_fidelity_opts* opts,
                                                  flokit_circuit** witness,
                                                  flokit_fidelity_outcome* out);

/* ------------------------------------------------------ extent and duality */

/* optimal two-term Gaussian decomposition of an even 4-qubit state: fills up
 * to two coefficient/component pairs (components are new handles the caller
 * frees); *term_count is 1 for Gaussian input, else 2; l1_squared equals the
 * closed-form extent */
FLOKIT_API flokit_status flokit_decompose_even4(const flokit_state* s, double coeff_re[2],
                                                double coeff_im[2], flokit_state* components[2],
                                                int* term_count, double* l1_squared);

/* dual witness for the same value: lower_bound = |<witness|s>|^2 / fidelity.
 * provenance: 0 = closed form, 1 = optimizer, 2 = product rule */
FLOKIT_API flokit_status flokit_witness_even4(const flokit_state* s, flokit_state** witness,
                                              double* witness_fidelity, int* provenance,
                                              double* lower_bound);

/* |<omega|psi>|^2 / f_omega: a certified extent lower bound when f_omega is
 * (an upper bound on) the Gaussian fidelity of omega */
FLOKIT_API flokit_status flokit_dual_ratio(const flokit_state* psi, const flokit_state* omega,
                                           double f_omega, double* out);

/* two-sided extent bounds for a tensor product of 1..3 even 4-qubit factors */
FLOKIT_API flokit_status flokit_product_extent_bounds(const flokit_state* const* factors,
                                                      size_t count, double* lower, double* upper,
                                                      double* gap);

/* exact extent of a fixed-parity state on <= 4 qubits */
FLOKIT_API flokit_status flokit_small_n_extent(const flokit_state* s, double* out);

/* bracket for extent(psi tensor m), psi on <= 4 qubits, m even 4-qubit */
FLOKIT_API flokit_status flokit_extent_bracket(const flokit_state* psi, const flokit_state* m,
                                               double* lower, double* upper, double* gap);

/* -------------------------------------------------- Schmidt spectrum angles */

/* recovers the angle parameters of the fermionic Schmidt form across the
 * (n_a, n_b) cut of an even Gaussian state; thetas receives n_a descending
 * values in [0, pi/4]; fails with FLOKIT_ERR_RESIDUAL_TOO_LARGE when the
 * spectrum is not of product form */
FLOKIT_API flokit_status flokit_extract_thetas(const flokit_state* s, int n_a, int n_b,
                                               double* thetas);

/* ------------------------------------------------------ verification suites */

typedef struct flokit_suite_opts {
    int trials;             /* < 0: suite default */
    uint64_t seed;
    int n;                  /* lemma1 only: 0 = sweep 1..4 */
    int factors;            /* theorem1 only: 0 = both 2 and 3 */
    double tol;             /* < 0: suite default */
    int restarts;           /* 0: optimizer default */
    int threads;            /* 0: FLO_KIT_THREADS env or hardware */
    const char* out_prefix; /* NULL or "": compute only, no files */
} flokit_suite_opts;

typedef struct flokit_suite_check {
    char name[64];
    double max_error;
    double tolerance;
    int failures;
} flokit_suite_check;

typedef struct flokit_suite_outcome {
    int trials;
    int failures;
    double max_error;
    double tolerance;
    int passed;
    int check_count;              /* per-assertion breakdown (<= 8 entries) */
    flokit_suite_check checks[8];
} flokit_suite_outcome;

FLOKIT_API int flokit_suite_count(void);
FLOKIT_API const char* flokit_suite_name(int index); /* NULL when out of range */

/* runs one named verification suite; when out_prefix is set, writes
 * <prefix>.csv (per-trial rows) and <prefix>.json (summary) */
FLOKIT_API flokit_status flokit_run_suite(const char* suite, const flokit_suite_opts* opts,
                                          flokit_suite_outcome* out);

typedef struct flokit_table_outcome {
    int grid;
    double max_formula_error;   /* closed-form columns vs analytic formulas */
    double max_optimizer_error; /* optimizer fidelity vs closed form */
    int passed;                 /* formula <= 1e-12 and optimizer <= 1e-6 */
} flokit_table_outcome;

/* magic-family table over phi in [0, 2pi): columns phi, extent_closed,
 * extent_lower, extent_upper, fidelity_closed, fidelity_optimized.
 * path may be NULL/"" to compute the summary without writing a file */
FLOKIT_API flokit_status flokit_table_mphi(const char* path, int grid, int restarts,
                                           uint64_t seed, int threads,
                                           flokit_table_outcome* out);

#ifdef __cplusplus
}
#endif

#endif /* FLOKIT_H */
