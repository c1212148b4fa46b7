#include "core/circuit.hpp"

#include <bit>
#include <cmath>
#include <random>

namespace flokit {

namespace {

void check_pair(int n, int i, int j) {
    if (i < 0 || j < 0 || i >= 2 * n || j >= 2 * n)
        fail(errc::bad_index, "majorana rotation: mode index out of range");
    if (i == j) fail(errc::invalid_argument, "majorana rotation: modes must differ");
}

} // namespace

flo_circuit make_circuit(int n, uint64_t initial) {
    if (n < 1 || n > 24) fail(errc::invalid_argument, "circuit: bad qubit count");
    if (initial >> n) fail(errc::bad_index, "circuit: initial basis index out of range");
    return flo_circuit{n, initial, {}};
}

void push_rotation(flo_circuit& c, int i, int j, double theta) {
    check_pair(c.n, i, j);
    c.rotations.push_back(majorana_rotation{i, j, theta});
}

void apply_rotation(std::vector<cx>& amp, int n, const majorana_rotation& r) {
    check_pair(n, r.i, r.j);
    pauli_kernel k = make_kernel(mul(majorana_op(n, r.i), majorana_op(n, r.j)));
    double c = std::cos(r.theta / 2), s = std::sin(r.theta / 2);
    uint64_t dim = uint64_t{1} << n;
    if (k.flip == 0) {
        // diagonal generator: each amplitude picks up cos + sin * (phase at b)
        for (uint64_t b = 0; b < dim; ++b) {
            unsigned pow = (k.base + 2u * (std::popcount(b & k.sign) & 1u)) & 3u;
            amp[b] *= c + s * phase_of(pow);
        }
    } else {
        for (uint64_t b = 0; b < dim; ++b) {
            uint64_t b2 = b ^ k.flip;
            if (b2 < b) continue;
            cx fb = phase_of((k.base + 2u * (std::popcount(b & k.sign) & 1u)) & 3u);
            cx fb2 = phase_of((k.base + 2u * (std::popcount(b2 & k.sign) & 1u)) & 3u);
            cx a0 = amp[b], a1 = amp[b2];
            amp[b] = c * a0 + s * fb2 * a1;
            amp[b2] = c * a1 + s * fb * a0;
        }
    }
}

pure_state apply_circuit_unitary(const flo_circuit& c, const pure_state& s) {
    if (c.n != s.n) fail(errc::size_mismatch, "apply_circuit_unitary: qubit counts differ");
    std::vector<cx> amp = s.amp;
    for (const auto& r : c.rotations) apply_rotation(amp, c.n, r);
    return pure_state(c.n, std::move(amp));
}

pure_state circuit_state(const flo_circuit& c) {
    return apply_circuit_unitary(c, basis_state(c.n, c.initial));
}

Eigen::MatrixXd induced_orthogonal(const flo_circuit& c) {
    int d = 2 * c.n;
    Eigen::MatrixXd R = Eigen::MatrixXd::Identity(d, d);
    for (const auto& r : c.rotations) {
        check_pair(c.n, r.i, r.j);
        Eigen::VectorXd ci = R.col(r.i), cj = R.col(r.j);
        double co = std::cos(r.theta), si = std::sin(r.theta);
        R.col(r.i) = co * ci + si * cj;
        R.col(r.j) = -si * ci + co * cj;
    }
    return R;
}

flo_circuit circuit_from_orthogonal(const Eigen::MatrixXd& R, uint64_t initial) {
    const int d = static_cast<int>(R.rows());
    if (R.cols() != d || d < 2 || d % 2 != 0)
        fail(errc::invalid_argument, "circuit_from_orthogonal: need a square 2n x 2n matrix");
    int n = d / 2;
    if (n > 24) fail(errc::invalid_argument, "circuit_from_orthogonal: too many modes");
    double ortho = (R.transpose() * R - Eigen::MatrixXd::Identity(d, d))
                       .cwiseAbs()
                       .maxCoeff();
    if (ortho > 1e-10)
        fail(errc::non_orthogonal, "circuit_from_orthogonal: matrix is not orthogonal");
    if (R.determinant() < 0)
        fail(errc::negative_determinant,
             "circuit_from_orthogonal: determinant is -1; compose with a single Majorana "
             "factor externally and pass the rotation part");

    // Givens elimination: zero the subdiagonal column by column with row
    // rotations; each row rotation by alpha is undone by a circuit rotation
    // with angle -alpha, recorded in elimination order.
    Eigen::MatrixXd M = R;
    flo_circuit out = make_circuit(n, initial);
    for (int p = 0; p + 1 < d; ++p) {
        for (int q = p + 1; q < d; ++q) {
            if (std::abs(M(q, p)) <= 1e-14) continue;
            double alpha = std::atan2(-M(q, p), M(p, p));
            double co = std::cos(alpha), si = std::sin(alpha);
            Eigen::RowVectorXd rp = M.row(p), rq = M.row(q);
            M.row(p) = co * rp - si * rq;
            M.row(q) = si * rp + co * rq;
            push_rotation(out, p, q, -alpha);
        }
    }
    double resid = (M - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
    if (resid > 1e-8)
        fail(errc::residual_too_large, "circuit_from_orthogonal: elimination residual too large");
    return out;
}

flo_circuit random_flo_circuit(int n, parity_class sector, uint64_t seed) {
    if (sector == parity_class::mixed)
        fail(errc::invalid_argument, "random_flo_circuit: sector must be even or odd");
    uint64_t initial = sector == parity_class::odd ? uint64_t{1} << (n - 1) : 0;
    flo_circuit c = make_circuit(n, initial);
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = i + 1; j < 2 * n; ++j) push_rotation(c, i, j, angle(gen));
    return c;
}

pure_state random_flo_state(int n, parity_class sector, uint64_t seed) {
    return circuit_state(random_flo_circuit(n, sector, seed));
}

} // namespace flokit
