#include "oracles.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <random>

namespace flokit::oracle {

namespace {

Eigen::Matrix2cd letter_matrix(bool x, bool z) {
    Eigen::Matrix2cd m;
    const cx i{0, 1};
    if (!x && !z) m << 1, 0, 0, 1;
    else if (x && !z) m << 0, 1, 1, 0;
    else if (x && z) m << 0, -i, i, 0;
    else m << 1, 0, 0, -1;
    return m;
}

} // namespace

Eigen::MatrixXcd pauli_matrix(const pauli_string& p) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    // qubit 0 is the most significant index bit, so it is the leftmost factor
    for (int q = 0; q < p.n; ++q) {
        uint64_t bit = uint64_t{1} << q;
        Eigen::MatrixXcd next =
            Eigen::kroneckerProduct(m, letter_matrix(p.x & bit, p.z & bit)).eval();
        m = std::move(next);
    }
    return phase_of(p.phase_pow) * m;
}

Eigen::MatrixXcd rotation_matrix(int n, const majorana_rotation& r) {
    Eigen::MatrixXcd ci = pauli_matrix(majorana_op(n, r.i));
    Eigen::MatrixXcd cj = pauli_matrix(majorana_op(n, r.j));
    Eigen::MatrixXcd gen = (r.theta / 2.0) * (ci * cj);
    return gen.exp();
}

Eigen::MatrixXcd circuit_matrix(const flo_circuit& c) {
    const Eigen::Index dim = Eigen::Index{1} << c.n;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& r : c.rotations) u = rotation_matrix(c.n, r) * u;
    return u;
}

Eigen::MatrixXd conjugation_action(const flo_circuit& c) {
    const int d = 2 * c.n;
    const double dim = std::pow(2.0, c.n);
    Eigen::MatrixXcd u = circuit_matrix(c);
    std::vector<Eigen::MatrixXcd> maj;
    for (int k = 0; k < d; ++k) maj.push_back(pauli_matrix(majorana_op(c.n, k)));
    Eigen::MatrixXd r(d, d);
    for (int l = 0; l < d; ++l) {
        Eigen::MatrixXcd conj = u * maj[l] * u.adjoint();
        for (int k = 0; k < d; ++k) r(l, k) = (maj[k] * conj).trace().real() / dim;
    }
    return r;
}

Eigen::MatrixXd random_special_orthogonal(int d, uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> gauss;
    Eigen::MatrixXd a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a(i, j) = gauss(gen);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j)
        if (r(j, j) < 0) q.col(j) = -q.col(j);
    if (q.determinant() < 0) q.col(0) = -q.col(0);
    return q;
}

Eigen::VectorXcd to_vec(const pure_state& s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.amp.size()));
    for (std::size_t b = 0; b < s.amp.size(); ++b) v(static_cast<Eigen::Index>(b)) = s.amp[b];
    return v;
}

pure_state to_state(int n, const Eigen::VectorXcd& v) {
    std::vector<cx> amp(static_cast<std::size_t>(v.size()));
    for (std::size_t b = 0; b < amp.size(); ++b) amp[b] = v(static_cast<Eigen::Index>(b));
    return pure_state(n, std::move(amp));
}

double max_abs_diff(const pure_state& a, const pure_state& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.amp.size(); ++i)
        m = std::max(m, std::abs(a.amp[i] - b.amp[i]));
    return m;
}

} // namespace flokit::oracle
