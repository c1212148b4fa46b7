#include "core/rng.hpp"

#include <cmath>

namespace flokit {

uint64_t splitmix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream));
}

pure_state random_state_in_sector(int n, parity_class sector, uint64_t seed) {
    if (n < 1 || n > 24) fail(errc::invalid_argument, "random_state_in_sector: bad qubit count");
    std::mt19937_64 gen = make_rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    uint64_t dim = uint64_t{1} << n;
    std::vector<cx> amp(dim, cx{0, 0});
    double nrm2 = 0;
    for (uint64_t b = 0; b < dim; ++b) {
        if (sector != parity_class::mixed && index_parity(b) != (sector == parity_class::odd))
            continue;
        amp[b] = cx{g(gen), g(gen)};
        nrm2 += std::norm(amp[b]);
    }
    double inv = 1.0 / std::sqrt(nrm2);
    for (auto& a : amp) a *= inv;
    return pure_state(n, std::move(amp));
}

std::array<double, 8> random_unit8(std::mt19937_64& gen) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::array<double, 8> r{};
    double nrm2 = 0;
    for (double& v : r) {
        v = g(gen);
        nrm2 += v * v;
    }
    double inv = 1.0 / std::sqrt(nrm2);
    for (double& v : r) v *= inv;
    return r;
}

std::vector<double> random_angles(std::mt19937_64& gen, int count, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> out(static_cast<size_t>(count));
    for (double& v : out) v = u(gen);
    return out;
}

} // namespace flokit
