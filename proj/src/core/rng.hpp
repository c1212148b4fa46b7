#pragma once

#include "core/state.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace flokit {

// splitmix64 finalizer; used to derive independent child seeds
uint64_t splitmix64(uint64_t z);
uint64_t derive_seed(uint64_t seed, uint64_t stream);

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

// Gaussian-random normalized state supported on one parity sector
// (or the whole space for parity_class::mixed)
pure_state random_state_in_sector(int n, parity_class sector, uint64_t seed);

std::array<double, 8> random_unit8(std::mt19937_64& gen);
std::vector<double> random_angles(std::mt19937_64& gen, int count, double lo = 0.0,
                                  double hi = 2.0 * pi);

} // namespace flokit
