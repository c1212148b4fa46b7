#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace flokit {

using cx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// amplitudes below this modulus count as zero when classifying parity sectors
inline constexpr double parity_dust = 1e-12;

enum class errc {
    invalid_argument,
    size_mismatch,
    parity_mismatch,
    not_normalized,
    bad_index,
    non_orthogonal,
    negative_determinant,
    residual_too_large,
    unknown_suite,
    io_failure,
};

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

} // namespace flokit
