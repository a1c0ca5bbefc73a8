#pragma once

#include <cmath>
#include <stdexcept>

namespace twt {

/// Gaussian capacity-style function: 0.5 * log2(1 + x), x >= 0.
inline double gauss_cap(double x) {
    if (!(x >= 0.0))
        throw std::domain_error("gauss_cap: argument must be non-negative");
    return 0.5 * std::log2(1.0 + x);
}

/// Binary entropy in bits, with 0*log(0) := 0.
inline double bin_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("bin_entropy: argument must be in [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

/// Positive part: max(x, 0).
inline double pos_part(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace twt
