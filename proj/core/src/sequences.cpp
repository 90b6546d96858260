// SPDX-License-Identifier: Apache-2.0

#include "digitsum/sequences.hpp"

#include <stdexcept>

namespace digitsum::sequences {

unsigned long s2(const mpz_class& n) {
    if (sgn(n) < 0) {
        throw std::invalid_argument("s2: n must be non-negative");
    }
    // mpz_popcount iterates the limbs of the big-integer representation.
    return mpz_popcount(n.get_mpz_t());
}

unsigned long v2(const mpz_class& n) {
    if (sgn(n) <= 0) {
        throw std::invalid_argument("v2: n must be >= 1");
    }
    return mpz_scan1(n.get_mpz_t(), 0);
}

long f_multiplicative(const mpz_class& n) {
    if (sgn(n) <= 0) {
        throw std::invalid_argument("f_multiplicative: n must be >= 1");
    }
    return 1 - static_cast<long>(v2(n));
}

long f_difference(const mpz_class& n) {
    if (sgn(n) <= 0) {
        throw std::invalid_argument("f_difference: n must be >= 1");
    }
    return static_cast<long>(s2(n)) - static_cast<long>(s2(n - 1));
}

std::vector<long> f_series_coefficients(std::size_t degree_cap) {
    std::vector<long> coeff(degree_cap + 1, 0);
    for (std::size_t step = 1; step <= degree_cap; step *= 2) {
        // x^step / (1 + x^step) = x^step - x^(2 step) + x^(3 step) - ...
        long sign = 1;
        for (std::size_t d = step; d <= degree_cap; d += step) {
            coeff[d] += sign;
            sign = -sign;
        }
        if (step > degree_cap / 2) break;  // next power of two overflows the cap
    }
    return coeff;
}

long f_series_oracle(const mpz_class& n, std::size_t degree_cap) {
    if (sgn(n) <= 0) {
        throw std::invalid_argument("f_series_oracle: n must be >= 1");
    }
    if (!n.fits_ulong_p() || n.get_ui() > degree_cap) {
        throw std::invalid_argument(
            "f_series_oracle: n exceeds degree_cap; coefficient not determined "
            "by the truncation");
    }
    return f_series_coefficients(degree_cap)[n.get_ui()];
}

}  // namespace digitsum::sequences
