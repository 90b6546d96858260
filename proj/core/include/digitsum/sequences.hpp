// SPDX-License-Identifier: Apache-2.0
//
// Exact integer sequences: binary digit sum s2(n), the 2-adic valuation,
// and the series coefficient f(n) computed by three independent routes.

#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace digitsum::sequences {

/// Number of 1-bits in the binary expansion of n.  Accepts arbitrary-precision
/// input; throws std::invalid_argument for negative n.
/// Satisfies s2(2n) = s2(n) and s2(2n+1) = s2(n) + 1.
unsigned long s2(const mpz_class& n);

/// Exact power of 2 dividing n.  Requires n >= 1; throws otherwise
/// (the valuation of 0 is not a number).
unsigned long v2(const mpz_class& n);

/// f(n) via the closed form 1 - v2(n): f is multiplicative, every odd
/// prime-power factor contributes 1, and the power of two contributes 1 - k.
/// Requires n >= 1.
long f_multiplicative(const mpz_class& n);

/// f(n) via the consecutive digit-sum difference s2(n) - s2(n-1).
/// Requires n >= 1.
long f_difference(const mpz_class& n);

/// Coefficients [0 .. degree_cap] of the formal expansion of
///   sum_{m >= 0} x^(2^m) / (1 + x^(2^m))
/// truncated at degree_cap, obtained by brute-force term accumulation:
/// each summand contributes sum_{j >= 1} (-1)^(j-1) x^(j 2^m).
///
/// This is the oracle route.  It deliberately shares no code with
/// f_multiplicative or f_difference; it exists to cross-check them.
std::vector<long> f_series_coefficients(std::size_t degree_cap);

/// Coefficient of x^n from f_series_coefficients.  Requires 1 <= n <= degree_cap;
/// coefficients past the cap are not determined by the truncation.
long f_series_oracle(const mpz_class& n, std::size_t degree_cap);

}  // namespace digitsum::sequences
