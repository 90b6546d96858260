// SPDX-License-Identifier: Apache-2.0
//
// Continued fractions of rationals, certified CF prefixes of real constants
// obtained from enclosures, convergent tables, and empirical
// irrationality-exponent estimation from convergent denominator growth.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "digitsum/series.hpp"

namespace digitsum::diophantine {

/// Finite partial-quotient sequence [a0; a1, a2, ...].  Quotients a_i for
/// i >= 1 must be >= 1.  May be empty (an empty certified prefix is valid).
///
/// cf_of_rational always produces the canonical form (final quotient >= 2
/// when the length is >= 2); synthetically built fractions, e.g. the all-ones
/// golden-ratio calibration CF, may carry trailing 1s.
class ContinuedFraction {
public:
    ContinuedFraction() = default;
    explicit ContinuedFraction(std::vector<mpz_class> quotients);

    /// Calibration CF of the golden ratio: `count` quotients, all 1.
    static ContinuedFraction golden(std::size_t count);

    std::size_t size() const { return quotients_.size(); }
    bool empty() const { return quotients_.empty(); }
    const mpz_class& operator[](std::size_t i) const { return quotients_[i]; }
    const std::vector<mpz_class>& quotients() const { return quotients_; }

    /// Copy without the final quotient; empty stays empty.
    ContinuedFraction drop_last() const;

    /// Longest common prefix with another CF.
    ContinuedFraction common_prefix(const ContinuedFraction& other) const;

    /// First `count` quotients (all of them if count >= size).
    ContinuedFraction prefix(std::size_t count) const;

    /// "[a0; a1, a2, ...]"; "[]" when empty.
    std::string to_string() const;

    bool operator==(const ContinuedFraction&) const = default;

private:
    std::vector<mpz_class> quotients_;
};

/// Canonical CF of a rational via the Euclidean algorithm.  Reconstructing
/// the CF recovers x exactly; the final quotient is >= 2 when length >= 2.
ContinuedFraction cf_of_rational(const mpq_class& x);

/// Quotient sequence guaranteed to be a CF prefix of every real in the
/// enclosure: canonical CFs of both endpoints, each with its final quotient
/// dropped to guard against cylinder-boundary effects, then the longest
/// common prefix.  Soundness rests on CF cylinder sets being intervals.
/// A zero-width enclosure yields CF(lo) minus its final quotient.
ContinuedFraction certified_cf_prefix(const series::Enclosure& e);

struct Convergent {
    mpz_class p;
    mpz_class q;
    mpq_class value() const { return mpq_class(p, q); }
};

/// Convergents p_k/q_k by the standard three-term recurrence
/// p_k = a_k p_{k-1} + p_{k-2} (seeds 1, 0), q_k likewise (seeds 0, 1).
/// Requires a non-empty CF; the last convergent of a rational's CF is that
/// rational.
std::vector<Convergent> convergents(const ContinuedFraction& cf);

/// Empirical irrationality-exponent estimate
///   mu_hat = 1 + max_{k in [window_start, K-1]} ln q_{k+1} / ln q_k.
/// Ratios are computed in double precision from big-integer mantissa and
/// exponent; mu_hat carries at most ~1e-6 slack, far below the acceptance
/// tolerances.  Ties report the smallest attaining k.
struct MuEstimate {
    std::vector<std::pair<std::size_t, double>> ratios;  // (k, ln q_{k+1}/ln q_k)
    double mu_hat;
    std::size_t window_start;
    std::size_t argmax_index;

    std::string to_string() const;  // ratio list plus mu_hat to 6 decimals
};

/// Requires at least window_start + 2 quotients and q_{window_start} >= 2;
/// throws with a diagnostic otherwise.
MuEstimate estimate_mu(const ContinuedFraction& cf, std::size_t window_start);

enum class Constant { F, S };

struct DepthPolicy {
    std::size_t min_quotients = 64;  // certified quotients required
    std::size_t window_start = 10;
    unsigned max_f_terms = 16;       // F enclosure width is 2 b^(-2^terms)
    unsigned max_s_terms = 1u << 16; // S enclosure width is ~ terms * b^-terms
};

struct ConstantMu {
    ContinuedFraction certified_prefix;  // truncated to min_quotients
    MuEstimate estimate;
    unsigned depth_used;                 // terms of the final evaluation
};

/// Deepens eval_F / eval_S until the certified CF prefix reaches
/// policy.min_quotients quotients, truncates the prefix to exactly that
/// count (so the estimate does not depend on the deepening schedule), and
/// estimates mu.  The certified prefix guarantees the statistics belong to
/// the true constant, not to a truncation.  Throws if the depth cap is
/// reached first.
ConstantMu estimate_mu_for_constant(series::Base b, Constant which,
                                    const DepthPolicy& policy = {});

}  // namespace digitsum::diophantine
