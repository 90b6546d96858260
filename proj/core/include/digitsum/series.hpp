// SPDX-License-Identifier: Apache-2.0
//
// Exact rational partial sums of F(1/b) = sum 1/(b^(2^n)+1),
// S(1/b) = sum s2(n)/b^n, the Fermat reciprocal series and the Liouville
// constant, each wrapped in a certified enclosure of the true limit.

#pragma once

#include <cstddef>
#include <string>

#include <gmpxx.h>

namespace digitsum::series {

/// Integer base b >= 2 of the evaluation point x = 1/b.
struct Base {
    explicit Base(long b);
    long value;
};

/// Certified interval [lo, hi] of exact rationals containing a target real.
/// lo is always the exact partial sum; hi adds a proven tail bound.
struct Enclosure {
    mpq_class lo;
    mpq_class hi;
    std::string target_name;

    mpq_class width() const { return hi - lo; }
    bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
    bool contains(const Enclosure& other) const {
        return lo <= other.lo && other.hi <= hi;
    }
    bool intersects(const Enclosure& other) const {
        return lo <= other.hi && other.lo <= hi;
    }

    /// Enclosure of c * target for an exact rational c > 0.
    Enclosure scaled(const mpq_class& c, const std::string& name) const;
};

/// Enclosure of F(1/b) from the first `terms` summands:
///   lo = sum_{n=0}^{terms-1} 1/(b^(2^n) + 1),
///   hi = lo + 2 b^(-2^terms).
/// The tail is positive and at most b^(-2^terms) / (1 - b^(-2^terms))
/// <= 2 b^(-2^terms) for b >= 2, so the bound is certified.
/// Throws if 2^terms would exceed the exponent guard (terms > 25).
Enclosure eval_F(Base b, unsigned terms);

/// Enclosure of S(1/b) from the partial sum through n = terms:
///   lo = sum_{n=0}^{terms} s2(n) b^-n,
///   hi = lo + sum_{n > terms} n b^-n  (closed form; certified since s2(n) <= n).
Enclosure eval_S(Base b, unsigned terms);

/// The Fermat number 2^(2^n) + 1.  n is capped (default 25, ~4 MB of bits)
/// to guard against memory exhaustion; larger n throws.
mpz_class fermat_number(unsigned n, unsigned cap = 25);

/// Enclosure of the sum of the reciprocals of the Fermat numbers.
/// Term by term 1/(2^(2^n)+1) = 1/F_n, so lo equals eval_F(2, terms).lo exactly.
Enclosure fermat_reciprocal_sum(unsigned terms);

/// Enclosure of the Liouville constant sum_{j>=1} 10^(-j!) from the first J
/// terms; hi adds 2 * 10^(-(J+1)!), twice the first tail term, which dominates
/// the factorially-thinning tail.  Requires 1 <= J <= 8.
Enclosure liouville_partial(unsigned J);

struct RelationReport {
    bool holds;          // the two enclosures intersect
    mpq_class gap;       // distance between them when disjoint, else 0
    unsigned f_terms;    // truncation depths actually used
    unsigned s_terms;
    mpq_class f_width;   // width of the scaled F enclosure
    mpq_class s_width;
};

/// Checks the special-value identity S(1/b) = b/(b-1) * F(1/b) through
/// certified enclosures: deepens both series until each enclosure is narrower
/// than b^-precision_exponent, scales the F enclosure by the exact rational
/// b/(b-1), and reports whether the results intersect.
///
/// `corrupt` is a negative control: it evaluates S with the coefficient of
/// x^5 replaced by s2(5)+1, which must break the identity once the widths
/// shrink below the induced defect 1/b^5.
RelationReport verify_relation(Base b, unsigned precision_exponent = 64,
                               bool corrupt = false);

/// Coefficientwise check, to the given degree, of the formal identity
///   sum f(n) x^n = (1 - x) * sum s2(n) x^n
/// with the left side taken from the brute-force series oracle.
bool formal_identity_check(std::size_t degree);

/// Text form "numerator/denominator", base 10.
std::string to_string(const mpq_class& x);

/// Decimal approximation with `digits` digits after the point, computed by
/// exact integer division and truncated toward zero.  For display only.
std::string decimal_string(const mpq_class& x, std::size_t digits = 50);

}  // namespace digitsum::series
