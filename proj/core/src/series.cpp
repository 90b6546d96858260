// SPDX-License-Identifier: Apache-2.0

#include "digitsum/series.hpp"

#include <stdexcept>

#include "digitsum/sequences.hpp"

namespace digitsum::series {

namespace {

// Exponent guard: b^(2^terms) for terms > 25 would exceed ~4 MB of bits
// even at b = 2.
constexpr unsigned kMaxDoublingTerms = 25;

mpz_class pow_z(const mpz_class& base, unsigned long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// mpq_class(n, d) does not reduce; enclosures must store canonical rationals.
mpq_class make_q(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// b^(2^terms) with the doubling-exponent guard.
mpz_class pow_doubling(long b, unsigned terms) {
    if (terms > kMaxDoublingTerms) {
        throw std::invalid_argument("series: truncation depth exceeds the "
                                    "doubling-exponent guard (25)");
    }
    return pow_z(mpz_class(b), 1UL << terms);
}

// Partial sum of S(1/b) through n = terms as a single exact rational:
// numerator accumulated Horner-style over the common denominator b^terms.
// corrupt replaces the coefficient of x^5 by s2(5) + 1 (negative control).
Enclosure eval_S_impl(Base b, unsigned terms, bool corrupt) {
    mpz_class num = 0;
    const mpz_class base = b.value;
    for (unsigned n = 0; n <= terms; ++n) {
        num = num * base + sequences::s2(n);
        if (corrupt && n == 5) num += 1;
    }
    mpq_class lo(num, pow_z(base, terms));
    lo.canonicalize();

    // Tail bound: s2(n) <= n, and sum_{n >= M} n x^n = x^M (M - (M-1)x) / (1-x)^2.
    const mpq_class x(1, b.value);
    const unsigned long M = terms + 1;
    mpq_class xM = make_q(1, pow_z(base, M));
    mpq_class one_minus_x = 1 - x;
    mpq_class tail = xM * (mpq_class(M) - mpq_class(M - 1) * x) /
                     (one_minus_x * one_minus_x);

    return Enclosure{lo, lo + tail,
                     corrupt ? "S_corrupt(1/b)" : "S(1/b)"};
}

}  // namespace

Base::Base(long b) : value(b) {
    if (b < 2) {
        throw std::invalid_argument("base must be >= 2");
    }
}

Enclosure Enclosure::scaled(const mpq_class& c, const std::string& name) const {
    if (sgn(c) <= 0) {
        throw std::invalid_argument("Enclosure::scaled: factor must be positive");
    }
    return Enclosure{lo * c, hi * c, name};
}

Enclosure eval_F(Base b, unsigned terms) {
    mpq_class lo = 0;
    for (unsigned n = 0; n < terms; ++n) {
        lo += make_q(1, pow_doubling(b.value, n) + 1);
    }
    // Tail: positive, and at most y/(1-y) <= 2y for y = b^(-2^terms) <= 1/2.
    mpq_class tail = make_q(2, pow_doubling(b.value, terms));
    return Enclosure{lo, lo + tail, "F(1/b)"};
}

Enclosure eval_S(Base b, unsigned terms) {
    return eval_S_impl(b, terms, false);
}

mpz_class fermat_number(unsigned n, unsigned cap) {
    if (n > cap) {
        throw std::invalid_argument("fermat_number: index exceeds memory guard cap");
    }
    return pow_z(2, 1UL << n) + 1;
}

Enclosure fermat_reciprocal_sum(unsigned terms) {
    mpq_class lo = 0;
    for (unsigned n = 0; n < terms; ++n) {
        lo += make_q(1, fermat_number(n));
    }
    mpq_class tail = make_q(2, pow_doubling(2, terms));
    return Enclosure{lo, lo + tail, "fermat_reciprocal_sum"};
}

Enclosure liouville_partial(unsigned J) {
    if (J < 1 || J > 8) {
        throw std::invalid_argument("liouville_partial: J must be in [1, 8]");
    }
    mpq_class lo = 0;
    unsigned long factorial = 1;
    for (unsigned j = 1; j <= J; ++j) {
        factorial *= j;
        lo += make_q(1, pow_z(10, factorial));
    }
    // Tail terms thin factorially; twice the first one dominates the rest.
    factorial *= J + 1;
    mpq_class tail = make_q(2, pow_z(10, factorial));
    return Enclosure{lo, lo + tail, "liouville"};
}

RelationReport verify_relation(Base b, unsigned precision_exponent, bool corrupt) {
    const mpq_class threshold = make_q(1, pow_z(b.value, precision_exponent));

    // F converges doubly exponentially: width 2 b^(-2^t) < b^-P once
    // 2^t > P + 1.
    unsigned f_terms = 0;
    Enclosure f = eval_F(b, f_terms);
    while (f.width() >= threshold) {
        f = eval_F(b, ++f_terms);
    }

    // S converges only geometrically; double the depth until the tail fits.
    unsigned s_terms = 16;
    Enclosure s = eval_S_impl(b, s_terms, corrupt);
    while (s.width() >= threshold) {
        s_terms *= 2;
        s = eval_S_impl(b, s_terms, corrupt);
    }

    const mpq_class factor(b.value, b.value - 1);
    Enclosure f_scaled = f.scaled(factor, "b/(b-1) * F(1/b)");

    RelationReport report;
    report.holds = f_scaled.intersects(s);
    report.gap = 0;
    if (!report.holds) {
        report.gap = (s.lo > f_scaled.hi) ? mpq_class(s.lo - f_scaled.hi)
                                          : mpq_class(f_scaled.lo - s.hi);
    }
    report.f_terms = f_terms;
    report.s_terms = s_terms;
    report.f_width = f_scaled.width();
    report.s_width = s.width();
    return report;
}

bool formal_identity_check(std::size_t degree) {
    if (degree < 1) {
        throw std::invalid_argument("formal_identity_check: degree must be >= 1");
    }
    const std::vector<long> lhs = sequences::f_series_coefficients(degree);
    if (lhs[0] != 0) return false;
    long prev = 0;  // s2(0)
    for (std::size_t n = 1; n <= degree; ++n) {
        const long cur = static_cast<long>(sequences::s2(mpz_class(n)));
        // coefficient of x^n in (1-x) * sum s2(n) x^n
        if (lhs[n] != cur - prev) return false;
        prev = cur;
    }
    return true;
}

std::string to_string(const mpq_class& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string decimal_string(const mpq_class& x, std::size_t digits) {
    const bool negative = sgn(x) < 0;
    mpz_class num = abs(x.get_num());
    const mpz_class& den = x.get_den();
    mpz_class scaled = num * pow_z(10, digits) / den;  // truncates toward zero
    std::string s = scaled.get_str();
    if (s.size() <= digits) {
        s.insert(0, digits + 1 - s.size(), '0');
    }
    s.insert(s.size() - digits, ".");
    return negative ? "-" + s : s;
}

}  // namespace digitsum::series
