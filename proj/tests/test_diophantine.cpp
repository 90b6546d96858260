// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "digitsum/diophantine.hpp"
#include "digitsum/series.hpp"

using namespace digitsum::diophantine;
using digitsum::series::Base;
using digitsum::series::Enclosure;

namespace {

ContinuedFraction cf(std::vector<long> qs) {
    std::vector<mpz_class> v(qs.begin(), qs.end());
    return ContinuedFraction(std::move(v));
}

}  // namespace

TEST_CASE("cf_of_rational on known values") {
    CHECK(cf_of_rational(mpq_class(5)) == cf({5}));
    CHECK(cf_of_rational(mpq_class(8, 15)) == cf({0, 1, 1, 7}));
    CHECK(cf_of_rational(mpq_class(10, 7)) == cf({1, 2, 3}));
}

TEST_CASE("cf round-trips through convergents on random rationals") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20260823);
    for (int trial = 0; trial < 500; ++trial) {
        mpz_class num = rng.get_z_bits(166);  // ~10^50
        mpz_class den = rng.get_z_bits(166) + 1;
        if (trial % 3 == 0) num = -num;
        mpq_class x(num, den);
        x.canonicalize();
        const ContinuedFraction c = cf_of_rational(x);
        const auto table = convergents(c);
        REQUIRE(table.back().value() == x);
        // canonical form: no trailing 1 when length >= 2
        if (c.size() >= 2) {
            REQUIRE(c[c.size() - 1] >= 2);
        }
    }
}

TEST_CASE("convergent recurrence on known fractions") {
    const auto t1 = convergents(cf({0, 1, 1, 7}));
    REQUIRE(t1.size() == 4);
    CHECK(t1[0].value() == mpq_class(0));
    CHECK(t1[1].value() == mpq_class(1));
    CHECK(t1[2].value() == mpq_class(1, 2));
    CHECK(t1[3].value() == mpq_class(8, 15));

    const auto t2 = convergents(cf({5}));
    CHECK(t2.back().value() == mpq_class(5));

    const auto t3 = convergents(cf({1, 2, 2, 2, 2}));
    CHECK(t3.back().value() == mpq_class(41, 29));

    CHECK_THROWS_AS(convergents(ContinuedFraction()), std::invalid_argument);
}

TEST_CASE("convergent denominators increase strictly past the first") {
    const auto table = convergents(cf_of_rational(mpq_class(12345677, 9999991)));
    for (std::size_t k = 2; k < table.size(); ++k) {
        REQUIRE(table[k].q > table[k - 1].q);
    }
}

TEST_CASE("certified prefix of known enclosures") {
    const Enclosure near_sqrt2{mpq_class(141, 100), mpq_class(71, 50), "x"};
    CHECK(certified_cf_prefix(near_sqrt2) == cf({1, 2, 2}));

    // [0;3] and [0;1,2] become [0] and [0;1] after drop-last; the shared
    // quotient is the integer part, sound for the whole interval.
    const Enclosure wide{mpq_class(1, 3), mpq_class(2, 3), "x"};
    CHECK(certified_cf_prefix(wide) == cf({0}));

    const Enclosure straddling{mpq_class(1, 3), mpq_class(3, 2), "x"};
    CHECK(certified_cf_prefix(straddling).empty());

    const mpq_class x(8, 15);
    const Enclosure degenerate{x, x, "x"};
    CHECK(certified_cf_prefix(degenerate) == cf({0, 1, 1}));
}

TEST_CASE("certified prefix is a true prefix on random oracle trials") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(987654321);
    for (int trial = 0; trial < 500; ++trial) {
        mpq_class alpha(rng.get_z_bits(80), rng.get_z_bits(80) + 1);
        alpha.canonicalize();
        mpq_class d1(rng.get_z_bits(20) + 1, rng.get_z_bits(120) + 2);
        mpq_class d2(rng.get_z_bits(20) + 1, rng.get_z_bits(120) + 2);
        d1.canonicalize();
        d2.canonicalize();
        const Enclosure e{alpha - d1, alpha + d2, "trial"};
        const ContinuedFraction prefix = certified_cf_prefix(e);
        const ContinuedFraction truth = cf_of_rational(alpha);
        REQUIRE(prefix.common_prefix(truth) == prefix);
    }
}

TEST_CASE("estimate_mu on the synthetic golden-ratio fraction") {
    const MuEstimate est = estimate_mu(ContinuedFraction::golden(30), 5);
    CHECK(est.mu_hat > 2.0);
    CHECK(est.mu_hat < 2.25);
    // Fibonacci denominators: ratios decrease toward 1, max at the window start
    CHECK(est.argmax_index == 5);
}

TEST_CASE("estimate_mu input validation") {
    CHECK_THROWS_AS(estimate_mu(ContinuedFraction::golden(4), 5),
                    std::invalid_argument);
    // q_0 = 1 < 2 at window_start 0
    CHECK_THROWS_AS(estimate_mu(ContinuedFraction::golden(10), 0),
                    std::invalid_argument);
}

TEST_CASE("estimate_mu always exceeds 2 on random fractions") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(24680);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<mpz_class> qs;
        const std::size_t len = 6 + mpz_class(rng.get_z_range(30)).get_ui();
        qs.push_back(rng.get_z_range(10));
        for (std::size_t i = 1; i < len; ++i) {
            qs.push_back(rng.get_z_range(1000) + 1);
        }
        const MuEstimate est = estimate_mu(ContinuedFraction(std::move(qs)), 2);
        REQUIRE(est.mu_hat > 2.0);
    }
}

TEST_CASE("liouville enclosure forces a large exponent estimate") {
    const ContinuedFraction prefix =
        certified_cf_prefix(digitsum::series::liouville_partial(6));
    const MuEstimate est = estimate_mu(prefix, 1);
    CHECK(est.mu_hat > 5.0);
}

TEST_CASE("refining the F(1/2) enclosure never shortens the prefix") {
    ContinuedFraction prev;
    for (unsigned depth = 3; depth <= 6; ++depth) {
        const ContinuedFraction cur =
            certified_cf_prefix(digitsum::series::eval_F(Base(2), depth));
        REQUIRE(cur.size() >= prev.size());
        REQUIRE(cur.common_prefix(prev) == prev);
        prev = cur;
    }
}

TEST_CASE("certified prefixes of S(1/b) and scaled F(1/b) agree") {
    for (long b : {2L, 3L}) {
        const mpq_class factor(b, b - 1);
        const ContinuedFraction from_f = certified_cf_prefix(
            digitsum::series::eval_F(Base(b), 8).scaled(factor, "scaled F"));
        const ContinuedFraction from_s =
            certified_cf_prefix(digitsum::series::eval_S(Base(b), 400));
        const std::size_t common = std::min(from_f.size(), from_s.size());
        REQUIRE(common > 10);
        REQUIRE(from_f.prefix(common) == from_s.prefix(common));
    }
}

TEST_CASE("estimate_mu_for_constant certifies enough quotients") {
    const ConstantMu r = estimate_mu_for_constant(Base(2), Constant::F);
    CHECK(r.certified_prefix.size() == 64);
    CHECK(r.estimate.mu_hat > 2.0);
    CHECK(r.estimate.mu_hat < 2.5);

    const ConstantMu s = estimate_mu_for_constant(Base(2), Constant::S);
    CHECK(s.certified_prefix.size() == 64);
    CHECK(s.estimate.mu_hat > 2.0);
    CHECK(s.estimate.mu_hat < 2.5);
}

TEST_CASE("cf serialization") {
    CHECK(cf({1, 2, 3}).to_string() == "[1; 2, 3]");
    CHECK(cf({5}).to_string() == "[5]");
    CHECK(ContinuedFraction().to_string() == "[]");
}
