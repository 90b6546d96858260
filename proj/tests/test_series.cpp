// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include "digitsum/series.hpp"

using namespace digitsum::series;

namespace {

mpq_class q(long n, long d) { return mpq_class(n, d); }

}  // namespace

TEST_CASE("base below 2 is rejected") {
    CHECK_THROWS_AS(Base(1), std::invalid_argument);
    CHECK_THROWS_AS(Base(0), std::invalid_argument);
    CHECK_THROWS_AS(Base(-3), std::invalid_argument);
}

TEST_CASE("eval_F known partial sums and tail bounds") {
    const Enclosure e0 = eval_F(Base(2), 0);
    CHECK(e0.lo == 0);
    CHECK(e0.hi == 1);  // empty sum, tail 2 * 2^-1

    const Enclosure e2 = eval_F(Base(2), 2);
    CHECK(e2.lo == q(8, 15));  // 1/3 + 1/5
    CHECK(e2.hi == q(8, 15) + q(1, 8));

    const Enclosure e10 = eval_F(Base(10), 1);
    CHECK(e10.lo == q(1, 11));
    CHECK(e10.hi == q(1, 11) + q(1, 50));
}

TEST_CASE("eval_S known partial sums") {
    CHECK(eval_S(Base(2), 0).lo == 0);
    CHECK(eval_S(Base(2), 3).lo == 1);  // 0 + 1/2 + 1/4 + 2/8
    CHECK(eval_S(Base(10), 2).lo == q(11, 100));
}

TEST_CASE("fermat numbers") {
    CHECK(fermat_number(0) == 3);
    CHECK(fermat_number(1) == 5);
    CHECK(fermat_number(2) == 17);
    CHECK_THROWS_AS(fermat_number(26), std::invalid_argument);
}

TEST_CASE("fermat reciprocal partial sums") {
    CHECK(fermat_reciprocal_sum(0).lo == 0);
    CHECK(fermat_reciprocal_sum(2).lo == q(8, 15));
    CHECK(fermat_reciprocal_sum(3).lo == q(151, 255));
}

TEST_CASE("fermat reciprocal sum coincides with eval_F at base 2") {
    for (unsigned n = 0; n <= 10; ++n) {
        REQUIRE(fermat_reciprocal_sum(n).lo == eval_F(Base(2), n).lo);
    }
}

TEST_CASE("liouville partial sums") {
    CHECK(liouville_partial(1).lo == q(1, 10));
    CHECK(liouville_partial(2).lo == q(11, 100));
    CHECK(liouville_partial(3).lo == q(110001, 1000000));
    CHECK_THROWS_AS(liouville_partial(0), std::invalid_argument);
    CHECK_THROWS_AS(liouville_partial(9), std::invalid_argument);
}

TEST_CASE("deeper enclosures are contained in shallower ones") {
    for (long b : {2L, 3L, 10L}) {
        for (unsigned n = 0; n < 6; ++n) {
            REQUIRE(eval_F(Base(b), n).contains(eval_F(Base(b), n + 1)));
            REQUIRE(eval_S(Base(b), n).contains(eval_S(Base(b), n + 1)));
        }
    }
    for (unsigned j = 1; j < 8; ++j) {
        REQUIRE(liouville_partial(j).contains(liouville_partial(j + 1)));
    }
}

TEST_CASE("eval_F width shrinks doubly exponentially") {
    for (long b : {2L, 3L, 10L}) {
        for (unsigned n = 0; n <= 6; ++n) {
            mpz_class p;
            mpz_pow_ui(p.get_mpz_t(), mpz_class(b).get_mpz_t(), 1UL << n);
            REQUIRE(eval_F(Base(b), n).width() <= mpq_class(2, p));
        }
    }
}

TEST_CASE("special-value relation holds for small bases") {
    for (long b : {2L, 3L, 7L}) {
        const RelationReport r = verify_relation(Base(b), 64);
        REQUIRE(r.holds);
        REQUIRE(r.gap == 0);
    }
}

TEST_CASE("corrupted coefficient breaks the relation") {
    const RelationReport r = verify_relation(Base(2), 64, /*corrupt=*/true);
    CHECK_FALSE(r.holds);
    CHECK(r.gap > 0);
    // the defect is one unit at x^5
    CHECK(r.gap < q(1, 32));
}

TEST_CASE("formal identity holds coefficientwise") {
    CHECK(formal_identity_check(1));
    CHECK(formal_identity_check(64));
    CHECK(formal_identity_check(256));
}

TEST_CASE("rational serialization") {
    CHECK(to_string(q(8, 15)) == "8/15");
    CHECK(to_string(mpq_class(5)) == "5/1");
    CHECK(to_string(q(-3, 4)) == "-3/4");
}

TEST_CASE("decimal preview by exact division") {
    CHECK(decimal_string(q(8, 15), 10) == "0.5333333333");
    CHECK(decimal_string(mpq_class(1), 4) == "1.0000");
    CHECK(decimal_string(q(-1, 8), 5) == "-0.12500");
    CHECK(decimal_string(q(1, 3)) ==
          "0.33333333333333333333333333333333333333333333333333");
}

TEST_CASE("scaled enclosure") {
    const Enclosure e = eval_F(Base(2), 3);
    const Enclosure s = e.scaled(mpq_class(2), "2F");
    CHECK(s.lo == 2 * e.lo);
    CHECK(s.hi == 2 * e.hi);
    CHECK_THROWS_AS(e.scaled(mpq_class(-1), "bad"), std::invalid_argument);
}
