#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qwz/congruences.hpp"
#include "qwz/errors.hpp"

#include <stdexcept>

using namespace qwz;

namespace {

RatFuncQ qint(long m) { return RatFuncQ(qbracket(m)); }

RatFuncQ theorem1_difference(long m, long upper) {
    return partial_sum("new-level1-q.cong", kAOne, upper).value -
           terminating_closed_form("level1-q-a", m);
}

} // namespace

TEST_CASE("partial sums: frozen values and argument checking") {
    // single term n = 0 of the level-1 a-series at a = q is exactly 1
    PartialSumExact s0 = partial_sum("level1-q-a", Monom{1, 1}, 0);
    CHECK(s0.value == RatFuncQ(Rational(1)));
    CHECK(s0.upper == 0);

    // the 28n+3 a-series at a = q^5 terminates at upper = (5-1)/2
    PartialSumExact s1 = partial_sum("28n3-q-a", Monom{1, 5}, 2);
    CHECK(s1.value == RatFuncQ::monomial(Rational(-1), -2) * qint(5));
    CHECK(s1.value == terminating_closed_form("28n3-q-a", 5));

    CHECK_THROWS_AS(partial_sum("level1-q-a", kAOne, -1),
                    std::invalid_argument);
    CHECK_THROWS_AS(partial_sum("no-such-series", kAOne, 0),
                    std::invalid_argument);
}

TEST_CASE("partial sums: aggregate-then-reduce equals per-term reduction") {
    for (const char* id : {"new-level1-q", "28n3-q", "rama1-q"}) {
        RatFuncQ aggregated = partial_sum(id, kAOne, 5).value;
        RatFuncQ term_by_term;
        for (long n = 0; n <= 5; ++n) {
            ExtTerm e = identity(id).summand(n, kAOne).expand();
            REQUIRE(e.zero_order == 0);
            term_by_term += e.value;
        }
        CHECK(aggregated == term_by_term);
    }
}

TEST_CASE("partial sums: substitution a <-> 1/a leaves the sum unchanged") {
    for (long e : {2L, 5L}) {
        CHECK(partial_sum("level1-q-a", Monom{1, e}, 3).value ==
              partial_sum("level1-q-a", Monom{1, -e}, 3).value);
        CHECK(partial_sum("28n3-q-a", Monom{1, e}, 3).value ==
              partial_sum("28n3-q-a", Monom{1, -e}, 3).value);
    }
}

TEST_CASE("partial sums: a zero denominator factor raises pole_in_term") {
    // a = q^-8 collides with the (a q^4; q^4)_{2n} denominator at n = 1
    CHECK_NOTHROW(partial_sum("level1-q-a", Monom{1, -8}, 0));
    try {
        partial_sum("level1-q-a", Monom{1, -8}, 2);
        FAIL("expected pole_in_term");
    } catch (const pole_in_term& e) {
        CHECK(e.term_index == 1);
    }
}

TEST_CASE("terminating closed forms") {
    CHECK(terminating_closed_form("level1-q-a", 3) == qint(3));
    CHECK(terminating_closed_form("level1-q-a", 5) ==
          RatFuncQ::monomial(Rational(-1), 1) * qint(5));
    CHECK(terminating_closed_form("level1-q-a", 9) ==
          RatFuncQ::monomial(Rational(1), 6) * qint(9));
    // jacobi(-3, 7) = +1, shift -(7-1)/2
    CHECK(terminating_closed_form("28n3-q-a", 7) ==
          RatFuncQ::monomial(Rational(1), -3) * qint(7));
    // jacobi(-3, 5) = -1
    CHECK(terminating_closed_form("28n3-q-a", 5) ==
          RatFuncQ::monomial(Rational(-1), -2) * qint(5));

    CHECK_THROWS_AS(terminating_closed_form("level1-q-a", 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(terminating_closed_form("28n3-q-a", 9),
                    std::invalid_argument);
    CHECK_THROWS_AS(terminating_closed_form("rama1-q", 3),
                    std::invalid_argument);
}

TEST_CASE("terminating evaluations pass at every admissible m") {
    for (long m : {1L, 3L, 5L, 7L, 9L}) {
        CongruenceResult r = terminating_evaluation_check("level1-q-a", m);
        CHECK(r.ok());
    }
    for (long m : {1L, 5L, 7L, 11L}) {
        CongruenceResult r = terminating_evaluation_check("28n3-q-a", m);
        CHECK(r.ok());
    }
    CHECK_THROWS_AS(terminating_evaluation_check("level1-q-a", 4),
                    std::invalid_argument);
}

TEST_CASE("cyclotomic congruence [m] | sum at a = 1") {
    CHECK(cyclotomic_congruence_check("new-level1-q", 3, 1).ok());
    CHECK(cyclotomic_congruence_check("new-level1-q", 5, 4).ok());
    CHECK(cyclotomic_congruence_check("new-level1-q", 9, 4).ok());
    CHECK(cyclotomic_congruence_check("new-level1-q.cong", 5, 2).ok());
    CHECK(cyclotomic_congruence_check("level1-q-a", 3, 2).ok());

    CHECK_THROWS_AS(cyclotomic_congruence_check("28n3-q", 3, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic_congruence_check("new-level1-q", 4, 1),
                    std::invalid_argument);
}

TEST_CASE("level-1 truncated congruence: claimed modulus fails with "
          "multiplicity one, weakened modulus holds") {
    for (long m : {3L, 5L, 7L, 9L}) {
        CongruenceResult r = theorem1_check(m);
        CHECK(r.status == CheckStatus::fail);
        REQUIRE(r.truncations.size() == 2);
        CHECK(r.truncations[0].upper == (m - 1) / 2);
        CHECK(r.truncations[1].upper == m - 1);
        for (const TruncationOutcome& t : r.truncations) {
            CHECK_FALSE(t.claimed_ok);
            CHECK(t.weak_ok);
            CHECK(t.phi_multiplicity == 1);
            CHECK(t.detail.find("remainder") != std::string::npos);
        }
    }
    CHECK_THROWS_AS(theorem1_check(4), std::invalid_argument);
    CHECK_THROWS_AS(theorem1_check(1), std::invalid_argument);
}

TEST_CASE("level-1 difference modulo explicit cyclotomic powers") {
    // [5] = Phi_5, so the claimed modulus at m = 5 is Phi_5 cubed; the
    // difference carries exactly one power.
    for (long upper : {2L, 4L}) {
        RatFuncQ diff = theorem1_difference(5, upper);
        CHECK(divides(qbracket(5), diff));
        CHECK_FALSE(divides(cyclotomic(5).pow(2), diff));
        CHECK_FALSE(divides(cyclotomic(5).pow(3), diff));
    }
}

TEST_CASE("28n+3 truncated congruence: claimed modulus fails with "
          "multiplicity one, weakened modulus holds") {
    for (long m : {5L, 7L, 11L}) {
        CongruenceResult r = theorem2_check(m);
        CHECK(r.status == CheckStatus::fail);
        REQUIRE(r.truncations.size() == 2);
        for (const TruncationOutcome& t : r.truncations) {
            CHECK_FALSE(t.claimed_ok);
            CHECK(t.weak_ok);
            CHECK(t.phi_multiplicity == 1);
        }
    }
    CongruenceResult strong = theorem2_check(5, true);
    CHECK(strong.witness.find("exploratory modulus [m]*Phi^2 fails") !=
          std::string::npos);

    CHECK_THROWS_AS(theorem2_check(3), std::invalid_argument);
    CHECK_THROWS_AS(theorem2_check(2), std::invalid_argument);
}

TEST_CASE("weakened level-1 congruence is consistent with the cyclotomic "
          "congruence") {
    // [m] | sum and [m] | closed form together give [m] | difference
    CongruenceResult th = theorem1_check(5);
    for (const TruncationOutcome& t : th.truncations) {
        CHECK(t.weak_ok);
        CHECK(cyclotomic_congruence_check("new-level1-q.cong", 5, t.upper)
                  .ok());
    }
}

TEST_CASE("classical supercongruences: level 1 holds at the full "
          "truncation only for p >= 5") {
    auto rhs = level1_super_rhs({3, 5, 7, 11, 13});
    CHECK(rhs.at(3).value() == BigInt(18));
    CHECK(rhs.at(5).value() == BigInt(50));

    CongruenceResult p3 = supercongruence_check("rama-level1", 3, 3, rhs);
    CHECK(p3.ok());

    CongruenceResult p5 = supercongruence_check("rama-level1", 5, 3, rhs);
    CHECK(p5.status == CheckStatus::fail);
    REQUIRE(p5.truncations.size() == 2);
    CHECK_FALSE(p5.truncations[0].claimed_ok);
    CHECK(p5.truncations[0].detail.find("sum == 0") != std::string::npos);
    CHECK(p5.truncations[0].detail.find("expected 50") != std::string::npos);
    CHECK(p5.truncations[1].claimed_ok);

    for (long p : {7L, 11L, 13L}) {
        CongruenceResult r = supercongruence_check("rama-level1", p, 3, rhs);
        CHECK(r.status == CheckStatus::fail);
        REQUIRE(r.truncations.size() == 2);
        CHECK_FALSE(r.truncations[0].claimed_ok);
        CHECK(r.truncations[1].claimed_ok);
    }
}

TEST_CASE("classical supercongruences: 28n+3 holds at both truncations") {
    auto rhs = level2_super_rhs({5, 7, 11, 13});
    CHECK(rhs.at(7).value() == BigInt(21));
    for (long p : {5L, 7L, 11L, 13L}) {
        CongruenceResult r = supercongruence_check("rama-level2-28n3", p, 2,
                                                   rhs);
        CHECK(r.ok());
        for (const TruncationOutcome& t : r.truncations)
            CHECK(t.claimed_ok);
    }
}

TEST_CASE("supercongruence argument checking") {
    auto rhs = level1_super_rhs({5});
    CHECK_THROWS_AS(supercongruence_check("rama-level1", 6, 3, rhs),
                    std::invalid_argument);
    CHECK_THROWS_AS(supercongruence_check("rama-level1", 5, 0, rhs),
                    std::invalid_argument);
    CHECK_THROWS_AS(supercongruence_check("rama-level1", 7, 3, rhs),
                    std::invalid_argument);
    // rhs residue carries modulus p^3; asking for k = 2 must not silently
    // reinterpret it
    CHECK_THROWS_AS(supercongruence_check("rama-level1", 5, 2, rhs),
                    modulus_mismatch);
}
