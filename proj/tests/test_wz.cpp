#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qwz/errors.hpp"
#include "qwz/wz.hpp"

using namespace qwz;

namespace {

bool same_value(const TermValue& a, const TermValue& b) {
    return (a - b).is_exact_zero();
}

} // namespace

TEST_CASE("pair relation vanishes at spot-checked cells") {
    CHECK(wz_residual(wz_pair("guo"), 1, 0).is_zero());
    CHECK(wz_residual(wz_pair("pair3.2"), 2, 1).is_zero());
    // at (0,0) every term is zero or cancels through pole bookkeeping
    CHECK(wz_residual(wz_pair("pair7-q"), 0, 0).is_zero());
    CHECK(wz_residual(wz_pair("pair7"), 3, 2).is_zero());
    CHECK(wz_residual(wz_pair("guo-a", Monom{1, 3}), 2, 2).is_zero());
    CHECK(wz_residual(wz_pair("pair7-q-a", Monom{-1, 1}), 1, 2).is_zero());
}

TEST_CASE("relation holds on grids for all registered pairs") {
    for (const auto& id : wz_pair_ids()) {
        WZPair p = wz_pair(id);
        GridReport r = check_grid(p, 6, 6);
        CHECK(r.cells == 49);
        CHECK(r.ok());
    }
}

TEST_CASE("grid checks for the documented examples") {
    GridReport guo10 = check_grid(wz_pair("guo"), 10, 10);
    CHECK(guo10.cells == 121);
    CHECK(guo10.ok());
    GridReport a8 = check_grid(wz_pair("pair7-q-a", Monom{1, 3}), 8, 8);
    CHECK(a8.cells == 81);
    CHECK(a8.ok());
    // a = -q never terminates, so every cell is a nondegenerate check
    CHECK(check_grid(wz_pair("guo-a", Monom{-1, 1}), 5, 5).ok());
}

TEST_CASE("corrupted pair is caught at the origin") {
    WZPair bad = corrupt_pair(wz_pair("guo"));
    GridReport r = check_grid(bad, 0, 0);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].n == 0);
    CHECK(r.failures[0].k == 0);
    CHECK(!r.failures[0].witness.empty());
    CHECK(!wz_residual(bad, 0, 0).is_zero());
}

TEST_CASE("transformed pairs satisfy the relation") {
    WZPair guo = wz_pair("guo");
    for (const WZPair& t : {transform_p1(guo), transform_p2(guo),
                            transform_p3(guo), transform_p2p3(guo)})
        CHECK(check_grid(t, 4, 4).ok());
    WZPair p7q = wz_pair("pair7-q");
    CHECK(check_grid(transform_p1(p7q), 4, 4).ok());
    CHECK(check_grid(transform_p2p3(p7q), 3, 3).ok());
}

TEST_CASE("transforms are the documented index remappings") {
    WZPair guo = wz_pair("guo");
    CHECK(same_value(transform_p3(guo).F(1, 2), guo.F(2, 2)));
    WZPair combined = transform_p2(transform_p3(guo));
    WZPair fused = transform_p2p3(guo);
    for (long n = 0; n <= 3; ++n) {
        for (long k = 0; k <= 3; ++k) {
            CHECK(same_value(combined.F(n, k), guo.F(2 * n, k - n)));
            CHECK(same_value(combined.F(n, k), fused.F(n, k)));
            CHECK(same_value(combined.G(n, k), fused.G(n, k)));
        }
    }
    WZPair p7q = wz_pair("pair7-q");
    WZPair lifted = transform_p1(p7q);
    for (long n = 0; n <= 4; ++n)
        CHECK(same_value(lifted.G(n, 0), p7q.F(n + 1, n) + p7q.G(n, n)));
}

TEST_CASE("telescoping identity") {
    CHECK(telescope_check(wz_pair("guo"), 6, 0).is_zero());
    CHECK(telescope_check(wz_pair("pair7-q"), 5, 2).is_zero());
    CHECK(telescope_check(wz_pair("pair3.2"), 4, 1).is_zero());
    for (const auto& id : wz_pair_ids())
        CHECK(telescope_check(wz_pair(id), 0, 3).is_zero());
}

TEST_CASE("vanishing at n = 0") {
    for (const auto& id : wz_pair_ids()) {
        WZPair p = wz_pair(id);
        for (long k = 0; k <= 8; ++k) {
            TermValue f0 = p.F(0, k);
            REQUIRE(f0.parts().size() == 1);
            CHECK(f0.parts()[0].zero_order() > 0);
        }
    }
    // the diagonal-doubling pattern preserves it: F2(0,k) = F1(0,k)
    WZPair fused = transform_p2p3(wz_pair("guo"));
    for (long k = 0; k <= 8; ++k)
        CHECK(fused.F(0, k).parts()[0].zero_order() > 0);
}

TEST_CASE("terms decay along n at q = 1/2") {
    Rational q0 = Rational(1) / 2;
    for (const char* id : {"guo", "pair7-q"}) {
        WZPair p = wz_pair(id);
        Rational far = decay_sample(p, 20, 1, q0);
        Rational near = decay_sample(p, 4, 1, q0);
        CHECK(far < near);
        CHECK(far * Rational(BigInt(1) << 120) < 1);
    }
}

TEST_CASE("partial sums of G stabilize across k") {
    set_real_precision(35);
    Rational q0 = Rational(1) / 2;
    WZPair guo = wz_pair("guo");
    Real s0 = Real(partial_sum_G(guo, 15, 0, q0));
    for (long k = 1; k <= 3; ++k) {
        Real sk = Real(partial_sum_G(guo, 15, k, q0));
        CHECK(abs(sk - s0) < Real("1e-15"));
    }
}

TEST_CASE("derived summand matches the boundary combination") {
    WZPair guo = wz_pair("guo");
    for (long n = 0; n <= 3; ++n) {
        TermValue direct = -guo.F(2 * n + 2, -n - 1) + guo.G(2 * n, -n) +
                           guo.G(2 * n + 1, -n);
        CHECK(same_value(summand_of_derived_value("guo", n), direct));
    }
    WZPair p7q = wz_pair("pair7-q");
    for (long n = 0; n <= 3; ++n) {
        TermValue direct = p7q.F(n + 1, n) + p7q.G(n, n);
        CHECK(same_value(summand_of_derived_value("pair7-q", n), direct));
    }
    CHECK_THROWS_AS(summand_of_derived_value("pair3.2", 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(summand_of_derived_value("guo", -1), std::invalid_argument);
}

TEST_CASE("unknown identifiers are rejected") {
    CHECK_THROWS_AS(wz_pair("nope"), std::invalid_argument);
    CHECK_THROWS_AS(check_grid(wz_pair("guo"), -1, 3), std::invalid_argument);
}
