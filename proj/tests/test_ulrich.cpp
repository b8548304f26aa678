#include <doctest.h>

#include <random>

#include "scroll/error.hpp"
#include "scroll/suite.hpp"
#include "scroll/ulrich.hpp"
#include "scroll/vanishing.hpp"

using namespace scroll;

namespace {

std::vector<std::pair<Variety, SheafExpr>> known_ulrich()
{
    return {{Variety(1, 1), SheafExpr::O(0, 1)},           {Variety(1, 1), SheafExpr::O(2, -2)},
            {Variety(1, 1), SheafExpr::Om(1, 1)},          {Variety(2, 2), SheafExpr::Om(0, 5)},
            {Variety(2, 2), SheafExpr::Om(2, -1)},         {Variety(1, 1), SheafExpr::O(0, 1) + SheafExpr::O(2, -2)},
            {Variety(1, 1), SheafExpr::Om(1, 1).times(2)}, {Variety(2, 2), SheafExpr::Om(0, 5) + SheafExpr::Om(2, -1)}};
}

}  // namespace

TEST_SUITE("ulrich") {

TEST_CASE("initialized")
{
    const Variety v(1, 1);
    CHECK(is_initialized(SheafExpr::O(0, 1), v));
    CHECK_FALSE(is_initialized(SheafExpr::O(1, 0), v));
    CHECK_FALSE(is_initialized(SheafExpr::O(-1, 0), v));
}

TEST_CASE("Ulrich verdicts")
{
    auto u = is_ulrich(SheafExpr::O(0, 1), Variety(1, 1));
    CHECK(u.is_ulrich);
    CHECK(u.h0 == 3);
    CHECK(u.expected_h0 == 3);
    u = is_ulrich(SheafExpr::Om(0, 5), Variety(2, 2));
    CHECK(u.is_ulrich);
    CHECK(u.h0 == 24);
    CHECK(u.expected_h0 == 24);
    CHECK_FALSE(is_ulrich(SheafExpr::O(0, 2), Variety(1, 1)).is_ulrich);
    CHECK(cohomology(SheafExpr::O(-2, 2), Variety(1, 1)).h[1] == 1);
    CHECK_FALSE(is_ulrich(SheafExpr::O(0, 0), Variety(1, 1)).is_ulrich);
    CHECK_THROWS_AS(is_ulrich(SheafExpr{}, Variety(1, 1)), PreconditionFailed);
    const auto om = is_ulrich(SheafExpr::Om(1, 1), Variety(1, 1));
    CHECK(om.is_ulrich);
    CHECK(om.h0 == 6);
    for (const auto& [v, s] : known_ulrich()) {
        CAPTURE(to_string(s));
        const auto r = is_ulrich(s, v);
        CHECK(r.is_ulrich);
        CHECK(r.is_initialized);
        CHECK(r.h0 == v.degree() * s.rank());
    }
}

TEST_CASE("Ulrich dual")
{
    CHECK(ulrich_dual(SheafExpr::O(0, 1), Variety(1, 1)) == SheafExpr::O(2, -2));
    CHECK(ulrich_dual(SheafExpr::Om(0, 5), Variety(2, 2)) == SheafExpr::Om(2, -1));
    std::mt19937_64 rng(29);
    for (int n = 0; n < 100; ++n) {
        const Variety v(1 + n % 3, 3);
        const auto s = random_expression(rng, true);
        CHECK(ulrich_dual(ulrich_dual(s, v), v) == s);
    }
    for (const auto& [v, s] : known_ulrich())
        CHECK(is_ulrich(ulrich_dual(s, v), v).is_ulrich);
}

TEST_CASE("the two characterizations agree")
{
    for (int a0 = 1; a0 <= 3; ++a0)
        for (int a1 = a0; a1 <= 3; ++a1) {
            const Variety v(a0, a1);
            for (int kind = 0; kind < 3; ++kind)
                for (int a = -3; a <= 3; ++a)
                    for (int b = -9; b <= 9; ++b) {
                        const SheafExpr s(Atom{static_cast<Kind>(kind), a, b});
                        CAPTURE(to_string(s));
                        CHECK(is_ulrich(s, v).is_ulrich == satisfies_alternate_ulrich(s, v));
                    }
        }
}

TEST_CASE("(p,q)-regularity")
{
    const Variety v(1, 1);
    CHECK(is_pq_regular(SheafExpr::O(0, 1), v, 0, 0));
    CHECK(is_pq_regular(SheafExpr::O(2, -2), v, 0, 0));
    CHECK_FALSE(is_pq_regular(SheafExpr::O(-3, 0), v, 0, 0));
    CHECK(cohomology(SheafExpr::O(-4, -1), v).h[3] != 0);
    for (const auto& [w, s] : known_ulrich())
        CHECK(is_pq_regular(s, w, 0, 0));
}

TEST_CASE("regularity")
{
    const Variety v(1, 1);
    auto r = regularity(SheafExpr::O(0, 1), v, 10);
    REQUIRE(r.value);
    CHECK(*r.value <= 0);
    CHECK(is_pq_regular(SheafExpr::O(0, 1), v, *r.value, 0));
    CHECK_FALSE(is_pq_regular(SheafExpr::O(0, 1), v, *r.value - 1, 0));

    r = regularity(SheafExpr::O(0, 5), v, 10);
    REQUIRE(r.value);
    CHECK(*r.value <= 0);

    r = regularity(SheafExpr{}, v, 10);
    CHECK_FALSE(r.value);
    CHECK(r.floor_reached);
    CHECK(r.window == 10);

    CHECK_THROWS_AS(regularity(SheafExpr::O(0, 1), v, 0), PreconditionFailed);
}

TEST_CASE("Veronese Ulrich bundles")
{
    CHECK(is_ulrich_veronese(p2::Sum({Kind::Omega, 3}), 2));
    CHECK(is_ulrich_veronese(p2::Sum({Kind::O, 0}), 1));
    CHECK_FALSE(is_ulrich_veronese(p2::Sum({Kind::O, 1}), 2));
    CHECK(is_ulrich_veronese(p2::Sum({Kind::Sym2Omega, 6}), 3));
    const auto verdict = veronese_verdict(p2::Sum({Kind::Omega, 3}), 2);
    CHECK(verdict.h0 == 8);
    CHECK(verdict.expected_h0 == 8);
    for (int d = -6; d <= 6; ++d)
        CHECK_FALSE(is_ulrich_veronese(p2::Sum({Kind::O, d}), 3));
    CHECK_FALSE(is_ulrich_veronese(p2::Sum{}, 1));
}

TEST_CASE("vanishing sweeps hold for Ulrich bundles")
{
    for (const auto& [v, s] : known_ulrich()) {
        CAPTURE(to_string(s));
        const auto [lo, hi] = default_sweep_range(v);
        CHECK(lo == -3 * v.c() - 6);
        CHECK(check_vanishing(s, v, ulrich_vanishing_claims(v), lo, hi).empty());
    }
}

TEST_CASE("vanishing bound for h1 of E<-3><t> is sharp")
{
    const Variety v(1, 1);
    const auto e = SheafExpr::O(0, 1);
    for (int t = -12; t <= v.a0(); ++t)
        CHECK(cohomology(twist(e, -3, t), v).h[1] == 0);
    CHECK(cohomology(twist(e, -3, 2), v).h[1] == 2);
}

TEST_CASE("vanishing claims catch a non-Ulrich sheaf")
{
    const Variety v(1, 1);
    const auto [lo, hi] = default_sweep_range(v);
    CHECK_FALSE(check_vanishing(SheafExpr::O(0, 0), v, ulrich_vanishing_claims(v), lo, hi).empty());
}

TEST_CASE("sharpened bounds")
{
    // these hold on (2,2)
    for (const auto& s : {SheafExpr::Om(0, 5), SheafExpr::Om(2, -1)}) {
        const Variety v(2, 2);
        const auto [lo, hi] = default_sweep_range(v);
        CHECK(check_vanishing(s, v, sharpened_vanishing_claims(v), lo, hi).empty());
    }
    // on (1,1) the k = 2 bounds fail exactly at the boundary: E<-2><-2> is the canonical sheaf for E = O(0,1)
    // and E<-2><2> is the structure sheaf for E = O(2,-2)
    const Variety v(1, 1);
    const auto [lo, hi] = default_sweep_range(v);
    auto failures = check_vanishing(SheafExpr::O(0, 1), v, sharpened_vanishing_claims(v), lo, hi);
    REQUIRE(failures.size() == 1);
    CHECK(failures[0].t == -2);
    CHECK(failures[0].value == 1);
    failures = check_vanishing(SheafExpr::O(2, -2), v, sharpened_vanishing_claims(v), lo, hi);
    REQUIRE(failures.size() == 1);
    CHECK(failures[0].t == 2);
    CHECK(failures[0].value == 1);
}

TEST_CASE("sharpened bound case split")
{
    // 2 a0 a1 <= a1^2 - a0^2 + 3c on (1,1) and (3,3); the opposite holds on (4,4)
    auto bound_for = [](const Variety& v) {
        for (const auto& c : sharpened_vanishing_claims(v))
            if (c.degree == 0 && c.k == 2 && !c.with_omega)
                return *c.at_most;
        return Rational(-999);
    };
    CHECK(bound_for(Variety(1, 1)) == 2);
    CHECK(bound_for(Variety(3, 3)) == 3);
    CHECK(bound_for(Variety(4, 4)) == 4);
    CHECK(bound_for(Variety(1, 2)) == Rational(7, 3));
}

}
