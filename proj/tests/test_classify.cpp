#include <doctest.h>

#include <set>

#include "scroll/classify.hpp"
#include "scroll/report.hpp"
#include "scroll/ulrich.hpp"

using namespace scroll;

namespace {

std::set<std::tuple<int, int, int, int>> tuples(const std::vector<Hit>& hits)
{
    std::set<std::tuple<int, int, int, int>> out;
    for (const auto& h : hits)
        out.insert({h.variety.a0(), h.variety.a1(), h.a, h.b});
    return out;
}

const SearchBox kBox{{1, 3}, {1, 3}, {-3, 3}, {-9, 9}, 3};

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("search boxes")
{
    CHECK(varieties_in(kBox).size() == 6);
    CHECK(varieties_in({{0, 2}, {1, 1}, {}, {}, 1}).size() == 1);
    CHECK(varieties_in({{1, 0}, {1, 3}, {}, {}, 1}).empty());
}

TEST_CASE("line bundles")
{
    const auto r = search_line_bundles(kBox);
    CHECK(tuples(r.hits) == std::set<std::tuple<int, int, int, int>>{{1, 1, 0, 1}, {1, 1, 2, -2}});
    CHECK(r.agreement);
    CHECK(r.counterexamples.empty());
    CHECK(r.checked == 6 * 7 * 19);

    const auto without = search_line_bundles({{1, 3}, {2, 3}, {-3, 3}, {-9, 9}, 1});
    CHECK(without.hits.empty());
    CHECK(without.agreement);

    const auto degenerate = search_line_bundles({{1, 3}, {1, 3}, {0, 0}, {0, 0}, 1});
    CHECK(degenerate.hits.empty());
    CHECK_FALSE(is_ulrich(SheafExpr::O(0, 0), Variety(1, 1)).is_ulrich);
}

TEST_CASE("cotangent twists")
{
    const auto r = search_omega_twists(kBox);
    CHECK(tuples(r.hits) == std::set<std::tuple<int, int, int, int>>{{2, 2, 0, 5}, {1, 1, 1, 1}, {2, 2, 2, -1}});
    CHECK(r.agreement);
    const auto only12 = search_omega_twists({{1, 1}, {2, 2}, {-3, 3}, {-9, 9}, 2});
    CHECK(only12.hits.empty());
}

TEST_CASE("empty boxes are vacuous")
{
    const SearchBox empty{{1, 0}, {1, 0}, {0, -1}, {0, -1}, 1};
    const auto r = search_line_bundles(empty);
    CHECK(r.vacuous);
    CHECK(r.agreement);
    CHECK(r.checked == 0);
}

TEST_CASE("hits are closed under the Ulrich dual")
{
    for (const auto& r : {search_line_bundles(kBox), search_omega_twists(kBox)}) {
        const auto found = tuples(r.hits);
        for (const auto& h : r.hits) {
            const auto d = ulrich_dual(h.sheaf, h.variety);
            const auto& [atom, m] = d.terms().front();
            CHECK(found.count({h.variety.a0(), h.variety.a1(), atom.a, atom.b}) == 1);
        }
    }
}

TEST_CASE("results do not depend on the worker count")
{
    const auto one = search_omega_twists(kBox, 1);
    const auto four = search_omega_twists(kBox, 4);
    CHECK(to_json(one).dump() == to_json(four).dump());
    const auto family = default_plane_family(3, 2);
    CHECK(to_json(classify_pullbacks(Variety(2, 2), family, {-6, 6}, {0, 2}, 1)).dump() ==
          to_json(classify_pullbacks(Variety(2, 2), family, {-6, 6}, {0, 2}, 3)).dump());
}

TEST_CASE("default plane family")
{
    const auto family = default_plane_family(6, 3);
    // 13 line bundles, 13 cotangent twists; rank <= 3 multisets
    // O only: C(13,1) + C(14,2) + C(15,3); one Om with at most one O: 13 + 13*13
    CHECK(family.size() == 13 + 91 + 455 + 13 + 169);
    CHECK(std::is_sorted(family.begin(), family.end()));
    for (const auto& g : family)
        CHECK(g.rank() <= 3);
    CHECK(default_plane_family(6, 3, true).size() == family.size() + 13);
}

TEST_CASE("pullbacks of Om(3) on (2,2)")
{
    const Variety v(2, 2);
    const std::vector<p2::Sum> family{p2::Sum({Kind::Omega, 3})};
    const auto r = classify_pullbacks(v, family, {-9, 9});
    std::set<std::pair<int, int>> ab;
    for (const auto& h : r.hits)
        ab.insert({h.a, h.b});
    CHECK(ab == std::set<std::pair<int, int>>{{0, 2}, {2, -4}});
    CHECK(r.agreement);
    CHECK(pullback(family[0], 0, 2) == SheafExpr::Om(0, 5));
    CHECK(pullback(family[0], 2, -4) == SheafExpr::Om(2, -1));
}

TEST_CASE("pullbacks of O on (1,1)")
{
    const auto r = classify_pullbacks(Variety(1, 1), {p2::Sum({Kind::O, 0})}, {-9, 9});
    std::set<std::pair<int, int>> ab;
    for (const auto& h : r.hits)
        ab.insert({h.a, h.b});
    CHECK(ab == std::set<std::pair<int, int>>{{0, 1}, {2, -2}});
    CHECK(r.agreement);
}

TEST_CASE("no rank one pullbacks on (1,2)")
{
    std::vector<p2::Sum> family;
    for (int d = -6; d <= 6; ++d)
        family.push_back(p2::Sum({Kind::O, d}));
    const auto r = classify_pullbacks(Variety(1, 2), family, {-12, 12});
    CHECK(r.hits.empty());
    CHECK(r.predicted.empty());
}

TEST_CASE("pullback biconditional on the default family")
{
    const auto family = default_plane_family(4, 3);
    for (int a0 = 1; a0 <= 3; ++a0)
        for (int a1 = a0; a1 <= 3; ++a1) {
            const auto r = classify_pullbacks(Variety(a0, a1), family, {-9, 9}, {-3, 3});
            CAPTURE(a0);
            CAPTURE(a1);
            CHECK(r.agreement);
            for (const auto& h : r.hits)
                CHECK((h.a >= 0 && h.a <= 2));
        }
}

TEST_CASE("Ulrich witnesses")
{
    const auto family = default_plane_family(6, 3, true);
    for (const auto& v : {Variety(1, 1), Variety(1, 2), Variety(2, 2), Variety(3, 3)}) {
        CAPTURE(v.to_string());
        const auto w = ulrich_witness(v, family, {-12, 12});
        REQUIRE(w);
        CHECK(is_ulrich(w->sheaf, v).is_ulrich);
    }
    // the split family has nothing of rank <= 3 on these
    for (const auto& v : {Variety(1, 3), Variety(2, 3)})
        CHECK_FALSE(ulrich_witness(v, family, {-12, 12}));
}

}
