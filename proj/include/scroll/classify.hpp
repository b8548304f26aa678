#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scroll/p2.hpp"
#include "scroll/sheaf.hpp"
#include "scroll/variety.hpp"

namespace scroll {

struct IntRange {
    int lo = 0;
    int hi = -1;

    bool empty() const noexcept { return hi < lo; }
    bool contains(int x) const noexcept { return lo <= x && x <= hi; }
};

struct SearchBox {
    IntRange a0;
    IntRange a1;
    IntRange a;
    IntRange b;
    int rank_cap = 3;
};

/// Every Variety(a0, a1) in the box with 1 <= a0 <= a1.
std::vector<Variety> varieties_in(const SearchBox& box);

/// A verified (or predicted) Ulrich sheaf. For pullback searches `base` is the plane sum
/// g and the sheaf is pi^*g twisted by (a, b); otherwise a, b are the atom's twists.
struct Hit {
    Variety variety{1, 1};
    SheafExpr sheaf;
    int a = 0;
    int b = 0;
    std::optional<p2::Sum> base;

    friend bool operator==(const Hit&, const Hit&) = default;
    friend auto operator<=>(const Hit&, const Hit&) = default;
};

struct ClassificationReport {
    std::string name;
    std::vector<Hit> hits;
    std::vector<Hit> predicted;
    std::vector<Hit> counterexamples;  // symmetric difference of hits and predicted
    bool agreement = false;
    bool vacuous = false;  // nothing was searched
    std::size_t checked = 0;
};

/// O(a,b) over the box against the two line bundles O(0,1), O(2,-2) on (1,1).
ClassificationReport search_line_bundles(const SearchBox& box, int workers = 1);

/// Om(a,b) over the box against Om(0,5), Om(2,-1) on (2,2) and Om(1,1) on (1,1).
ClassificationReport search_omega_twists(const SearchBox& box, int workers = 1);

/// All sums of O(d), Om(d) (and S2Om(d) when asked) with |d| <= twist_bound and total rank <= rank_cap.
std::vector<p2::Sum> default_plane_family(int twist_bound = 6, int rank_cap = 3, bool include_sym2 = false);

/// pi^*g (a)(b) is Ulrich iff, with F = g(b):
///   a = 0, a0 = a1 and F(a0 - c) is Ulrich on (P2, a0 H), or
///   a = 1 and F(c) is Ulrich on (P2, c H), or
///   a = 2, a0 = a1 and F(2 a0) is Ulrich on (P2, a0 H).
/// Equivalently g' = F twisted to the required b is Ulrich with b = c - a0, -c, -2a0.
bool pullback_predicate(const Variety& variety, const p2::Sum& g, int a, int b);

/// Direct Ulrich checks of pi^*g (a)(b) on X against pullback_predicate, tuple by tuple.
ClassificationReport classify_pullbacks(const Variety& variety, const std::vector<p2::Sum>& family, IntRange b_range,
                                        IntRange a_range = {0, 2}, int workers = 1);

/// First Ulrich pullback found in the family, if any.
std::optional<Hit> ulrich_witness(const Variety& variety, const std::vector<p2::Sum>& family, IntRange b_range);

}  // namespace scroll
