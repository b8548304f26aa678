#pragma once

#include <cstdint>
#include <optional>

#include "scroll/p2.hpp"
#include "scroll/sheaf.hpp"
#include "scroll/variety.hpp"

namespace scroll {

// Ulrich always means with respect to O_X(1)(0).

struct UlrichVerdict {
    bool is_initialized = false;
    bool vanishing_ok = false;
    std::int64_t h0 = 0;
    std::int64_t expected_h0 = 0;  // degree * rank
    bool is_ulrich = false;
};

/// h0(s(-1)(0)) = 0 and h0(s) != 0.
bool is_initialized(const SheafExpr& s, const Variety& variety);

/// All cohomology of s(-t)(0) vanishes for t = 1, 2, 3. Throws InconsistentUlrich if
/// that holds but s is not initialized with h0 = degree * rank.
UlrichVerdict is_ulrich(const SheafExpr& s, const Variety& variety);

/// The other characterization: H^i(s(-i)) = 0 for i > 0 and H^i(s(-i-1)) = 0 for i < 3.
bool satisfies_alternate_ulrich(const SheafExpr& s, const Variety& variety);

/// dual(s) twisted by (2, c-3); Ulrich iff s is.
SheafExpr ulrich_dual(const SheafExpr& s, const Variety& variety);

/// The five vanishings
///   h1(F(p,q)(-1)(c-1)) = h2(F(p,q)(-1)(c-2)) = h3(F(p,q)(-1)(c-3)) = 0,
///   h1(F(p,q)(0)(-1)) = h2(F(p,q)(0)(-2)) = 0.
bool is_pq_regular(const SheafExpr& s, const Variety& variety, int p, int q);

/// Least p in [-window, window] with s (p,0)-regular. A sheaf that is already regular at
/// -window may have regularity -infinity; that is reported as not found with the floor flag set.
struct Regularity {
    std::optional<int> value;
    bool floor_reached = false;
    int window = 0;
};
Regularity regularity(const SheafExpr& s, const Variety& variety, int window);

struct VeroneseVerdict {
    bool vanishing_ok = false;
    std::int64_t h0 = 0;
    std::int64_t expected_h0 = 0;  // d^2 * rank
    bool is_ulrich = false;
};

/// Ulrich on the plane polarized by O(d): g(-d) and g(-2d) acyclic, h0(g) = d^2 rank(g).
VeroneseVerdict veronese_verdict(const p2::Sum& g, int d);
bool is_ulrich_veronese(const p2::Sum& g, int d);

}  // namespace scroll
