#include "scroll/ulrich.hpp"

#include "scroll/checked.hpp"
#include "scroll/error.hpp"

namespace scroll {

namespace {

std::int64_t h(int i, const SheafExpr& s, const Variety& v, int da, int db)
{
    return cohomology(twist(s, da, db), v).h[static_cast<std::size_t>(i)];
}

}  // namespace

bool is_initialized(const SheafExpr& s, const Variety& variety)
{
    return h(0, s, variety, -1, 0) == 0 && h(0, s, variety, 0, 0) != 0;
}

UlrichVerdict is_ulrich(const SheafExpr& s, const Variety& variety)
{
    if (s.empty())
        throw PreconditionFailed("Ulrich check of the zero sheaf");
    UlrichVerdict verdict;
    verdict.vanishing_ok = true;
    for (int t = 1; t <= 3 && verdict.vanishing_ok; ++t)
        verdict.vanishing_ok = cohomology(twist(s, -t, 0), variety).is_zero();
    verdict.h0 = h(0, s, variety, 0, 0);
    verdict.expected_h0 = checked_mul(variety.degree(), s.rank());
    verdict.is_initialized = is_initialized(s, variety);
    verdict.is_ulrich = verdict.vanishing_ok;
    if (verdict.is_ulrich && (!verdict.is_initialized || verdict.h0 != verdict.expected_h0))
        throw InconsistentUlrich(to_string(s) + " on " + variety.to_string() + " has vanishing twists but h0 = " +
                                 std::to_string(verdict.h0) + ", expected " + std::to_string(verdict.expected_h0));
    return verdict;
}

bool satisfies_alternate_ulrich(const SheafExpr& s, const Variety& variety)
{
    for (int i = 1; i <= 3; ++i)
        if (h(i, s, variety, -i, 0) != 0)
            return false;
    for (int i = 0; i <= 2; ++i)
        if (h(i, s, variety, -i - 1, 0) != 0)
            return false;
    return true;
}

SheafExpr ulrich_dual(const SheafExpr& s, const Variety& variety) { return twist(dual(s), 2, variety.c() - 3); }

bool is_pq_regular(const SheafExpr& s, const Variety& variety, int p, int q)
{
    const int c = variety.c();
    const SheafExpr f = twist(s, p, q);
    return h(1, f, variety, -1, c - 1) == 0 && h(2, f, variety, -1, c - 2) == 0 && h(3, f, variety, -1, c - 3) == 0 &&
           h(1, f, variety, 0, -1) == 0 && h(2, f, variety, 0, -2) == 0;
}

Regularity regularity(const SheafExpr& s, const Variety& variety, int window)
{
    if (window < 1)
        throw PreconditionFailed("regularity window must be >= 1");
    Regularity r;
    r.window = window;
    for (int p = -window; p <= window; ++p) {
        if (is_pq_regular(s, variety, p, 0)) {
            if (p == -window)
                r.floor_reached = true;
            else
                r.value = p;
            break;
        }
    }
    return r;
}

VeroneseVerdict veronese_verdict(const p2::Sum& g, int d)
{
    if (d <= 0)
        throw PreconditionFailed("Veronese degree must be positive");
    VeroneseVerdict v;
    const auto zero = CohTable2{0, 0, 0};
    v.vanishing_ok = p2::cohomology(p2::twist(g, -d)) == zero && p2::cohomology(p2::twist(g, -2 * d)) == zero;
    v.h0 = p2::cohomology(g)[0];
    v.expected_h0 = checked_mul(checked_mul(d, d), g.rank());
    v.is_ulrich = !g.empty() && v.vanishing_ok && v.h0 == v.expected_h0;
    return v;
}

bool is_ulrich_veronese(const p2::Sum& g, int d) { return veronese_verdict(g, d).is_ulrich; }

}  // namespace scroll
