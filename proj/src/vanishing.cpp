#include "scroll/vanishing.hpp"

namespace scroll {

bool VanishingClaim::applies(int t) const
{
    return (at_least && Rational(t) >= *at_least) || (at_most && Rational(t) <= *at_most);
}

std::string VanishingClaim::statement() const
{
    std::string out = "h" + std::to_string(degree) + "(E" + (with_omega ? " x Om" : "") + "<" + std::to_string(-k) +
                      "><t>)=0 for";
    if (at_least)
        out += " t>=" + at_least->str();
    if (at_least && at_most)
        out += " and";
    if (at_most)
        out += " t<=" + at_most->str();
    return out;
}

namespace {

VanishingClaim above(int degree, bool omega, int k, Rational bound) { return {degree, omega, k, bound, std::nullopt}; }
VanishingClaim below(int degree, bool omega, int k, Rational bound) { return {degree, omega, k, std::nullopt, bound}; }

}  // namespace

std::vector<VanishingClaim> ulrich_vanishing_claims(const Variety& v)
{
    const int a0 = v.a0();
    const int c = v.c();
    std::vector<VanishingClaim> out;
    // top cohomology
    for (int k = 0; k <= 3; ++k) {
        out.push_back(above(3, false, k, (k - 3) * a0));
        out.push_back(above(3, true, k, 2 + (k - 3) * a0));
    }
    // h2
    for (int k = 0; k <= 2; ++k) {
        out.push_back(above(2, false, k, (k - 2) * a0));
        out.push_back(above(2, true, k, 2 + (k - 2) * a0));
    }
    out.push_back({2, false, 3, Rational(c), Rational(0)});
    out.push_back({2, true, 3, Rational(2 + c), Rational(1)});
    // h1
    for (int k = 1; k <= 3; ++k) {
        if (k != 3)
            out.push_back(below(1, false, k, (k - 2) * c));
        if (k != 1)
            out.push_back(below(1, true, k, (k - 2) * a0 + 1));
    }
    out.push_back(below(1, false, 3, a0));
    for (int k = 0; k <= 1; ++k) {
        out.push_back(above(1, false, k, (k - 1) * a0));
        out.push_back(above(1, true, k, 2 + (k - 1) * a0));
    }
    // h0
    for (int k = 1; k <= 4; ++k) {
        out.push_back(below(0, false, k, (k - 1) * a0));
        out.push_back(below(0, true, k, 1 + (k - 1) * a0));
    }
    out.push_back(below(0, true, 0, 1 - c));
    return out;
}

std::vector<VanishingClaim> sharpened_vanishing_claims(const Variety& v)
{
    const Rational a0 = v.a0();
    const Rational a1 = v.a1();
    const Rational c = v.c();
    const Rational a0a1 = a0 * a1;
    const bool balanced = 2 * a0a1 <= a1 * a1 - a0 * a0 + 3 * c;

    std::vector<VanishingClaim> out;
    for (int k = 3; k <= 4; ++k) {
        const Rational bound = (((2 * k - 3) * c + 3) * c - 2 * (k - 1) * a0a1) / (2 * c);
        out.push_back(below(0, false, k, bound));
        out.push_back(below(0, true, k, bound + 1));
    }
    if (balanced) {
        const Rational bound = (c * (c + 3) - 2 * a0a1) / (2 * c);
        out.push_back(below(0, false, 2, bound));
        out.push_back(below(0, true, 2, bound + 1));
    } else {
        out.push_back(below(0, false, 2, a0));
        out.push_back(below(0, true, 2, a0 + 1));
    }
    out.push_back(below(0, false, 1, 0));
    out.push_back(below(0, true, 1, 1));

    for (int k = 0; k <= 1; ++k) {
        const Rational bound = (2 * (3 - k) * a0a1 - ((5 - 2 * k) * c + 3) * c) / (2 * c);
        out.push_back(above(3, false, k, bound));
        out.push_back(above(3, true, k, bound + 2));
    }
    if (balanced) {
        const Rational bound = (2 * a0a1 - c * (c + 3)) / (2 * c);
        out.push_back(above(3, false, 2, bound));
        out.push_back(above(3, true, 2, bound + 2));
    } else {
        out.push_back(above(3, false, 2, -a0));
        out.push_back(above(3, true, 2, 2 - a0));
    }
    out.push_back(above(3, false, 3, 0));
    out.push_back(above(3, true, 3, 2));
    return out;
}

std::vector<VanishingFailure> check_vanishing(const SheafExpr& e, const Variety& variety,
                                              const std::vector<VanishingClaim>& claims, int t_min, int t_max)
{
    const SheafExpr e_omega = tensor(e, SheafExpr::Om(0, 0));
    std::vector<VanishingFailure> failures;
    for (const auto& claim : claims) {
        const SheafExpr& base = claim.with_omega ? e_omega : e;
        for (int t = t_min; t <= t_max; ++t) {
            if (!claim.applies(t))
                continue;
            const auto value = cohomology(twist(base, -claim.k, t), variety).h[static_cast<std::size_t>(claim.degree)];
            if (value != 0)
                failures.push_back({claim.statement(), t, value});
        }
    }
    return failures;
}

std::pair<int, int> default_sweep_range(const Variety& variety)
{
    return {-3 * variety.c() - 6, 3 * variety.c() + 6};
}

}  // namespace scroll
