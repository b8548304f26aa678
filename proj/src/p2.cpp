#include "scroll/p2.hpp"

#include <algorithm>
#include <optional>

#include "scroll/checked.hpp"
#include "scroll/error.hpp"

namespace scroll {

int rank(Kind kind) noexcept
{
    switch (kind) {
    case Kind::O: return 1;
    case Kind::Omega: return 2;
    case Kind::Sym2Omega: return 3;
    }
    return 0;
}

std::string kind_name(Kind kind)
{
    switch (kind) {
    case Kind::O: return "O";
    case Kind::Omega: return "Om";
    case Kind::Sym2Omega: return "S2Om";
    }
    return "?";
}

namespace p2 {

namespace {

int checked_int(std::int64_t v)
{
    if (v < INT32_MIN || v > INT32_MAX)
        throw OverflowError("twist out of range");
    return static_cast<int>(v);
}

std::int64_t sq_minus_one(int d)
{
    return checked_sub(checked_mul(d, d), 1);
}

CohTable2 reversed(const CohTable2& t) { return {t[2], t[1], t[0]}; }

std::int64_t sym2_chi(int d)
{
    // 3d(d-3)/2; d(d-3) is always even
    return checked_mul(3, checked_mul(d, d - 3) / 2);
}

int nonzero_count(const CohTable2& t)
{
    return static_cast<int>(std::count_if(t.begin(), t.end(), [](std::int64_t x) { return x != 0; }));
}

// The long exact sequence of S2 with unknown ranks r0 of H0(K) -> H0(Om) and
// r1 of H1(K) -> H1(Om); H2(K) -> H2(Om) is onto since H3 vanishes.
struct SequenceFamily {
    CohTable2 k;
    CohTable2 om;

    std::int64_t r0_max() const { return std::min(k[0], om[0]); }
    std::int64_t r1_max() const { return std::min(k[1], om[1]); }

    CohTable2 at(std::int64_t r0, std::int64_t r1) const
    {
        return {k[0] - r0, (om[0] - r0) + (k[1] - r1), (om[1] - r1) + (k[2] - om[2])};
    }

    std::int64_t size() const { return checked_mul(r0_max() + 1, r1_max() + 1); }

    bool contains(const CohTable2& t) const
    {
        const std::int64_t r0 = k[0] - t[0];
        if (r0 < 0 || r0 > r0_max())
            return false;
        for (std::int64_t r1 = 0; r1 <= r1_max(); ++r1)
            if (at(r0, r1) == t)
                return true;
        return false;
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::int64_t r0 = 0; r0 <= r0_max(); ++r0)
            for (std::int64_t r1 = 0; r1 <= r1_max(); ++r1)
                f(at(r0, r1));
    }
};

SequenceFamily family(int d)
{
    SequenceFamily fam{sym2_kernel_cohomology(d), coh_Omega(d)};
    if (fam.k[2] < fam.om[2])
        throw ConsistencyFailure("H2(K) -> H2(Omega) cannot be onto at twist " + std::to_string(d));
    return fam;
}

}  // namespace

int dual_twist(Kind kind, int d)
{
    switch (kind) {
    case Kind::O: return checked_int(-std::int64_t{d});
    case Kind::Omega: return checked_int(3 - std::int64_t{d});
    case Kind::Sym2Omega: return checked_int(6 - std::int64_t{d});
    }
    return 0;
}

Sheaf dual(const Sheaf& s) { return {s.kind, dual_twist(s.kind, s.d)}; }

CohTable2 coh_O(int d)
{
    CohTable2 t{0, 0, 0};
    if (d >= 0)
        t[0] = choose2(std::int64_t{d} + 2);
    if (d <= -3)
        t[2] = choose2(-std::int64_t{d} - 1);
    return t;
}

CohTable2 coh_Omega(int d)
{
    CohTable2 t{0, 0, 0};
    if (d >= 2)
        t[0] = sq_minus_one(d);
    if (d == 0)
        t[1] = 1;
    if (d <= -2)
        t[2] = sq_minus_one(d);
    return t;
}

CohTable2 sym2_kernel_cohomology(int d)
{
    const CohTable2 src = coh_O(d - 2);
    const CohTable2 dst = coh_O(d);
    // Quadrics generate every form of degree >= 2; below that the source has no sections.
    const std::int64_t h0_rank = d >= 2 ? dst[0] : 0;
    return {checked_sub(checked_mul(6, src[0]), h0_rank), checked_sub(dst[0], h0_rank),
            checked_sub(checked_mul(6, src[2]), dst[2])};
}

std::vector<CohTable2> sym2omega_sequence_candidates(int d)
{
    std::vector<CohTable2> out;
    family(d).for_each([&](const CohTable2& t) { out.push_back(t); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CohTable2 derive_sym2omega(int d, Sym2OmegaConstraints constraints)
{
    const int dual_d = checked_int(3 - std::int64_t{d});
    const SequenceFamily here = family(d);
    const SequenceFamily there = family(dual_d);
    const std::int64_t chi = sym2_chi(d);

    std::vector<CohTable2> survivors;
    auto consider = [&](const CohTable2& t) {
        if (t[0] - t[1] + t[2] != chi)
            return;
        if (constraints.homogeneous_vanishing && nonzero_count(t) > 1)
            return;
        if (std::find(survivors.begin(), survivors.end(), t) == survivors.end())
            survivors.push_back(t);
    };
    // enumerate the smaller side, test membership on the other
    if (here.size() <= there.size()) {
        here.for_each([&](const CohTable2& t) {
            if (there.contains(reversed(t)))
                consider(t);
        });
    } else {
        there.for_each([&](const CohTable2& t) {
            if (here.contains(reversed(t)))
                consider(reversed(t));
        });
    }
    if (survivors.empty())
        throw ConsistencyFailure("no Sym2 Omega table is compatible with twist " + std::to_string(d));
    if (survivors.size() > 1)
        throw AmbiguousConnectingMap(d);
    return survivors.front();
}

CohTable2 coh_Sym2Omega(int d)
{
    if (d >= kSym2OmegaTableMin && d <= kSym2OmegaTableMax)
        return kSym2OmegaTable[static_cast<std::size_t>(d - kSym2OmegaTableMin)];
    return derive_sym2omega(d);
}

CohTable2 cohomology(const Sheaf& s)
{
    switch (s.kind) {
    case Kind::O: return coh_O(s.d);
    case Kind::Omega: return coh_Omega(s.d);
    case Kind::Sym2Omega: return coh_Sym2Omega(s.d);
    }
    throw UnsupportedKind("unknown sheaf kind");
}

std::int64_t chi(const CohTable2& t) { return checked_add(checked_sub(t[0], t[1]), t[2]); }

std::vector<int> sym_decompose(const Variety& variety, int a)
{
    if (a < 0)
        throw PreconditionFailed("sym_decompose needs a >= 0");
    std::vector<int> twists;
    twists.reserve(static_cast<std::size_t>(a) + 1);
    for (int i = 0; i <= a; ++i)
        twists.push_back(checked_int(checked_add(checked_mul(i, variety.a0()), checked_mul(a - i, variety.a1()))));
    return twists;
}

Sum::Sum(Sheaf s, int multiplicity)
{
    if (multiplicity < 0)
        throw PreconditionFailed("negative multiplicity");
    if (multiplicity > 0)
        terms_.emplace_back(s, multiplicity);
}

Sum& Sum::operator+=(const Sum& other)
{
    for (const auto& [s, m] : other.terms_) {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                                   [](const auto& term, const Sheaf& key) { return term.first < key; });
        if (it != terms_.end() && it->first == s)
            it->second = checked_int(checked_add(it->second, m));
        else
            terms_.insert(it, {s, m});
    }
    return *this;
}

int Sum::rank() const
{
    std::int64_t r = 0;
    for (const auto& [s, m] : terms_)
        r = checked_add(r, checked_mul(scroll::rank(s.kind), m));
    return checked_int(r);
}

Sum twist(const Sum& g, int d)
{
    Sum out;
    for (const auto& [s, m] : g.terms())
        out += Sum({s.kind, checked_int(checked_add(s.d, d))}, m);
    return out;
}

CohTable2 cohomology(const Sum& g)
{
    CohTable2 total{0, 0, 0};
    for (const auto& [s, m] : g.terms()) {
        const CohTable2 t = cohomology(s);
        for (std::size_t i = 0; i < 3; ++i)
            total[i] = checked_add(total[i], checked_mul(m, t[i]));
    }
    return total;
}

std::string to_string(const Sheaf& s) { return kind_name(s.kind) + "(" + std::to_string(s.d) + ")"; }

std::string to_string(const Sum& g)
{
    if (g.empty())
        return "0";
    std::string out;
    for (const auto& [s, m] : g.terms()) {
        if (!out.empty())
            out += " + ";
        if (m != 1)
            out += std::to_string(m) + "*";
        out += to_string(s);
    }
    return out;
}

}  // namespace p2
}  // namespace scroll
