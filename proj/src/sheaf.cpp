#include "scroll/sheaf.hpp"

#include <algorithm>

#include "scroll/checked.hpp"
#include "scroll/error.hpp"

namespace scroll {

namespace {

int shift(int x, std::int64_t by)
{
    const std::int64_t v = checked_add(x, by);
    if (v < INT32_MIN || v > INT32_MAX)
        throw OverflowError("twist out of range");
    return static_cast<int>(v);
}

}  // namespace

SheafExpr::SheafExpr(Atom atom, int multiplicity)
{
    if (multiplicity < 0)
        throw PreconditionFailed("negative multiplicity");
    if (multiplicity > 0)
        terms_.emplace_back(atom, multiplicity);
}

SheafExpr& SheafExpr::operator+=(const SheafExpr& other)
{
    for (const auto& [atom, m] : other.terms_) {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), atom,
                                   [](const auto& term, const Atom& key) { return term.first < key; });
        if (it != terms_.end() && it->first == atom)
            it->second = shift(it->second, m);
        else
            terms_.insert(it, {atom, m});
    }
    return *this;
}

SheafExpr SheafExpr::times(int m) const
{
    if (m < 0)
        throw PreconditionFailed("negative multiplicity");
    SheafExpr out;
    if (m == 0)
        return out;
    out.terms_ = terms_;
    for (auto& term : out.terms_)
        term.second = static_cast<int>(checked_mul(term.second, m));
    return out;
}

int SheafExpr::rank() const
{
    std::int64_t r = 0;
    for (const auto& [atom, m] : terms_)
        r = checked_add(r, checked_mul(scroll::rank(atom.kind), m));
    return shift(0, r);
}

std::int64_t CohTable::chi() const
{
    return checked_sub(checked_add(checked_sub(h[0], h[1]), h[2]), h[3]);
}

CohTable& CohTable::operator+=(const CohTable& other)
{
    for (std::size_t i = 0; i < 4; ++i)
        h[i] = checked_add(h[i], other.h[i]);
    return *this;
}

SheafExpr twist(const SheafExpr& s, int da, int db)
{
    SheafExpr out;
    for (const auto& [atom, m] : s.terms())
        out += SheafExpr({atom.kind, shift(atom.a, da), shift(atom.b, db)}, m);
    return out;
}

SheafExpr dual(const SheafExpr& s)
{
    SheafExpr out;
    for (const auto& [atom, m] : s.terms())
        out += SheafExpr({atom.kind, shift(0, -std::int64_t{atom.a}), p2::dual_twist(atom.kind, atom.b)}, m);
    return out;
}

SheafExpr tensor(const SheafExpr& s, const SheafExpr& t)
{
    SheafExpr out;
    for (const auto& [x, mx] : s.terms()) {
        for (const auto& [y, my] : t.terms()) {
            const int m = static_cast<int>(checked_mul(mx, my));
            const int a = shift(x.a, y.a);
            const int b = shift(x.b, y.b);
            if (x.kind == Kind::O || y.kind == Kind::O) {
                const Kind k = x.kind == Kind::O ? y.kind : x.kind;
                out += SheafExpr({k, a, b}, m);
            } else if (x.kind == Kind::Omega && y.kind == Kind::Omega) {
                // Om (x) Om = Sym^2 Om + Lambda^2 Om, and Lambda^2 of the plane cotangent is O(-3)
                out += SheafExpr({Kind::Sym2Omega, a, b}, m);
                out += SheafExpr({Kind::O, a, shift(b, -3)}, m);
            } else {
                throw UnsupportedTensor("tensor " + to_string(x) + " (x) " + to_string(y) +
                                        " leaves the supported closure {O, Om, S2Om}");
            }
        }
    }
    return out;
}

SheafExpr serre_dual_expr(const SheafExpr& s, const Variety& variety)
{
    return twist(dual(s), -2, variety.c() - 3);
}

SheafExpr pullback(const p2::Sum& g, int a, int b)
{
    SheafExpr out;
    for (const auto& [s, m] : g.terms())
        out += SheafExpr({s.kind, a, shift(s.d, b)}, m);
    return out;
}

CohTable cohomology(const Atom& atom, const Variety& variety)
{
    CohTable out;
    if (atom.a >= 0) {
        for (int w : p2::sym_decompose(variety, atom.a)) {
            const CohTable2 t = p2::cohomology(p2::Sheaf{atom.kind, shift(atom.b, w)});
            for (std::size_t i = 0; i < 3; ++i)
                out.h[i] = checked_add(out.h[i], t[i]);
        }
    } else if (atom.a <= -2) {
        // H^i(X, G(a)) = H^{3-i}(P2, Sym^{-a-2} V (x) G^*(c-3))
        const int base = shift(p2::dual_twist(atom.kind, atom.b), variety.c() - 3);
        for (int w : p2::sym_decompose(variety, -atom.a - 2)) {
            const CohTable2 t = p2::cohomology(p2::Sheaf{atom.kind, shift(base, w)});
            for (std::size_t i = 0; i < 3; ++i)
                out.h[3 - i] = checked_add(out.h[3 - i], t[i]);
        }
    }
    return out;
}

CohTable cohomology(const SheafExpr& s, const Variety& variety)
{
    CohTable total;
    for (const auto& [atom, m] : s.terms()) {
        CohTable t = cohomology(atom, variety);
        for (auto& x : t.h)
            x = checked_mul(x, m);
        total += t;
    }
    return total;
}

std::int64_t chi(const SheafExpr& s, const Variety& variety) { return cohomology(s, variety).chi(); }

bool euler_identity_check(const Variety& variety, int a, int b)
{
    const int c = variety.c();
    const std::int64_t lhs = checked_add(chi(SheafExpr::O(shift(a, 1), b), variety),
                                         chi(SheafExpr::O(shift(a, -1), shift(b, c)), variety));
    const std::int64_t rhs = checked_add(chi(SheafExpr::O(a, shift(b, variety.a0())), variety),
                                         chi(SheafExpr::O(a, shift(b, variety.a1())), variety));
    return lhs == rhs;
}

std::string to_string(const Atom& atom)
{
    return kind_name(atom.kind) + "(" + std::to_string(atom.a) + "," + std::to_string(atom.b) + ")";
}

std::string to_string(const SheafExpr& s)
{
    if (s.empty())
        return "0";
    std::string out;
    for (const auto& [atom, m] : s.terms()) {
        if (!out.empty())
            out += " + ";
        if (m != 1)
            out += std::to_string(m) + "*";
        out += to_string(atom);
    }
    return out;
}

}  // namespace scroll
