#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scroll/p2.hpp"
#include "scroll/variety.hpp"

namespace scroll {

/// pi^*(K(b)) (x) O_X(aH), with K the plane bundle of the given kind.
/// F-twists are folded into b since pi^*G (x) O(bF) = pi^*(G(b)).
struct Atom {
    Kind kind = Kind::O;
    int a = 0;
    int b = 0;

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// A split sheaf on X: a finite direct sum of atoms with positive multiplicities,
/// kept sorted by (kind, a, b) with equal atoms merged.
class SheafExpr {
public:
    SheafExpr() = default;
    SheafExpr(Atom atom, int multiplicity = 1);

    static SheafExpr O(int a, int b) { return SheafExpr({Kind::O, a, b}); }
    static SheafExpr Om(int a, int b) { return SheafExpr({Kind::Omega, a, b}); }
    static SheafExpr S2Om(int a, int b) { return SheafExpr({Kind::Sym2Omega, a, b}); }

    SheafExpr& operator+=(const SheafExpr& other);
    friend SheafExpr operator+(SheafExpr x, const SheafExpr& y) { return x += y; }
    /// m copies of the expression.
    SheafExpr times(int m) const;

    const std::vector<std::pair<Atom, int>>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    int rank() const;

    friend bool operator==(const SheafExpr&, const SheafExpr&) = default;
    friend auto operator<=>(const SheafExpr&, const SheafExpr&) = default;

private:
    std::vector<std::pair<Atom, int>> terms_;
};

/// (h0, h1, h2, h3) on X.
struct CohTable {
    std::array<std::int64_t, 4> h{0, 0, 0, 0};

    std::int64_t chi() const;
    bool is_zero() const noexcept { return h == std::array<std::int64_t, 4>{0, 0, 0, 0}; }
    CohTable reversed() const noexcept { return {{h[3], h[2], h[1], h[0]}}; }
    CohTable& operator+=(const CohTable& other);

    friend bool operator==(const CohTable&, const CohTable&) = default;
};

SheafExpr twist(const SheafExpr& s, int da, int db);
SheafExpr dual(const SheafExpr& s);
/// Distributes over sums; Om (x) Om splits as S2Om + O(0,-3). Throws UnsupportedTensor
/// for S2Om against anything but O.
SheafExpr tensor(const SheafExpr& s, const SheafExpr& t);
/// dual(s) twisted by the canonical class O(-2)(c-3).
SheafExpr serre_dual_expr(const SheafExpr& s, const Variety& variety);

/// The pullback of a plane sum twisted by aH + bF.
SheafExpr pullback(const p2::Sum& g, int a, int b);

CohTable cohomology(const Atom& atom, const Variety& variety);
CohTable cohomology(const SheafExpr& s, const Variety& variety);
std::int64_t chi(const SheafExpr& s, const Variety& variety);

/// Euler characteristic additivity across 0 -> O(-1)(c) -> O(0)(a0) + O(0)(a1) -> O(1)(0) -> 0
/// twisted by (a, b).
bool euler_identity_check(const Variety& variety, int a, int b);

/// Grammar: expr := term ("+" term)*, term := [INT "*"] atom,
/// atom := ("O" | "Om" | "S2Om") "(" INT "," INT ")". Whitespace is ignored.
SheafExpr parse_sheaf(std::string_view text);
/// Same shape with one-argument atoms, e.g. "Om(3) + 2*O(0)".
p2::Sum parse_plane_sum(std::string_view text);

std::string to_string(const Atom& atom);
std::string to_string(const SheafExpr& s);

}  // namespace scroll
