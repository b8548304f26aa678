#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "scroll/variety.hpp"

namespace scroll {

/// The three homogeneous bundles on the plane the engine knows about.
enum class Kind { O, Omega, Sym2Omega };

int rank(Kind kind) noexcept;
std::string kind_name(Kind kind);

/// (h0, h1, h2) on the projective plane.
using CohTable2 = std::array<std::int64_t, 3>;

namespace p2 {

/// K(d) with K one of O, Omega^1, Sym^2 Omega^1.
struct Sheaf {
    Kind kind = Kind::O;
    int d = 0;

    friend auto operator<=>(const Sheaf&, const Sheaf&) = default;
};

/// Omega^1 dual is Omega^1(3), so Sym^2 Omega^1 dual is Sym^2 Omega^1(6).
int dual_twist(Kind kind, int d);
Sheaf dual(const Sheaf& s);

CohTable2 coh_O(int d);
CohTable2 coh_Omega(int d);
CohTable2 coh_Sym2Omega(int d);
CohTable2 cohomology(const Sheaf& s);

std::int64_t chi(const CohTable2& t);

/// Twists of the line-bundle summands of Sym^a(O(a0) + O(a1)), decreasing.
std::vector<int> sym_decompose(const Variety& variety, int a);

// Sym^2 Omega^1 is not hard-coded: its table comes from the two sequences
//   S1: 0 -> K(d) -> O(d-2)^6 -> O(d) -> 0
//   S2: 0 -> Sym^2 Omega(d) -> K(d) -> Omega(d) -> 0
// together with Serre duality h^i(d) = h^{2-i}(3-d) and chi(d) = 3d(d-3)/2.
// Those alone leave d = 0 and d = 3 undetermined, so the derivation also uses
// that an irreducible homogeneous bundle has at most one nonzero cohomology
// group (Borel-Weil-Bott); that constraint can be switched off.

struct Sym2OmegaConstraints {
    bool homogeneous_vanishing = true;
};

/// Cohomology of the kernel K(d) in S1, fixed by the multiplication maps.
CohTable2 sym2_kernel_cohomology(int d);

/// Tables of Sym^2 Omega(d) compatible with the long exact sequence of S2.
std::vector<CohTable2> sym2omega_sequence_candidates(int d);

/// Runs the derivation; throws AmbiguousConnectingMap unless exactly one table survives.
CohTable2 derive_sym2omega(int d, Sym2OmegaConstraints constraints = {});

inline constexpr int kSym2OmegaTableMin = -12;
inline constexpr int kSym2OmegaTableMax = 15;
/// Generated by tools/gen_sym2omega_table from derive_sym2omega.
extern const std::array<CohTable2, kSym2OmegaTableMax - kSym2OmegaTableMin + 1> kSym2OmegaTable;

/// A formal direct sum of plane sheaves with positive multiplicities, canonical order.
class Sum {
public:
    Sum() = default;
    explicit Sum(Sheaf s, int multiplicity = 1);

    Sum& operator+=(const Sum& other);
    friend Sum operator+(Sum x, const Sum& y) { return x += y; }

    const std::vector<std::pair<Sheaf, int>>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    int rank() const;

    friend bool operator==(const Sum&, const Sum&) = default;
    friend auto operator<=>(const Sum&, const Sum&) = default;

private:
    std::vector<std::pair<Sheaf, int>> terms_;
};

Sum twist(const Sum& g, int d);
CohTable2 cohomology(const Sum& g);
std::string to_string(const Sheaf& s);
std::string to_string(const Sum& g);

}  // namespace p2
}  // namespace scroll
