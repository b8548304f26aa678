#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "scroll/chow.hpp"
#include "scroll/sheaf.hpp"
#include "scroll/variety.hpp"

namespace scroll {

/// One member of the full exceptional collection used for the Beilinson table:
/// the bundle paired with E, its shift, and the matching bundle of the dual collection.
struct CollectionMember {
    SheafExpr bundle;
    int shift = 0;
    SheafExpr dual_bundle;
};

/// Index j = 0..5:
///   O, Om(0,1), O(0,-1), O(-1,c-1)[-2], Om(-1,c)[-2], O(-1,c-2)[-2]
/// paired with O, O(0,-1), O(0,-2), O(-1,1), O(-1,0), O(-1,-1).
std::array<CollectionMember, 6> exceptional_collection(const Variety& variety);

/// Grid of h^{q + shift_j}(E (x) bundle_j) for rows q = 0..5 and columns j = 0..5.
/// Cell (q, j) contributes dual_bundle_j with that multiplicity in complex degree q - j.
struct BeilinsonTable {
    Variety variety{1, 1};
    SheafExpr sheaf;
    std::array<std::array<std::int64_t, 6>, 6> grid{};  // grid[q][j]

    std::int64_t at(int q, int j) const { return grid[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)]; }
};

BeilinsonTable beilinson_table(const SheafExpr& e, const Variety& variety);

/// Ext^k(E_i, F_j) = h^{k + shift_i}(bundle_i (x) dual_bundle_j) is 1 when i = j = k and 0 otherwise.
struct OrthogonalityViolation {
    int i = 0;
    int j = 0;
    int k = 0;
    std::int64_t value = 0;
};
std::vector<OrthogonalityViolation> check_orthogonality(const Variety& variety);

struct ComplexTerm {
    SheafExpr sheaf;
    int degree = 0;
};

struct TwistBox {
    int j_min = -4;
    int j_max = 4;
    int k_min = -4;
    int k_max = 4;
};

struct ComplexChecks {
    bool rank_ok = false;
    bool ch_ok = false;
    bool chi_grid_ok = false;
};

/// K-theory accounting of a complex whose only cohomology is `target` in degree 0:
/// alternating sums of ranks, Chern characters and twisted Euler characteristics.
ComplexChecks check_complex(const SheafExpr& target, const Variety& variety, const std::vector<ComplexTerm>& terms,
                            const TwistBox& box);

enum class ReportForm { Resolution, LowC, Monad };
std::string form_name(ReportForm form);

struct ResolutionReport {
    ReportForm form = ReportForm::Resolution;
    Variety variety{1, 1};
    SheafExpr sheaf;
    /// The table is taken of sheaf(-table_twist)(0); terms are twisted back.
    int table_twist = 0;
    BeilinsonTable table;
    std::vector<std::pair<std::string, std::int64_t>> multiplicities;
    std::vector<ComplexTerm> terms;
    bool pattern_ok = false;
    ComplexChecks checks;
};

/// O(-1)(-1)^a -> O(-1)(0)^b + O(0)(-2)^a' -> O(-1)(1)^a'' + O(0)(-1)^b' -> O^a''' -> E.
/// Throws NotUlrich, or ConsistencyFailure naming the failing check.
ResolutionReport resolution(const SheafExpr& e, const Variety& variety, const TwistBox& box = {});

/// Resolution built from the table of E(-1)(0); needs c <= 3.
ResolutionReport resolution_lowc(const SheafExpr& e, const Variety& variety, const TwistBox& box = {});

/// Monad built from the table of E(-2)(0); needs a0 = a1 or c = 3, and h1(E(-3)(c-1)) = 0.
ResolutionReport monad(const SheafExpr& e, const Variety& variety, const TwistBox& box = {});

}  // namespace scroll
