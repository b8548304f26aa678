#include "scroll/beilinson.hpp"

#include <algorithm>
#include <set>

#include "scroll/checked.hpp"
#include "scroll/error.hpp"
#include "scroll/ulrich.hpp"

namespace scroll {

std::array<CollectionMember, 6> exceptional_collection(const Variety& variety)
{
    const int c = variety.c();
    return {{
        {SheafExpr::O(0, 0), 0, SheafExpr::O(0, 0)},
        {SheafExpr::Om(0, 1), 0, SheafExpr::O(0, -1)},
        {SheafExpr::O(0, -1), 0, SheafExpr::O(0, -2)},
        {SheafExpr::O(-1, c - 1), -2, SheafExpr::O(-1, 1)},
        {SheafExpr::Om(-1, c), -2, SheafExpr::O(-1, 0)},
        {SheafExpr::O(-1, c - 2), -2, SheafExpr::O(-1, -1)},
    }};
}

BeilinsonTable beilinson_table(const SheafExpr& e, const Variety& variety)
{
    BeilinsonTable table{variety, e, {}};
    const auto collection = exceptional_collection(variety);
    for (std::size_t j = 0; j < 6; ++j) {
        const CohTable coh = cohomology(tensor(e, collection[j].bundle), variety);
        for (std::size_t q = 0; q < 6; ++q) {
            const int degree = static_cast<int>(q) + collection[j].shift;
            table.grid[q][j] = degree >= 0 && degree <= 3 ? coh.h[static_cast<std::size_t>(degree)] : 0;
        }
    }
    return table;
}

std::vector<OrthogonalityViolation> check_orthogonality(const Variety& variety)
{
    const auto collection = exceptional_collection(variety);
    std::vector<OrthogonalityViolation> violations;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            const auto& e = collection[static_cast<std::size_t>(i)];
            const CohTable coh = cohomology(tensor(e.bundle, collection[static_cast<std::size_t>(j)].dual_bundle), variety);
            for (int k = 0; k < 6; ++k) {
                const int degree = k + e.shift;
                const std::int64_t value = degree >= 0 && degree <= 3 ? coh.h[static_cast<std::size_t>(degree)] : 0;
                const std::int64_t expected = i == j && j == k ? 1 : 0;
                if (value != expected)
                    violations.push_back({i, j, k, value});
            }
        }
    }
    return violations;
}

ComplexChecks check_complex(const SheafExpr& target, const Variety& variety, const std::vector<ComplexTerm>& terms,
                            const TwistBox& box)
{
    const ChowRing ring(variety);
    ComplexChecks checks;

    std::int64_t rank = 0;
    ChowClass ch;
    for (const auto& term : terms) {
        const bool odd = term.degree % 2 != 0;
        rank = odd ? checked_sub(rank, term.sheaf.rank()) : checked_add(rank, term.sheaf.rank());
        if (odd)
            ch -= ring.chern_character(term.sheaf);
        else
            ch += ring.chern_character(term.sheaf);
    }
    checks.rank_ok = rank == target.rank();
    checks.ch_ok = ch == ring.chern_character(target);

    checks.chi_grid_ok = true;
    for (int j = box.j_min; j <= box.j_max && checks.chi_grid_ok; ++j) {
        for (int k = box.k_min; k <= box.k_max && checks.chi_grid_ok; ++k) {
            std::int64_t sum = 0;
            for (const auto& term : terms) {
                const std::int64_t x = chi(twist(term.sheaf, j, k), variety);
                sum = term.degree % 2 != 0 ? checked_sub(sum, x) : checked_add(sum, x);
            }
            checks.chi_grid_ok = sum == chi(twist(target, j, k), variety);
        }
    }
    return checks;
}

std::string form_name(ReportForm form)
{
    switch (form) {
    case ReportForm::Resolution: return "resolution";
    case ReportForm::LowC: return "low-c resolution";
    case ReportForm::Monad: return "monad";
    }
    return "?";
}

namespace {

struct Cell {
    int q;
    int j;
    const char* name;
};

// Cells allowed to be nonzero for each form, in reporting order.
const std::vector<Cell>& allowed_cells(ReportForm form)
{
    static const std::vector<Cell> resolution = {
        {2, 5, "a0(-1,c-2)"}, {2, 4, "b0(-1,c)"}, {0, 2, "a0(0,-1)"},
        {2, 3, "a0(-1,c-1)"}, {0, 1, "b0(0,1)"},  {0, 0, "a0(0,0)"},
    };
    static const std::vector<Cell> lowc = {
        {3, 5, "a1(-2,c-2)"}, {3, 4, "b1(-2,c)"}, {1, 2, "a1(-1,-1)"}, {3, 3, "a1(-2,c-1)"}, {1, 1, "b1(-1,1)"},
    };
    static const std::vector<Cell> monad = {
        {4, 5, "a2(-3,c-2)"}, {4, 4, "b2(-3,c)"}, {2, 2, "a2(-2,-1)"}, {4, 3, "a2(-3,c-1)"}, {2, 1, "b2(-2,1)"},
    };
    switch (form) {
    case ReportForm::Resolution: return resolution;
    case ReportForm::LowC: return lowc;
    case ReportForm::Monad: return monad;
    }
    return resolution;
}

int table_twist(ReportForm form)
{
    switch (form) {
    case ReportForm::Resolution: return 0;
    case ReportForm::LowC: return -1;
    case ReportForm::Monad: return -2;
    }
    return 0;
}

void require_ulrich(const SheafExpr& e, const Variety& variety)
{
    if (e.empty() || !is_ulrich(e, variety).is_ulrich)
        throw NotUlrich(to_string(e) + " is not Ulrich on " + variety.to_string());
}

ResolutionReport build(ReportForm form, const SheafExpr& e, const Variety& variety, const TwistBox& box)
{
    ResolutionReport report;
    report.form = form;
    report.variety = variety;
    report.sheaf = e;
    report.table_twist = table_twist(form);
    report.table = beilinson_table(twist(e, report.table_twist, 0), variety);

    const auto collection = exceptional_collection(variety);
    const auto& cells = allowed_cells(form);
    std::set<std::pair<int, int>> allowed;
    for (const auto& cell : cells) {
        allowed.insert({cell.q, cell.j});
        const std::int64_t m = report.table.at(cell.q, cell.j);
        report.multiplicities.emplace_back(cell.name, m);
        if (m > 0)
            report.terms.push_back({twist(collection[static_cast<std::size_t>(cell.j)].dual_bundle, -report.table_twist, 0)
                                        .times(static_cast<int>(m)),
                                    cell.q - cell.j});
    }
    std::stable_sort(report.terms.begin(), report.terms.end(),
                     [](const ComplexTerm& x, const ComplexTerm& y) { return x.degree < y.degree; });

    report.pattern_ok = true;
    for (int q = 0; q < 6; ++q)
        for (int j = 0; j < 6; ++j)
            if (!allowed.count({q, j}) && report.table.at(q, j) != 0)
                report.pattern_ok = false;

    report.checks = check_complex(e, variety, report.terms, box);

    const std::string where = form_name(form) + " of " + to_string(e) + " on " + variety.to_string() + ": ";
    if (!report.pattern_ok)
        throw ConsistencyFailure(where + "Beilinson table has nonzero entries outside the expected pattern");
    if (!report.checks.rank_ok)
        throw ConsistencyFailure(where + "rank check failed");
    if (!report.checks.ch_ok)
        throw ConsistencyFailure(where + "Chern character check failed");
    if (!report.checks.chi_grid_ok)
        throw ConsistencyFailure(where + "Euler characteristic grid check failed");
    return report;
}

}  // namespace

ResolutionReport resolution(const SheafExpr& e, const Variety& variety, const TwistBox& box)
{
    require_ulrich(e, variety);
    return build(ReportForm::Resolution, e, variety, box);
}

ResolutionReport resolution_lowc(const SheafExpr& e, const Variety& variety, const TwistBox& box)
{
    if (variety.c() > 3)
        throw PreconditionFailed("low-c resolution needs c <= 3, variety " + variety.to_string() + " has c = " +
                                 std::to_string(variety.c()));
    require_ulrich(e, variety);
    return build(ReportForm::LowC, e, variety, box);
}

ResolutionReport monad(const SheafExpr& e, const Variety& variety, const TwistBox& box)
{
    if (variety.a0() != variety.a1() && variety.c() != 3)
        throw PreconditionFailed("monad needs a0 = a1 or c = 3, variety " + variety.to_string());
    require_ulrich(e, variety);
    const std::int64_t h1 = cohomology(twist(e, -3, variety.c() - 1), variety).h[1];
    if (h1 != 0)
        throw PreconditionFailed("monad needs h1(E(-3)(c-1)) = 0, got " + std::to_string(h1) + " for " + to_string(e));
    return build(ReportForm::Monad, e, variety, box);
}

}  // namespace scroll
