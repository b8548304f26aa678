#include "scroll/classify.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "scroll/parallel.hpp"
#include "scroll/ulrich.hpp"

namespace scroll {

std::vector<Variety> varieties_in(const SearchBox& box)
{
    std::vector<Variety> out;
    for (int a0 = std::max(1, box.a0.lo); a0 <= box.a0.hi; ++a0)
        for (int a1 = std::max(a0, box.a1.lo); a1 <= box.a1.hi; ++a1)
            out.emplace_back(a0, a1);
    return out;
}

namespace {

void finish(ClassificationReport& report)
{
    std::sort(report.hits.begin(), report.hits.end());
    std::sort(report.predicted.begin(), report.predicted.end());
    report.counterexamples.clear();
    std::set_symmetric_difference(report.hits.begin(), report.hits.end(), report.predicted.begin(),
                                  report.predicted.end(), std::back_inserter(report.counterexamples));
    report.agreement = report.counterexamples.empty();
    report.vacuous = report.checked == 0;
}

ClassificationReport search_atoms(std::string name, Kind kind, const SearchBox& box, const std::vector<std::tuple<int, int, int, int>>& known,
                                  int workers)
{
    std::vector<Hit> tuples;
    if (!box.a.empty() && !box.b.empty())
        for (const Variety& v : varieties_in(box))
            for (int a = box.a.lo; a <= box.a.hi; ++a)
                for (int b = box.b.lo; b <= box.b.hi; ++b)
                    tuples.push_back({v, SheafExpr({kind, a, b}), a, b, std::nullopt});

    const auto ulrich = parallel_map<char>(tuples.size(), workers, [&](std::size_t i) {
        return static_cast<char>(is_ulrich(tuples[i].sheaf, tuples[i].variety).is_ulrich);
    });

    ClassificationReport report;
    report.name = std::move(name);
    report.checked = tuples.size();
    for (std::size_t i = 0; i < tuples.size(); ++i)
        if (ulrich[i])
            report.hits.push_back(tuples[i]);
    for (const auto& [a0, a1, a, b] : known) {
        if (box.a0.contains(a0) && box.a1.contains(a1) && box.a.contains(a) && box.b.contains(b))
            report.predicted.push_back({Variety(a0, a1), SheafExpr({kind, a, b}), a, b, std::nullopt});
    }
    finish(report);
    return report;
}

}  // namespace

ClassificationReport search_line_bundles(const SearchBox& box, int workers)
{
    return search_atoms("line-bundles", Kind::O, box, {{1, 1, 0, 1}, {1, 1, 2, -2}}, workers);
}

ClassificationReport search_omega_twists(const SearchBox& box, int workers)
{
    return search_atoms("omega-twists", Kind::Omega, box, {{2, 2, 0, 5}, {1, 1, 1, 1}, {2, 2, 2, -1}}, workers);
}

std::vector<p2::Sum> default_plane_family(int twist_bound, int rank_cap, bool include_sym2)
{
    std::vector<p2::Sheaf> generators;
    std::vector<Kind> kinds = {Kind::O, Kind::Omega};
    if (include_sym2)
        kinds.push_back(Kind::Sym2Omega);
    for (Kind k : kinds)
        for (int d = -twist_bound; d <= twist_bound; ++d)
            generators.push_back({k, d});

    std::vector<p2::Sum> out;
    // multisets of generators, indices nondecreasing
    std::function<void(std::size_t, const p2::Sum&, int)> extend = [&](std::size_t first, const p2::Sum& partial, int room) {
        for (std::size_t i = first; i < generators.size(); ++i) {
            const int r = rank(generators[i].kind);
            if (r > room)
                continue;
            const p2::Sum next = partial + p2::Sum(generators[i]);
            out.push_back(next);
            extend(i, next, room - r);
        }
    };
    extend(0, p2::Sum{}, rank_cap);
    std::sort(out.begin(), out.end());
    return out;
}

bool pullback_predicate(const Variety& variety, const p2::Sum& g, int a, int b)
{
    const int a0 = variety.a0();
    const int c = variety.c();
    const p2::Sum folded = p2::twist(g, b);
    switch (a) {
    case 0: return variety.a0() == variety.a1() && is_ulrich_veronese(p2::twist(folded, a0 - c), a0);
    case 1: return is_ulrich_veronese(p2::twist(folded, c), c);
    case 2: return variety.a0() == variety.a1() && is_ulrich_veronese(p2::twist(folded, 2 * a0), a0);
    default: return false;
    }
}

ClassificationReport classify_pullbacks(const Variety& variety, const std::vector<p2::Sum>& family, IntRange b_range,
                                        IntRange a_range, int workers)
{
    std::vector<Hit> tuples;
    for (const auto& g : family) {
        if (g.empty())
            continue;
        for (int a = a_range.lo; a <= a_range.hi; ++a)
            for (int b = b_range.lo; b <= b_range.hi; ++b)
                tuples.push_back({variety, pullback(g, a, b), a, b, g});
    }
    struct Verdict {
        bool direct = false;
        bool predicted = false;
    };
    const auto verdicts = parallel_map<Verdict>(tuples.size(), workers, [&](std::size_t i) {
        const Hit& t = tuples[i];
        return Verdict{is_ulrich(t.sheaf, variety).is_ulrich, pullback_predicate(variety, *t.base, t.a, t.b)};
    });

    ClassificationReport report;
    report.name = "pullbacks";
    report.checked = tuples.size();
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        if (verdicts[i].direct)
            report.hits.push_back(tuples[i]);
        if (verdicts[i].predicted)
            report.predicted.push_back(tuples[i]);
    }
    finish(report);
    return report;
}

std::optional<Hit> ulrich_witness(const Variety& variety, const std::vector<p2::Sum>& family, IntRange b_range)
{
    for (const auto& g : family)
        for (int a = 0; a <= 2; ++a)
            for (int b = b_range.lo; b <= b_range.hi; ++b) {
                SheafExpr s = pullback(g, a, b);
                if (!s.empty() && is_ulrich(s, variety).is_ulrich)
                    return Hit{variety, std::move(s), a, b, g};
            }
    return std::nullopt;
}

}  // namespace scroll
