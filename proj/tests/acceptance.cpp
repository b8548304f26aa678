// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact (zero tolerance).
// Usage: acceptance [--expect-fail N]...  exits 0 iff the failing criteria are exactly the expected ones.
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "oracles.hpp"
#include "scroll/beilinson.hpp"
#include "scroll/chow.hpp"
#include "scroll/classify.hpp"
#include "scroll/error.hpp"
#include "scroll/suite.hpp"
#include "scroll/ulrich.hpp"
#include "scroll/vanishing.hpp"

using namespace scroll;

namespace {

using Tuple = std::tuple<int, int, int, int>;

std::set<Tuple> tuples(const std::vector<Hit>& hits)
{
    std::set<Tuple> out;
    for (const auto& h : hits)
        out.insert({h.variety.a0(), h.variety.a1(), h.a, h.b});
    return out;
}

std::string show(const std::set<Tuple>& s)
{
    std::ostringstream out;
    out << "{";
    for (const auto& [a0, a1, a, b] : s)
        out << "(" << a0 << "," << a1 << "," << a << "," << b << ")";
    out << "}";
    return out.str();
}

// Oracle cohomology of a sheaf expression, tensoring by hand where the engine's tensor would be used.
oracle::Table4 oracle_cohomology(const SheafExpr& s, const Variety& v)
{
    oracle::Table4 out{0, 0, 0, 0};
    for (const auto& [atom, m] : s.terms()) {
        const auto t = oracle::threefold(v.a0(), v.a1(), static_cast<int>(atom.kind), atom.a, atom.b);
        for (std::size_t i = 0; i < 4; ++i)
            out[i] += m * t[i];
    }
    return out;
}

// Om(a,b) (x) Om(a',b') = S2Om(a+a', b+b') + O(a+a', b+b'-3); everything else twists
SheafExpr oracle_tensor(const SheafExpr& s, const SheafExpr& t)
{
    SheafExpr out;
    for (const auto& [x, m] : s.terms())
        for (const auto& [y, n] : t.terms()) {
            const int a = x.a + y.a;
            const int b = x.b + y.b;
            SheafExpr piece;
            if (x.kind == Kind::O)
                piece = SheafExpr({y.kind, a, b});
            else if (y.kind == Kind::O)
                piece = SheafExpr({x.kind, a, b});
            else if (x.kind == Kind::Omega && y.kind == Kind::Omega)
                piece = SheafExpr::S2Om(a, b) + SheafExpr::O(a, b - 3);
            else
                throw UnsupportedTensor("oracle tensor out of closure");
            out += piece.times(m * n);
        }
    return out;
}

struct Criterion {
    int id;
    std::string name;
    std::function<std::pair<bool, std::string>()> run;
};

const SearchBox kBox{{1, 4}, {1, 4}, {-4, 4}, {-12, 12}, 1};

std::vector<FoundBundle> g_bundles;

std::pair<bool, std::string> criterion_lines()
{
    const auto start = std::chrono::steady_clock::now();
    const auto r = search_line_bundles(kBox, 1);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::set<Tuple> expected{{1, 1, 0, 1}, {1, 1, 2, -2}};
    const auto got = tuples(r.hits);
    std::ostringstream d;
    d << "hits " << show(got) << " over " << r.checked << " tuples in " << seconds << " s (limit 10 s)";
    return {got == expected && r.agreement && seconds < 10.0, d.str()};
}

std::pair<bool, std::string> criterion_omega()
{
    const auto r = search_omega_twists(kBox, 1);
    const std::set<Tuple> expected{{2, 2, 0, 5}, {1, 1, 1, 1}, {2, 2, 2, -1}};
    const auto got = tuples(r.hits);
    return {got == expected && r.agreement, "hits " + show(got) + " over " + std::to_string(r.checked) + " tuples"};
}

std::pair<bool, std::string> criterion_pullbacks()
{
    const auto family = default_plane_family(6, 3, false);
    std::size_t checked = 0;
    std::size_t counterexamples = 0;
    std::size_t hits = 0;
    std::size_t outside = 0;
    std::vector<ClassificationReport> reports;
    for (const auto& v : varieties_in({{1, 3}, {1, 3}, {}, {}, 3})) {
        auto r = classify_pullbacks(v, family, {-12, 12}, {0, 2});
        checked += r.checked;
        counterexamples += r.counterexamples.size();
        hits += r.hits.size();
        // sanity sweep: no hits with a outside {0,1,2}
        for (int a : {-3, -2, -1, 3}) {
            const auto s = classify_pullbacks(v, family, {-12, 12}, {a, a});
            outside += s.hits.size();
            counterexamples += s.counterexamples.size();
        }
        reports.push_back(std::move(r));
    }
    reports.push_back(search_line_bundles(kBox));
    reports.push_back(search_omega_twists(kBox));
    g_bundles = collect_bundles(reports);
    std::ostringstream d;
    d << checked << " tuples, " << hits << " direct hits, " << counterexamples << " counterexamples, " << outside
      << " hits with a outside {0,1,2}";
    return {checked > 0 && counterexamples == 0 && outside == 0, d.str()};
}

std::pair<bool, std::string> criterion_resolution()
{
    std::size_t verified = 0;
    std::size_t skipped = 0;
    std::string failure;
    for (const auto& b : g_bundles) {
        try {
            const auto r = resolution(b.sheaf, b.variety, {});
            // grid cells recomputed by the oracle
            const auto col = exceptional_collection(b.variety);
            for (int j = 0; j < 6 && failure.empty(); ++j) {
                const auto& m = col[static_cast<std::size_t>(j)];
                const auto h = oracle_cohomology(oracle_tensor(b.sheaf, m.bundle), b.variety);
                for (int q = 0; q < 6; ++q) {
                    const int deg = q + m.shift;
                    const std::int64_t want = deg >= 0 && deg <= 3 ? h[static_cast<std::size_t>(deg)] : 0;
                    if (r.table.at(q, j) != want)
                        failure = to_string(b.sheaf) + " cell (" + std::to_string(q) + "," + std::to_string(j) + ")";
                }
            }
            // chi grid recomputed by the oracle
            for (int j = -4; j <= 4; ++j)
                for (int k = -4; k <= 4; ++k) {
                    auto chi_of = [&](const SheafExpr& s) {
                        const auto h = oracle_cohomology(twist(s, j, k), b.variety);
                        return h[0] - h[1] + h[2] - h[3];
                    };
                    std::int64_t sum = 0;
                    for (const auto& t : r.terms)
                        sum += (t.degree % 2 == 0 ? 1 : -1) * chi_of(t.sheaf);
                    if (sum != chi_of(b.sheaf) && failure.empty())
                        failure = to_string(b.sheaf) + " chi grid at (" + std::to_string(j) + "," + std::to_string(k) + ")";
                }
            if (!(r.checks.rank_ok && r.checks.ch_ok && r.checks.chi_grid_ok && r.pattern_ok) && failure.empty())
                failure = to_string(b.sheaf) + " engine checks";
            ++verified;
        } catch (const UnsupportedTensor&) {
            ++skipped;
        } catch (const Error& e) {
            if (failure.empty())
                failure = e.what();
        }
    }
    auto mult = [](const SheafExpr& e) {
        std::vector<std::int64_t> out;
        for (const auto& [n, m] : resolution(e, Variety(1, 1)).multiplicities)
            out.push_back(m);
        return out;
    };
    const bool first = mult(SheafExpr::O(0, 1)) == std::vector<std::int64_t>{0, 0, 1, 0, 3, 3};
    const bool second = mult(SheafExpr::O(2, -2)) == std::vector<std::int64_t>{0, 0, 0, 2, 0, 3};
    std::ostringstream d;
    d << verified << " resolutions verified, " << skipped << " outside closure; O(0,1) multiplicities "
      << (first ? "(0,0,1,0,3,3)" : "WRONG") << ", O(2,-2) " << (second ? "(0,0,0,2,0,3)" : "WRONG");
    if (!failure.empty())
        d << "; failure: " << failure;
    return {verified > 0 && failure.empty() && first && second, d.str()};
}

std::pair<bool, std::string> criterion_orthogonality()
{
    std::size_t pairs = 0;
    std::string failure;
    for (const auto& v : varieties_in({{1, 3}, {1, 3}, {}, {}, 1})) {
        if (!check_orthogonality(v).empty())
            failure = "engine on " + v.to_string();
        const auto col = exceptional_collection(v);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                ++pairs;
                const auto& ei = col[static_cast<std::size_t>(i)];
                const auto h = oracle_cohomology(oracle_tensor(ei.bundle, col[static_cast<std::size_t>(j)].dual_bundle), v);
                for (int k = 0; k <= 5; ++k) {
                    const int deg = k + ei.shift;
                    const std::int64_t got = deg >= 0 && deg <= 3 ? h[static_cast<std::size_t>(deg)] : 0;
                    const std::int64_t want = (i == j && j == k) ? 1 : 0;
                    if (got != want && failure.empty())
                        failure = v.to_string() + " i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
                }
            }
    }
    return {failure.empty(), std::to_string(pairs) + " pairs, k in [0,5]" + (failure.empty() ? "" : "; failure: " + failure)};
}

std::pair<bool, std::string> sweep(bool sharpened)
{
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::vector<std::string> failures;
    for (const auto& b : g_bundles) {
        const auto [lo, hi] = default_sweep_range(b.variety);
        const auto claims = sharpened ? sharpened_vanishing_claims(b.variety) : ulrich_vanishing_claims(b.variety);
        try {
            for (const auto& f : check_vanishing(b.sheaf, b.variety, claims, lo, hi))
                failures.push_back(to_string(b.sheaf) + " on " + b.variety.to_string() + ": " + f.statement + " fails at t=" +
                                   std::to_string(f.t) + " (h=" + std::to_string(f.value) + ")");
            ++checked;
        } catch (const UnsupportedTensor&) {
            ++skipped;
        }
    }
    std::ostringstream d;
    d << checked << " bundles swept, " << failures.size() << " violations";
    if (!failures.empty())
        d << "; first: " << failures.front();
    return {checked > 0 && failures.empty(), d.str()};
}

std::pair<bool, std::string> criterion_sweeps()
{
    auto [ok, detail] = sweep(false);
    const Variety v(1, 1);
    const auto e = twist(SheafExpr::O(0, 1), -3, 2);
    const auto engine = cohomology(e, v).h[1];
    const auto oracle_value = oracle_cohomology(e, v)[1];
    detail += "; sharpness witness h1 = " + std::to_string(engine) + " (oracle " + std::to_string(oracle_value) + ")";
    return {ok && engine == 2 && oracle_value == 2, detail};
}

std::pair<bool, std::string> criterion_sharpened() { return sweep(true); }

std::pair<bool, std::string> criterion_cross_oracle()
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> side(1, 4);
    std::size_t hrr_bad = 0;
    std::size_t serre_bad = 0;
    for (int n = 0; n < 1000; ++n) {
        const int a0 = side(rng);
        const Variety v(a0, std::max(a0, side(rng)));
        const auto s = random_expression(rng, true);
        const auto h = cohomology(s, v);
        hrr_bad += chi_hrr(s, v) != h.chi();
        serre_bad += !(cohomology(serre_dual_expr(s, v), v) == h.reversed());
    }
    return {hrr_bad == 0 && serre_bad == 0,
            "1000 expressions, " + std::to_string(hrr_bad) + " HRR mismatches, " + std::to_string(serre_bad) + " Serre mismatches"};
}

std::pair<bool, std::string> criterion_regularity()
{
    std::size_t bad = 0;
    for (const auto& b : g_bundles)
        bad += !is_pq_regular(b.sheaf, b.variety, 0, 0);
    return {!g_bundles.empty() && bad == 0, std::to_string(g_bundles.size()) + " bundles, " + std::to_string(bad) + " not (0,0)-regular"};
}

std::pair<bool, std::string> criterion_lowc_monad()
{
    std::size_t lowc = 0;
    std::size_t monads = 0;
    std::size_t rejected = 0;
    std::size_t skipped = 0;
    std::string failure;
    auto fail = [&](const std::string& what) {
        if (failure.empty())
            failure = what;
    };
    for (const auto& b : g_bundles) {
        const auto& v = b.variety;
        const std::string where = to_string(b.sheaf) + " on " + v.to_string();
        try {
            if (v.c() <= 3) {
                const auto r = resolution_lowc(b.sheaf, v);
                if (!(r.checks.rank_ok && r.checks.ch_ok))
                    fail("low-c " + where);
                ++lowc;
            } else {
                try {
                    resolution_lowc(b.sheaf, v);
                    fail("low-c accepted " + where);
                } catch (const PreconditionFailed&) {
                    ++rejected;
                }
            }
            const bool shape = v.a0() == v.a1() || v.c() == 3;
            const bool h1 = oracle_cohomology(twist(b.sheaf, -3, v.c() - 1), v)[1] == 0;
            if (shape && h1) {
                const auto m = monad(b.sheaf, v);
                if (!(m.checks.rank_ok && m.checks.ch_ok))
                    fail("monad " + where);
                ++monads;
            } else {
                try {
                    monad(b.sheaf, v);
                    fail("monad accepted " + where);
                } catch (const PreconditionFailed&) {
                    ++rejected;
                }
            }
        } catch (const UnsupportedTensor&) {
            ++skipped;
        } catch (const Error& e) {
            fail(where + ": " + e.what());
        }
    }
    // hypotheses that fail by shape
    try {
        monad(SheafExpr::O(0, 1), Variety(1, 3));
        fail("monad accepted on (1,3)");
    } catch (const PreconditionFailed&) {
        ++rejected;
    }
    try {
        resolution_lowc(SheafExpr::Om(0, 5), Variety(2, 2));
        fail("low-c accepted on (2,2)");
    } catch (const PreconditionFailed&) {
        ++rejected;
    }
    std::ostringstream d;
    d << lowc << " low-c resolutions, " << monads << " monads, " << rejected << " correct rejections, " << skipped
      << " outside closure";
    if (!failure.empty())
        d << "; failure: " << failure;
    return {failure.empty() && lowc > 0 && monads > 0, d.str()};
}

}  // namespace

int main(int argc, char** argv)
{
    std::set<int> expected_failures;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc)
            expected_failures.insert(std::atoi(argv[++i]));
        else {
            std::cerr << "usage: acceptance [--expect-fail N]...\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {1, "line bundles", criterion_lines},
        {2, "twisted cotangent bundles", criterion_omega},
        {3, "pullback criterion", criterion_pullbacks},
        {4, "resolutions", criterion_resolution},
        {5, "dual collection orthogonality", criterion_orthogonality},
        {6, "vanishing sweeps", criterion_sweeps},
        {7, "sharpened bounds", criterion_sharpened},
        {8, "HRR and Serre cross-check", criterion_cross_oracle},
        {9, "(0,0)-regularity", criterion_regularity},
        {10, "low c resolutions and monads", criterion_lowc_monad},
    };

    std::set<int> failed;
    for (const auto& c : criteria) {
        bool ok = false;
        std::string detail;
        try {
            std::tie(ok, detail) = c.run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok)
            failed.insert(c.id);
        std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (exact): " << detail << "\n";
    }
    std::cout << (10 - failed.size()) << "/10 criteria pass\n";
    if (failed != expected_failures) {
        std::cout << "failing set differs from the expected one\n";
        return 1;
    }
    return 0;
}
