// Command-line front end: one subcommand per computation, JSON or markdown on stdout.
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "scroll/beilinson.hpp"
#include "scroll/chow.hpp"
#include "scroll/classify.hpp"
#include "scroll/config.hpp"
#include "scroll/error.hpp"
#include "scroll/report.hpp"
#include "scroll/suite.hpp"
#include "scroll/ulrich.hpp"

using namespace scroll;

namespace {

enum Exit { kOk = 0, kDisagreement = 1, kUsage = 2, kEngine = 3 };

struct Options {
    std::string variety_text;
    std::string sheaf_text;
    std::string format;
    std::string config_path;
    std::optional<int> workers;
    int window = 12;
    bool low_c = false;
    std::string b_text;
    std::optional<int> twist_bound;
    std::optional<int> rank_cap;
    bool sym2 = false;
};

std::pair<int, int> parse_pair(const std::string& text, const std::string& what)
{
    std::istringstream in(text);
    int x = 0;
    int y = 0;
    char comma = 0;
    if (!(in >> x >> comma >> y) || comma != ',' || !(in >> std::ws).eof())
        throw ConfigError(what + ": expected two integers 'x,y', got '" + text + "'");
    return {x, y};
}

Config load(const Options& o)
{
    Config cfg = o.config_path.empty() ? Config{} : load_config(o.config_path);
    if (!o.variety_text.empty()) {
        const auto [a0, a1] = parse_pair(o.variety_text, "--variety");
        cfg.variety = Variety(a0, a1);
    }
    if (o.format == "json")
        cfg.output = OutputFormat::Json;
    else if (o.format == "markdown")
        cfg.output = OutputFormat::Markdown;
    if (o.workers)
        cfg.workers = *o.workers;
    return cfg;
}

void emit(const Config& cfg, const Json& json, const std::string& markdown)
{
    if (cfg.output == OutputFormat::Markdown)
        std::cout << markdown;
    else
        std::cout << json.dump(2) << "\n";
}

int cmd_cohomology(const Options& o)
{
    const Config cfg = load(o);
    const SheafExpr s = parse_sheaf(o.sheaf_text);
    const CohTable h = cohomology(s, cfg.variety);
    const auto hrr = chi_hrr(s, cfg.variety);
    const bool agree = hrr == h.chi();
    Json j{{"variety", {cfg.variety.a0(), cfg.variety.a1()}},
           {"sheaf", to_string(s)},
           {"h", h.h},
           {"chi", h.chi()},
           {"hrr", hrr},
           {"agreement", agree}};
    std::ostringstream md;
    md << "| h0 | h1 | h2 | h3 | chi | hrr |\n|---|---|---|---|---|---|\n| " << h.h[0] << " | " << h.h[1] << " | "
       << h.h[2] << " | " << h.h[3] << " | " << h.chi() << " | " << hrr << " |\n";
    emit(cfg, document("cohomology", j), md.str());
    return agree ? kOk : kDisagreement;
}

int cmd_ulrich(const Options& o)
{
    const Config cfg = load(o);
    const SheafExpr s = parse_sheaf(o.sheaf_text);
    const auto v = is_ulrich(s, cfg.variety);
    const bool alternate = satisfies_alternate_ulrich(s, cfg.variety);
    Json j{{"variety", {cfg.variety.a0(), cfg.variety.a1()}},
           {"sheaf", to_string(s)},
           {"initialized", v.is_initialized},
           {"vanishing", v.vanishing_ok},
           {"h0", v.h0},
           {"expected_h0", v.expected_h0},
           {"ulrich", v.is_ulrich},
           {"alternate", alternate}};
    std::ostringstream md;
    md << to_string(s) << " on " << cfg.variety.to_string() << ": " << (v.is_ulrich ? "Ulrich" : "not Ulrich")
       << " (h0 " << v.h0 << ", expected " << v.expected_h0 << ")\n";
    emit(cfg, document("ulrich", j), md.str());
    return alternate == v.is_ulrich ? kOk : kDisagreement;
}

int cmd_dual(const Options& o)
{
    const Config cfg = load(o);
    const SheafExpr s = parse_sheaf(o.sheaf_text);
    Json j{{"variety", {cfg.variety.a0(), cfg.variety.a1()}},
           {"sheaf", to_string(s)},
           {"dual", to_string(dual(s))},
           {"serre_dual", to_string(serre_dual_expr(s, cfg.variety))},
           {"ulrich_dual", to_string(ulrich_dual(s, cfg.variety))}};
    std::ostringstream md;
    md << "dual: " << to_string(dual(s)) << "\nserre dual: " << to_string(serre_dual_expr(s, cfg.variety))
       << "\nulrich dual: " << to_string(ulrich_dual(s, cfg.variety)) << "\n";
    emit(cfg, document("dual", j), md.str());
    return kOk;
}

int cmd_regularity(const Options& o)
{
    const Config cfg = load(o);
    const SheafExpr s = parse_sheaf(o.sheaf_text);
    const auto r = regularity(s, cfg.variety, o.window);
    Json j{{"variety", {cfg.variety.a0(), cfg.variety.a1()}},
           {"sheaf", to_string(s)},
           {"window", r.window},
           {"floor_reached", r.floor_reached},
           {"regular_00", is_pq_regular(s, cfg.variety, 0, 0)}};
    j["regularity"] = r.value ? Json(*r.value) : Json(nullptr);
    std::ostringstream md;
    md << "regularity of " << to_string(s) << ": " << (r.value ? std::to_string(*r.value) : "none in window");
    if (r.floor_reached)
        md << " (regular at the window floor)";
    md << "\n";
    emit(cfg, document("regularity", j), md.str());
    return kOk;
}

int cmd_beilinson(const Options& o)
{
    const Config cfg = load(o);
    const auto table = beilinson_table(parse_sheaf(o.sheaf_text), cfg.variety);
    emit(cfg, document("beilinson", to_json(table)), beilinson_markdown(table));
    return kOk;
}

int cmd_resolution(const Options& o, bool monad_form)
{
    const Config cfg = load(o);
    const SheafExpr s = parse_sheaf(o.sheaf_text);
    const auto report = monad_form ? monad(s, cfg.variety, cfg.sample_box)
                        : o.low_c  ? resolution_lowc(s, cfg.variety, cfg.sample_box)
                                   : resolution(s, cfg.variety, cfg.sample_box);
    emit(cfg, document(monad_form ? "monad" : "resolution", to_json(report)), resolution_markdown(report));
    return kOk;
}

int emit_classification(const Config& cfg, const ClassificationReport& r)
{
    emit(cfg, document("classification", to_json(r)), classification_markdown(r));
    return r.agreement ? kOk : kDisagreement;
}

int cmd_classify_pullbacks(const Options& o)
{
    Config cfg = load(o);
    auto& p = cfg.pullbacks;
    if (!o.b_text.empty()) {
        const auto [lo, hi] = parse_pair(o.b_text, "--b");
        p.b = {lo, hi};
    }
    if (o.twist_bound)
        p.twist_bound = *o.twist_bound;
    if (o.rank_cap)
        p.rank_cap = *o.rank_cap;
    p.include_sym2 = p.include_sym2 || o.sym2;
    const auto family = default_plane_family(p.twist_bound, p.rank_cap, p.include_sym2);
    return emit_classification(cfg, classify_pullbacks(cfg.variety, family, p.b, {0, 2}, cfg.workers));
}

int cmd_suite(const Options& o)
{
    const Config cfg = load(o);
    const auto result = run_suite(cfg);
    emit(cfg, document("suite", to_json(result)), suite_markdown(result));
    for (const auto& c : result.checks)
        std::cerr << c.id << ": " << (c.passed ? "agreement" : "failure") << (c.vacuous ? " (vacuous)" : "")
                  << (c.gating ? "" : " (non-gating)") << "\n";
    if (!result.passed) {
        std::cerr << "first failing check: " << *result.first_failure << "\n";
        return kDisagreement;
    }
    return kOk;
}

void error_json(const std::string& type, const std::string& message, std::optional<std::size_t> position = {})
{
    Json j{{"error", type}, {"message", message}};
    if (position)
        j["position"] = *position;
    std::cerr << document("error", j).dump() << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohomology and Ulrich bundle computations on P(O(a0)+O(a1)) over the plane"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "markdown"}));
    app.add_option("--config", o.config_path, "YAML config file")->check(CLI::ExistingFile);
    app.add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);

    auto with_sheaf = [&](CLI::App* sub) {
        sub->add_option("--variety", o.variety_text, "a0,a1");
        sub->add_option("--sheaf", o.sheaf_text, "Sheaf expression, e.g. \"O(1,0) + 2*Om(0,2)\"")->required();
        return sub;
    };
    auto* coh = with_sheaf(app.add_subcommand("cohomology", "h^i, chi and HRR chi of a sheaf expression"));
    auto* ul = with_sheaf(app.add_subcommand("ulrich", "Ulrich test"));
    auto* du = with_sheaf(app.add_subcommand("dual", "Dual, Serre dual and Ulrich dual expressions"));
    auto* reg = with_sheaf(app.add_subcommand("regularity", "Least p with (p,p)-regularity"));
    reg->add_option("--window", o.window, "Search window [-w, w]")->check(CLI::PositiveNumber);
    auto* bei = with_sheaf(app.add_subcommand("beilinson", "6x6 Beilinson table"));
    auto* res = with_sheaf(app.add_subcommand("resolution", "Resolution by the dual collection"));
    res->add_flag("--low-c", o.low_c, "Use the table of E(-1)(0), needs c <= 3");
    auto* mon = with_sheaf(app.add_subcommand("monad", "Monad from the table of E(-2)(0)"));
    auto* cl = app.add_subcommand("classify-lines", "Search twisted line bundles over the configured box");
    auto* co = app.add_subcommand("classify-omega", "Search twisted relative cotangent bundles over the configured box");
    auto* cp = app.add_subcommand("classify-pullbacks", "Compare pullbacks against the Veronese criterion");
    cp->add_option("--variety", o.variety_text, "a0,a1");
    cp->add_option("--b", o.b_text, "b range lo,hi");
    cp->add_option("--twist", o.twist_bound, "Twist bound of the plane family");
    cp->add_option("--rank-cap", o.rank_cap, "Rank cap of the plane family")->check(CLI::PositiveNumber);
    cp->add_flag("--sym2", o.sym2, "Include S2Om twists in the plane family");
    auto* su = app.add_subcommand("suite", "Run every check; exit 0 iff all agree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (coh->parsed()) return cmd_cohomology(o);
        if (ul->parsed()) return cmd_ulrich(o);
        if (du->parsed()) return cmd_dual(o);
        if (reg->parsed()) return cmd_regularity(o);
        if (bei->parsed()) return cmd_beilinson(o);
        if (res->parsed()) return cmd_resolution(o, false);
        if (mon->parsed()) return cmd_resolution(o, true);
        if (cl->parsed()) {
            const Config cfg = load(o);
            return emit_classification(cfg, search_line_bundles(cfg.lines, cfg.workers));
        }
        if (co->parsed()) {
            const Config cfg = load(o);
            return emit_classification(cfg, search_omega_twists(cfg.omega, cfg.workers));
        }
        if (cp->parsed()) return cmd_classify_pullbacks(o);
        if (su->parsed()) return cmd_suite(o);
    } catch (const ParseError& e) {
        error_json("parse", e.what(), e.position());
        return kUsage;
    } catch (const ConfigError& e) {
        error_json("config", e.what());
        return kUsage;
    } catch (const InvalidVariety& e) {
        error_json("variety", e.what());
        return kUsage;
    } catch (const Error& e) {
        error_json("engine", e.what());
        return kEngine;
    }
    return kUsage;
}
