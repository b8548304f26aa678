#include "scroll/report.hpp"

#include <algorithm>
#include <sstream>

namespace scroll {

Json document(const std::string& kind, Json body)
{
    body["schema"] = kSchema;
    body["kind"] = kind;
    return body;
}

namespace {

Json variety_json(const Variety& v)
{
    return Json::array({v.a0(), v.a1()});
}

}  // namespace

Json to_json(const Hit& hit)
{
    Json j{{"variety", variety_json(hit.variety)}, {"sheaf", to_string(hit.sheaf)}, {"a", hit.a}, {"b", hit.b}};
    if (hit.base)
        j["base"] = p2::to_string(*hit.base);
    return j;
}

Json to_json(const ClassificationReport& report)
{
    auto list = [](const std::vector<Hit>& hits) {
        Json out = Json::array();
        for (const auto& h : hits)
            out.push_back(to_json(h));
        return out;
    };
    return {{"name", report.name},
            {"hits", list(report.hits)},
            {"predicted", list(report.predicted)},
            {"counterexamples", list(report.counterexamples)},
            {"agreement", report.agreement},
            {"vacuous", report.vacuous},
            {"checked", report.checked}};
}

Json to_json(const BeilinsonTable& table)
{
    const auto collection = exceptional_collection(table.variety);
    Json grid = Json::array();
    for (int q = 0; q < 6; ++q) {
        Json row = Json::array();
        for (int j = 0; j < 6; ++j)
            row.push_back(table.at(q, j));
        grid.push_back(row);
    }
    Json columns = Json::array();
    for (int j = 0; j < 6; ++j) {
        const auto& m = collection[static_cast<std::size_t>(j)];
        columns.push_back({{"j", j}, {"bundle", to_string(m.bundle)}, {"shift", m.shift}, {"dual", to_string(m.dual_bundle)}});
    }
    return {{"variety", variety_json(table.variety)}, {"sheaf", to_string(table.sheaf)}, {"grid", grid}, {"columns", columns}};
}

Json to_json(const ResolutionReport& report)
{
    Json mult = Json::array();
    for (const auto& [name, m] : report.multiplicities)
        mult.push_back({{"name", name}, {"value", m}});
    Json terms = Json::array();
    for (const auto& t : report.terms)
        terms.push_back({{"degree", t.degree}, {"sheaf", to_string(t.sheaf)}});
    return {{"form", form_name(report.form)},
            {"variety", variety_json(report.variety)},
            {"sheaf", to_string(report.sheaf)},
            {"table_twist", report.table_twist},
            {"table", to_json(report.table)},
            {"multiplicities", mult},
            {"terms", terms},
            {"pattern_ok", report.pattern_ok},
            {"checks", {{"rank", report.checks.rank_ok}, {"ch", report.checks.ch_ok}, {"chi_grid", report.checks.chi_grid_ok}}}};
}

Json to_json(const CheckResult& check)
{
    return {{"id", check.id},
            {"status", check.passed ? "agreement" : "failure"},
            {"vacuous", check.vacuous},
            {"gating", check.gating},
            {"checked", check.checked},
            {"skipped", check.skipped},
            {"detail", check.detail}};
}

Json to_json(const SuiteResult& result)
{
    Json checks = Json::array();
    Json summary = Json::array();
    for (const auto& c : result.checks) {
        checks.push_back(to_json(c));
        summary.push_back(c.id + ": " + (c.passed ? "agreement" : "failure") + (c.vacuous ? " (vacuous)" : "") +
                          (c.gating ? "" : " (non-gating)"));
    }
    Json bundles = Json::array();
    for (const auto& b : result.bundles)
        bundles.push_back({{"variety", variety_json(b.variety)}, {"sheaf", to_string(b.sheaf)}});
    Json j{{"passed", result.passed}, {"checks", checks}, {"summary", summary}, {"ulrich_bundles", bundles}};
    j["first_failure"] = result.first_failure ? Json(*result.first_failure) : Json(nullptr);
    return j;
}

std::string beilinson_markdown(const BeilinsonTable& table)
{
    const auto collection = exceptional_collection(table.variety);
    std::ostringstream out;
    out << "|";
    for (int j = 5; j >= 0; --j)
        out << " " << to_string(collection[static_cast<std::size_t>(j)].dual_bundle) << " |";
    out << "\n|";
    for (int j = 5; j >= 0; --j)
        out << "---|";
    out << "\n";
    for (int q = 5; q >= 0; --q) {
        out << "|";
        for (int j = 5; j >= 0; --j)
            out << " " << table.at(q, j) << " |";
        out << "\n";
    }
    out << "|";
    for (int j = 5; j >= 0; --j) {
        const auto& m = collection[static_cast<std::size_t>(j)];
        out << " " << to_string(m.bundle);
        if (m.shift != 0)
            out << "[" << m.shift << "]";
        out << " |";
    }
    out << "\n";
    return out.str();
}

std::string resolution_markdown(const ResolutionReport& report)
{
    std::ostringstream out;
    out << "## " << form_name(report.form) << " of " << to_string(report.sheaf) << " on " << report.variety.to_string()
        << "\n\n";
    if (report.table_twist != 0)
        out << "Table of the twist by (" << report.table_twist << ",0).\n\n";
    out << beilinson_markdown(report.table) << "\n";
    out << "| multiplicity | value |\n|---|---|\n";
    for (const auto& [name, m] : report.multiplicities)
        out << "| " << name << " | " << m << " |\n";
    out << "\n| degree | term |\n|---|---|\n";
    for (const auto& t : report.terms)
        out << "| " << t.degree << " | " << to_string(t.sheaf) << " |\n";
    out << "\npattern " << (report.pattern_ok ? "ok" : "FAILED") << ", rank " << (report.checks.rank_ok ? "ok" : "FAILED")
        << ", ch " << (report.checks.ch_ok ? "ok" : "FAILED") << ", chi grid "
        << (report.checks.chi_grid_ok ? "ok" : "FAILED") << "\n";
    return out.str();
}

std::string classification_markdown(const ClassificationReport& report)
{
    std::ostringstream out;
    out << "## " << report.name << "\n\n";
    out << "checked " << report.checked << ", agreement " << (report.agreement ? "yes" : "no");
    if (report.vacuous)
        out << " (vacuous)";
    out << "\n\n| variety | sheaf | a | b | predicted |\n|---|---|---|---|---|\n";
    for (const auto& h : report.hits) {
        const bool predicted = std::binary_search(report.predicted.begin(), report.predicted.end(), h);
        out << "| " << h.variety.to_string() << " | " << to_string(h.sheaf) << " | " << h.a << " | " << h.b << " | "
            << (predicted ? "yes" : "no") << " |\n";
    }
    for (const auto& h : report.counterexamples)
        if (!std::binary_search(report.hits.begin(), report.hits.end(), h))
            out << "| " << h.variety.to_string() << " | " << to_string(h.sheaf) << " | " << h.a << " | " << h.b
                << " | missed |\n";
    return out.str();
}

std::string suite_markdown(const SuiteResult& result)
{
    std::ostringstream out;
    out << "| check | status | checked | detail |\n|---|---|---|---|\n";
    for (const auto& c : result.checks)
        out << "| " << c.id << " | " << (c.passed ? "agreement" : "failure") << (c.vacuous ? " (vacuous)" : "") << " | "
            << c.checked << " | " << c.detail << " |\n";
    out << "\n" << (result.passed ? "all checks passed" : "failed: " + *result.first_failure) << "\n";
    return out.str();
}

}  // namespace scroll
