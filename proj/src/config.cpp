#include "scroll/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "scroll/error.hpp"

namespace scroll {

namespace {

void reject_unknown(const YAML::Node& node, const std::string& where, const std::set<std::string>& known)
{
    if (!node.IsMap())
        throw ConfigError(where + ": expected a table");
    for (const auto& kv : node) {
        const auto key = kv.first.as<std::string>();
        if (!known.count(key))
            throw ConfigError(where + ": unknown key '" + key + "'");
    }
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& where)
{
    if (!node.IsScalar())
        throw ConfigError(where + ": expected a scalar");
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError(where + ": bad value '" + node.Scalar() + "'");
    }
}

std::pair<int, int> int_pair(const YAML::Node& node, const std::string& where)
{
    if (!node.IsSequence() || node.size() != 2)
        throw ConfigError(where + ": expected [lo, hi]");
    return {scalar<int>(node[0], where), scalar<int>(node[1], where)};
}

IntRange range(const YAML::Node& node, const std::string& where)
{
    const auto [lo, hi] = int_pair(node, where);
    return {lo, hi};
}

int positive(const YAML::Node& node, const std::string& where)
{
    const int v = scalar<int>(node, where);
    if (v < 1)
        throw ConfigError(where + ": must be positive");
    return v;
}

void read_box(const YAML::Node& node, const std::string& where, SearchBox& box)
{
    reject_unknown(node, where, {"a0", "a1", "a", "b"});
    if (node["a0"]) box.a0 = range(node["a0"], where + ".a0");
    if (node["a1"]) box.a1 = range(node["a1"], where + ".a1");
    if (node["a"]) box.a = range(node["a"], where + ".a");
    if (node["b"]) box.b = range(node["b"], where + ".b");
    if (!box.a0.empty() && box.a0.lo < 1)
        throw ConfigError(where + ".a0: lower bound must be at least 1");
}

void read_pullbacks(const YAML::Node& node, PullbackSearch& p)
{
    const std::string where = "searches.pullbacks";
    reject_unknown(node, where, {"a0", "a1", "b", "twist", "rank_cap", "sym2", "sanity_a"});
    if (node["a0"]) p.a0 = range(node["a0"], where + ".a0");
    if (node["a1"]) p.a1 = range(node["a1"], where + ".a1");
    if (node["b"]) p.b = range(node["b"], where + ".b");
    if (node["twist"]) p.twist_bound = scalar<int>(node["twist"], where + ".twist");
    if (node["rank_cap"]) p.rank_cap = positive(node["rank_cap"], where + ".rank_cap");
    if (node["sym2"]) p.include_sym2 = scalar<bool>(node["sym2"], where + ".sym2");
    if (node["sanity_a"]) p.sanity_a = range(node["sanity_a"], where + ".sanity_a");
    if (!p.a0.empty() && p.a0.lo < 1)
        throw ConfigError(where + ".a0: lower bound must be at least 1");
    if (p.twist_bound < 0)
        throw ConfigError(where + ".twist: must be non-negative");
}

}  // namespace

Config parse_config(const std::string& text)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ConfigError(std::string("yaml: ") + e.what());
    }
    Config cfg;
    if (root.IsNull())
        return cfg;
    reject_unknown(root, "config",
                   {"schema", "variety", "output", "workers", "sample_box", "searches", "hrr", "fault"});

    if (root["schema"]) {
        cfg.schema = scalar<std::string>(root["schema"], "schema");
        if (cfg.schema != "scroll-ulrich/1")
            throw ConfigError("schema: unsupported '" + cfg.schema + "'");
    }
    if (root["variety"]) {
        const auto [a0, a1] = int_pair(root["variety"], "variety");
        try {
            cfg.variety = Variety(a0, a1);
        } catch (const InvalidVariety& e) {
            throw ConfigError(std::string("variety: ") + e.what());
        }
    }
    if (root["output"]) {
        const auto out = scalar<std::string>(root["output"], "output");
        if (out == "json")
            cfg.output = OutputFormat::Json;
        else if (out == "markdown")
            cfg.output = OutputFormat::Markdown;
        else
            throw ConfigError("output: expected json or markdown, got '" + out + "'");
    }
    if (root["workers"])
        cfg.workers = positive(root["workers"], "workers");
    if (const auto sb = root["sample_box"]) {
        reject_unknown(sb, "sample_box", {"j", "k"});
        if (sb["j"]) std::tie(cfg.sample_box.j_min, cfg.sample_box.j_max) = int_pair(sb["j"], "sample_box.j");
        if (sb["k"]) std::tie(cfg.sample_box.k_min, cfg.sample_box.k_max) = int_pair(sb["k"], "sample_box.k");
    }
    if (const auto s = root["searches"]) {
        reject_unknown(s, "searches", {"lines", "omega", "pullbacks"});
        if (s["lines"]) read_box(s["lines"], "searches.lines", cfg.lines);
        if (s["omega"]) read_box(s["omega"], "searches.omega", cfg.omega);
        if (s["pullbacks"]) read_pullbacks(s["pullbacks"], cfg.pullbacks);
    }
    if (const auto h = root["hrr"]) {
        reject_unknown(h, "hrr", {"samples", "seed"});
        if (h["samples"]) {
            cfg.hrr_samples = scalar<int>(h["samples"], "hrr.samples");
            if (cfg.hrr_samples < 0)
                throw ConfigError("hrr.samples: must be non-negative");
        }
        if (h["seed"]) cfg.seed = scalar<std::uint64_t>(h["seed"], "hrr.seed");
    }
    if (const auto f = root["fault"]) {
        reject_unknown(f, "fault", {"degree_offset"});
        if (f["degree_offset"]) cfg.degree_offset = scalar<int>(f["degree_offset"], "fault.degree_offset");
    }
    return cfg;
}

Config load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

}  // namespace scroll
