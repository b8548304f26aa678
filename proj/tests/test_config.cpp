#include <doctest.h>

#include "scroll/config.hpp"
#include "scroll/error.hpp"
#include "scroll/report.hpp"
#include "scroll/suite.hpp"

using namespace scroll;

TEST_SUITE("config") {

TEST_CASE("defaults")
{
    const Config cfg = parse_config("");
    CHECK(cfg.variety == Variety(1, 1));
    CHECK(cfg.output == OutputFormat::Json);
    CHECK(cfg.workers == 1);
    CHECK(cfg.lines.b.lo == -12);
    CHECK(cfg.sample_box.j_min == -4);
}

TEST_CASE("full file")
{
    const Config cfg = parse_config(R"(
schema: scroll-ulrich/1
variety: [2, 3]
output: markdown
workers: 4
sample_box: {j: [-2, 2], k: [-3, 3]}
searches:
  lines: {a0: [1, 2], a1: [1, 3], a: [-1, 1], b: [-5, 5]}
  pullbacks: {b: [-4, 4], twist: 2, rank_cap: 2, sym2: true, sanity_a: [-1, 3]}
hrr: {samples: 10, seed: 99}
fault: {degree_offset: 3}
)");
    CHECK(cfg.variety == Variety(2, 3));
    CHECK(cfg.output == OutputFormat::Markdown);
    CHECK(cfg.workers == 4);
    CHECK(cfg.sample_box.k_max == 3);
    CHECK(cfg.lines.a1.hi == 3);
    CHECK(cfg.omega.b.hi == 12);
    CHECK(cfg.pullbacks.twist_bound == 2);
    CHECK(cfg.pullbacks.include_sym2);
    CHECK(cfg.pullbacks.sanity_a.lo == -1);
    CHECK(cfg.hrr_samples == 10);
    CHECK(cfg.seed == 99);
    CHECK(cfg.degree_offset == 3);
}

TEST_CASE("rejections")
{
    CHECK_THROWS_AS(parse_config("colour: red"), ConfigError);
    CHECK_THROWS_AS(parse_config("searches: {lines: {c: [1, 2]}}"), ConfigError);
    CHECK_THROWS_AS(parse_config("variety: [2, 1]"), ConfigError);
    CHECK_THROWS_AS(parse_config("variety: [0, 1]"), ConfigError);
    CHECK_THROWS_AS(parse_config("variety: [1]"), ConfigError);
    CHECK_THROWS_AS(parse_config("output: xml"), ConfigError);
    CHECK_THROWS_AS(parse_config("workers: 0"), ConfigError);
    CHECK_THROWS_AS(parse_config("schema: other/2"), ConfigError);
    CHECK_THROWS_AS(parse_config("hrr: {samples: many}"), ConfigError);
    CHECK_THROWS_AS(parse_config("variety: [1, 1"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.yaml"), ConfigError);
}

TEST_CASE("suite on a small box")
{
    Config cfg = parse_config(R"(
searches:
  lines: {a0: [1, 2], a1: [1, 2], a: [-2, 2], b: [-4, 4]}
  omega: {a0: [1, 2], a1: [1, 2], a: [-2, 2], b: [-6, 6]}
  pullbacks: {a0: [1, 2], a1: [1, 2], b: [-6, 6], twist: 3, rank_cap: 2}
hrr: {samples: 30}
)");
    const auto r = run_suite(cfg);
    CHECK(r.passed);
    CHECK_FALSE(r.first_failure);
    cfg.workers = 3;
    CHECK(to_json(run_suite(cfg)).dump() == to_json(r).dump());
    cfg.degree_offset = 2;
    const auto bad = run_suite(cfg);
    CHECK_FALSE(bad.passed);
    CHECK(*bad.first_failure == "hrr");
}

TEST_CASE("json documents")
{
    const auto j = document("x", {{"b", 1}, {"a", 2}});
    CHECK(j.dump() == R"({"a":2,"b":1,"kind":"x","schema":"scroll-ulrich/1"})");
}

}
