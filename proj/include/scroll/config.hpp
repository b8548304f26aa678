#pragma once

#include <cstdint>
#include <string>

#include "scroll/beilinson.hpp"
#include "scroll/classify.hpp"
#include "scroll/variety.hpp"

namespace scroll {

enum class OutputFormat { Json, Markdown };

struct PullbackSearch {
    IntRange a0{1, 3};
    IntRange a1{1, 3};
    IntRange b{-12, 12};
    int twist_bound = 6;
    int rank_cap = 3;
    bool include_sym2 = false;
    /// a-range of the sanity sweep that must produce no hits outside a in {0,1,2}
    IntRange sanity_a{-3, 3};
};

struct Config {
    std::string schema = "scroll-ulrich/1";
    Variety variety{1, 1};
    OutputFormat output = OutputFormat::Json;
    int workers = 1;
    TwistBox sample_box;
    SearchBox lines{{1, 4}, {1, 4}, {-4, 4}, {-12, 12}, 1};
    SearchBox omega{{1, 4}, {1, 4}, {-4, 4}, {-12, 12}, 2};
    PullbackSearch pullbacks;
    int hrr_samples = 1000;
    std::uint64_t seed = 1;
    /// Added to H^3 inside the Chow ring used by the hrr check. Zero in any honest run.
    int degree_offset = 0;
};

/// Parses YAML text. Unknown keys, malformed ranges and invalid varieties raise ConfigError.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

}  // namespace scroll
