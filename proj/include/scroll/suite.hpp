#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "scroll/classify.hpp"
#include "scroll/config.hpp"

namespace scroll {

struct CheckResult {
    std::string id;
    bool passed = false;
    bool vacuous = false;
    std::size_t checked = 0;
    std::size_t skipped = 0;  // outside the supported tensor closure
    /// Non-gating checks are reported but do not affect the suite verdict.
    bool gating = true;
    std::string detail;
};

struct FoundBundle {
    Variety variety{1, 1};
    SheafExpr sheaf;

    friend bool operator==(const FoundBundle&, const FoundBundle&) = default;
    friend auto operator<=>(const FoundBundle&, const FoundBundle&) = default;
};

struct SuiteResult {
    std::vector<CheckResult> checks;
    std::vector<ClassificationReport> classifications;
    std::vector<FoundBundle> bundles;
    bool passed = false;
    std::optional<std::string> first_failure;
};

SuiteResult run_suite(const Config& cfg);

/// Ulrich bundles appearing as hits in the given reports, deduplicated and sorted.
std::vector<FoundBundle> collect_bundles(const std::vector<ClassificationReport>& reports);

/// One to three atoms with small twists and multiplicities. S2Om atoms only when allowed.
SheafExpr random_expression(std::mt19937_64& rng, bool with_sym2);

}  // namespace scroll
