#pragma once

#include <string>

#include <json.hpp>

#include "scroll/beilinson.hpp"
#include "scroll/classify.hpp"
#include "scroll/sheaf.hpp"
#include "scroll/suite.hpp"
#include "scroll/ulrich.hpp"

namespace scroll {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "scroll-ulrich/1";

/// Top-level document: {"schema": ..., "kind": kind} merged with body. Keys come out sorted.
Json document(const std::string& kind, Json body);

Json to_json(const Hit& hit);
Json to_json(const ClassificationReport& report);
Json to_json(const BeilinsonTable& table);
Json to_json(const ResolutionReport& report);
Json to_json(const CheckResult& check);
Json to_json(const SuiteResult& result);

/// Rows q = 5..0 top to bottom, columns j = 5..0; dual bundles head the columns,
/// collection bundles (with their shifts) close them.
std::string beilinson_markdown(const BeilinsonTable& table);
std::string resolution_markdown(const ResolutionReport& report);
std::string classification_markdown(const ClassificationReport& report);
std::string suite_markdown(const SuiteResult& result);

}  // namespace scroll
