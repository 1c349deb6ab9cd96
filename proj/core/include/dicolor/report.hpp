#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

namespace dicolor {

inline constexpr std::string_view kToolkitVersion = "0.1.0";

/// Canonical serialization: sorted keys (nlohmann::json objects are
/// key-ordered), two-space indent, LF newlines, trailing newline. Identical
/// values always produce identical bytes.
std::string canonical_json(const nlohmann::json& value);

/// FNV-1a 64-bit content digest, lowercase hex.
std::string content_digest(std::string_view bytes);

struct RunReport {
    std::string command;
    std::string input_digest;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json results;
};

nlohmann::json run_report_json(const RunReport& report);

}  // namespace dicolor
