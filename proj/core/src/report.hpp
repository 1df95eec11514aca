#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace triadval::cli {

/// Builds the seven-section run summary from whatever artifacts a previous
/// engine/simulate/census run left in the output directory.
std::string build_report(const std::optional<nlohmann::json>& outcome,
                         const std::optional<nlohmann::json>& stack,
                         const std::optional<nlohmann::json>& census,
                         const std::vector<std::string>& trace_lines);

} // namespace triadval::cli
