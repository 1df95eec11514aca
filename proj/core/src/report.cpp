#include "report.hpp"

#include <sstream>

namespace triadval::cli {

using nlohmann::json;

namespace {

std::int64_t area_count(const json& census, const std::string& area) {
    if (!census.contains("areas")) return 0;
    for (const auto& entry : census["areas"]) {
        if (entry.value("area", "") == area) return entry.value("count", std::int64_t{0});
    }
    return 0;
}

std::int64_t set_size(const json& census, const std::string& name) {
    if (!census.contains("sets")) return 0;
    return census["sets"].value(name, std::int64_t{0});
}

std::string fraction(std::int64_t part, std::int64_t total) {
    if (total <= 0) return "n/a";
    std::ostringstream os;
    os << part << "/" << total;
    return os.str();
}

int count_lines_with(const std::vector<std::string>& lines, const std::string& needle) {
    int n = 0;
    for (const auto& line : lines) {
        if (line.find(needle) != std::string::npos) n += 1;
    }
    return n;
}

} // namespace

std::string build_report(const std::optional<json>& outcome, const std::optional<json>& stack,
                         const std::optional<json>& census,
                         const std::vector<std::string>& trace_lines) {
    std::ostringstream os;
    os << "# Validation run report\n\n";

    if (outcome.has_value()) {
        os << "Engine outcome: " << outcome->value("result", "unknown") << " ("
           << outcome->value("levels", std::int64_t{0}) << " levels)";
        if (outcome->contains("failure") && !(*outcome)["failure"].is_null()) {
            const json& failure = (*outcome)["failure"];
            os << "; failure at level " << failure.value("level", std::int64_t{-1}) << ": "
               << failure.value("reason", "?");
        }
        os << "\n\n";
    } else {
        os << "Engine outcome: not available\n\n";
    }

    const bool have_census = census.has_value();
    auto count = [&](const char* area) {
        return have_census ? area_count(*census, area) : std::int64_t{0};
    };
    std::int64_t total = have_census ? census->value("total", std::int64_t{0}) : 0;

    os << "## 1. Solutions effective as expected and valid\n";
    if (have_census) {
        os << "Share to maximize: " << fraction(count("area1"), total) << " points.\n";
    } else {
        os << "No census available.\n";
    }
    os << "\n";

    os << "## 2. Valid-solution space and the loss boundary\n";
    if (have_census) {
        os << "Valid points: " << set_size(*census, "valid")
           << " (perfectly valid: " << set_size(*census, "perfectly_valid")
           << ", robust core: " << set_size(*census, "robust_valid") << ").\n";
        os << "Loss assignments: " << set_size(*census, "loss") << " tolerable, "
           << set_size(*census, "unacceptable_loss") << " unacceptable.\n";
        os << "Boundary shifts replayed: " << count_lines_with(trace_lines, "shift ") << ".\n";
    } else {
        os << "No census available.\n";
    }
    os << "\n";

    os << "## 3. Model coverage and monitored deviations\n";
    if (have_census) {
        os << "Expected (modelled) points: " << set_size(*census, "expected")
           << "; monitor ring: " << set_size(*census, "monitor_ring") << ".\n";
    }
    if (stack.has_value() && stack->contains("levels")) {
        for (const auto& level : (*stack)["levels"]) {
            os << "Level " << level.value("level", std::int64_t{-1}) << ": "
               << level["assumptions"].size() << " assumptions, "
               << level["assumption_monitors"].size() << " assumption monitors, "
               << level["constraint_monitors"].size() << " constraint monitors, "
               << level["strategies"].size() << " strategies, " << level["arguments"].size()
               << " arguments.\n";
        }
    }
    if (!have_census && !stack.has_value()) os << "No artifacts available.\n";
    os << "\n";

    os << "## 4. Robust operation margin\n";
    if (have_census && census->contains("cond1") && !(*census)["cond1"].is_null()) {
        const json& cond1 = (*census)["cond1"];
        os << "Model/effective distance: " << cond1.value("delta", 0.0) << " (tolerance "
           << cond1.value("tolerance", 0.0) << ").\n";
        os << "Effective inside robust core: "
           << (cond1.value("robust_ok", false) ? "yes" : "no") << ".\n";
    } else {
        os << "No verdict available.\n";
    }
    os << "\n";

    os << "## 5. Deviations reachable by verification\n";
    if (have_census) {
        os << "Effectively-as-expected but invalid (area 2): " << count("area2")
           << " points, discoverable against the model.\n";
    } else {
        os << "No census available.\n";
    }
    os << "\n";

    os << "## 6. Incident detection before loss\n";
    if (have_census) {
        os << "Monitored deviations (areas 3+4): " << count("area3") + count("area4")
           << "; silent deviations (areas 5+6): " << count("area5") + count("area6") << ".\n";
    }
    os << "Monitor events: " << count_lines_with(trace_lines, "kind=monitor_fired")
       << "; tolerable losses: " << count_lines_with(trace_lines, "kind=loss_manifested")
       << "; unacceptable losses: "
       << count_lines_with(trace_lines, "kind=unacceptable_loss_manifested")
       << "; blocked reintroductions: "
       << count_lines_with(trace_lines, "kind=reintroduction_attempt") << ".\n";
    os << "\n";

    os << "## 7. Unused design freedom\n";
    if (have_census) {
        os << "Valid but unused solution space (area 7): " << count("area7") << " points.\n";
    } else {
        os << "No census available.\n";
    }

    return os.str();
}

} // namespace triadval::cli
