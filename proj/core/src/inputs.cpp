#include "triadval/inputs.hpp"

#include <set>
#include <stdexcept>

namespace triadval::engine {

std::vector<const TransformationRule*> TransformationCatalog::rules_for(
    const ElementId& focused) const {
    std::vector<const TransformationRule*> out;
    for (const auto& rule : rules) {
        if (rule.focused == focused) out.push_back(&rule);
    }
    return out;
}

const TransformationRule* TransformationCatalog::find(const ElementId& rule_id) const {
    for (const auto& rule : rules) {
        if (rule.id == rule_id) return &rule;
    }
    return nullptr;
}

void TransformationCatalog::validate() const {
    std::set<ElementId> seen;
    for (const auto& rule : rules) {
        if (!seen.insert(rule.id).second) {
            throw std::invalid_argument("duplicate rule id in catalog: " + rule.id.str());
        }
        if (rule.produces.empty()) {
            throw std::invalid_argument("rule produces no elements: " + rule.id.str());
        }
    }
}

void EngineConfig::validate() const {
    if (max_self_consistency_cycles < 1) {
        throw std::invalid_argument("max_self_consistency_cycles must be >= 1");
    }
    if (max_quality_enhancement_rounds < 1) {
        throw std::invalid_argument("max_quality_enhancement_rounds must be >= 1");
    }
    if (redesign_max_levels_up < 0) {
        throw std::invalid_argument("redesign_max_levels_up must be >= 0");
    }
}

} // namespace triadval::engine
