#pragma once

#include <set>
#include <string>
#include <vector>

#include "triadval/predicates.hpp"
#include "triadval/rep_types.hpp"

namespace triadval::engine {

/// Evidence declared by a goal or a catalog rule, bound to the element it
/// supports. Items stay unattached until argument compilation or quality
/// enhancement picks them up.
struct DeclaredEvidence {
    EvidenceItem item;
    ElementId supports;

    bool operator==(const DeclaredEvidence&) const = default;
};

struct ProducedElementDef {
    ElementId id;
    std::string statement;
    std::set<ElementId> depends_on;

    bool operator==(const ProducedElementDef&) const = default;
};

struct SideAssumptionDef {
    ElementId id;
    std::string statement;
    std::set<ElementId> scope;

    bool operator==(const SideAssumptionDef&) const = default;
};

/// One deterministic, replayable transformation of a focused element.
/// `condition` is the applicability check evaluated on the representation
/// minus the focused element.
struct TransformationRule {
    ElementId id;
    ElementId focused;
    std::vector<ProducedElementDef> produces; // non-empty
    std::vector<SideAssumptionDef> side_assumptions;
    std::vector<DeclaredEvidence> evidence;
    DeclarativePredicate condition;

    bool operator==(const TransformationRule&) const = default;
};

/// Rules in document order; rules sharing a focused id are alternatives,
/// tried in that order.
struct TransformationCatalog {
    std::vector<TransformationRule> rules;

    std::vector<const TransformationRule*> rules_for(const ElementId& focused) const;
    const TransformationRule* find(const ElementId& rule_id) const;

    /// Throws std::invalid_argument on duplicate rule ids or empty `produces`.
    void validate() const;

    bool operator==(const TransformationCatalog&) const = default;
};

struct GoalElement {
    ElementId id;
    TriadAspect aspect = TriadAspect::Purpose;
    std::string statement;
    std::set<ElementId> depends_on;

    bool operator==(const GoalElement&) const = default;
};

struct GoalAssumption {
    ElementId id;
    std::string statement;
    std::set<ElementId> scope;
    bool pending = false; // recorded as an extra assumption before the
                          // self-consistency loop runs

    bool operator==(const GoalAssumption&) const = default;
};

struct GoalConstraint {
    ElementId id;
    std::string statement;
    std::set<std::string> guarded_losses;
    int risk_rating = 1;

    bool operator==(const GoalConstraint&) const = default;
};

/// Declarative high-level goal: the level-0 purpose/context/realization
/// elements, elicited assumptions, loss-derived constraints, and the declared
/// evidence pool. The optional plan drives intended transformations after
/// initialization (CLI batch runs).
struct GoalDocument {
    std::vector<GoalElement> elements;
    std::vector<GoalAssumption> assumptions;
    std::vector<GoalConstraint> constraints;
    std::vector<DeclaredEvidence> evidence;
    std::vector<std::set<ElementId>> plan_transforms;
    bool plan_redesign_on_failure = false;

    bool operator==(const GoalDocument&) const = default;
};

struct EngineConfig {
    int max_self_consistency_cycles = 16;
    int max_quality_enhancement_rounds = 8;
    int redesign_max_levels_up = 1;

    /// Throws std::invalid_argument when a bound is out of range.
    void validate() const;

    bool operator==(const EngineConfig&) const = default;
};

} // namespace triadval::engine
