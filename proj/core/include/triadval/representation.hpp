#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "triadval/rep_types.hpp"

namespace triadval {

enum class RepStatus { Candidate, SelfConsistent };
const char* to_string(RepStatus v);
RepStatus rep_status_from_string(const std::string& s);

/// One abstraction level's complete bundle: the model plus constraints,
/// assumptions, both monitor sets, strategies, evidence arguments and quality
/// criteria, together with the evidence pool the arguments draw from and the
/// set of extra assumptions still awaiting a self-consistency pass.
///
/// Values are immutable once handed out by the engine; every engine step
/// produces a new Representation rather than mutating a shared one.
struct Representation {
    int level = 0;
    std::map<ElementId, ModelElement> model;
    std::map<ElementId, Constraint> constraints;
    std::map<ElementId, Assumption> assumptions;
    std::map<ElementId, Monitor> assumption_monitors;
    std::map<ElementId, Monitor> constraint_monitors;
    std::map<ElementId, Strategy> strategies;
    std::map<ElementId, EvidenceArgument> arguments;
    std::map<ElementId, QualityCriterion> criteria;
    std::map<ElementId, EvidenceItem> evidence_items;
    std::set<ElementId> pending_extra_assumptions;
    RepStatus status = RepStatus::Candidate;

    /// True when the id names anything in this representation (any component
    /// set, including evidence items and criteria).
    bool contains_id(const ElementId& id) const;

    /// The argument targeting `target`, or nullptr.
    const EvidenceArgument* argument_for(const ElementId& target) const;

    /// Ids of every evidence item referenced by some argument.
    std::set<ElementId> attached_evidence() const;

    bool operator==(const Representation&) const = default;
};

/// One transformation event. Records are append-only; discarded redesign
/// branches stay in the log with outcome "discarded".
struct LineageRecord {
    int level = 0;
    std::string algorithm; // algo1 | algo2 | algo3a | algo3b | redesign
    std::string rule = "-";
    std::vector<std::string> sources;
    std::vector<std::string> produced;
    std::string outcome; // applied | failed | discarded | note
    std::string note;

    /// Stable single-line rendering used for the lineage log artifact.
    std::string line() const;

    bool operator==(const LineageRecord&) const = default;
};

struct RepresentationStack {
    std::vector<Representation> levels; // contiguous, level index == position
    std::vector<LineageRecord> lineage_log;

    const Representation& top() const;

    /// True when some live level already uses the id.
    bool contains_id(const ElementId& id) const;

    bool operator==(const RepresentationStack&) const = default;
};

} // namespace triadval
