#pragma once

#include <string>
#include <vector>

#include "triadval/representation.hpp"

namespace triadval {

enum class ViolationKind {
    DuplicateId,
    EmptyIdentifier,
    DanglingReference,
    EmptyScope,
    EmptyGuardedLosses,
    RiskRatingOutOfRange,
    MonitorTargetKindMismatch,
    TriggerSourceMismatch,
    UnmonitoredAssumption,
    EmptyEvidence,
    DuplicateArgumentTarget,
    StrengthOutOfRange,
    InvalidCriterionParameter,
    UnknownCustomPredicate,
    PendingNotAssumption,
    StatusInconsistent,
    DependsOnHigherAbstraction,
    LevelNotContiguous,
    AspectChangedAcrossLineage,
    UniverseInvariant,
};

const char* to_string(ViolationKind kind);

/// A broken invariant or dangling reference. Violations are data, not errors.
struct Violation {
    ViolationKind kind;
    ElementId subject;
    std::string detail;

    bool operator==(const Violation&) const = default;
};

/// Walks every type invariant and id reference of one representation.
/// Empty result iff structurally valid.
std::vector<Violation> validate_representation(const Representation& rep);

/// Per-level validation plus the stack-level invariants: contiguous levels,
/// aspect stability across lineage, and freshness of produced ids.
std::vector<Violation> validate_stack(const RepresentationStack& stack);

} // namespace triadval
