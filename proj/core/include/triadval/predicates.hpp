#pragma once

#include <string>

#include "triadval/representation.hpp"

namespace triadval::engine {

enum class PredicateKind {
    AlwaysTrue,
    AlwaysFalse,
    ContainsElement,
    ContainsAssumption,
    ModelSizeAtLeast,
    ModelSizeAtMost,
};

const char* to_string(PredicateKind kind);
PredicateKind predicate_kind_from_string(const std::string& s);

/// Serializable condition over a representation. Used both as a rule's
/// applicability check and as a caller-supplied extra condition.
struct DeclarativePredicate {
    PredicateKind kind = PredicateKind::AlwaysTrue;
    ElementId id; // ContainsElement / ContainsAssumption
    int n = 0;    // ModelSizeAtLeast / ModelSizeAtMost

    bool eval(const Representation& rep) const;
    std::string describe() const;

    bool operator==(const DeclarativePredicate&) const = default;
};

} // namespace triadval::engine
