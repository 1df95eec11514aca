#include "triadval/predicates.hpp"

#include <stdexcept>

namespace triadval::engine {

const char* to_string(PredicateKind kind) {
    switch (kind) {
    case PredicateKind::AlwaysTrue: return "always_true";
    case PredicateKind::AlwaysFalse: return "always_false";
    case PredicateKind::ContainsElement: return "contains_element";
    case PredicateKind::ContainsAssumption: return "contains_assumption";
    case PredicateKind::ModelSizeAtLeast: return "model_size_at_least";
    case PredicateKind::ModelSizeAtMost: return "model_size_at_most";
    }
    return "?";
}

PredicateKind predicate_kind_from_string(const std::string& s) {
    if (s == "always_true") return PredicateKind::AlwaysTrue;
    if (s == "always_false") return PredicateKind::AlwaysFalse;
    if (s == "contains_element") return PredicateKind::ContainsElement;
    if (s == "contains_assumption") return PredicateKind::ContainsAssumption;
    if (s == "model_size_at_least") return PredicateKind::ModelSizeAtLeast;
    if (s == "model_size_at_most") return PredicateKind::ModelSizeAtMost;
    throw std::invalid_argument("unknown predicate kind: '" + s + "'");
}

bool DeclarativePredicate::eval(const Representation& rep) const {
    switch (kind) {
    case PredicateKind::AlwaysTrue: return true;
    case PredicateKind::AlwaysFalse: return false;
    case PredicateKind::ContainsElement: return rep.model.count(id) > 0;
    case PredicateKind::ContainsAssumption: return rep.assumptions.count(id) > 0;
    case PredicateKind::ModelSizeAtLeast: return static_cast<int>(rep.model.size()) >= n;
    case PredicateKind::ModelSizeAtMost: return static_cast<int>(rep.model.size()) <= n;
    }
    return false;
}

std::string DeclarativePredicate::describe() const {
    switch (kind) {
    case PredicateKind::AlwaysTrue: return "always_true";
    case PredicateKind::AlwaysFalse: return "always_false";
    case PredicateKind::ContainsElement: return "contains_element(" + id.str() + ")";
    case PredicateKind::ContainsAssumption: return "contains_assumption(" + id.str() + ")";
    case PredicateKind::ModelSizeAtLeast: return "model_size_at_least(" + std::to_string(n) + ")";
    case PredicateKind::ModelSizeAtMost: return "model_size_at_most(" + std::to_string(n) + ")";
    }
    return "?";
}

} // namespace triadval::engine
