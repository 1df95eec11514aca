#pragma once

#include <functional>
#include <string>
#include <vector>

#include "triadval/representation.hpp"

namespace triadval {

struct CriterionVerdict {
    ElementId criterion;
    bool complies = false;
    std::vector<ElementId> offenders; // element ids the criterion flags

    bool operator==(const CriterionVerdict&) const = default;
};

struct QualityVerdict {
    std::vector<CriterionVerdict> per_criterion;
    bool overall_complies = false; // all Blocking criteria comply

    const CriterionVerdict* for_criterion(const ElementId& id) const;

    bool operator==(const QualityVerdict&) const = default;
};

/// Evaluates every criterion against the representation's evidence-based
/// argumentation. Pre: rep structurally valid.
QualityVerdict check_argument_quality(const Representation& rep);

/// Registry for Custom criterion rules. Keys are stable names so criteria
/// documents stay serializable and runs deterministic.
using RepPredicateFn = std::function<bool(const Representation&)>;
void register_rep_predicate(const std::string& key, RepPredicateFn fn);
const RepPredicateFn* find_rep_predicate(const std::string& key);

} // namespace triadval
