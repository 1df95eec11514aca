#include "triadval/validate.hpp"

#include <map>

#include "triadval/quality.hpp"

namespace triadval {

const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::DuplicateId: return "duplicate_id";
    case ViolationKind::EmptyIdentifier: return "empty_identifier";
    case ViolationKind::DanglingReference: return "dangling_reference";
    case ViolationKind::EmptyScope: return "empty_scope";
    case ViolationKind::EmptyGuardedLosses: return "empty_guarded_losses";
    case ViolationKind::RiskRatingOutOfRange: return "risk_rating_out_of_range";
    case ViolationKind::MonitorTargetKindMismatch: return "monitor_target_kind_mismatch";
    case ViolationKind::TriggerSourceMismatch: return "trigger_source_mismatch";
    case ViolationKind::UnmonitoredAssumption: return "unmonitored_assumption";
    case ViolationKind::EmptyEvidence: return "empty_evidence";
    case ViolationKind::DuplicateArgumentTarget: return "duplicate_argument_target";
    case ViolationKind::StrengthOutOfRange: return "strength_out_of_range";
    case ViolationKind::InvalidCriterionParameter: return "invalid_criterion_parameter";
    case ViolationKind::UnknownCustomPredicate: return "unknown_custom_predicate";
    case ViolationKind::PendingNotAssumption: return "pending_not_assumption";
    case ViolationKind::StatusInconsistent: return "status_inconsistent";
    case ViolationKind::DependsOnHigherAbstraction: return "depends_on_higher_abstraction";
    case ViolationKind::LevelNotContiguous: return "level_not_contiguous";
    case ViolationKind::AspectChangedAcrossLineage: return "aspect_changed_across_lineage";
    case ViolationKind::UniverseInvariant: return "universe_invariant";
    }
    return "?";
}

namespace {

class Collector {
  public:
    explicit Collector(std::vector<Violation>& out) : out_(out) {}

    void add(ViolationKind kind, const ElementId& subject, std::string detail) {
        out_.push_back(Violation{kind, subject, std::move(detail)});
    }

  private:
    std::vector<Violation>& out_;
};

template <typename Map>
void check_ids(const Map& items, std::map<ElementId, int>& counts, Collector& c) {
    for (const auto& [id, item] : items) {
        if (id.ns.empty() || id.local.empty()) {
            c.add(ViolationKind::EmptyIdentifier, id, "id has an empty part");
        }
        counts[id] += 1;
    }
}

} // namespace

std::vector<Violation> validate_representation(const Representation& rep) {
    std::vector<Violation> out;
    Collector c(out);

    // Id uniqueness across every component set of the level.
    std::map<ElementId, int> counts;
    check_ids(rep.model, counts, c);
    check_ids(rep.constraints, counts, c);
    check_ids(rep.assumptions, counts, c);
    check_ids(rep.assumption_monitors, counts, c);
    check_ids(rep.constraint_monitors, counts, c);
    check_ids(rep.strategies, counts, c);
    check_ids(rep.arguments, counts, c);
    check_ids(rep.criteria, counts, c);
    check_ids(rep.evidence_items, counts, c);
    for (const auto& [id, n] : counts) {
        if (n > 1) {
            c.add(ViolationKind::DuplicateId, id,
                  "id used by " + std::to_string(n) + " elements");
        }
    }

    for (const auto& [id, element] : rep.model) {
        for (const auto& dep : element.depends_on) {
            auto it = rep.model.find(dep);
            if (it == rep.model.end()) {
                c.add(ViolationKind::DanglingReference, id, "depends_on " + dep.str());
            } else if (it->second.abstraction > element.abstraction) {
                c.add(ViolationKind::DependsOnHigherAbstraction, id,
                      "depends on less abstract element " + dep.str());
            }
        }
    }

    for (const auto& [id, assumption] : rep.assumptions) {
        if (assumption.scope.empty()) {
            c.add(ViolationKind::EmptyScope, id, "assumption scope is empty");
        }
        for (const auto& ref : assumption.scope) {
            if (!rep.contains_id(ref)) {
                c.add(ViolationKind::DanglingReference, id, "scope references " + ref.str());
            }
        }
        if (assumption.status == AssumptionStatus::Monitored) {
            bool monitored = false;
            for (const auto& [mid, monitor] : rep.assumption_monitors) {
                if (monitor.target == id) {
                    monitored = true;
                    break;
                }
            }
            if (!monitored) {
                c.add(ViolationKind::UnmonitoredAssumption, id,
                      "status monitored but no assumption monitor references it");
            }
        }
    }

    for (const auto& [id, constraint] : rep.constraints) {
        if (constraint.guarded_losses.empty()) {
            c.add(ViolationKind::EmptyGuardedLosses, id, "constraint guards no loss");
        }
        if (constraint.risk_rating < 1 || constraint.risk_rating > 4) {
            c.add(ViolationKind::RiskRatingOutOfRange, id,
                  "risk rating " + std::to_string(constraint.risk_rating));
        }
    }

    for (const auto& [id, monitor] : rep.assumption_monitors) {
        if (monitor.kind != MonitorKind::AssumptionMonitor) {
            c.add(ViolationKind::MonitorTargetKindMismatch, id,
                  "monitor in assumption set has wrong kind");
        } else if (!rep.assumptions.count(monitor.target)) {
            if (rep.contains_id(monitor.target)) {
                c.add(ViolationKind::MonitorTargetKindMismatch, id,
                      "target " + monitor.target.str() + " is not an assumption");
            } else {
                c.add(ViolationKind::DanglingReference, id, "target " + monitor.target.str());
            }
        }
    }
    for (const auto& [id, monitor] : rep.constraint_monitors) {
        if (monitor.kind != MonitorKind::ConstraintSatisfactionMonitor) {
            c.add(ViolationKind::MonitorTargetKindMismatch, id,
                  "monitor in constraint set has wrong kind");
        } else if (!rep.constraints.count(monitor.target)) {
            if (rep.contains_id(monitor.target)) {
                c.add(ViolationKind::MonitorTargetKindMismatch, id,
                      "target " + monitor.target.str() + " is not a constraint");
            } else {
                c.add(ViolationKind::DanglingReference, id, "target " + monitor.target.str());
            }
        }
    }

    for (const auto& [id, strategy] : rep.strategies) {
        bool in_assumption = rep.assumption_monitors.count(strategy.trigger) > 0;
        bool in_constraint = rep.constraint_monitors.count(strategy.trigger) > 0;
        if (!in_assumption && !in_constraint) {
            c.add(ViolationKind::DanglingReference, id, "trigger " + strategy.trigger.str());
        } else {
            bool wants_assumption = strategy.trigger_source == TriggerSource::FromAssumptionMonitor;
            if (wants_assumption != in_assumption) {
                c.add(ViolationKind::TriggerSourceMismatch, id,
                      "trigger source does not match the kind of " + strategy.trigger.str());
            }
        }
    }

    std::map<ElementId, int> targets;
    for (const auto& [id, argument] : rep.arguments) {
        if (argument.evidence.empty()) {
            c.add(ViolationKind::EmptyEvidence, id, "argument cites no evidence");
        }
        if (!rep.contains_id(argument.target)) {
            c.add(ViolationKind::DanglingReference, id, "target " + argument.target.str());
        }
        for (const auto& ev : argument.evidence) {
            if (!rep.evidence_items.count(ev)) {
                c.add(ViolationKind::DanglingReference, id, "evidence " + ev.str());
            }
        }
        targets[argument.target] += 1;
    }
    for (const auto& [target, n] : targets) {
        if (n > 1) {
            c.add(ViolationKind::DuplicateArgumentTarget, target,
                  std::to_string(n) + " arguments share this target");
        }
    }

    for (const auto& [id, criterion] : rep.criteria) {
        const auto& rule = criterion.rule;
        switch (rule.kind) {
        case RuleKind::MinimumEvidenceStrength:
            if (!(rule.threshold >= 0.0 && rule.threshold <= 1.0)) {
                c.add(ViolationKind::InvalidCriterionParameter, id, "threshold out of [0,1]");
            }
            break;
        case RuleKind::MinimumSourceDiversity:
            if (rule.count < 1) {
                c.add(ViolationKind::InvalidCriterionParameter, id, "count must be >= 1");
            }
            break;
        case RuleKind::Custom:
            if (!find_rep_predicate(rule.predicate_key)) {
                c.add(ViolationKind::UnknownCustomPredicate, id,
                      "predicate '" + rule.predicate_key + "' is not registered");
            }
            break;
        default: break;
        }
    }

    for (const auto& [id, item] : rep.evidence_items) {
        if (!(item.strength >= 0.0 && item.strength <= 1.0)) {
            c.add(ViolationKind::StrengthOutOfRange, id, "strength out of [0,1]");
        }
    }

    for (const auto& pending : rep.pending_extra_assumptions) {
        if (!rep.assumptions.count(pending)) {
            c.add(ViolationKind::PendingNotAssumption, pending,
                  "pending extra assumption does not name an assumption");
        }
    }

    if (rep.status == RepStatus::SelfConsistent && !rep.pending_extra_assumptions.empty()) {
        ElementId subject = *rep.pending_extra_assumptions.begin();
        c.add(ViolationKind::StatusInconsistent, subject,
              "marked self-consistent with pending extra assumptions");
    }

    return out;
}

std::vector<Violation> validate_stack(const RepresentationStack& stack) {
    std::vector<Violation> out;
    Collector c(out);

    for (std::size_t i = 0; i < stack.levels.size(); ++i) {
        const auto& rep = stack.levels[i];
        if (rep.level != static_cast<int>(i)) {
            c.add(ViolationKind::LevelNotContiguous, ElementId{},
                  "level " + std::to_string(rep.level) + " at position " + std::to_string(i));
        }
        auto level_violations = validate_representation(rep);
        out.insert(out.end(), level_violations.begin(), level_violations.end());
    }

    // Aspect stability: an element with a lineage parent keeps its aspect.
    for (const auto& rep : stack.levels) {
        for (const auto& [id, element] : rep.model) {
            if (!element.lineage.has_value()) continue;
            for (const auto& other : stack.levels) {
                auto it = other.model.find(*element.lineage);
                if (it != other.model.end() && it->second.aspect != element.aspect) {
                    c.add(ViolationKind::AspectChangedAcrossLineage, id,
                          "aspect differs from lineage parent " + element.lineage->str());
                    break;
                }
            }
        }
    }

    return out;
}

} // namespace triadval
