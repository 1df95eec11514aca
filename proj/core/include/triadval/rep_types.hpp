#pragma once

#include <optional>
#include <set>
#include <string>

#include "triadval/element_id.hpp"

namespace triadval {

/// The three interdependent aspects a solution is validated against.
enum class TriadAspect { Purpose, Context, Realization };

enum class AssumptionStatus { Elicited, Monitored, Invalidated };
enum class AssumptionOrigin { InitialElicitation, TransformationSideEffect };
enum class MonitorKind { AssumptionMonitor, ConstraintSatisfactionMonitor };
enum class StrategyKind { Recovery, Degradation };
enum class TriggerSource { FromAssumptionMonitor, FromConstraintMonitor };

enum class EvidenceSource {
    SystemUnderstanding,
    Simulation,
    RealWorldObservation,
    ContinuousObservation,
    FeedbackToUnderstanding,
};

enum class CriterionSeverity { Blocking, Advisory };

enum class RuleKind {
    EveryAssumptionArgued,
    EveryConstraintHasSatisfactionMonitor,
    EveryMonitorHasRecoveryAndDegradation,
    MinimumEvidenceStrength,
    MinimumSourceDiversity,
    Custom,
};

const char* to_string(TriadAspect v);
const char* to_string(AssumptionStatus v);
const char* to_string(AssumptionOrigin v);
const char* to_string(MonitorKind v);
const char* to_string(StrategyKind v);
const char* to_string(TriggerSource v);
const char* to_string(EvidenceSource v);
const char* to_string(CriterionSeverity v);
const char* to_string(RuleKind v);

TriadAspect aspect_from_string(const std::string& s);
AssumptionStatus assumption_status_from_string(const std::string& s);
AssumptionOrigin assumption_origin_from_string(const std::string& s);
StrategyKind strategy_kind_from_string(const std::string& s);
TriggerSource trigger_source_from_string(const std::string& s);
EvidenceSource evidence_source_from_string(const std::string& s);
CriterionSeverity severity_from_string(const std::string& s);
RuleKind rule_kind_from_string(const std::string& s);

/// One statement of the model at some abstraction level. `depends_on` may
/// only reference elements at the same or a more abstract (lower) level.
struct ModelElement {
    ElementId id;
    TriadAspect aspect = TriadAspect::Purpose;
    std::string statement;
    int abstraction = 0;
    std::set<ElementId> depends_on;
    std::optional<ElementId> lineage;

    bool operator==(const ModelElement&) const = default;
};

/// An explicit assumption underlying part of the representation. `scope`
/// names the elements whose validity rests on it and is never empty.
struct Assumption {
    ElementId id;
    std::string statement;
    std::set<ElementId> scope;
    AssumptionStatus status = AssumptionStatus::Elicited;
    AssumptionOrigin origin = AssumptionOrigin::InitialElicitation;

    Assumption() = default;
    Assumption(ElementId id_, std::string statement_, std::set<ElementId> scope_,
               AssumptionStatus status_, AssumptionOrigin origin_);

    bool operator==(const Assumption&) const = default;
};

/// Constrains the system away from states that could manifest one of the
/// guarded losses. Every constraint traces to at least one loss.
struct Constraint {
    ElementId id;
    std::string statement;
    std::set<std::string> guarded_losses;
    int risk_rating = 1; // ordinal 1..4

    Constraint() = default;
    Constraint(ElementId id_, std::string statement_, std::set<std::string> guarded_losses_,
               int risk_rating_);

    bool operator==(const Constraint&) const = default;
};

struct Monitor {
    ElementId id;
    MonitorKind kind = MonitorKind::AssumptionMonitor;
    ElementId target;
    std::string predicate; // declarative condition over simulator events

    bool operator==(const Monitor&) const = default;
};

struct Strategy {
    ElementId id;
    StrategyKind kind = StrategyKind::Recovery;
    TriggerSource trigger_source = TriggerSource::FromAssumptionMonitor;
    ElementId trigger;
    std::string action;

    bool operator==(const Strategy&) const = default;
};

struct EvidenceItem {
    ElementId id;
    EvidenceSource source = EvidenceSource::SystemUnderstanding;
    double strength = 0.0; // in [0,1]
    std::string description;

    EvidenceItem() = default;
    EvidenceItem(ElementId id_, EvidenceSource source_, double strength_,
                 std::string description_);

    bool operator==(const EvidenceItem&) const = default;
};

/// Aggregates the evidence backing one target element; at most one argument
/// exists per target, and it always cites at least one item.
struct EvidenceArgument {
    ElementId id;
    ElementId target;
    std::set<ElementId> evidence;
    std::string claim;

    EvidenceArgument() = default;
    EvidenceArgument(ElementId id_, ElementId target_, std::set<ElementId> evidence_,
                     std::string claim_);

    bool operator==(const EvidenceArgument&) const = default;
};

/// Declarative rule of a quality criterion. Parameters are only meaningful
/// for the kinds that use them; Custom rules resolve `predicate_key` against
/// the registry in quality.hpp.
struct CriterionRule {
    RuleKind kind = RuleKind::EveryAssumptionArgued;
    double threshold = 0.0;    // MinimumEvidenceStrength
    int count = 0;             // MinimumSourceDiversity
    std::string predicate_key; // Custom

    static CriterionRule every_assumption_argued();
    static CriterionRule every_constraint_has_satisfaction_monitor();
    static CriterionRule every_monitor_has_recovery_and_degradation();
    static CriterionRule minimum_evidence_strength(double threshold);
    static CriterionRule minimum_source_diversity(int count);
    static CriterionRule custom(std::string predicate_key);

    bool operator==(const CriterionRule&) const = default;
};

struct QualityCriterion {
    ElementId id;
    CriterionRule rule;
    CriterionSeverity severity = CriterionSeverity::Blocking;

    bool operator==(const QualityCriterion&) const = default;
};

} // namespace triadval
