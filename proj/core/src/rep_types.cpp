#include "triadval/rep_types.hpp"

#include <stdexcept>
#include <utility>

namespace triadval {

namespace {

[[noreturn]] void bad_enum(const char* what, const std::string& s) {
    throw std::invalid_argument(std::string("unknown ") + what + ": '" + s + "'");
}

} // namespace

const char* to_string(TriadAspect v) {
    switch (v) {
    case TriadAspect::Purpose: return "purpose";
    case TriadAspect::Context: return "context";
    case TriadAspect::Realization: return "realization";
    }
    return "?";
}

const char* to_string(AssumptionStatus v) {
    switch (v) {
    case AssumptionStatus::Elicited: return "elicited";
    case AssumptionStatus::Monitored: return "monitored";
    case AssumptionStatus::Invalidated: return "invalidated";
    }
    return "?";
}

const char* to_string(AssumptionOrigin v) {
    switch (v) {
    case AssumptionOrigin::InitialElicitation: return "initial_elicitation";
    case AssumptionOrigin::TransformationSideEffect: return "transformation_side_effect";
    }
    return "?";
}

const char* to_string(MonitorKind v) {
    switch (v) {
    case MonitorKind::AssumptionMonitor: return "assumption_monitor";
    case MonitorKind::ConstraintSatisfactionMonitor: return "constraint_satisfaction_monitor";
    }
    return "?";
}

const char* to_string(StrategyKind v) {
    switch (v) {
    case StrategyKind::Recovery: return "recovery";
    case StrategyKind::Degradation: return "degradation";
    }
    return "?";
}

const char* to_string(TriggerSource v) {
    switch (v) {
    case TriggerSource::FromAssumptionMonitor: return "from_assumption_monitor";
    case TriggerSource::FromConstraintMonitor: return "from_constraint_monitor";
    }
    return "?";
}

const char* to_string(EvidenceSource v) {
    switch (v) {
    case EvidenceSource::SystemUnderstanding: return "system_understanding";
    case EvidenceSource::Simulation: return "simulation";
    case EvidenceSource::RealWorldObservation: return "real_world_observation";
    case EvidenceSource::ContinuousObservation: return "continuous_observation";
    case EvidenceSource::FeedbackToUnderstanding: return "feedback_to_understanding";
    }
    return "?";
}

const char* to_string(CriterionSeverity v) {
    switch (v) {
    case CriterionSeverity::Blocking: return "blocking";
    case CriterionSeverity::Advisory: return "advisory";
    }
    return "?";
}

const char* to_string(RuleKind v) {
    switch (v) {
    case RuleKind::EveryAssumptionArgued: return "every_assumption_argued";
    case RuleKind::EveryConstraintHasSatisfactionMonitor:
        return "every_constraint_has_satisfaction_monitor";
    case RuleKind::EveryMonitorHasRecoveryAndDegradation:
        return "every_monitor_has_recovery_and_degradation";
    case RuleKind::MinimumEvidenceStrength: return "minimum_evidence_strength";
    case RuleKind::MinimumSourceDiversity: return "minimum_source_diversity";
    case RuleKind::Custom: return "custom";
    }
    return "?";
}

TriadAspect aspect_from_string(const std::string& s) {
    if (s == "purpose") return TriadAspect::Purpose;
    if (s == "context") return TriadAspect::Context;
    if (s == "realization") return TriadAspect::Realization;
    bad_enum("aspect", s);
}

AssumptionStatus assumption_status_from_string(const std::string& s) {
    if (s == "elicited") return AssumptionStatus::Elicited;
    if (s == "monitored") return AssumptionStatus::Monitored;
    if (s == "invalidated") return AssumptionStatus::Invalidated;
    bad_enum("assumption status", s);
}

AssumptionOrigin assumption_origin_from_string(const std::string& s) {
    if (s == "initial_elicitation") return AssumptionOrigin::InitialElicitation;
    if (s == "transformation_side_effect") return AssumptionOrigin::TransformationSideEffect;
    bad_enum("assumption origin", s);
}

StrategyKind strategy_kind_from_string(const std::string& s) {
    if (s == "recovery") return StrategyKind::Recovery;
    if (s == "degradation") return StrategyKind::Degradation;
    bad_enum("strategy kind", s);
}

TriggerSource trigger_source_from_string(const std::string& s) {
    if (s == "from_assumption_monitor") return TriggerSource::FromAssumptionMonitor;
    if (s == "from_constraint_monitor") return TriggerSource::FromConstraintMonitor;
    bad_enum("trigger source", s);
}

EvidenceSource evidence_source_from_string(const std::string& s) {
    if (s == "system_understanding") return EvidenceSource::SystemUnderstanding;
    if (s == "simulation") return EvidenceSource::Simulation;
    if (s == "real_world_observation") return EvidenceSource::RealWorldObservation;
    if (s == "continuous_observation") return EvidenceSource::ContinuousObservation;
    if (s == "feedback_to_understanding") return EvidenceSource::FeedbackToUnderstanding;
    bad_enum("evidence source", s);
}

CriterionSeverity severity_from_string(const std::string& s) {
    if (s == "blocking") return CriterionSeverity::Blocking;
    if (s == "advisory") return CriterionSeverity::Advisory;
    bad_enum("severity", s);
}

RuleKind rule_kind_from_string(const std::string& s) {
    if (s == "every_assumption_argued") return RuleKind::EveryAssumptionArgued;
    if (s == "every_constraint_has_satisfaction_monitor")
        return RuleKind::EveryConstraintHasSatisfactionMonitor;
    if (s == "every_monitor_has_recovery_and_degradation")
        return RuleKind::EveryMonitorHasRecoveryAndDegradation;
    if (s == "minimum_evidence_strength") return RuleKind::MinimumEvidenceStrength;
    if (s == "minimum_source_diversity") return RuleKind::MinimumSourceDiversity;
    if (s == "custom") return RuleKind::Custom;
    bad_enum("criterion rule kind", s);
}

Assumption::Assumption(ElementId id_, std::string statement_, std::set<ElementId> scope_,
                       AssumptionStatus status_, AssumptionOrigin origin_)
    : id(std::move(id_)), statement(std::move(statement_)), scope(std::move(scope_)),
      status(status_), origin(origin_) {
    if (scope.empty()) {
        throw std::invalid_argument("assumption scope must be non-empty: " + id.str());
    }
}

Constraint::Constraint(ElementId id_, std::string statement_,
                       std::set<std::string> guarded_losses_, int risk_rating_)
    : id(std::move(id_)), statement(std::move(statement_)),
      guarded_losses(std::move(guarded_losses_)), risk_rating(risk_rating_) {
    if (guarded_losses.empty()) {
        throw std::invalid_argument("constraint must guard at least one loss: " + id.str());
    }
    if (risk_rating < 1 || risk_rating > 4) {
        throw std::invalid_argument("constraint risk rating must be in 1..4: " + id.str());
    }
}

EvidenceItem::EvidenceItem(ElementId id_, EvidenceSource source_, double strength_,
                           std::string description_)
    : id(std::move(id_)), source(source_), strength(strength_),
      description(std::move(description_)) {
    if (!(strength >= 0.0 && strength <= 1.0)) {
        throw std::invalid_argument("evidence strength must be in [0,1]: " + id.str());
    }
}

EvidenceArgument::EvidenceArgument(ElementId id_, ElementId target_, std::set<ElementId> evidence_,
                                   std::string claim_)
    : id(std::move(id_)), target(std::move(target_)), evidence(std::move(evidence_)),
      claim(std::move(claim_)) {
    if (evidence.empty()) {
        throw std::invalid_argument("argument must cite at least one evidence item: " + id.str());
    }
}

CriterionRule CriterionRule::every_assumption_argued() {
    return CriterionRule{RuleKind::EveryAssumptionArgued, 0.0, 0, {}};
}

CriterionRule CriterionRule::every_constraint_has_satisfaction_monitor() {
    return CriterionRule{RuleKind::EveryConstraintHasSatisfactionMonitor, 0.0, 0, {}};
}

CriterionRule CriterionRule::every_monitor_has_recovery_and_degradation() {
    return CriterionRule{RuleKind::EveryMonitorHasRecoveryAndDegradation, 0.0, 0, {}};
}

CriterionRule CriterionRule::minimum_evidence_strength(double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw std::invalid_argument("evidence strength threshold must be in [0,1]");
    }
    return CriterionRule{RuleKind::MinimumEvidenceStrength, threshold, 0, {}};
}

CriterionRule CriterionRule::minimum_source_diversity(int count) {
    if (count < 1) {
        throw std::invalid_argument("source diversity count must be >= 1");
    }
    return CriterionRule{RuleKind::MinimumSourceDiversity, 0.0, count, {}};
}

CriterionRule CriterionRule::custom(std::string predicate_key) {
    if (predicate_key.empty()) {
        throw std::invalid_argument("custom criterion needs a predicate key");
    }
    return CriterionRule{RuleKind::Custom, 0.0, 0, std::move(predicate_key)};
}

} // namespace triadval
