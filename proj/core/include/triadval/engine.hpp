#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "triadval/inputs.hpp"
#include "triadval/quality.hpp"
#include "triadval/representation.hpp"
#include "triadval/validate.hpp"

namespace triadval::engine {

enum class FailureReason { NoRuleApplies, QualityIterationFailed, ConditionUnsatisfiable };
const char* to_string(FailureReason reason);

struct EngineFailure {
    int level = 0;
    FailureReason reason = FailureReason::NoRuleApplies;
    std::vector<LineageRecord> trace; // records of the failed attempt
    std::string note;
};

/// Outcome of a stack-level operation. The stack is always usable: on
/// success it carries the new state, on failure the input levels plus the
/// lineage records of the failed attempt.
struct EngineOutcome {
    RepresentationStack stack;
    std::optional<EngineFailure> failure;

    bool ok() const { return !failure.has_value(); }
};

/// Outcome of a representation-level operation (self-consistency or a
/// transformation under condition).
struct RepResult {
    std::optional<Representation> rep;
    std::optional<EngineFailure> failure;
    std::vector<LineageRecord> records;

    bool ok() const { return rep.has_value(); }
};

struct Cond2LevelDetail {
    int level = 0;
    std::vector<Violation> structural;
    QualityVerdict quality;
};

struct Cond2Verdict {
    bool complies = false;
    std::optional<int> first_failing_level;
    std::vector<Cond2LevelDetail> details;
    std::string advisory; // "no levels" on the vacuous case
};

/// Stateful engine bound to one catalog + config. Binding the goal extends
/// the evidence support index with the goal's declared items; the free
/// functions below construct one per call.
class Engine {
  public:
    Engine(TransformationCatalog catalog, EngineConfig config);

    void bind_goal_evidence(const GoalDocument& goal);

    EngineOutcome initialize(const GoalDocument& goal,
                             const std::vector<QualityCriterion>& criteria);

    RepResult self_consistency(const Representation& rep, const std::set<ElementId>& extra);

    EngineOutcome transform_intended(const RepresentationStack& stack,
                                     const std::set<ElementId>& focused);

    RepResult transform_under_condition(const Representation& rep,
                                        const std::set<ElementId>& focused,
                                        const std::vector<DeclarativePredicate>& extra_conditions);

    EngineOutcome redesign_from_level(const RepresentationStack& stack, int failed_level);

    const TransformationCatalog& catalog() const { return catalog_; }
    const EngineConfig& config() const { return config_; }

  private:
    struct StepFail {
        FailureReason reason;
        std::string note;
    };

    std::optional<StepFail> transform_core(Representation& rep, const ElementId& focused_id,
                                           const std::vector<DeclarativePredicate>& conditions,
                                           int produced_abstraction,
                                           const TransformationRule* rule_override,
                                           std::set<ElementId>& side_collected,
                                           std::vector<LineageRecord>& sink);
    std::optional<StepFail> derive_for_assumptions(Representation& rep,
                                                   const std::set<ElementId>& assumption_ids);
    void derive_for_constraints(Representation& rep, const std::set<ElementId>& constraint_ids);
    void compile_arguments(Representation& rep);
    std::optional<StepFail> enhance_quality(Representation& rep);
    RepResult self_consistency_impl(Representation rep, std::set<ElementId> extra,
                                    std::vector<LineageRecord> records);
    RepResult transform_impl(Representation rep, const std::set<ElementId>& focused,
                             const std::vector<DeclarativePredicate>& extra_conditions,
                             int produced_abstraction,
                             const std::map<ElementId, ElementId>& rule_overrides);
    EngineOutcome attempt_level(const RepresentationStack& base,
                                const std::set<ElementId>& focused,
                                const std::map<ElementId, ElementId>& rule_overrides);

    std::vector<EvidenceItem> candidates_for(const Representation& rep,
                                             const ElementId& target) const;

    TransformationCatalog catalog_;
    EngineConfig config_;
    std::map<ElementId, ElementId> support_; // evidence item id -> supported target
};

// Free-function surface mirroring the engine operations one-to-one. Each
// builds an Engine from the passed catalog + config (initialize additionally
// binds the goal's declared evidence).

EngineOutcome initialize(const GoalDocument& goal, const TransformationCatalog& catalog,
                         const std::vector<QualityCriterion>& criteria, const EngineConfig& config);

RepResult self_consistency(const Representation& rep, const std::set<ElementId>& extra,
                           const TransformationCatalog& catalog, const EngineConfig& config);

EngineOutcome transform_intended(const RepresentationStack& stack,
                                 const std::set<ElementId>& focused,
                                 const TransformationCatalog& catalog, const EngineConfig& config);

RepResult transform_under_condition(const Representation& rep, const std::set<ElementId>& focused,
                                    const std::vector<DeclarativePredicate>& extra_conditions,
                                    const TransformationCatalog& catalog,
                                    const EngineConfig& config);

/// Complies iff every level is structurally valid and its argumentation
/// complies with all blocking criteria, re-checked from scratch.
Cond2Verdict check_cond2(const RepresentationStack& stack);

EngineOutcome redesign_from_level(const RepresentationStack& stack, int failed_level,
                                  const TransformationCatalog& catalog,
                                  const EngineConfig& config);

} // namespace triadval::engine
