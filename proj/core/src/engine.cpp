#include "triadval/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace triadval::engine {

const char* to_string(FailureReason reason) {
    switch (reason) {
    case FailureReason::NoRuleApplies: return "no_rule_applies";
    case FailureReason::QualityIterationFailed: return "quality_iteration_failed";
    case FailureReason::ConditionUnsatisfiable: return "condition_unsatisfiable";
    }
    return "?";
}

namespace {

std::vector<std::string> ids_to_strings(const std::set<ElementId>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (const auto& id : ids) out.push_back(id.str());
    return out;
}

ElementId derived_monitor_id(const ElementId& target) {
    return ElementId("mon", target.ns + "." + target.local);
}

ElementId derived_strategy_id(const ElementId& monitor, StrategyKind kind) {
    const char* suffix = kind == StrategyKind::Recovery ? ".recovery" : ".degradation";
    return ElementId("strat", monitor.local + suffix);
}

ElementId derived_argument_id(const ElementId& target) {
    return ElementId("arg", target.ns + "." + target.local);
}

[[noreturn]] void id_in_use(const char* what, const ElementId& id) {
    throw std::invalid_argument(std::string("derived ") + what + " id already in use: " +
                                id.str());
}

std::string first_violation_text(const std::vector<Violation>& violations) {
    const Violation& v = violations.front();
    return std::string(to_string(v.kind)) + " at " + v.subject.str() + " (" + v.detail + ")";
}

std::string quality_failure_note(const Representation& rep, const QualityVerdict& verdict) {
    for (const auto& cv : verdict.per_criterion) {
        if (cv.complies) continue;
        auto it = rep.criteria.find(cv.criterion);
        if (it == rep.criteria.end() || it->second.severity != CriterionSeverity::Blocking) {
            continue;
        }
        std::string offenders;
        for (const auto& offender : cv.offenders) {
            if (!offenders.empty()) offenders += ",";
            offenders += offender.str();
        }
        return "argumentation quality not achievable: criterion " + cv.criterion.str() +
               " offenders [" + offenders + "]";
    }
    return "argumentation quality not achievable";
}

} // namespace

Engine::Engine(TransformationCatalog catalog, EngineConfig config)
    : catalog_(std::move(catalog)), config_(config) {
    config_.validate();
    catalog_.validate();
    for (const auto& rule : catalog_.rules) {
        for (const auto& decl : rule.evidence) {
            auto [it, inserted] = support_.emplace(decl.item.id, decl.supports);
            if (!inserted && it->second != decl.supports) {
                throw std::invalid_argument("evidence item " + decl.item.id.str() +
                                            " declared for two different targets");
            }
        }
    }
}

void Engine::bind_goal_evidence(const GoalDocument& goal) {
    for (const auto& decl : goal.evidence) {
        auto [it, inserted] = support_.emplace(decl.item.id, decl.supports);
        if (!inserted && it->second != decl.supports) {
            throw std::invalid_argument("evidence item " + decl.item.id.str() +
                                        " declared for two different targets");
        }
    }
}

std::vector<EvidenceItem> Engine::candidates_for(const Representation& rep,
                                                 const ElementId& target) const {
    std::vector<EvidenceItem> out;
    auto attached = rep.attached_evidence();
    for (const auto& [iid, item] : rep.evidence_items) {
        if (attached.count(iid)) continue;
        auto it = support_.find(iid);
        if (it == support_.end() || it->second != target) continue;
        out.push_back(item);
    }
    std::sort(out.begin(), out.end(), [](const EvidenceItem& a, const EvidenceItem& b) {
        if (a.strength != b.strength) return a.strength > b.strength;
        return a.id < b.id;
    });
    return out;
}

namespace {

void ensure_strategies(Representation& rep, const ElementId& monitor_id, TriggerSource source) {
    bool recovery = false;
    bool degradation = false;
    for (const auto& [sid, strategy] : rep.strategies) {
        if (strategy.trigger != monitor_id) continue;
        if (strategy.kind == StrategyKind::Recovery) recovery = true;
        if (strategy.kind == StrategyKind::Degradation) degradation = true;
    }
    if (!recovery) {
        ElementId sid = derived_strategy_id(monitor_id, StrategyKind::Recovery);
        if (rep.contains_id(sid)) id_in_use("strategy", sid);
        rep.strategies.emplace(sid, Strategy{sid, StrategyKind::Recovery, source, monitor_id,
                                             "recover nominal operation after " +
                                                 monitor_id.str() + " fires"});
    }
    if (!degradation) {
        ElementId sid = derived_strategy_id(monitor_id, StrategyKind::Degradation);
        if (rep.contains_id(sid)) id_in_use("strategy", sid);
        rep.strategies.emplace(sid, Strategy{sid, StrategyKind::Degradation, source, monitor_id,
                                             "degrade functionality after " + monitor_id.str() +
                                                 " fires"});
    }
}

} // namespace

std::optional<Engine::StepFail> Engine::derive_for_assumptions(
    Representation& rep, const std::set<ElementId>& assumption_ids) {
    for (const auto& a_id : assumption_ids) {
        bool monitored = false;
        for (const auto& [mid, monitor] : rep.assumption_monitors) {
            if (monitor.target == a_id) {
                monitored = true;
                break;
            }
        }
        if (!monitored) {
            ElementId mon_id = derived_monitor_id(a_id);
            if (rep.contains_id(mon_id)) id_in_use("monitor", mon_id);
            rep.assumption_monitors.emplace(
                mon_id, Monitor{mon_id, MonitorKind::AssumptionMonitor, a_id,
                                "deviation:" + a_id.str()});
        }
        rep.assumptions.at(a_id).status = AssumptionStatus::Monitored;
        for (const auto& [mid, monitor] : rep.assumption_monitors) {
            if (monitor.target == a_id) {
                ensure_strategies(rep, mid, TriggerSource::FromAssumptionMonitor);
            }
        }
    }
    return std::nullopt;
}

void Engine::derive_for_constraints(Representation& rep,
                                    const std::set<ElementId>& constraint_ids) {
    for (const auto& c_id : constraint_ids) {
        bool monitored = false;
        for (const auto& [mid, monitor] : rep.constraint_monitors) {
            if (monitor.target == c_id) {
                monitored = true;
                break;
            }
        }
        if (!monitored) {
            ElementId mon_id = derived_monitor_id(c_id);
            if (rep.contains_id(mon_id)) id_in_use("monitor", mon_id);
            rep.constraint_monitors.emplace(
                mon_id, Monitor{mon_id, MonitorKind::ConstraintSatisfactionMonitor, c_id,
                                "satisfaction:" + c_id.str()});
        }
        for (const auto& [mid, monitor] : rep.constraint_monitors) {
            if (monitor.target == c_id) {
                ensure_strategies(rep, mid, TriggerSource::FromConstraintMonitor);
            }
        }
    }
}

void Engine::compile_arguments(Representation& rep) {
    auto try_target = [&](const ElementId& target) {
        if (rep.argument_for(target)) return;
        auto candidates = candidates_for(rep, target);
        if (candidates.empty()) return;
        ElementId arg_id = derived_argument_id(target);
        if (rep.contains_id(arg_id)) id_in_use("argument", arg_id);
        rep.arguments.emplace(arg_id,
                              EvidenceArgument(arg_id, target, {candidates.front().id},
                                               "validity of " + target.str()));
    };
    // Targets in the order the argumentation sequence compiles them: the
    // model, then assumptions, assumption monitors, constraints, constraint
    // monitors and strategies.
    for (const auto& [id, x] : rep.model) try_target(id);
    for (const auto& [id, x] : rep.assumptions) try_target(id);
    for (const auto& [id, x] : rep.assumption_monitors) try_target(id);
    for (const auto& [id, x] : rep.constraints) try_target(id);
    for (const auto& [id, x] : rep.constraint_monitors) try_target(id);
    for (const auto& [id, x] : rep.strategies) try_target(id);
}

std::optional<Engine::StepFail> Engine::enhance_quality(Representation& rep) {
    for (int round = 1; round <= config_.max_quality_enhancement_rounds; ++round) {
        QualityVerdict verdict = check_argument_quality(rep);
        if (verdict.overall_complies) return std::nullopt;

        bool attached = false;
        for (const auto& cv : verdict.per_criterion) {
            if (cv.complies) continue;
            auto crit_it = rep.criteria.find(cv.criterion);
            if (crit_it == rep.criteria.end() ||
                crit_it->second.severity != CriterionSeverity::Blocking) {
                continue;
            }
            for (const auto& offender : cv.offenders) {
                ElementId target;
                switch (crit_it->second.rule.kind) {
                case RuleKind::EveryAssumptionArgued: target = offender; break;
                case RuleKind::MinimumEvidenceStrength:
                case RuleKind::MinimumSourceDiversity: {
                    auto arg_it = rep.arguments.find(offender);
                    if (arg_it == rep.arguments.end()) continue;
                    target = arg_it->second.target;
                    break;
                }
                default: continue; // not fixable by attaching evidence
                }
                auto candidates = candidates_for(rep, target);
                if (candidates.empty()) continue;
                const ElementId item_id = candidates.front().id;
                if (const EvidenceArgument* existing = rep.argument_for(target)) {
                    rep.arguments.at(existing->id).evidence.insert(item_id);
                } else {
                    ElementId arg_id = derived_argument_id(target);
                    if (rep.contains_id(arg_id)) id_in_use("argument", arg_id);
                    rep.arguments.emplace(arg_id,
                                          EvidenceArgument(arg_id, target, {item_id},
                                                           "validity of " + target.str()));
                }
                attached = true;
            }
        }
        if (!attached) {
            return StepFail{FailureReason::QualityIterationFailed,
                            quality_failure_note(rep, verdict)};
        }
    }
    QualityVerdict final_verdict = check_argument_quality(rep);
    if (final_verdict.overall_complies) return std::nullopt;
    return StepFail{FailureReason::QualityIterationFailed,
                    "quality enhancement rounds exhausted: " +
                        quality_failure_note(rep, final_verdict)};
}

std::optional<Engine::StepFail> Engine::transform_core(
    Representation& rep, const ElementId& focused_id,
    const std::vector<DeclarativePredicate>& conditions, int produced_abstraction,
    const TransformationRule* rule_override, std::set<ElementId>& side_collected,
    std::vector<LineageRecord>& sink) {
    auto f_it = rep.model.find(focused_id);
    if (f_it == rep.model.end()) {
        throw std::invalid_argument("focused id is not a model element: " + focused_id.str());
    }
    const ModelElement focused = f_it->second;

    // Conditions and rule applicability are judged on the representation with
    // the focused element held out; everything else stays fixed.
    Representation minus = rep;
    minus.model.erase(focused_id);

    for (const auto& condition : conditions) {
        if (!condition.eval(minus)) {
            std::string note = "condition unsatisfiable: " + condition.describe();
            sink.push_back(LineageRecord{rep.level, "algo3b", "-", {focused_id.str()}, {},
                                         "failed", note});
            return StepFail{FailureReason::ConditionUnsatisfiable, note};
        }
    }

    const TransformationRule* rule = nullptr;
    if (rule_override) {
        if (rule_override->focused == focused_id && rule_override->condition.eval(minus)) {
            rule = rule_override;
        }
    } else {
        for (const TransformationRule* candidate : catalog_.rules_for(focused_id)) {
            if (candidate->condition.eval(minus)) {
                rule = candidate;
                break;
            }
        }
    }
    if (!rule) {
        std::string note = rule_override ? "alternative " + rule_override->id.str() +
                                               " not applicable to " + focused_id.str()
                                         : "no applicable rule for " + focused_id.str();
        sink.push_back(LineageRecord{rep.level, "algo3b",
                                     rule_override ? rule_override->id.str() : "-",
                                     {focused_id.str()}, {}, "failed", note});
        return StepFail{FailureReason::NoRuleApplies, note};
    }

    // Splice: the focused element leaves, its transforms enter with lineage.
    rep.model.erase(focused_id);
    std::vector<ElementId> produced_ids;
    std::vector<std::string> produced_strs;
    for (const auto& def : rule->produces) {
        if (rep.contains_id(def.id)) {
            throw std::invalid_argument("rule " + rule->id.str() +
                                        " produces an id already in use: " + def.id.str());
        }
        ModelElement element;
        element.id = def.id;
        element.aspect = focused.aspect;
        element.statement = def.statement;
        element.abstraction = produced_abstraction;
        element.depends_on = def.depends_on;
        element.lineage = focused_id;
        rep.model.emplace(def.id, std::move(element));
        produced_ids.push_back(def.id);
        produced_strs.push_back(def.id.str());
    }

    // References to the replaced element follow the transformation.
    auto rewrite = [&](std::set<ElementId>& ids) {
        if (ids.erase(focused_id) > 0) {
            ids.insert(produced_ids.begin(), produced_ids.end());
        }
    };
    for (auto& [eid, element] : rep.model) rewrite(element.depends_on);
    for (auto& [aid, assumption] : rep.assumptions) rewrite(assumption.scope);
    for (auto it = rep.arguments.begin(); it != rep.arguments.end();) {
        if (it->second.target == focused_id) {
            it = rep.arguments.erase(it);
        } else {
            ++it;
        }
    }

    // Transformation-related elicitation: side assumptions and their evidence.
    std::set<ElementId> new_assumptions;
    for (const auto& def : rule->side_assumptions) {
        auto existing = rep.assumptions.find(def.id);
        if (existing != rep.assumptions.end()) {
            if (existing->second.statement != def.statement ||
                existing->second.scope != def.scope) {
                throw std::invalid_argument("rule " + rule->id.str() +
                                            " redefines assumption " + def.id.str());
            }
        } else {
            if (rep.contains_id(def.id)) {
                throw std::invalid_argument("rule " + rule->id.str() +
                                            " reuses id " + def.id.str());
            }
            rep.assumptions.emplace(def.id,
                                    Assumption(def.id, def.statement, def.scope,
                                               AssumptionStatus::Elicited,
                                               AssumptionOrigin::TransformationSideEffect));
            new_assumptions.insert(def.id);
        }
        side_collected.insert(def.id);
        rep.pending_extra_assumptions.insert(def.id);
        produced_strs.push_back(def.id.str());
    }
    for (const auto& decl : rule->evidence) {
        auto existing = rep.evidence_items.find(decl.item.id);
        if (existing != rep.evidence_items.end()) {
            if (!(existing->second == decl.item)) {
                throw std::invalid_argument("rule " + rule->id.str() +
                                            " redefines evidence item " + decl.item.id.str());
            }
        } else {
            if (rep.contains_id(decl.item.id)) {
                throw std::invalid_argument("rule " + rule->id.str() + " reuses id " +
                                            decl.item.id.str());
            }
            rep.evidence_items.emplace(decl.item.id, decl.item);
        }
    }

    if (auto failure = derive_for_assumptions(rep, new_assumptions)) return failure;
    compile_arguments(rep);
    rep.status = RepStatus::Candidate;
    sink.push_back(LineageRecord{rep.level, "algo3b", rule->id.str(), {focused_id.str()},
                                 produced_strs, "applied", ""});
    if (auto failure = enhance_quality(rep)) {
        sink.push_back(LineageRecord{rep.level, "algo3b", rule->id.str(), {focused_id.str()},
                                     {}, "failed", failure->note});
        return failure;
    }
    return std::nullopt;
}

RepResult Engine::self_consistency_impl(Representation rep, std::set<ElementId> extra,
                                        std::vector<LineageRecord> records) {
    std::set<ElementId> pending_in = std::move(extra);
    pending_in.insert(rep.pending_extra_assumptions.begin(),
                      rep.pending_extra_assumptions.end());

    // Trivial fixpoint: nothing pending on an already self-consistent value.
    if (pending_in.empty() && rep.status == RepStatus::SelfConsistent) {
        RepResult result;
        result.rep = std::move(rep);
        result.records = std::move(records);
        return result;
    }

    auto fail = [&](FailureReason reason, std::string note) {
        records.push_back(LineageRecord{rep.level, "algo2", "-", {}, {}, "failed", note});
        RepResult result;
        result.failure = EngineFailure{rep.level, reason, records, note};
        result.records = records;
        return result;
    };

    std::set<std::set<ElementId>> seen;
    int cycles = 0;
    for (;;) {
        if (++cycles > config_.max_self_consistency_cycles) {
            return fail(FailureReason::QualityIterationFailed,
                        "self-consistency cycle cap exceeded after " +
                            std::to_string(config_.max_self_consistency_cycles) + " cycles");
        }
        if (!pending_in.empty()) {
            if (!seen.insert(pending_in).second) {
                return fail(FailureReason::QualityIterationFailed,
                            "cycle detected: extra assumption set repeated");
            }
            records.push_back(LineageRecord{rep.level, "algo2", "-",
                                            ids_to_strings(pending_in), {}, "note",
                                            "cycle " + std::to_string(cycles)});
        }
        rep.pending_extra_assumptions.clear();
        rep.status = RepStatus::Candidate;

        for (const auto& a_id : pending_in) {
            auto a_it = rep.assumptions.find(a_id);
            if (a_it == rep.assumptions.end()) {
                throw std::invalid_argument("extra assumption is not part of the representation: " +
                                            a_id.str());
            }
            std::vector<ElementId> affected;
            for (const auto& [eid, element] : rep.model) {
                if (a_it->second.scope.count(eid)) affected.push_back(eid);
            }
            for (const auto& f_id : affected) {
                if (!rep.model.count(f_id)) continue; // replaced earlier in this pass
                std::vector<DeclarativePredicate> conditions{DeclarativePredicate{
                    PredicateKind::ContainsAssumption, a_id, 0}};
                std::set<ElementId> side;
                auto step = transform_core(rep, f_id, conditions, rep.level, nullptr, side,
                                           records);
                if (step) return fail(step->reason, step->note);
            }
            compile_arguments(rep);
            if (auto step = enhance_quality(rep)) return fail(step->reason, step->note);
        }
        if (pending_in.empty()) {
            // Candidate with no extra assumptions: one verification pass.
            compile_arguments(rep);
            if (auto step = enhance_quality(rep)) return fail(step->reason, step->note);
        }

        if (rep.pending_extra_assumptions.empty()) {
            rep.status = RepStatus::SelfConsistent;
            RepResult result;
            result.rep = std::move(rep);
            result.records = std::move(records);
            return result;
        }
        pending_in = rep.pending_extra_assumptions;
    }
}

RepResult Engine::transform_impl(Representation rep, const std::set<ElementId>& focused,
                                 const std::vector<DeclarativePredicate>& extra_conditions,
                                 int produced_abstraction,
                                 const std::map<ElementId, ElementId>& rule_overrides) {
    std::vector<LineageRecord> records;
    std::set<ElementId> side_collected;
    bool transformed = false;
    for (const auto& f_id : focused) {
        const TransformationRule* override_rule = nullptr;
        auto ov = rule_overrides.find(f_id);
        if (ov != rule_overrides.end()) {
            override_rule = catalog_.find(ov->second);
            if (!override_rule) {
                throw std::invalid_argument("unknown rule id: " + ov->second.str());
            }
        }
        auto step = transform_core(rep, f_id, extra_conditions, produced_abstraction,
                                   override_rule, side_collected, records);
        if (step) {
            RepResult result;
            result.failure = EngineFailure{rep.level, step->reason, records, step->note};
            result.records = std::move(records);
            return result;
        }
        transformed = true;
    }
    if (!rep.pending_extra_assumptions.empty()) {
        // Side assumptions accumulated: hand off to the self-consistency loop.
        return self_consistency_impl(std::move(rep), {}, std::move(records));
    }
    if (transformed) rep.status = RepStatus::SelfConsistent;
    RepResult result;
    result.rep = std::move(rep);
    result.records = std::move(records);
    return result;
}

EngineOutcome Engine::attempt_level(const RepresentationStack& base,
                                    const std::set<ElementId>& focused,
                                    const std::map<ElementId, ElementId>& rule_overrides) {
    Representation rep = base.top();
    rep.level += 1;
    const int new_level = rep.level;
    auto result = transform_impl(std::move(rep), focused, {}, new_level, rule_overrides);

    result.records.push_back(LineageRecord{new_level, "algo3a", "-", ids_to_strings(focused),
                                           {}, result.ok() ? "applied" : "failed",
                                           result.ok() ? "" : result.failure->note});

    EngineOutcome out;
    out.stack = base;
    out.stack.lineage_log.insert(out.stack.lineage_log.end(), result.records.begin(),
                                 result.records.end());
    if (!result.ok()) {
        out.failure = result.failure;
        out.failure->level = new_level;
        out.failure->trace = result.records;
        return out;
    }

    // Produced ids must be fresh across the whole stack.
    for (const auto& record : result.records) {
        if (record.algorithm != "algo3b" || record.outcome != "applied") continue;
        for (const auto& id_str : record.produced) {
            ElementId pid = ElementId::parse(id_str);
            if (base.contains_id(pid)) {
                throw std::invalid_argument("produced id already used at a lower level: " +
                                            id_str);
            }
        }
    }
    out.stack.levels.push_back(std::move(*result.rep));
    return out;
}

EngineOutcome Engine::initialize(const GoalDocument& goal,
                                 const std::vector<QualityCriterion>& criteria) {
    if (criteria.empty()) {
        throw std::invalid_argument("criteria must be non-empty");
    }
    bind_goal_evidence(goal);

    std::vector<LineageRecord> records;
    auto fail = [&](FailureReason reason, std::string note) {
        records.push_back(LineageRecord{0, "algo1", "-", {}, {}, "failed", note});
        EngineOutcome out;
        out.stack.lineage_log = records;
        out.failure = EngineFailure{0, reason, records, std::move(note)};
        return out;
    };

    if (goal.elements.empty()) {
        return fail(FailureReason::NoRuleApplies, "goal declares no model elements");
    }

    Representation rep;
    rep.level = 0;
    rep.status = RepStatus::Candidate;

    std::vector<std::string> created;
    for (const auto& def : goal.elements) {
        if (rep.contains_id(def.id)) {
            throw std::invalid_argument("duplicate id in goal: " + def.id.str());
        }
        ModelElement element;
        element.id = def.id;
        element.aspect = def.aspect;
        element.statement = def.statement;
        element.abstraction = 0;
        element.depends_on = def.depends_on;
        rep.model.emplace(def.id, std::move(element));
        created.push_back(def.id.str());
    }
    for (const auto& def : goal.assumptions) {
        if (rep.contains_id(def.id)) {
            throw std::invalid_argument("duplicate id in goal: " + def.id.str());
        }
        rep.assumptions.emplace(def.id, Assumption(def.id, def.statement, def.scope,
                                                   AssumptionStatus::Elicited,
                                                   AssumptionOrigin::InitialElicitation));
        if (def.pending) rep.pending_extra_assumptions.insert(def.id);
    }
    for (const auto& def : goal.constraints) {
        if (rep.contains_id(def.id)) {
            throw std::invalid_argument("duplicate id in goal: " + def.id.str());
        }
        rep.constraints.emplace(def.id, Constraint(def.id, def.statement, def.guarded_losses,
                                                   def.risk_rating));
    }
    for (const auto& decl : goal.evidence) {
        if (rep.contains_id(decl.item.id)) {
            throw std::invalid_argument("duplicate id in goal: " + decl.item.id.str());
        }
        rep.evidence_items.emplace(decl.item.id, decl.item);
    }
    for (const auto& criterion : criteria) {
        if (rep.contains_id(criterion.id)) {
            throw std::invalid_argument("duplicate id in goal: " + criterion.id.str());
        }
        rep.criteria.emplace(criterion.id, criterion);
    }

    {
        auto violations = validate_representation(rep);
        if (!violations.empty()) {
            throw std::invalid_argument("goal document invalid: " +
                                        first_violation_text(violations));
        }
    }

    std::set<ElementId> assumption_ids;
    for (const auto& [aid, a] : rep.assumptions) assumption_ids.insert(aid);
    std::set<ElementId> constraint_ids;
    for (const auto& [cid, c] : rep.constraints) constraint_ids.insert(cid);
    if (auto step = derive_for_assumptions(rep, assumption_ids)) {
        return fail(step->reason, step->note);
    }
    derive_for_constraints(rep, constraint_ids);
    records.push_back(
        LineageRecord{0, "algo1", "-", {}, created, "applied", "initialized level 0"});

    compile_arguments(rep);
    if (auto step = enhance_quality(rep)) return fail(step->reason, step->note);

    auto sc = self_consistency_impl(std::move(rep), {}, std::move(records));
    EngineOutcome out;
    if (!sc.ok()) {
        out.stack.lineage_log = sc.records;
        out.failure = sc.failure;
        return out;
    }
    out.stack.levels.push_back(std::move(*sc.rep));
    out.stack.lineage_log = std::move(sc.records);
    return out;
}

RepResult Engine::self_consistency(const Representation& rep, const std::set<ElementId>& extra) {
    auto violations = validate_representation(rep);
    if (!violations.empty()) {
        throw std::invalid_argument("representation structurally invalid: " +
                                    first_violation_text(violations));
    }
    for (const auto& a_id : extra) {
        if (!rep.assumptions.count(a_id)) {
            throw std::invalid_argument("extra id is not an assumption of the representation: " +
                                        a_id.str());
        }
    }
    return self_consistency_impl(rep, extra, {});
}

RepResult Engine::transform_under_condition(
    const Representation& rep, const std::set<ElementId>& focused,
    const std::vector<DeclarativePredicate>& extra_conditions) {
    auto violations = validate_representation(rep);
    if (!violations.empty()) {
        throw std::invalid_argument("representation structurally invalid: " +
                                    first_violation_text(violations));
    }
    return transform_impl(rep, focused, extra_conditions, rep.level, {});
}

EngineOutcome Engine::transform_intended(const RepresentationStack& stack,
                                         const std::set<ElementId>& focused) {
    // Violated preconditions are input errors, reported distinctly from
    // engine failures.
    if (stack.levels.empty()) {
        throw std::invalid_argument("stack has no levels");
    }
    if (stack.top().status != RepStatus::SelfConsistent) {
        throw std::invalid_argument("top level is not self-consistent");
    }
    auto cond2 = check_cond2(stack);
    if (!cond2.complies) {
        throw std::invalid_argument(
            "stack violates per-level completeness/quality at level " +
            std::to_string(cond2.first_failing_level.value_or(-1)));
    }
    for (const auto& f_id : focused) {
        if (!stack.top().model.count(f_id)) {
            throw std::invalid_argument("focused id is not a top-level model element: " +
                                        f_id.str());
        }
    }
    return attempt_level(stack, focused, {});
}

EngineOutcome Engine::redesign_from_level(const RepresentationStack& stack, int failed_level) {
    if (failed_level < 1) {
        throw std::invalid_argument("failed_level must be >= 1");
    }
    if (static_cast<int>(stack.levels.size()) < failed_level) {
        throw std::invalid_argument("stack does not contain all levels below " +
                                    std::to_string(failed_level));
    }
    for (int i = 0; i < failed_level; ++i) {
        if (stack.levels[i].status != RepStatus::SelfConsistent) {
            throw std::invalid_argument("level " + std::to_string(i) +
                                        " below the failure is not self-consistent");
        }
    }

    std::vector<LineageRecord> appended;
    auto tried_rules = [&](int level, const ElementId& fid) {
        std::set<ElementId> rules;
        auto scan = [&](const std::vector<LineageRecord>& log) {
            for (const auto& record : log) {
                if (record.level == level && record.algorithm == "algo3b" &&
                    record.rule != "-" && record.sources.size() == 1 &&
                    record.sources[0] == fid.str()) {
                    rules.insert(ElementId::parse(record.rule));
                }
            }
        };
        scan(stack.lineage_log);
        scan(appended);
        return rules;
    };
    auto focused_for = [&](int level) -> std::optional<std::set<ElementId>> {
        const LineageRecord* found = nullptr;
        for (const auto& record : stack.lineage_log) {
            if (record.level == level && record.algorithm == "algo3a") found = &record;
        }
        if (!found) return std::nullopt;
        std::set<ElementId> focused;
        for (const auto& s : found->sources) focused.insert(ElementId::parse(s));
        return focused;
    };

    const int lowest = std::max(0, failed_level - 1 - config_.redesign_max_levels_up);
    int last_attempted = failed_level - 1;

    for (int j = failed_level - 1; j >= lowest; --j) {
        last_attempted = j;
        auto focused = focused_for(j + 1);
        if (!focused.has_value()) continue;

        // Abandon everything above j; the log keeps the discarded branches.
        for (int discarded = static_cast<int>(stack.levels.size()) - 1; discarded > j;
             --discarded) {
            appended.push_back(LineageRecord{discarded, "redesign", "-", {}, {}, "discarded",
                                             "level discarded while redesigning from level " +
                                                 std::to_string(j)});
        }
        RepresentationStack base;
        base.levels.assign(stack.levels.begin(), stack.levels.begin() + j + 1);
        base.lineage_log = stack.lineage_log;
        base.lineage_log.insert(base.lineage_log.end(), appended.begin(), appended.end());

        for (const auto& fid : *focused) {
            for (const auto& rule : catalog_.rules) {
                if (rule.focused != fid) continue;
                if (tried_rules(j + 1, fid).count(rule.id)) continue;

                std::map<ElementId, ElementId> overrides{{fid, rule.id}};
                EngineOutcome attempt = attempt_level(base, *focused, overrides);
                std::vector<LineageRecord> attempt_records(
                    attempt.stack.lineage_log.begin() +
                        static_cast<std::ptrdiff_t>(base.lineage_log.size()),
                    attempt.stack.lineage_log.end());
                appended.insert(appended.end(), attempt_records.begin(), attempt_records.end());
                if (attempt.ok()) {
                    return attempt;
                }
                base.lineage_log = attempt.stack.lineage_log;
            }
        }
    }

    EngineOutcome out;
    out.stack = stack;
    out.stack.lineage_log.insert(out.stack.lineage_log.end(), appended.begin(), appended.end());
    out.failure = EngineFailure{last_attempted, FailureReason::NoRuleApplies, appended,
                                "redesign alternatives exhausted"};
    out.stack.lineage_log.push_back(LineageRecord{last_attempted, "redesign", "-", {}, {},
                                                  "failed", "redesign alternatives exhausted"});
    return out;
}

Cond2Verdict check_cond2(const RepresentationStack& stack) {
    Cond2Verdict verdict;
    verdict.complies = true;
    if (stack.levels.empty()) {
        verdict.advisory = "no levels";
        return verdict;
    }
    for (const auto& rep : stack.levels) {
        Cond2LevelDetail detail;
        detail.level = rep.level;
        detail.structural = validate_representation(rep);
        detail.quality = check_argument_quality(rep);
        bool ok = detail.structural.empty() && detail.quality.overall_complies;
        if (!ok && !verdict.first_failing_level.has_value()) {
            verdict.first_failing_level = rep.level;
        }
        verdict.complies = verdict.complies && ok;
        verdict.details.push_back(std::move(detail));
    }
    return verdict;
}

EngineOutcome initialize(const GoalDocument& goal, const TransformationCatalog& catalog,
                         const std::vector<QualityCriterion>& criteria,
                         const EngineConfig& config) {
    Engine engine(catalog, config);
    return engine.initialize(goal, criteria);
}

RepResult self_consistency(const Representation& rep, const std::set<ElementId>& extra,
                           const TransformationCatalog& catalog, const EngineConfig& config) {
    Engine engine(catalog, config);
    return engine.self_consistency(rep, extra);
}

EngineOutcome transform_intended(const RepresentationStack& stack,
                                 const std::set<ElementId>& focused,
                                 const TransformationCatalog& catalog,
                                 const EngineConfig& config) {
    Engine engine(catalog, config);
    return engine.transform_intended(stack, focused);
}

RepResult transform_under_condition(const Representation& rep, const std::set<ElementId>& focused,
                                    const std::vector<DeclarativePredicate>& extra_conditions,
                                    const TransformationCatalog& catalog,
                                    const EngineConfig& config) {
    Engine engine(catalog, config);
    return engine.transform_under_condition(rep, focused, extra_conditions);
}

EngineOutcome redesign_from_level(const RepresentationStack& stack, int failed_level,
                                  const TransformationCatalog& catalog,
                                  const EngineConfig& config) {
    Engine engine(catalog, config);
    return engine.redesign_from_level(stack, failed_level);
}

} // namespace triadval::engine
