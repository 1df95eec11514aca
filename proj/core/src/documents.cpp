#include "triadval/documents.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace triadval::doc {

using nlohmann::json;

namespace {

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

const json& require(const json& j, const char* key, const std::string& context) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(context + ": missing key '" + key + "'");
    }
    return *it;
}

std::string require_string(const json& j, const char* key, const std::string& context) {
    const json& value = require(j, key, context);
    if (!value.is_string()) {
        throw ParseError(context + ": key '" + key + "' must be a string");
    }
    return value.get<std::string>();
}

int require_int(const json& j, const char* key, const std::string& context) {
    const json& value = require(j, key, context);
    if (!value.is_number_integer()) {
        throw ParseError(context + ": key '" + key + "' must be an integer");
    }
    return value.get<int>();
}

double require_number(const json& j, const char* key, const std::string& context) {
    const json& value = require(j, key, context);
    if (!value.is_number()) {
        throw ParseError(context + ": key '" + key + "' must be a number");
    }
    return value.get<double>();
}

const json& require_array(const json& j, const char* key, const std::string& context) {
    const json& value = require(j, key, context);
    if (!value.is_array()) {
        throw ParseError(context + ": key '" + key + "' must be an array");
    }
    return value;
}

ElementId parse_id(const json& value, const std::string& context) {
    if (!value.is_string()) {
        throw ParseError(context + ": element id must be a string");
    }
    try {
        return ElementId::parse(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(context + ": " + e.what());
    }
}

ElementId require_id(const json& j, const char* key, const std::string& context) {
    return parse_id(require(j, key, context), context);
}

std::set<ElementId> parse_id_set(const json& value, const std::string& context) {
    if (!value.is_array()) {
        throw ParseError(context + ": expected an array of element ids");
    }
    std::set<ElementId> out;
    for (const auto& entry : value) {
        out.insert(parse_id(entry, context));
    }
    return out;
}

json id_set_to_json(const std::set<ElementId>& ids) {
    json out = json::array();
    for (const auto& id : ids) out.push_back(id.str());
    return out;
}

json strings_to_json(const std::vector<std::string>& values) {
    json out = json::array();
    for (const auto& value : values) out.push_back(value);
    return out;
}

template <typename FromString>
auto parse_enum(const json& j, const char* key, const std::string& context, FromString from) {
    std::string text = require_string(j, key, context);
    try {
        return from(text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(context + ": " + e.what());
    }
}

json parse_text(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw ParseError(what + ": document is not valid JSON");
    }
    return j;
}

// --- representation stack ---------------------------------------------

json element_to_json(const ModelElement& element) {
    json j;
    j["id"] = element.id.str();
    j["aspect"] = to_string(element.aspect);
    j["statement"] = element.statement;
    j["abstraction"] = element.abstraction;
    j["depends_on"] = id_set_to_json(element.depends_on);
    if (element.lineage.has_value()) j["lineage"] = element.lineage->str();
    return j;
}

ModelElement element_from_json(const json& j) {
    const std::string context = "model element";
    ModelElement element;
    element.id = require_id(j, "id", context);
    element.aspect = parse_enum(j, "aspect", context, aspect_from_string);
    element.statement = require_string(j, "statement", context);
    element.abstraction = require_int(j, "abstraction", context);
    element.depends_on = parse_id_set(require(j, "depends_on", context), context);
    if (j.contains("lineage")) element.lineage = parse_id(j["lineage"], context);
    return element;
}

json rule_to_json(const CriterionRule& rule) {
    json j;
    j["kind"] = to_string(rule.kind);
    if (rule.kind == RuleKind::MinimumEvidenceStrength) j["threshold"] = rule.threshold;
    if (rule.kind == RuleKind::MinimumSourceDiversity) j["count"] = rule.count;
    if (rule.kind == RuleKind::Custom) j["predicate"] = rule.predicate_key;
    return j;
}

CriterionRule rule_from_json(const json& j) {
    const std::string context = "criterion rule";
    RuleKind kind = parse_enum(j, "kind", context, rule_kind_from_string);
    try {
        switch (kind) {
        case RuleKind::EveryAssumptionArgued: return CriterionRule::every_assumption_argued();
        case RuleKind::EveryConstraintHasSatisfactionMonitor:
            return CriterionRule::every_constraint_has_satisfaction_monitor();
        case RuleKind::EveryMonitorHasRecoveryAndDegradation:
            return CriterionRule::every_monitor_has_recovery_and_degradation();
        case RuleKind::MinimumEvidenceStrength:
            return CriterionRule::minimum_evidence_strength(
                require_number(j, "threshold", context));
        case RuleKind::MinimumSourceDiversity:
            return CriterionRule::minimum_source_diversity(require_int(j, "count", context));
        case RuleKind::Custom:
            return CriterionRule::custom(require_string(j, "predicate", context));
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(context + ": " + e.what());
    }
    throw ParseError(context + ": unknown kind");
}

json representation_to_json(const Representation& rep) {
    json j;
    j["level"] = rep.level;
    j["status"] = to_string(rep.status);

    json model = json::array();
    for (const auto& [id, element] : rep.model) model.push_back(element_to_json(element));
    j["model"] = std::move(model);

    json constraints = json::array();
    for (const auto& [id, constraint] : rep.constraints) {
        json c;
        c["id"] = id.str();
        c["statement"] = constraint.statement;
        json losses = json::array();
        for (const auto& loss : constraint.guarded_losses) losses.push_back(loss);
        c["guarded_losses"] = std::move(losses);
        c["risk_rating"] = constraint.risk_rating;
        constraints.push_back(std::move(c));
    }
    j["constraints"] = std::move(constraints);

    json assumptions = json::array();
    for (const auto& [id, assumption] : rep.assumptions) {
        json a;
        a["id"] = id.str();
        a["statement"] = assumption.statement;
        a["scope"] = id_set_to_json(assumption.scope);
        a["status"] = to_string(assumption.status);
        a["origin"] = to_string(assumption.origin);
        assumptions.push_back(std::move(a));
    }
    j["assumptions"] = std::move(assumptions);

    auto monitors_to_json = [](const std::map<ElementId, Monitor>& monitors) {
        json out = json::array();
        for (const auto& [id, monitor] : monitors) {
            json m;
            m["id"] = id.str();
            m["target"] = monitor.target.str();
            m["predicate"] = monitor.predicate;
            out.push_back(std::move(m));
        }
        return out;
    };
    j["assumption_monitors"] = monitors_to_json(rep.assumption_monitors);
    j["constraint_monitors"] = monitors_to_json(rep.constraint_monitors);

    json strategies = json::array();
    for (const auto& [id, strategy] : rep.strategies) {
        json s;
        s["id"] = id.str();
        s["kind"] = to_string(strategy.kind);
        s["trigger_source"] = to_string(strategy.trigger_source);
        s["trigger"] = strategy.trigger.str();
        s["action"] = strategy.action;
        strategies.push_back(std::move(s));
    }
    j["strategies"] = std::move(strategies);

    json arguments = json::array();
    for (const auto& [id, argument] : rep.arguments) {
        json a;
        a["id"] = id.str();
        a["target"] = argument.target.str();
        a["evidence"] = id_set_to_json(argument.evidence);
        a["claim"] = argument.claim;
        arguments.push_back(std::move(a));
    }
    j["arguments"] = std::move(arguments);

    json criteria = json::array();
    for (const auto& [id, criterion] : rep.criteria) {
        json c;
        c["id"] = id.str();
        c["rule"] = rule_to_json(criterion.rule);
        c["severity"] = to_string(criterion.severity);
        criteria.push_back(std::move(c));
    }
    j["criteria"] = std::move(criteria);

    json items = json::array();
    for (const auto& [id, item] : rep.evidence_items) {
        json e;
        e["id"] = id.str();
        e["source"] = to_string(item.source);
        e["strength"] = item.strength;
        e["description"] = item.description;
        items.push_back(std::move(e));
    }
    j["evidence_items"] = std::move(items);

    j["pending_extra_assumptions"] = id_set_to_json(rep.pending_extra_assumptions);
    return j;
}

Representation representation_from_json(const json& j) {
    const std::string context = "representation";
    Representation rep;
    rep.level = require_int(j, "level", context);
    rep.status = rep_status_from_string(require_string(j, "status", context));

    for (const auto& entry : require_array(j, "model", context)) {
        ModelElement element = element_from_json(entry);
        rep.model.emplace(element.id, std::move(element));
    }
    for (const auto& entry : require_array(j, "constraints", context)) {
        const std::string c = "constraint";
        std::set<std::string> losses;
        for (const auto& loss : require_array(entry, "guarded_losses", c)) {
            if (!loss.is_string()) throw ParseError(c + ": guarded loss must be a string");
            losses.insert(loss.get<std::string>());
        }
        try {
            Constraint constraint(require_id(entry, "id", c), require_string(entry, "statement", c),
                                  std::move(losses), require_int(entry, "risk_rating", c));
            rep.constraints.emplace(constraint.id, std::move(constraint));
        } catch (const std::invalid_argument& e) {
            throw ParseError(c + ": " + e.what());
        }
    }
    for (const auto& entry : require_array(j, "assumptions", context)) {
        const std::string c = "assumption";
        try {
            Assumption assumption(require_id(entry, "id", c),
                                  require_string(entry, "statement", c),
                                  parse_id_set(require(entry, "scope", c), c),
                                  parse_enum(entry, "status", c, assumption_status_from_string),
                                  parse_enum(entry, "origin", c, assumption_origin_from_string));
            rep.assumptions.emplace(assumption.id, std::move(assumption));
        } catch (const std::invalid_argument& e) {
            throw ParseError(c + ": " + e.what());
        }
    }
    auto monitors_from_json = [&](const char* key, MonitorKind kind,
                                  std::map<ElementId, Monitor>& out) {
        for (const auto& entry : require_array(j, key, context)) {
            const std::string c = "monitor";
            Monitor monitor;
            monitor.id = require_id(entry, "id", c);
            monitor.kind = kind;
            monitor.target = require_id(entry, "target", c);
            monitor.predicate = require_string(entry, "predicate", c);
            out.emplace(monitor.id, std::move(monitor));
        }
    };
    monitors_from_json("assumption_monitors", MonitorKind::AssumptionMonitor,
                       rep.assumption_monitors);
    monitors_from_json("constraint_monitors", MonitorKind::ConstraintSatisfactionMonitor,
                       rep.constraint_monitors);

    for (const auto& entry : require_array(j, "strategies", context)) {
        const std::string c = "strategy";
        Strategy strategy;
        strategy.id = require_id(entry, "id", c);
        strategy.kind = parse_enum(entry, "kind", c, strategy_kind_from_string);
        strategy.trigger_source = parse_enum(entry, "trigger_source", c,
                                             trigger_source_from_string);
        strategy.trigger = require_id(entry, "trigger", c);
        strategy.action = require_string(entry, "action", c);
        rep.strategies.emplace(strategy.id, std::move(strategy));
    }
    for (const auto& entry : require_array(j, "arguments", context)) {
        const std::string c = "argument";
        try {
            EvidenceArgument argument(require_id(entry, "id", c), require_id(entry, "target", c),
                                      parse_id_set(require(entry, "evidence", c), c),
                                      require_string(entry, "claim", c));
            rep.arguments.emplace(argument.id, std::move(argument));
        } catch (const std::invalid_argument& e) {
            throw ParseError(c + ": " + e.what());
        }
    }
    for (const auto& entry : require_array(j, "criteria", context)) {
        const std::string c = "criterion";
        QualityCriterion criterion;
        criterion.id = require_id(entry, "id", c);
        criterion.rule = rule_from_json(require(entry, "rule", c));
        criterion.severity = parse_enum(entry, "severity", c, severity_from_string);
        rep.criteria.emplace(criterion.id, std::move(criterion));
    }
    for (const auto& entry : require_array(j, "evidence_items", context)) {
        const std::string c = "evidence item";
        try {
            EvidenceItem item(require_id(entry, "id", c),
                              parse_enum(entry, "source", c, evidence_source_from_string),
                              require_number(entry, "strength", c),
                              require_string(entry, "description", c));
            rep.evidence_items.emplace(item.id, std::move(item));
        } catch (const std::invalid_argument& e) {
            throw ParseError(c + ": " + e.what());
        }
    }
    rep.pending_extra_assumptions =
        parse_id_set(require(j, "pending_extra_assumptions", context), context);
    return rep;
}

json lineage_to_json(const LineageRecord& record) {
    json j;
    j["level"] = record.level;
    j["algorithm"] = record.algorithm;
    j["rule"] = record.rule;
    j["sources"] = strings_to_json(record.sources);
    j["produced"] = strings_to_json(record.produced);
    j["outcome"] = record.outcome;
    j["note"] = record.note;
    return j;
}

LineageRecord lineage_from_json(const json& j) {
    const std::string context = "lineage record";
    LineageRecord record;
    record.level = require_int(j, "level", context);
    record.algorithm = require_string(j, "algorithm", context);
    record.rule = require_string(j, "rule", context);
    for (const auto& s : require_array(j, "sources", context)) {
        record.sources.push_back(s.get<std::string>());
    }
    for (const auto& s : require_array(j, "produced", context)) {
        record.produced.push_back(s.get<std::string>());
    }
    record.outcome = require_string(j, "outcome", context);
    record.note = require_string(j, "note", context);
    return record;
}

} // namespace

std::string serialize_stack(const RepresentationStack& stack) {
    json j;
    json levels = json::array();
    for (const auto& rep : stack.levels) levels.push_back(representation_to_json(rep));
    j["levels"] = std::move(levels);
    json log = json::array();
    for (const auto& record : stack.lineage_log) log.push_back(lineage_to_json(record));
    j["lineage_log"] = std::move(log);
    return dump_canonical(j);
}

RepresentationStack parse_stack(const std::string& text) {
    json j = parse_text(text, "stack document");
    RepresentationStack stack;
    for (const auto& entry : require_array(j, "levels", "stack document")) {
        stack.levels.push_back(representation_from_json(entry));
    }
    if (j.contains("lineage_log")) {
        for (const auto& entry : j["lineage_log"]) {
            stack.lineage_log.push_back(lineage_from_json(entry));
        }
    }
    return stack;
}

std::string serialize_universe(const space::FiniteUniverse& u) {
    auto points_to_json = [](const space::PointSet& points) {
        json out = json::array();
        for (const auto& p : points) out.push_back(p.index);
        return out;
    };
    json j;
    j["size"] = u.size;
    j["valid"] = points_to_json(u.valid);
    j["robust_valid"] = points_to_json(u.robust_valid);
    j["perfectly_valid"] = points_to_json(u.perfectly_valid);
    j["expected"] = points_to_json(u.expected);
    j["monitor_ring"] = points_to_json(u.monitor_ring);
    j["effective"] = points_to_json(u.effective);
    space::PointSet loss;
    space::PointSet unacceptable;
    for (const auto& [p, kind] : u.loss_kind) {
        if (kind == space::LossKind::Loss) loss.insert(p);
        if (kind == space::LossKind::UnacceptableLoss) unacceptable.insert(p);
    }
    j["loss"] = points_to_json(loss);
    j["unacceptable_loss"] = points_to_json(unacceptable);
    return dump_canonical(j);
}

space::FiniteUniverse parse_universe(const std::string& text) {
    json j = parse_text(text, "universe document");
    const std::string context = "universe document";
    space::FiniteUniverse u;
    u.size = require_int(j, "size", context);
    if (u.size < 0) throw ParseError(context + ": size must be >= 0");

    auto points_from_json = [&](const char* key) {
        space::PointSet out;
        for (const auto& entry : require_array(j, key, context)) {
            if (!entry.is_number_integer()) {
                throw ParseError(context + ": '" + key + "' must hold integers");
            }
            space::TriadPoint p{entry.get<std::int32_t>()};
            if (!u.contains(p)) {
                throw ParseError(context + ": '" + key + "' index " +
                                 std::to_string(p.index) + " is out of range");
            }
            out.insert(p);
        }
        return out;
    };
    u.valid = points_from_json("valid");
    u.robust_valid = points_from_json("robust_valid");
    u.perfectly_valid = points_from_json("perfectly_valid");
    u.expected = points_from_json("expected");
    u.monitor_ring = points_from_json("monitor_ring");
    u.effective = points_from_json("effective");
    for (const auto& p : points_from_json("loss")) {
        u.loss_kind[p] = space::LossKind::Loss;
    }
    for (const auto& p : points_from_json("unacceptable_loss")) {
        if (u.loss_kind.count(p)) {
            throw ParseError(context + ": index " + std::to_string(p.index) +
                             " carries two loss kinds");
        }
        u.loss_kind[p] = space::LossKind::UnacceptableLoss;
    }
    return u;
}

engine::GoalDocument parse_goal(const std::string& text) {
    json j = parse_text(text, "goal document");
    const std::string context = "goal document";
    engine::GoalDocument goal;

    for (const auto& entry : require_array(j, "elements", context)) {
        const std::string c = "goal element";
        engine::GoalElement element;
        element.id = require_id(entry, "id", c);
        element.aspect = parse_enum(entry, "aspect", c, aspect_from_string);
        element.statement = require_string(entry, "statement", c);
        if (entry.contains("depends_on")) {
            element.depends_on = parse_id_set(entry["depends_on"], c);
        }
        goal.elements.push_back(std::move(element));
    }
    for (const auto& entry : require_array(j, "assumptions", context)) {
        const std::string c = "goal assumption";
        engine::GoalAssumption assumption;
        assumption.id = require_id(entry, "id", c);
        assumption.statement = require_string(entry, "statement", c);
        assumption.scope = parse_id_set(require(entry, "scope", c), c);
        if (entry.contains("pending")) {
            if (!entry["pending"].is_boolean()) {
                throw ParseError(c + ": 'pending' must be a boolean");
            }
            assumption.pending = entry["pending"].get<bool>();
        }
        goal.assumptions.push_back(std::move(assumption));
    }
    if (j.contains("constraints")) {
        for (const auto& entry : j["constraints"]) {
            const std::string c = "goal constraint";
            engine::GoalConstraint constraint;
            constraint.id = require_id(entry, "id", c);
            constraint.statement = require_string(entry, "statement", c);
            for (const auto& loss : require_array(entry, "guarded_losses", c)) {
                if (!loss.is_string()) throw ParseError(c + ": guarded loss must be a string");
                constraint.guarded_losses.insert(loss.get<std::string>());
            }
            constraint.risk_rating = require_int(entry, "risk_rating", c);
            goal.constraints.push_back(std::move(constraint));
        }
    }
    if (j.contains("evidence")) {
        for (const auto& entry : j["evidence"]) {
            const std::string c = "declared evidence";
            try {
                engine::DeclaredEvidence decl{
                    EvidenceItem(require_id(entry, "id", c),
                                 parse_enum(entry, "source", c, evidence_source_from_string),
                                 require_number(entry, "strength", c),
                                 require_string(entry, "description", c)),
                    require_id(entry, "supports", c)};
                goal.evidence.push_back(std::move(decl));
            } catch (const std::invalid_argument& e) {
                throw ParseError(c + ": " + e.what());
            }
        }
    }
    if (j.contains("plan")) {
        const json& plan = j["plan"];
        const std::string c = "goal plan";
        if (plan.contains("transforms")) {
            for (const auto& entry : plan["transforms"]) {
                goal.plan_transforms.push_back(parse_id_set(entry, c));
            }
        }
        if (plan.contains("redesign_on_failure")) {
            if (!plan["redesign_on_failure"].is_boolean()) {
                throw ParseError(c + ": 'redesign_on_failure' must be a boolean");
            }
            goal.plan_redesign_on_failure = plan["redesign_on_failure"].get<bool>();
        }
    }
    return goal;
}

engine::TransformationCatalog parse_catalog(const std::string& text) {
    json j = parse_text(text, "catalog document");
    const std::string context = "catalog document";
    engine::TransformationCatalog catalog;

    for (const auto& entry : require_array(j, "rules", context)) {
        const std::string c = "catalog rule";
        engine::TransformationRule rule;
        rule.id = require_id(entry, "id", c);
        rule.focused = require_id(entry, "focused", c);
        for (const auto& produced : require_array(entry, "produces", c)) {
            engine::ProducedElementDef def;
            def.id = require_id(produced, "id", c);
            def.statement = require_string(produced, "statement", c);
            if (produced.contains("depends_on")) {
                def.depends_on = parse_id_set(produced["depends_on"], c);
            }
            rule.produces.push_back(std::move(def));
        }
        if (entry.contains("side_assumptions")) {
            for (const auto& side : entry["side_assumptions"]) {
                engine::SideAssumptionDef def;
                def.id = require_id(side, "id", c);
                def.statement = require_string(side, "statement", c);
                def.scope = parse_id_set(require(side, "scope", c), c);
                rule.side_assumptions.push_back(std::move(def));
            }
        }
        if (entry.contains("evidence")) {
            for (const auto& ev : entry["evidence"]) {
                try {
                    engine::DeclaredEvidence decl{
                        EvidenceItem(require_id(ev, "id", c),
                                     parse_enum(ev, "source", c, evidence_source_from_string),
                                     require_number(ev, "strength", c),
                                     require_string(ev, "description", c)),
                        require_id(ev, "supports", c)};
                    rule.evidence.push_back(std::move(decl));
                } catch (const std::invalid_argument& e) {
                    throw ParseError(c + ": " + e.what());
                }
            }
        }
        if (entry.contains("condition")) {
            const json& cond = entry["condition"];
            engine::DeclarativePredicate predicate;
            try {
                predicate.kind = engine::predicate_kind_from_string(
                    require_string(cond, "kind", c));
            } catch (const std::invalid_argument& e) {
                throw ParseError(c + ": " + e.what());
            }
            if (cond.contains("id")) predicate.id = parse_id(cond["id"], c);
            if (cond.contains("n")) {
                if (!cond["n"].is_number_integer()) {
                    throw ParseError(c + ": predicate 'n' must be an integer");
                }
                predicate.n = cond["n"].get<int>();
            }
            rule.condition = predicate;
        }
        catalog.rules.push_back(std::move(rule));
    }
    try {
        catalog.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("catalog document: ") + e.what());
    }
    return catalog;
}

std::vector<QualityCriterion> parse_criteria(const std::string& text) {
    json j = parse_text(text, "criteria document");
    std::vector<QualityCriterion> out;
    for (const auto& entry : require_array(j, "criteria", "criteria document")) {
        const std::string c = "criterion";
        QualityCriterion criterion;
        criterion.id = require_id(entry, "id", c);
        criterion.rule = rule_from_json(require(entry, "rule", c));
        criterion.severity = parse_enum(entry, "severity", c, severity_from_string);
        out.push_back(std::move(criterion));
    }
    return out;
}

engine::EngineConfig parse_config(const std::string& text) {
    json j = parse_text(text, "config document");
    const std::string context = "config document";
    engine::EngineConfig config;
    config.max_self_consistency_cycles = require_int(j, "max_self_consistency_cycles", context);
    config.max_quality_enhancement_rounds =
        require_int(j, "max_quality_enhancement_rounds", context);
    config.redesign_max_levels_up = require_int(j, "redesign_max_levels_up", context);
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(context + ": " + e.what());
    }
    return config;
}

space::Scenario parse_scenario(const std::string& text) {
    json j = parse_text(text, "scenario document");
    const std::string context = "scenario document";
    space::Scenario scenario;

    auto points_from = [&](const json& entry, const char* key) {
        space::PointSet out;
        for (const auto& value : require_array(entry, key, context)) {
            if (!value.is_number_integer()) {
                throw ParseError(context + ": '" + std::string(key) +
                                 "' must hold integers");
            }
            out.insert(space::TriadPoint{value.get<std::int32_t>()});
        }
        return out;
    };

    for (const auto& entry : require_array(j, "commands", context)) {
        std::string op = require_string(entry, "op", context);
        space::ScenarioCommand command;
        if (op == "deduce") {
            command.op = space::ScenarioCommand::Op::Deduce;
            command.points = points_from(entry, "keep");
        } else if (op == "redesign") {
            command.op = space::ScenarioCommand::Op::Redesign;
            command.to_step = require_int(entry, "to_step", context);
            command.points = points_from(entry, "keep");
        } else if (op == "expose") {
            command.op = space::ScenarioCommand::Op::Expose;
            for (const auto& value : require_array(entry, "points", context)) {
                if (!value.is_number_integer()) {
                    throw ParseError(context + ": 'points' must hold integers");
                }
                command.exposures.push_back(space::TriadPoint{value.get<std::int32_t>()});
            }
        } else if (op == "shift") {
            command.op = space::ScenarioCommand::Op::Shift;
            command.points = points_from(entry, "newly_invalid");
        } else {
            throw ParseError(context + ": unknown op '" + op + "'");
        }
        scenario.commands.push_back(std::move(command));
    }
    return scenario;
}

std::string serialize_outcome(const engine::EngineOutcome& outcome) {
    json j;
    j["result"] = outcome.ok() ? "success" : "failure";
    j["levels"] = outcome.stack.levels.size();
    if (outcome.failure.has_value()) {
        json f;
        f["level"] = outcome.failure->level;
        f["reason"] = engine::to_string(outcome.failure->reason);
        f["note"] = outcome.failure->note;
        json trace = json::array();
        for (const auto& record : outcome.failure->trace) {
            trace.push_back(lineage_to_json(record));
        }
        f["trace"] = std::move(trace);
        j["failure"] = std::move(f);
    } else {
        j["failure"] = nullptr;
    }
    return dump_canonical(j);
}

std::string serialize_census(const space::FiniteUniverse& u, const space::Census& c,
                             const space::Cond1Verdict* cond1) {
    json j;
    json areas = json::array();
    for (const auto& [area, count] : c.counts) {
        json entry;
        entry["area"] = space::to_string(area);
        entry["count"] = count;
        areas.push_back(std::move(entry));
    }
    j["areas"] = std::move(areas);
    j["total"] = c.total;
    std::int64_t loss = 0;
    std::int64_t unacceptable = 0;
    for (const auto& [p, kind] : u.loss_kind) {
        if (kind == space::LossKind::Loss) loss += 1;
        if (kind == space::LossKind::UnacceptableLoss) unacceptable += 1;
    }
    json sets;
    sets["valid"] = u.valid.size();
    sets["robust_valid"] = u.robust_valid.size();
    sets["perfectly_valid"] = u.perfectly_valid.size();
    sets["expected"] = u.expected.size();
    sets["monitor_ring"] = u.monitor_ring.size();
    sets["effective"] = u.effective.size();
    sets["loss"] = loss;
    sets["unacceptable_loss"] = unacceptable;
    j["sets"] = std::move(sets);
    if (cond1) {
        json v;
        v["delta"] = cond1->delta;
        v["tolerance"] = cond1->tolerance;
        v["approximation_ok"] = cond1->approximation_ok;
        v["robust_ok"] = cond1->robust_ok;
        v["recognition_ok"] = cond1->recognition_ok;
        v["complies"] = cond1->complies;
        j["cond1"] = std::move(v);
    } else {
        j["cond1"] = nullptr;
    }
    return dump_canonical(j);
}

std::string serialize_violations(const std::vector<DocumentViolations>& docs) {
    json j;
    json documents = json::array();
    for (const auto& doc : docs) {
        json d;
        d["label"] = doc.label;
        json violations = json::array();
        for (const auto& violation : doc.violations) {
            json v;
            v["kind"] = to_string(violation.kind);
            v["subject"] = violation.subject.empty() ? "" : violation.subject.str();
            v["detail"] = violation.detail;
            violations.push_back(std::move(v));
        }
        d["violations"] = std::move(violations);
        documents.push_back(std::move(d));
    }
    j["documents"] = std::move(documents);
    return dump_canonical(j);
}

std::string lineage_lines(const std::vector<LineageRecord>& records) {
    std::string out;
    for (const auto& record : records) {
        out += record.line();
        out += '\n';
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ParseError("cannot write file: " + path);
    }
    out << content;
}

} // namespace triadval::doc
