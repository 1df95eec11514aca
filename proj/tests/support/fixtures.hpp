#pragma once

// Shared fixture builders and independent oracles for the unit and acceptance
// suites. Oracles here deliberately re-derive results from first principles
// and never call the implementation path they are checking.

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "triadval/documents.hpp"
#include "triadval/engine.hpp"
#include "triadval/representation.hpp"
#include "triadval/simulation.hpp"
#include "triadval/universe.hpp"

namespace tsupport {

using triadval::ElementId;
using triadval::Representation;

inline ElementId eid(const std::string& text) { return ElementId::parse(text); }

inline std::string fixture_path(const std::string& name) {
    return std::string(TRIADVAL_FIXTURE_DIR) + "/" + name;
}

inline std::string golden_path(const std::string& name) {
    return std::string(TRIADVAL_GOLDEN_DIR) + "/" + name;
}

inline std::string fixture_text(const std::string& name) {
    return triadval::doc::read_file(fixture_path(name));
}

struct EngineFixture {
    triadval::engine::GoalDocument goal;
    triadval::engine::TransformationCatalog catalog;
    std::vector<triadval::QualityCriterion> criteria;
    triadval::engine::EngineConfig config;
};

inline EngineFixture load_engine_fixture(const std::string& goal_name,
                                         const std::string& catalog_name,
                                         const std::string& criteria_name = "criteria_basic.json",
                                         const std::string& config_name = "config_default.json") {
    EngineFixture fixture;
    fixture.goal = triadval::doc::parse_goal(fixture_text(goal_name));
    fixture.catalog = triadval::doc::parse_catalog(fixture_text(catalog_name));
    fixture.criteria = triadval::doc::parse_criteria(fixture_text(criteria_name));
    fixture.config = triadval::doc::parse_config(fixture_text(config_name));
    return fixture;
}

inline triadval::engine::EngineOutcome run_engine_fixture(const EngineFixture& fixture) {
    triadval::engine::Engine engine(fixture.catalog, fixture.config);
    engine.bind_goal_evidence(fixture.goal);
    auto outcome = engine.initialize(fixture.goal, fixture.criteria);
    for (const auto& focused : fixture.goal.plan_transforms) {
        if (!outcome.ok()) break;
        auto next = engine.transform_intended(outcome.stack, focused);
        if (!next.ok() && fixture.goal.plan_redesign_on_failure) {
            next = engine.redesign_from_level(next.stack, next.failure->level);
        }
        outcome = std::move(next);
    }
    return outcome;
}

// Fully wired single-level representation: one element, one monitored
// assumption, its monitor and strategy pair, one argument, one criterion.
inline Representation minimal_representation() {
    using namespace triadval;
    Representation rep;
    rep.level = 0;

    ModelElement element;
    element.id = eid("m/e1");
    element.aspect = TriadAspect::Purpose;
    element.statement = "transport goods across the yard";
    rep.model.emplace(element.id, element);

    Assumption assumption(eid("m/a1"), "yard stays fenced", {eid("m/e1")},
                          AssumptionStatus::Monitored, AssumptionOrigin::InitialElicitation);
    rep.assumptions.emplace(assumption.id, assumption);

    Monitor monitor{eid("m/mon1"), MonitorKind::AssumptionMonitor, eid("m/a1"),
                    "deviation:m/a1"};
    rep.assumption_monitors.emplace(monitor.id, monitor);

    Strategy recovery{eid("m/s_rec"), StrategyKind::Recovery,
                      TriggerSource::FromAssumptionMonitor, eid("m/mon1"), "resume"};
    Strategy degradation{eid("m/s_deg"), StrategyKind::Degradation,
                         TriggerSource::FromAssumptionMonitor, eid("m/mon1"), "stop"};
    rep.strategies.emplace(recovery.id, recovery);
    rep.strategies.emplace(degradation.id, degradation);

    EvidenceItem item(eid("m/ev1"), EvidenceSource::Simulation, 0.8, "fence breach sim");
    rep.evidence_items.emplace(item.id, item);

    EvidenceArgument argument(eid("m/arg1"), eid("m/a1"), {eid("m/ev1")}, "a1 holds");
    rep.arguments.emplace(argument.id, argument);

    QualityCriterion criterion{eid("m/qc1"), CriterionRule::every_assumption_argued(),
                               CriterionSeverity::Blocking};
    rep.criteria.emplace(criterion.id, criterion);
    return rep;
}

// ---------------------------------------------------------------------
// Independent area oracle: the twelve admissible membership combinations
// written down literally, matched one row at a time.

struct OracleRow {
    bool f, e, m, v;
    triadval::space::Area area;
};

inline const std::vector<OracleRow>& oracle_rows() {
    using triadval::space::Area;
    static const std::vector<OracleRow> rows = {
        {true, true, false, true, Area::Area1},
        {true, true, false, false, Area::Area2},
        {true, false, true, true, Area::Area3},
        {true, false, true, false, Area::Area4},
        {true, false, false, false, Area::Area5},
        {true, false, false, true, Area::Area6},
        {false, false, false, true, Area::Area7},
        {false, true, false, false, Area::Area8},
        {false, false, true, false, Area::Area9},
        {false, true, false, true, Area::Area10},
        {false, false, true, true, Area::Area11},
        {false, false, false, false, Area::Outside},
    };
    return rows;
}

struct OracleMatch {
    int matches = 0;
    triadval::space::Area area = triadval::space::Area::Outside;
};

inline OracleMatch oracle_classify(const triadval::space::FiniteUniverse& u,
                                   triadval::space::TriadPoint p) {
    const bool f = u.effective.count(p) > 0;
    const bool e = u.expected.count(p) > 0;
    const bool m = u.monitor_ring.count(p) > 0;
    const bool v = u.valid.count(p) > 0;
    OracleMatch match;
    for (const auto& row : oracle_rows()) {
        if (row.f == f && row.e == e && row.m == m && row.v == v) {
            match.matches += 1;
            match.area = row.area;
        }
    }
    return match;
}

// Exhaustive reference walk, independent of validate_representation: gathers
// every id mentioned anywhere and reports the ones that do not resolve.
inline std::vector<std::pair<ElementId, ElementId>> unresolved_references(
    const Representation& rep) {
    std::set<ElementId> known;
    for (const auto& [id, x] : rep.model) known.insert(id);
    for (const auto& [id, x] : rep.constraints) known.insert(id);
    for (const auto& [id, x] : rep.assumptions) known.insert(id);
    for (const auto& [id, x] : rep.assumption_monitors) known.insert(id);
    for (const auto& [id, x] : rep.constraint_monitors) known.insert(id);
    for (const auto& [id, x] : rep.strategies) known.insert(id);
    for (const auto& [id, x] : rep.arguments) known.insert(id);
    for (const auto& [id, x] : rep.criteria) known.insert(id);
    for (const auto& [id, x] : rep.evidence_items) known.insert(id);

    std::vector<std::pair<ElementId, ElementId>> unresolved;
    auto check = [&](const ElementId& from, const ElementId& to) {
        if (!known.count(to)) unresolved.emplace_back(from, to);
    };
    for (const auto& [id, element] : rep.model) {
        for (const auto& dep : element.depends_on) check(id, dep);
    }
    for (const auto& [id, assumption] : rep.assumptions) {
        for (const auto& ref : assumption.scope) check(id, ref);
    }
    for (const auto& [id, monitor] : rep.assumption_monitors) check(id, monitor.target);
    for (const auto& [id, monitor] : rep.constraint_monitors) check(id, monitor.target);
    for (const auto& [id, strategy] : rep.strategies) check(id, strategy.trigger);
    for (const auto& [id, argument] : rep.arguments) {
        check(id, argument.target);
        for (const auto& ev : argument.evidence) check(id, ev);
    }
    for (const auto& pending : rep.pending_extra_assumptions) {
        check(pending, pending);
    }
    return unresolved;
}

// Random universe respecting the ring/expected disjointness, with loss kinds
// assigned per the valid/invalid rules.
inline triadval::space::FiniteUniverse random_universe(std::mt19937& rng, int size) {
    using namespace triadval::space;
    FiniteUniverse u;
    u.size = size;
    std::bernoulli_distribution half(0.5);
    std::bernoulli_distribution third(1.0 / 3.0);
    for (int i = 0; i < size; ++i) {
        TriadPoint p{i};
        bool expected = half(rng);
        if (expected) u.expected.insert(p);
        if (!expected && third(rng)) u.monitor_ring.insert(p);
        if (half(rng)) u.effective.insert(p);
        if (half(rng)) {
            u.valid.insert(p);
            if (half(rng)) u.robust_valid.insert(p);
            if (third(rng)) {
                u.perfectly_valid.insert(p);
            } else if (third(rng)) {
                u.loss_kind[p] = LossKind::Loss;
            }
        } else {
            u.loss_kind[p] = half(rng) ? LossKind::Loss : LossKind::UnacceptableLoss;
        }
    }
    return u;
}

} // namespace tsupport
