#include "doctest.h"

#include "support/fixtures.hpp"
#include "triadval/documents.hpp"

using namespace triadval;
using tsupport::eid;

TEST_SUITE("documents") {

TEST_CASE("stack documents round-trip byte-identically") {
    RepresentationStack stack;
    stack.levels.push_back(tsupport::minimal_representation());
    LineageRecord record;
    record.level = 0;
    record.algorithm = "algo1";
    record.sources = {};
    record.produced = {"m/e1"};
    record.outcome = "applied";
    record.note = "initialized level 0";
    stack.lineage_log.push_back(record);

    std::string first = doc::serialize_stack(stack);
    RepresentationStack parsed = doc::parse_stack(first);
    CHECK(parsed == stack);
    std::string second = doc::serialize_stack(parsed);
    CHECK(first == second);
}

TEST_CASE("universe documents round-trip byte-identically") {
    std::string first = doc::serialize_universe(
        doc::parse_universe(tsupport::fixture_text("universe_fig3.json")));
    space::FiniteUniverse parsed = doc::parse_universe(first);
    std::string second = doc::serialize_universe(parsed);
    CHECK(first == second);
}

TEST_CASE("serialized arrays are ordered by id") {
    Representation rep = tsupport::minimal_representation();
    // insert an element whose id sorts before the existing one
    ModelElement early;
    early.id = eid("m/a_element");
    early.aspect = TriadAspect::Context;
    early.statement = "sorts first";
    rep.model.emplace(early.id, early);
    RepresentationStack stack;
    stack.levels.push_back(rep);

    std::string text = doc::serialize_stack(stack);
    auto a_pos = text.find("m/a_element");
    auto e_pos = text.find("m/e1");
    REQUIRE(a_pos != std::string::npos);
    REQUIRE(e_pos != std::string::npos);
    CHECK(a_pos < e_pos);
}

TEST_CASE("parse errors carry a diagnostic and throw ParseError") {
    CHECK_THROWS_AS(doc::parse_universe("not json"), doc::ParseError);
    CHECK_THROWS_AS(doc::parse_universe("{}"), doc::ParseError); // missing size
    CHECK_THROWS_AS(doc::parse_universe(R"({"size": 2, "valid": [5], "robust_valid": [],
        "perfectly_valid": [], "expected": [], "monitor_ring": [], "effective": [],
        "loss": [], "unacceptable_loss": []})"),
                    doc::ParseError); // out-of-range index
    CHECK_THROWS_AS(doc::parse_goal(R"({"elements": [{"id": "g/x", "aspect": "nonsense",
        "statement": "s"}], "assumptions": []})"),
                    doc::ParseError); // unknown enum value
    CHECK_THROWS_AS(doc::parse_config(R"({"max_self_consistency_cycles": 0,
        "max_quality_enhancement_rounds": 1, "redesign_max_levels_up": 0})"),
                    doc::ParseError); // bound out of range
    CHECK_THROWS_AS(doc::parse_criteria(R"({"criteria": [{"id": "q/x",
        "rule": {"kind": "minimum_evidence_strength"}, "severity": "blocking"}]})"),
                    doc::ParseError); // missing threshold
    CHECK_THROWS_AS(doc::parse_scenario(R"({"commands": [{"op": "warp"}]})"),
                    doc::ParseError); // unknown op

    try {
        doc::parse_universe("{}");
        FAIL("expected ParseError");
    } catch (const doc::ParseError& e) {
        CHECK(std::string(e.what()).find("size") != std::string::npos);
    }
}

TEST_CASE("fixture documents parse into the expected shapes") {
    auto goal = doc::parse_goal(tsupport::fixture_text("goal_minimal.json"));
    CHECK(goal.elements.size() == 3);
    CHECK(goal.assumptions.size() == 3);
    CHECK(goal.constraints.size() == 1);
    CHECK(goal.evidence.size() == 3);
    CHECK(goal.evidence[0].supports == eid("g/a_p"));

    auto catalog = doc::parse_catalog(tsupport::fixture_text("catalog_sc_two_cycles.json"));
    REQUIRE(catalog.rules.size() == 1);
    CHECK(catalog.rules[0].focused == eid("g/e1"));
    CHECK(catalog.rules[0].side_assumptions.size() == 1);
    CHECK(catalog.rules[0].condition.kind == engine::PredicateKind::AlwaysTrue);

    auto criteria = doc::parse_criteria(tsupport::fixture_text("criteria_diversity.json"));
    REQUIRE(criteria.size() == 2);
    CHECK(criteria[1].rule.kind == RuleKind::MinimumSourceDiversity);
    CHECK(criteria[1].rule.count == 2);

    auto config = doc::parse_config(tsupport::fixture_text("config_default.json"));
    CHECK(config.max_self_consistency_cycles == 16);

    auto scenario = doc::parse_scenario(tsupport::fixture_text("scenario_fig3.json"));
    CHECK(scenario.commands.size() == 5);
}

TEST_CASE("duplicate rule ids and empty produces are rejected at parse") {
    CHECK_THROWS_AS(doc::parse_catalog(R"({"rules": [
        {"id": "c/r", "focused": "g/x", "produces": [{"id": "g/y", "statement": "s"}]},
        {"id": "c/r", "focused": "g/z", "produces": [{"id": "g/w", "statement": "s"}]}
    ]})"),
                    doc::ParseError);
    CHECK_THROWS_AS(doc::parse_catalog(R"({"rules": [
        {"id": "c/r", "focused": "g/x", "produces": []}
    ]})"),
                    doc::ParseError);
}

} // TEST_SUITE
