#include "doctest.h"

#include <random>

#include "support/fixtures.hpp"

using namespace triadval::space;

namespace {

FiniteUniverse fixture_universe(const std::string& name) {
    return triadval::doc::parse_universe(tsupport::fixture_text(name));
}

PointSet points(std::initializer_list<std::int32_t> indices) {
    PointSet out;
    for (auto i : indices) out.insert(TriadPoint{i});
    return out;
}

} // namespace

TEST_SUITE("solution_space") {

TEST_CASE("classify: named examples") {
    FiniteUniverse u;
    u.size = 3;
    u.valid = points({0});
    u.robust_valid = points({0});
    u.expected = points({0});
    u.effective = points({0});
    u.loss_kind[TriadPoint{1}] = LossKind::Loss;
    u.loss_kind[TriadPoint{2}] = LossKind::UnacceptableLoss;
    u.validate();

    CHECK(classify(u, TriadPoint{0}) == Area::Area1); // effective, expected, valid
    CHECK(classify(u, TriadPoint{1}) == Area::Outside); // in no set
    CHECK_THROWS_AS(classify(u, TriadPoint{3}), std::out_of_range);
}

TEST_CASE("classify agrees with the literal row oracle on a random 64-point universe") {
    std::mt19937 rng(64);
    FiniteUniverse u = tsupport::random_universe(rng, 64);
    u.validate();
    for (std::int32_t i = 0; i < u.size; ++i) {
        auto oracle = tsupport::oracle_classify(u, TriadPoint{i});
        REQUIRE(oracle.matches == 1);
        CHECK(classify(u, TriadPoint{i}) == oracle.area);
    }
}

TEST_CASE("census: empty, full-overlap, and random tally") {
    FiniteUniverse empty;
    Census c = census(empty);
    CHECK(c.total == 0);
    for (const auto& [area, count] : c.counts) CHECK(count == 0);

    FiniteUniverse all = fixture_universe("universe_allmatch.json");
    all.validate();
    c = census(all);
    CHECK(c.counts.at(Area::Area1) == all.size);
    CHECK(c.total == all.size);
    std::int64_t sum = 0;
    for (const auto& [area, count] : c.counts) sum += count;
    CHECK(sum == all.size);

    std::mt19937 rng(1000);
    FiniteUniverse u = tsupport::random_universe(rng, 1000);
    c = census(u);
    std::map<Area, std::int64_t> tally;
    for (std::int32_t i = 0; i < u.size; ++i) {
        tally[tsupport::oracle_classify(u, TriadPoint{i}).area] += 1;
    }
    for (const auto& [area, count] : c.counts) {
        CHECK(count == (tally.count(area) ? tally.at(area) : 0));
    }
}

TEST_CASE("cond1: identity, unacceptable effective point, unrecognized deviation") {
    FiniteUniverse u = fixture_universe("universe_allmatch.json");
    Cond1Verdict verdict = check_cond1(u, 0.0);
    CHECK(verdict.delta == 0.0);
    CHECK(verdict.complies);

    // an effective point bearing unacceptable loss violates the subset clause
    FiniteUniverse bad = u;
    bad.valid.erase(TriadPoint{5});
    bad.robust_valid.erase(TriadPoint{5});
    bad.perfectly_valid.erase(TriadPoint{5});
    bad.loss_kind[TriadPoint{5}] = LossKind::UnacceptableLoss;
    verdict = check_cond1(bad, 1.0);
    CHECK_FALSE(verdict.robust_ok);
    CHECK_FALSE(verdict.complies);

    // 3-point universe: one effective point outside expected and outside ring
    FiniteUniverse tiny;
    tiny.size = 3;
    tiny.valid = points({0, 1, 2});
    tiny.robust_valid = points({0, 1, 2});
    tiny.expected = points({0});
    tiny.effective = points({0, 1});
    tiny.validate();
    verdict = check_cond1(tiny, 1.0);
    CHECK(verdict.approximation_ok);
    CHECK(verdict.robust_ok);
    CHECK_FALSE(verdict.recognition_ok);
    CHECK_FALSE(verdict.complies);

    CHECK_THROWS_AS(check_cond1(FiniteUniverse{}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(check_cond1(u, 1.5), std::invalid_argument);
}

TEST_CASE("deduce: identity, reintroduction, shrinking chains") {
    FiniteUniverse u = fixture_universe("universe_fig3.json");
    SimState state{u, DeductionTrace::start(u)};

    SimState same = deduce(state, u.expected);
    CHECK(same.universe.expected == u.expected);
    CHECK(same.trace.steps.size() == 2);

    SimState dropped = deduce(state, points({0, 1, 3}));
    CHECK_FALSE(dropped.universe.expected.count(TriadPoint{2}));
    CHECK_THROWS_AS(deduce(dropped, points({0, 1, 2})), ReintroductionAttempt);

    std::mt19937 rng(5);
    SimState chain{u, DeductionTrace::start(u)};
    for (int i = 0; i < 5; ++i) {
        PointSet keep;
        for (const auto& p : chain.universe.expected) {
            if (rng() % 4 != 0) keep.insert(p);
        }
        chain = deduce(chain, keep);
    }
    for (std::size_t i = 1; i < chain.trace.steps.size(); ++i) {
        const auto& prev = chain.trace.steps[i - 1].snapshot;
        const auto& curr = chain.trace.steps[i].snapshot;
        CHECK(std::includes(prev.begin(), prev.end(), curr.begin(), curr.end()));
    }
}

TEST_CASE("redesign: restart, restoration, errors") {
    FiniteUniverse u = fixture_universe("universe_fig3.json");
    SimState state{u, DeductionTrace::start(u)};
    state = deduce(state, points({0, 1, 3}));

    SimState restart = redesign(state, 0, u.expected);
    CHECK(restart.universe.expected == u.expected);
    CHECK(restart.trace.steps.back().tag == StepTag::Redesign);
    CHECK(restart.trace.steps[1].superseded);

    // a point dropped by deduction comes back via redesign
    SimState restored = redesign(state, 0, points({0, 1, 2}));
    CHECK(restored.universe.expected.count(TriadPoint{2}));

    CHECK_THROWS_AS(redesign(state, 7, points({0})), std::out_of_range);
    CHECK_THROWS_AS(redesign(state, 1, points({0, 2})), std::invalid_argument);
}

TEST_CASE("run_exposure: monitored incident, silent unacceptable loss, empty list") {
    // area 4 point: effective, deviating, monitored, invalid with loss
    FiniteUniverse u;
    u.size = 2;
    u.monitor_ring = points({0});
    u.effective = points({0, 1});
    u.loss_kind[TriadPoint{0}] = LossKind::Loss;
    u.loss_kind[TriadPoint{1}] = LossKind::UnacceptableLoss;
    u.validate();
    CHECK(classify(u, TriadPoint{0}) == Area::Area4);
    CHECK(classify(u, TriadPoint{1}) == Area::Area5);

    SimState state{u, DeductionTrace::start(u)};
    SimState after = run_exposure(state, {TriadPoint{0}});
    REQUIRE(after.trace.events.size() == 2);
    CHECK(after.trace.events[0].kind == EventKind::MonitorFired);
    CHECK(after.trace.events[0].area == Area::Area4);
    CHECK(after.trace.events[1].kind == EventKind::LossManifested);

    after = run_exposure(state, {TriadPoint{1}});
    REQUIRE(after.trace.events.size() == 1);
    CHECK(after.trace.events[0].kind == EventKind::UnacceptableLossManifested);
    CHECK(after.trace.events[0].area == Area::Area5);

    after = run_exposure(state, {});
    CHECK(after.trace.events.empty());
    CHECK_THROWS_AS(run_exposure(state, {TriadPoint{9}}), std::out_of_range);
}

TEST_CASE("event soundness over random universes") {
    std::mt19937 rng(99);
    for (int round = 0; round < 30; ++round) {
        FiniteUniverse u = tsupport::random_universe(rng, 1 + static_cast<int>(rng() % 128));
        std::vector<TriadPoint> exposures;
        for (std::int32_t i = 0; i < u.size; ++i) exposures.push_back(TriadPoint{i});
        SimState after = run_exposure(SimState{u, DeductionTrace::start(u)}, exposures);

        std::map<std::int32_t, std::set<EventKind>> by_point;
        for (const auto& event : after.trace.events) {
            by_point[event.point.index].insert(event.kind);
        }
        for (const auto& p : exposures) {
            bool fired = by_point.count(p.index) &&
                         by_point[p.index].count(EventKind::MonitorFired);
            CHECK(fired == (u.monitor_ring.count(p) > 0));
            bool unacceptable = by_point.count(p.index) &&
                                by_point[p.index].count(EventKind::UnacceptableLossManifested);
            CHECK(unacceptable == (u.loss_of(p) == LossKind::UnacceptableLoss));
        }
    }
}

TEST_CASE("shift_valid_boundary: expected points stay discoverable, area 6 goes silent") {
    FiniteUniverse u;
    u.size = 10;
    u.valid = points({0, 1, 2, 3, 4});
    u.robust_valid = points({0, 1, 2, 3, 4});
    u.expected = points({0, 1});
    u.effective = points({0, 3});
    for (std::int32_t i = 5; i < 10; ++i) u.loss_kind[TriadPoint{i}] = LossKind::Loss;
    u.validate();
    REQUIRE(classify(u, TriadPoint{0}) == Area::Area1);
    REQUIRE(classify(u, TriadPoint{3}) == Area::Area6);

    // shifting an area-1 point makes it area 2: still expected, so v&v can find it
    ShiftResult shifted = shift_valid_boundary(u, points({0}));
    CHECK(classify(shifted.universe, TriadPoint{0}) == Area::Area2);
    CHECK(shifted.silently_reclassified.empty());

    // shifting the area-6 point is the silent case
    shifted = shift_valid_boundary(u, points({3}));
    CHECK(classify(shifted.universe, TriadPoint{3}) == Area::Area5);
    CHECK(shifted.silently_reclassified == points({3}));
    CHECK(shifted.universe.loss_of(TriadPoint{3}) == LossKind::UnacceptableLoss);

    // no-op shift
    shifted = shift_valid_boundary(u, {});
    CHECK(shifted.universe.valid == u.valid);
    CHECK(shifted.silently_reclassified.empty());

    CHECK_THROWS_AS(shift_valid_boundary(u, points({7})), std::invalid_argument);
}

TEST_CASE("detect_misleading returns exactly the area-6 points") {
    FiniteUniverse u = fixture_universe("universe_misleading.json");
    u.validate();
    CHECK(detect_misleading(u) == points({3}));

    FiniteUniverse covered = u;
    covered.effective = points({0}); // effective within expected
    CHECK(detect_misleading(covered).empty());

    covered = u;
    covered.monitor_ring = points({3}); // deviation covered by the ring
    CHECK(detect_misleading(covered).empty());
}

TEST_CASE("scenario runner records reintroduction errors and continues") {
    FiniteUniverse u = fixture_universe("universe_fig3.json");
    auto scenario = triadval::doc::parse_scenario(tsupport::fixture_text("scenario_fig3.json"));
    ScenarioRun run = run_scenario(u, scenario);

    CHECK(run.state.universe.expected.count(TriadPoint{2}));
    bool saw_error = false;
    for (const auto& line : run.lines) {
        if (line.find("reintroduction_attempt") != std::string::npos) saw_error = true;
    }
    CHECK(saw_error);
    // monitor event from the exposure of point 4
    CHECK(run.state.trace.events.size() == 1);
    CHECK(run.state.trace.events[0].kind == EventKind::MonitorFired);
}

TEST_CASE("universe invariant diagnostics") {
    FiniteUniverse u = fixture_universe("universe_fig3.json");
    CHECK(universe_violations(u).empty());

    FiniteUniverse broken = u;
    broken.monitor_ring.insert(TriadPoint{0}); // overlaps expected
    auto violations = universe_violations(broken);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("monitor_ring") != std::string::npos);
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);

    broken = u;
    broken.loss_kind.erase(TriadPoint{5}); // invalid point without loss kind
    CHECK(universe_violations(broken).size() == 1);

    broken = u;
    broken.loss_kind[TriadPoint{0}] = LossKind::UnacceptableLoss; // inside valid
    CHECK(universe_violations(broken).size() == 1);
}

} // TEST_SUITE
