#include "doctest.h"

#include "support/fixtures.hpp"
#include "triadval/quality.hpp"

using namespace triadval;
using tsupport::eid;

namespace {

// Brute-force check used as the independent route for the strength rule:
// scan every argument's cited items directly.
std::vector<ElementId> weak_arguments(const Representation& rep, double threshold) {
    std::vector<ElementId> out;
    for (const auto& [id, argument] : rep.arguments) {
        double best = -1.0;
        for (const auto& ev : argument.evidence) {
            auto it = rep.evidence_items.find(ev);
            if (it != rep.evidence_items.end()) best = std::max(best, it->second.strength);
        }
        if (best < threshold) out.push_back(id);
    }
    return out;
}

Representation two_assumption_rep() {
    Representation rep = tsupport::minimal_representation();
    Assumption a2(eid("m/a2"), "power stays on", {eid("m/e1")}, AssumptionStatus::Elicited,
                  AssumptionOrigin::InitialElicitation);
    rep.assumptions.emplace(a2.id, a2);
    EvidenceItem ev2(eid("m/ev2"), EvidenceSource::RealWorldObservation, 0.4, "outage log");
    rep.evidence_items.emplace(ev2.id, ev2);
    EvidenceArgument arg2(eid("m/arg2"), eid("m/a2"), {eid("m/ev2")}, "a2 holds");
    rep.arguments.emplace(arg2.id, arg2);
    return rep;
}

} // namespace

TEST_SUITE("quality") {

TEST_CASE("every assumption argued: covered then uncovered") {
    Representation rep = two_assumption_rep();
    QualityVerdict verdict = check_argument_quality(rep);
    CHECK(verdict.overall_complies);

    rep.arguments.erase(eid("m/arg2"));
    verdict = check_argument_quality(rep);
    CHECK_FALSE(verdict.overall_complies);
    const CriterionVerdict* cv = verdict.for_criterion(eid("m/qc1"));
    REQUIRE(cv != nullptr);
    CHECK_FALSE(cv->complies);
    REQUIRE(cv->offenders.size() == 1);
    CHECK(cv->offenders[0] == eid("m/a2"));
}

TEST_CASE("minimum evidence strength agrees with the brute-force scan") {
    Representation rep = two_assumption_rep();
    QualityCriterion strength{eid("m/qc_strength"),
                              CriterionRule::minimum_evidence_strength(0.5),
                              CriterionSeverity::Blocking};
    rep.criteria.emplace(strength.id, strength);

    QualityVerdict verdict = check_argument_quality(rep);
    const CriterionVerdict* cv = verdict.for_criterion(strength.id);
    REQUIRE(cv != nullptr);
    CHECK_FALSE(cv->complies);

    auto expected = weak_arguments(rep, 0.5);
    CHECK(cv->offenders == expected);
    REQUIRE(expected.size() == 1);
    CHECK(expected[0] == eid("m/arg2")); // max item strength 0.4 < 0.5
}

TEST_CASE("minimum source diversity counts distinct sources per argument") {
    Representation rep = tsupport::minimal_representation();
    QualityCriterion diversity{eid("m/qc_div"), CriterionRule::minimum_source_diversity(2),
                               CriterionSeverity::Blocking};
    rep.criteria.emplace(diversity.id, diversity);

    QualityVerdict verdict = check_argument_quality(rep);
    const CriterionVerdict* cv = verdict.for_criterion(diversity.id);
    REQUIRE(cv != nullptr);
    CHECK_FALSE(cv->complies); // single simulation item

    EvidenceItem extra(eid("m/ev_extra"), EvidenceSource::ContinuousObservation, 0.5, "fleet");
    rep.evidence_items.emplace(extra.id, extra);
    rep.arguments.at(eid("m/arg1")).evidence.insert(extra.id);
    verdict = check_argument_quality(rep);
    CHECK(verdict.for_criterion(diversity.id)->complies);
}

TEST_CASE("constraint and monitor coverage rules") {
    Representation rep = tsupport::minimal_representation();
    Constraint constraint(eid("m/cr1"), "keep distance", {"collision"}, 4);
    rep.constraints.emplace(constraint.id, constraint);
    QualityCriterion coverage{eid("m/qc_cov"),
                              CriterionRule::every_constraint_has_satisfaction_monitor(),
                              CriterionSeverity::Blocking};
    rep.criteria.emplace(coverage.id, coverage);

    QualityVerdict verdict = check_argument_quality(rep);
    const CriterionVerdict* cv = verdict.for_criterion(coverage.id);
    REQUIRE(cv != nullptr);
    CHECK_FALSE(cv->complies);
    CHECK(cv->offenders == std::vector<ElementId>{eid("m/cr1")});

    Monitor cmon{eid("m/cmon1"), MonitorKind::ConstraintSatisfactionMonitor, eid("m/cr1"),
                 "satisfaction:m/cr1"};
    rep.constraint_monitors.emplace(cmon.id, cmon);
    verdict = check_argument_quality(rep);
    CHECK(verdict.for_criterion(coverage.id)->complies);

    // the new monitor has no strategy pair yet
    QualityCriterion pair_rule{eid("m/qc_pair"),
                               CriterionRule::every_monitor_has_recovery_and_degradation(),
                               CriterionSeverity::Blocking};
    rep.criteria.emplace(pair_rule.id, pair_rule);
    verdict = check_argument_quality(rep);
    const CriterionVerdict* pv = verdict.for_criterion(pair_rule.id);
    REQUIRE(pv != nullptr);
    CHECK_FALSE(pv->complies);
    CHECK(pv->offenders == std::vector<ElementId>{eid("m/cmon1")});
}

TEST_CASE("custom criteria resolve against the registry") {
    Representation rep = tsupport::minimal_representation();
    QualityCriterion custom{eid("m/qc_custom"), CriterionRule::custom("model_nonempty"),
                            CriterionSeverity::Blocking};
    rep.criteria.emplace(custom.id, custom);
    CHECK(check_argument_quality(rep).for_criterion(custom.id)->complies);

    rep.criteria.at(custom.id).rule = CriterionRule::custom("all_aspects_present");
    CHECK_FALSE(check_argument_quality(rep).for_criterion(custom.id)->complies);

    rep.criteria.at(custom.id).rule = CriterionRule::custom("never_registered");
    QualityVerdict verdict = check_argument_quality(rep);
    CHECK_FALSE(verdict.for_criterion(custom.id)->complies);
    // the unknown key also shows up as a structural violation
    auto violations = validate_representation(rep);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == ViolationKind::UnknownCustomPredicate);
}

TEST_CASE("advisory criteria report but do not block") {
    Representation rep = tsupport::minimal_representation();
    QualityCriterion advisory{eid("m/qc_adv"), CriterionRule::minimum_source_diversity(3),
                              CriterionSeverity::Advisory};
    rep.criteria.emplace(advisory.id, advisory);
    QualityVerdict verdict = check_argument_quality(rep);
    CHECK_FALSE(verdict.for_criterion(advisory.id)->complies);
    CHECK(verdict.overall_complies);
}

} // TEST_SUITE
