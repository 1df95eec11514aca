#include "triadval/quality.hpp"

#include <map>
#include <mutex>
#include <set>

namespace triadval {

const CriterionVerdict* QualityVerdict::for_criterion(const ElementId& id) const {
    for (const auto& verdict : per_criterion) {
        if (verdict.criterion == id) return &verdict;
    }
    return nullptr;
}

namespace {

std::map<std::string, RepPredicateFn>& predicate_registry() {
    static std::map<std::string, RepPredicateFn> registry = [] {
        std::map<std::string, RepPredicateFn> r;
        r["model_nonempty"] = [](const Representation& rep) { return !rep.model.empty(); };
        r["all_aspects_present"] = [](const Representation& rep) {
            bool p = false, c = false, z = false;
            for (const auto& [id, element] : rep.model) {
                switch (element.aspect) {
                case TriadAspect::Purpose: p = true; break;
                case TriadAspect::Context: c = true; break;
                case TriadAspect::Realization: z = true; break;
                }
            }
            return p && c && z;
        };
        return r;
    }();
    return registry;
}

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

double max_item_strength(const Representation& rep, const EvidenceArgument& arg) {
    double best = -1.0;
    for (const auto& ev : arg.evidence) {
        auto it = rep.evidence_items.find(ev);
        if (it != rep.evidence_items.end() && it->second.strength > best) {
            best = it->second.strength;
        }
    }
    return best;
}

int distinct_sources(const Representation& rep, const EvidenceArgument& arg) {
    std::set<EvidenceSource> sources;
    for (const auto& ev : arg.evidence) {
        auto it = rep.evidence_items.find(ev);
        if (it != rep.evidence_items.end()) sources.insert(it->second.source);
    }
    return static_cast<int>(sources.size());
}

} // namespace

void register_rep_predicate(const std::string& key, RepPredicateFn fn) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    predicate_registry()[key] = std::move(fn);
}

const RepPredicateFn* find_rep_predicate(const std::string& key) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto& registry = predicate_registry();
    auto it = registry.find(key);
    return it == registry.end() ? nullptr : &it->second;
}

QualityVerdict check_argument_quality(const Representation& rep) {
    QualityVerdict verdict;
    verdict.overall_complies = true;

    for (const auto& [id, criterion] : rep.criteria) {
        CriterionVerdict cv;
        cv.criterion = id;

        switch (criterion.rule.kind) {
        case RuleKind::EveryAssumptionArgued:
            for (const auto& [aid, assumption] : rep.assumptions) {
                if (!rep.argument_for(aid)) cv.offenders.push_back(aid);
            }
            break;
        case RuleKind::EveryConstraintHasSatisfactionMonitor:
            for (const auto& [cid, constraint] : rep.constraints) {
                bool covered = false;
                for (const auto& [mid, monitor] : rep.constraint_monitors) {
                    if (monitor.target == cid) {
                        covered = true;
                        break;
                    }
                }
                if (!covered) cv.offenders.push_back(cid);
            }
            break;
        case RuleKind::EveryMonitorHasRecoveryAndDegradation: {
            auto check_monitor = [&](const ElementId& mid) {
                bool recovery = false, degradation = false;
                for (const auto& [sid, strategy] : rep.strategies) {
                    if (strategy.trigger != mid) continue;
                    if (strategy.kind == StrategyKind::Recovery) recovery = true;
                    if (strategy.kind == StrategyKind::Degradation) degradation = true;
                }
                if (!recovery || !degradation) cv.offenders.push_back(mid);
            };
            for (const auto& [mid, monitor] : rep.assumption_monitors) check_monitor(mid);
            for (const auto& [mid, monitor] : rep.constraint_monitors) check_monitor(mid);
            break;
        }
        case RuleKind::MinimumEvidenceStrength:
            for (const auto& [aid, argument] : rep.arguments) {
                if (max_item_strength(rep, argument) < criterion.rule.threshold) {
                    cv.offenders.push_back(aid);
                }
            }
            break;
        case RuleKind::MinimumSourceDiversity:
            for (const auto& [aid, argument] : rep.arguments) {
                if (distinct_sources(rep, argument) < criterion.rule.count) {
                    cv.offenders.push_back(aid);
                }
            }
            break;
        case RuleKind::Custom: {
            const RepPredicateFn* fn = find_rep_predicate(criterion.rule.predicate_key);
            if (!fn || !(*fn)(rep)) cv.offenders.push_back(id);
            break;
        }
        }

        cv.complies = cv.offenders.empty();
        if (!cv.complies && criterion.severity == CriterionSeverity::Blocking) {
            verdict.overall_complies = false;
        }
        verdict.per_criterion.push_back(std::move(cv));
    }

    return verdict;
}

} // namespace triadval
