#include "triadval/universe.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace triadval::space {

const char* to_string(LossKind kind) {
    switch (kind) {
    case LossKind::None: return "none";
    case LossKind::Loss: return "loss";
    case LossKind::UnacceptableLoss: return "unacceptable_loss";
    }
    return "?";
}

const char* to_string(Area area) {
    switch (area) {
    case Area::Area1: return "area1";
    case Area::Area2: return "area2";
    case Area::Area3: return "area3";
    case Area::Area4: return "area4";
    case Area::Area5: return "area5";
    case Area::Area6: return "area6";
    case Area::Area7: return "area7";
    case Area::Area8: return "area8";
    case Area::Area9: return "area9";
    case Area::Area10: return "area10";
    case Area::Area11: return "area11";
    case Area::Outside: return "outside";
    }
    return "?";
}

LossKind FiniteUniverse::loss_of(TriadPoint p) const {
    auto it = loss_kind.find(p);
    return it == loss_kind.end() ? LossKind::None : it->second;
}

namespace {

bool subset_of(const PointSet& inner, const PointSet& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

void collect_violations(const FiniteUniverse& u, std::vector<std::string>& out) {
    if (u.size < 0) {
        out.push_back("size must be >= 0");
        return;
    }
    auto in_range = [&](const PointSet& set, const char* name) {
        for (const auto& p : set) {
            if (!u.contains(p)) {
                out.push_back(std::string(name) + " contains out-of-range index " +
                              std::to_string(p.index));
            }
        }
    };
    in_range(u.valid, "valid");
    in_range(u.robust_valid, "robust_valid");
    in_range(u.perfectly_valid, "perfectly_valid");
    in_range(u.expected, "expected");
    in_range(u.monitor_ring, "monitor_ring");
    in_range(u.effective, "effective");
    for (const auto& [p, kind] : u.loss_kind) {
        if (!u.contains(p)) {
            out.push_back("loss_kind assigns out-of-range index " + std::to_string(p.index));
        }
    }

    if (!subset_of(u.perfectly_valid, u.valid)) {
        out.push_back("perfectly_valid must be a subset of valid");
    }
    if (!subset_of(u.robust_valid, u.valid)) {
        out.push_back("robust_valid must be a subset of valid");
    }
    for (const auto& p : u.monitor_ring) {
        if (u.expected.count(p)) {
            out.push_back("monitor_ring intersects expected at index " +
                          std::to_string(p.index));
        }
    }
    for (std::int32_t i = 0; i < u.size; ++i) {
        TriadPoint p{i};
        LossKind kind = u.loss_of(p);
        if (!u.valid.count(p)) {
            if (kind == LossKind::None) {
                out.push_back("point " + std::to_string(i) +
                              " outside valid must carry a loss kind");
            }
        } else if (kind == LossKind::UnacceptableLoss) {
            out.push_back("point " + std::to_string(i) +
                          " inside valid must not carry unacceptable loss");
        }
    }
}

} // namespace

void FiniteUniverse::validate() const {
    std::vector<std::string> violations;
    collect_violations(*this, violations);
    if (!violations.empty()) {
        throw std::invalid_argument("universe invariant violated: " + violations.front());
    }
}

std::vector<std::string> universe_violations(const FiniteUniverse& u) {
    std::vector<std::string> out;
    collect_violations(u, out);
    return out;
}

Area classify(const FiniteUniverse& u, TriadPoint p) {
    if (!u.contains(p)) {
        throw std::out_of_range("point " + std::to_string(p.index) +
                                " is not inside a universe of size " + std::to_string(u.size));
    }
    const bool v = u.valid.count(p) > 0;
    const bool e = u.expected.count(p) > 0;
    const bool m = u.monitor_ring.count(p) > 0;
    const bool f = u.effective.count(p) > 0;

    // Twelve admissible membership cells (the ring never overlaps the
    // expected set), one area each.
    if (f) {
        if (e) return v ? Area::Area1 : Area::Area2;
        if (m) return v ? Area::Area3 : Area::Area4;
        return v ? Area::Area6 : Area::Area5;
    }
    if (e) return v ? Area::Area10 : Area::Area8;
    if (m) return v ? Area::Area11 : Area::Area9;
    return v ? Area::Area7 : Area::Outside;
}

Census census(const FiniteUniverse& u) {
    Census result;
    for (Area area : {Area::Area1, Area::Area2, Area::Area3, Area::Area4, Area::Area5,
                      Area::Area6, Area::Area7, Area::Area8, Area::Area9, Area::Area10,
                      Area::Area11, Area::Outside}) {
        result.counts[area] = 0;
    }
    for (std::int32_t i = 0; i < u.size; ++i) {
        result.counts[classify(u, TriadPoint{i})] += 1;
    }
    result.total = u.size;
    return result;
}

Cond1Verdict check_cond1(const FiniteUniverse& u, double tolerance) {
    if (u.size <= 0) {
        throw std::invalid_argument("cond1 needs a non-empty universe");
    }
    if (!(tolerance >= 0.0 && tolerance <= 1.0)) {
        throw std::invalid_argument("tolerance must be in [0,1]");
    }

    std::int64_t sym = 0;
    std::int64_t uni = 0;
    for (std::int32_t i = 0; i < u.size; ++i) {
        TriadPoint p{i};
        bool e = u.expected.count(p) > 0;
        bool f = u.effective.count(p) > 0;
        if (e || f) {
            uni += 1;
            if (e != f) sym += 1;
        }
    }

    Cond1Verdict verdict;
    verdict.tolerance = tolerance;
    verdict.delta = uni == 0 ? 0.0 : static_cast<double>(sym) / static_cast<double>(uni);
    verdict.approximation_ok = verdict.delta <= tolerance;
    verdict.robust_ok = subset_of(u.effective, u.robust_valid);
    verdict.recognition_ok = true;
    for (const auto& p : u.effective) {
        if (!u.expected.count(p) && !u.monitor_ring.count(p)) {
            verdict.recognition_ok = false;
            break;
        }
    }
    verdict.complies = verdict.approximation_ok && verdict.robust_ok && verdict.recognition_ok;
    return verdict;
}

PointSet detect_misleading(const FiniteUniverse& u) {
    PointSet out;
    for (std::int32_t i = 0; i < u.size; ++i) {
        TriadPoint p{i};
        if (classify(u, p) == Area::Area6) out.insert(p);
    }
    return out;
}

ShiftResult shift_valid_boundary(const FiniteUniverse& u, const PointSet& newly_invalid) {
    if (!subset_of(newly_invalid, u.valid)) {
        throw std::invalid_argument("newly_invalid must be a subset of valid");
    }

    ShiftResult result;
    result.universe = u;
    for (const auto& p : newly_invalid) {
        Area before = classify(u, p);
        result.universe.valid.erase(p);
        result.universe.robust_valid.erase(p);
        result.universe.perfectly_valid.erase(p);
        result.universe.loss_kind[p] = LossKind::UnacceptableLoss;
        Area after = classify(result.universe, p);
        // An unmonitored, unexpected but effective point slips from valid to
        // invalid with nothing in place to notice.
        if (before == Area::Area6 && after == Area::Area5) {
            result.silently_reclassified.insert(p);
        }
    }
    return result;
}

} // namespace triadval::space
