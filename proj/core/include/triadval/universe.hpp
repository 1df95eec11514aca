#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace triadval::space {

/// One point of a finite, discretized triad space.
struct TriadPoint {
    std::int32_t index = 0;

    auto operator<=>(const TriadPoint&) const = default;
};

using PointSet = std::set<TriadPoint>;

enum class LossKind { None, Loss, UnacceptableLoss };
const char* to_string(LossKind kind);

/// The eleven labeled regions of the expected/effective/valid/monitor-ring
/// partition, plus the region belonging to none of the sets.
enum class Area {
    Area1,
    Area2,
    Area3,
    Area4,
    Area5,
    Area6,
    Area7,
    Area8,
    Area9,
    Area10,
    Area11,
    Outside,
};

const char* to_string(Area area);

/// Explicit finite triad space with the oracle subsets an omniscient observer
/// would know: the valid solutions (with their robust core and the perfectly
/// valid subset), the expected model extension, the monitor ring around it,
/// and the effective set. Points outside `valid` always carry a loss kind.
struct FiniteUniverse {
    std::int32_t size = 0;
    PointSet valid;
    PointSet robust_valid;    // subset of valid that stays valid under stress
    PointSet perfectly_valid; // subset of valid bearing no loss at all
    PointSet expected;
    PointSet monitor_ring; // disjoint from expected
    PointSet effective;
    std::map<TriadPoint, LossKind> loss_kind; // entries with kind != None

    bool contains(TriadPoint p) const { return p.index >= 0 && p.index < size; }
    LossKind loss_of(TriadPoint p) const;

    /// Throws std::invalid_argument on the first broken invariant.
    void validate() const;
};

/// Broken universe invariants as data (used by the validate command).
std::vector<std::string> universe_violations(const FiniteUniverse& u);

/// Assigns the point to exactly one Area from its four memberships.
/// Throws std::out_of_range when p is not a point of u.
Area classify(const FiniteUniverse& u, TriadPoint p);

struct Census {
    std::map<Area, std::int64_t> counts; // every Area present
    std::int64_t total = 0;
};

Census census(const FiniteUniverse& u);

/// Verdict of the directly-inaccessible validity condition, decidable here
/// because the oracle sets are explicit. delta is the Jaccard distance of
/// expected vs effective.
struct Cond1Verdict {
    double delta = 0.0;
    double tolerance = 0.0;
    bool approximation_ok = false; // delta <= tolerance
    bool robust_ok = false;        // effective within the robust-valid core
    bool recognition_ok = false;   // effective deviations covered by the ring
    bool complies = false;
};

/// Pre: u.size > 0 and tolerance in [0,1] (throws std::invalid_argument).
Cond1Verdict check_cond1(const FiniteUniverse& u, double tolerance);

/// Points whose apparent support would be spurious: effective, deviating from
/// the expected, valid by chance and covered by no monitor (Area6).
PointSet detect_misleading(const FiniteUniverse& u);

struct ShiftResult {
    FiniteUniverse universe;
    PointSet silently_reclassified; // Area6 before the shift, Area5 after
};

/// Moves the loss boundary: the given valid points become invalid bearing
/// unacceptable loss. Pre: newly_invalid subset of valid (throws
/// std::invalid_argument).
ShiftResult shift_valid_boundary(const FiniteUniverse& u, const PointSet& newly_invalid);

} // namespace triadval::space
