#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "triadval/universe.hpp"

namespace triadval::space {

/// Raised when a deduction tries to reintroduce an already neglected part of
/// the solution space (keep not a subset of the current expected set).
class ReintroductionAttempt : public std::runtime_error {
  public:
    ReintroductionAttempt(std::string message, PointSet offending);
    const PointSet& offending() const { return offending_; }

  private:
    PointSet offending_;
};

enum class StepTag { Deduce, Redesign };
const char* to_string(StepTag tag);

enum class EventKind { MonitorFired, LossManifested, UnacceptableLossManifested };
const char* to_string(EventKind kind);

struct TraceStep {
    int index = 0;
    int level = 0; // depth in the deduction chain
    StepTag tag = StepTag::Deduce;
    PointSet snapshot; // expected set after the step
    bool superseded = false;

    bool operator==(const TraceStep&) const = default;
};

struct TraceEvent {
    int step = 0;
    TriadPoint point;
    EventKind kind = EventKind::MonitorFired;
    Area area = Area::Outside; // area at exposure time

    bool operator==(const TraceEvent&) const = default;
};

struct DeductionTrace {
    std::vector<TraceStep> steps;
    std::vector<TraceEvent> events;

    /// A trace whose step 0 snapshots the universe's initial expected set.
    static DeductionTrace start(const FiniteUniverse& u);

    bool operator==(const DeductionTrace&) const = default;
};

/// Universe plus its deduction history. Operations produce new values.
struct SimState {
    FiniteUniverse universe;
    DeductionTrace trace;
};

/// Shrinks the expected set to `keep`. Throws ReintroductionAttempt when
/// keep is not a subset of the current expected set.
SimState deduce(const SimState& state, const PointSet& keep);

/// Restarts from a recorded step: expected becomes new_keep, which must lie
/// within that step's snapshot; later steps are marked superseded.
/// Throws std::out_of_range / std::invalid_argument on bad input.
SimState redesign(const SimState& state, int to_step, const PointSet& new_keep);

/// Simulates effective operation visiting the given points in order,
/// appending monitor and loss events. Throws std::out_of_range when an
/// exposure is not a point of the universe.
SimState run_exposure(const SimState& state, const std::vector<TriadPoint>& exposures);

// --- scenario scripts -------------------------------------------------

struct ScenarioCommand {
    enum class Op { Deduce, Redesign, Expose, Shift };
    Op op = Op::Deduce;
    PointSet points;  // keep / newly_invalid
    std::vector<TriadPoint> exposures;
    int to_step = 0;

    bool operator==(const ScenarioCommand&) const = default;
};

struct Scenario {
    std::vector<ScenarioCommand> commands;

    bool operator==(const Scenario&) const = default;
};

struct ScenarioRun {
    SimState state;
    std::vector<std::string> lines; // the trace log, one record per line
};

/// Replays a scenario script. A deduce raising ReintroductionAttempt is
/// recorded as an error line and the script continues; every other error
/// propagates (a script error).
ScenarioRun run_scenario(const FiniteUniverse& u, const Scenario& scenario);

std::string render_step(const TraceStep& step, const std::vector<int>& superseded);
std::string render_event(const TraceEvent& event);

} // namespace triadval::space
