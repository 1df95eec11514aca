#include "triadval/simulation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace triadval::space {

ReintroductionAttempt::ReintroductionAttempt(std::string message, PointSet offending)
    : std::runtime_error(std::move(message)), offending_(std::move(offending)) {}

const char* to_string(StepTag tag) {
    switch (tag) {
    case StepTag::Deduce: return "deduce";
    case StepTag::Redesign: return "redesign";
    }
    return "?";
}

const char* to_string(EventKind kind) {
    switch (kind) {
    case EventKind::MonitorFired: return "monitor_fired";
    case EventKind::LossManifested: return "loss_manifested";
    case EventKind::UnacceptableLossManifested: return "unacceptable_loss_manifested";
    }
    return "?";
}

DeductionTrace DeductionTrace::start(const FiniteUniverse& u) {
    DeductionTrace trace;
    trace.steps.push_back(TraceStep{0, 0, StepTag::Deduce, u.expected, false});
    return trace;
}

namespace {

std::string points_to_string(const PointSet& points) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& p : points) {
        if (!first) os << ',';
        os << p.index;
        first = false;
    }
    os << ']';
    return os.str();
}

std::string ints_to_string(const std::vector<int>& values) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << values[i];
    }
    os << ']';
    return os.str();
}

} // namespace

SimState deduce(const SimState& state, const PointSet& keep) {
    PointSet offending;
    for (const auto& p : keep) {
        if (!state.universe.expected.count(p)) offending.insert(p);
    }
    if (!offending.empty()) {
        throw ReintroductionAttempt("deduction cannot reintroduce neglected points " +
                                        points_to_string(offending),
                                    offending);
    }

    SimState next = state;
    next.universe.expected = keep;
    const TraceStep& last = next.trace.steps.back();
    next.trace.steps.push_back(TraceStep{static_cast<int>(next.trace.steps.size()),
                                         last.level + 1, StepTag::Deduce, keep, false});
    return next;
}

SimState redesign(const SimState& state, int to_step, const PointSet& new_keep) {
    if (to_step < 0 || to_step >= static_cast<int>(state.trace.steps.size())) {
        throw std::out_of_range("redesign target step " + std::to_string(to_step) +
                                " is not recorded");
    }
    const TraceStep& anchor = state.trace.steps[static_cast<std::size_t>(to_step)];
    for (const auto& p : new_keep) {
        if (!anchor.snapshot.count(p)) {
            throw std::invalid_argument("redesign keep set leaves the historical snapshot at "
                                        "index " +
                                        std::to_string(p.index));
        }
    }

    SimState next = state;
    for (std::size_t i = static_cast<std::size_t>(to_step) + 1; i < next.trace.steps.size();
         ++i) {
        next.trace.steps[i].superseded = true;
    }
    next.universe.expected = new_keep;
    next.trace.steps.push_back(TraceStep{static_cast<int>(next.trace.steps.size()),
                                         anchor.level + 1, StepTag::Redesign, new_keep, false});
    return next;
}

SimState run_exposure(const SimState& state, const std::vector<TriadPoint>& exposures) {
    SimState next = state;
    const int step = next.trace.steps.back().index;
    for (const auto& p : exposures) {
        if (!next.universe.contains(p)) {
            throw std::out_of_range("exposure index " + std::to_string(p.index) +
                                    " is not a point of the universe");
        }
        Area area = classify(next.universe, p);
        if (next.universe.monitor_ring.count(p)) {
            next.trace.events.push_back(TraceEvent{step, p, EventKind::MonitorFired, area});
        }
        LossKind kind = next.universe.loss_of(p);
        if (!next.universe.valid.count(p) && kind == LossKind::Loss) {
            next.trace.events.push_back(TraceEvent{step, p, EventKind::LossManifested, area});
        }
        if (kind == LossKind::UnacceptableLoss) {
            next.trace.events.push_back(
                TraceEvent{step, p, EventKind::UnacceptableLossManifested, area});
        }
    }
    return next;
}

std::string render_step(const TraceStep& step, const std::vector<int>& superseded) {
    std::ostringstream os;
    os << "step index=" << step.index << " level=" << step.level
       << " op=" << to_string(step.tag);
    if (step.tag == StepTag::Redesign) {
        os << " superseded=" << ints_to_string(superseded);
    }
    os << " expected=" << points_to_string(step.snapshot);
    return os.str();
}

std::string render_event(const TraceEvent& event) {
    std::ostringstream os;
    os << "event step=" << event.step << " point=" << event.point.index
       << " kind=" << to_string(event.kind) << " area=" << to_string(event.area);
    return os.str();
}

ScenarioRun run_scenario(const FiniteUniverse& u, const Scenario& scenario) {
    ScenarioRun run{SimState{u, DeductionTrace::start(u)}, {}};
    run.lines.push_back(render_step(run.state.trace.steps.front(), {}));

    for (const auto& command : scenario.commands) {
        switch (command.op) {
        case ScenarioCommand::Op::Deduce:
            try {
                run.state = deduce(run.state, command.points);
                run.lines.push_back(render_step(run.state.trace.steps.back(), {}));
            } catch (const ReintroductionAttempt& attempt) {
                run.lines.push_back("error op=deduce kind=reintroduction_attempt points=" +
                                    points_to_string(attempt.offending()));
            }
            break;
        case ScenarioCommand::Op::Redesign: {
            std::size_t before = run.state.trace.steps.size();
            run.state = redesign(run.state, command.to_step, command.points);
            std::vector<int> superseded;
            for (std::size_t i = static_cast<std::size_t>(command.to_step) + 1; i < before;
                 ++i) {
                superseded.push_back(static_cast<int>(i));
            }
            run.lines.push_back(render_step(run.state.trace.steps.back(), superseded));
            break;
        }
        case ScenarioCommand::Op::Expose: {
            std::size_t before = run.state.trace.events.size();
            run.state = run_exposure(run.state, command.exposures);
            for (std::size_t i = before; i < run.state.trace.events.size(); ++i) {
                run.lines.push_back(render_event(run.state.trace.events[i]));
            }
            break;
        }
        case ScenarioCommand::Op::Shift: {
            ShiftResult shifted = shift_valid_boundary(run.state.universe, command.points);
            run.state.universe = std::move(shifted.universe);
            run.lines.push_back("shift newly_invalid=" + points_to_string(command.points) +
                                " silent=" + points_to_string(shifted.silently_reclassified));
            break;
        }
        }
    }
    return run;
}

} // namespace triadval::space
