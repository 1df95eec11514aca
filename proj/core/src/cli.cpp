#include "triadval/cli.hpp"

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "report.hpp"
#include "triadval/documents.hpp"
#include "triadval/engine.hpp"
#include "triadval/simulation.hpp"
#include "triadval/universe.hpp"

namespace triadval::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void require_input(const std::string& path, const char* flag) {
    if (path.empty()) {
        throw std::invalid_argument(std::string("this command requires --") + flag);
    }
}

std::string out_path(const RunManifest& manifest, const char* name) {
    return (fs::path(manifest.out_dir) / name).string();
}

// Run metadata is the only place a timestamp may appear; every other artifact
// is byte-deterministic for identical inputs.
void write_run_meta(const RunManifest& manifest, const char* command) {
    json meta;
    meta["command"] = command;
    json inputs;
    if (!manifest.goal.empty()) inputs["goal"] = manifest.goal;
    if (!manifest.catalog.empty()) inputs["catalog"] = manifest.catalog;
    if (!manifest.criteria.empty()) inputs["criteria"] = manifest.criteria;
    if (!manifest.config.empty()) inputs["config"] = manifest.config;
    if (!manifest.universe.empty()) inputs["universe"] = manifest.universe;
    if (!manifest.scenario.empty()) inputs["scenario"] = manifest.scenario;
    meta["inputs"] = std::move(inputs);
    meta["unix_time"] = std::chrono::duration_cast<std::chrono::seconds>(
                            std::chrono::system_clock::now().time_since_epoch())
                            .count();
    doc::write_file(out_path(manifest, "run_meta.json"), meta.dump(2) + "\n");
}

int cmd_engine(const RunManifest& manifest) {
    auto goal = doc::parse_goal(doc::read_file(manifest.goal));
    auto catalog = doc::parse_catalog(doc::read_file(manifest.catalog));
    auto criteria = doc::parse_criteria(doc::read_file(manifest.criteria));
    auto config = doc::parse_config(doc::read_file(manifest.config));

    engine::Engine eng(catalog, config);
    eng.bind_goal_evidence(goal);
    engine::EngineOutcome outcome = eng.initialize(goal, criteria);
    for (const auto& focused : goal.plan_transforms) {
        if (!outcome.ok()) break;
        engine::EngineOutcome next = eng.transform_intended(outcome.stack, focused);
        if (!next.ok() && goal.plan_redesign_on_failure) {
            next = eng.redesign_from_level(next.stack, next.failure->level);
        }
        outcome = std::move(next);
    }

    doc::write_file(out_path(manifest, "outcome.json"), doc::serialize_outcome(outcome));
    doc::write_file(out_path(manifest, "lineage.log"),
                    doc::lineage_lines(outcome.stack.lineage_log));
    if (outcome.ok()) {
        doc::write_file(out_path(manifest, "stack.json"), doc::serialize_stack(outcome.stack));
    }
    write_run_meta(manifest, "engine");
    if (!outcome.ok()) {
        std::cerr << "engine failure at level " << outcome.failure->level << ": "
                  << engine::to_string(outcome.failure->reason) << " (" << outcome.failure->note
                  << ")\n";
        return kExitEngineFailure;
    }
    return kExitOk;
}

void write_census_artifact(const RunManifest& manifest, const space::FiniteUniverse& u) {
    space::Census c = space::census(u);
    std::optional<space::Cond1Verdict> cond1;
    if (u.size > 0) {
        cond1 = space::check_cond1(u, manifest.tolerance);
    }
    doc::write_file(out_path(manifest, "census.json"),
                    doc::serialize_census(u, c, cond1 ? &*cond1 : nullptr));
}

int cmd_census(const RunManifest& manifest) {
    auto universe = doc::parse_universe(doc::read_file(manifest.universe));
    universe.validate();
    write_census_artifact(manifest, universe);
    write_run_meta(manifest, "census");
    return kExitOk;
}

int cmd_simulate(const RunManifest& manifest) {
    auto universe = doc::parse_universe(doc::read_file(manifest.universe));
    universe.validate();
    auto scenario = doc::parse_scenario(doc::read_file(manifest.scenario));

    space::ScenarioRun run = space::run_scenario(universe, scenario);
    std::string trace;
    for (const auto& line : run.lines) {
        trace += line;
        trace += '\n';
    }
    doc::write_file(out_path(manifest, "trace.log"), trace);
    write_census_artifact(manifest, run.state.universe);
    write_run_meta(manifest, "simulate");
    return kExitOk;
}

int cmd_validate(const RunManifest& manifest) {
    std::vector<doc::DocumentViolations> results;
    bool any = false;
    auto add = [&](std::string label, std::vector<Violation> violations) {
        any = any || !violations.empty();
        results.push_back(doc::DocumentViolations{std::move(label), std::move(violations)});
    };

    if (!manifest.goal.empty()) {
        doc::parse_goal(doc::read_file(manifest.goal));
        add("goal", {});
    }
    if (!manifest.catalog.empty()) {
        doc::parse_catalog(doc::read_file(manifest.catalog));
        add("catalog", {});
    }
    if (!manifest.criteria.empty()) {
        doc::parse_criteria(doc::read_file(manifest.criteria));
        add("criteria", {});
    }
    if (!manifest.config.empty()) {
        doc::parse_config(doc::read_file(manifest.config));
        add("config", {});
    }
    if (!manifest.scenario.empty()) {
        doc::parse_scenario(doc::read_file(manifest.scenario));
        add("scenario", {});
    }
    if (!manifest.universe.empty()) {
        auto universe = doc::parse_universe(doc::read_file(manifest.universe));
        std::vector<Violation> violations;
        for (const auto& text : space::universe_violations(universe)) {
            violations.push_back(Violation{ViolationKind::UniverseInvariant, ElementId{}, text});
        }
        add("universe", std::move(violations));
    }
    std::string stack_path = out_path(manifest, "stack.json");
    if (fs::exists(stack_path)) {
        auto stack = doc::parse_stack(doc::read_file(stack_path));
        add("stack", validate_stack(stack));
    }

    doc::write_file(out_path(manifest, "violations.json"), doc::serialize_violations(results));
    write_run_meta(manifest, "validate");
    return any ? kExitViolations : kExitOk;
}

int cmd_report(const RunManifest& manifest) {
    auto load_json = [&](const char* name) -> std::optional<json> {
        std::string path = out_path(manifest, name);
        if (!fs::exists(path)) return std::nullopt;
        json j = json::parse(doc::read_file(path), nullptr, false);
        if (j.is_discarded()) {
            throw doc::ParseError(std::string(name) + ": document is not valid JSON");
        }
        return j;
    };
    std::optional<json> outcome = load_json("outcome.json");
    std::optional<json> stack = load_json("stack.json");
    std::optional<json> census = load_json("census.json");

    std::vector<std::string> trace_lines;
    std::string trace_path = out_path(manifest, "trace.log");
    if (fs::exists(trace_path)) {
        std::istringstream in(doc::read_file(trace_path));
        std::string line;
        while (std::getline(in, line)) trace_lines.push_back(line);
    }

    doc::write_file(out_path(manifest, "report.md"),
                    build_report(outcome, stack, census, trace_lines));
    write_run_meta(manifest, "report");
    return kExitOk;
}

} // namespace

void RunManifest::validate() const {
    if (out_dir.empty()) {
        throw std::invalid_argument("every command requires --out");
    }
    switch (command) {
    case Command::Engine:
        require_input(goal, "goal");
        require_input(catalog, "catalog");
        require_input(criteria, "criteria");
        require_input(config, "config");
        break;
    case Command::Simulate:
        require_input(universe, "universe");
        require_input(scenario, "scenario");
        break;
    case Command::Census: require_input(universe, "universe"); break;
    case Command::Validate:
    case Command::Report: break;
    }
    if (!(tolerance >= 0.0 && tolerance <= 1.0)) {
        throw std::invalid_argument("--tolerance must be in [0,1]");
    }
}

int run(const RunManifest& manifest) {
    try {
        manifest.validate();
        fs::create_directories(manifest.out_dir);
        switch (manifest.command) {
        case Command::Validate: return cmd_validate(manifest);
        case Command::Engine: return cmd_engine(manifest);
        case Command::Simulate: return cmd_simulate(manifest);
        case Command::Census: return cmd_census(manifest);
        case Command::Report: return cmd_report(manifest);
        }
        return kExitUsage;
    } catch (const doc::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
}

} // namespace triadval::cli
