#include "doctest.h"

#include <cstdlib>
#include <filesystem>

#include "support/fixtures.hpp"
#include "triadval/cli.hpp"

namespace fs = std::filesystem;
using namespace triadval;

namespace {

std::string temp_out(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "triadval_cli_tests" / name;
    fs::remove_all(dir);
    return dir.string();
}

cli::RunManifest base_manifest(cli::Command command, const std::string& out) {
    cli::RunManifest manifest;
    manifest.command = command;
    manifest.out_dir = out;
    return manifest;
}

std::string artifact(const std::string& out, const char* name) {
    return doc::read_file((fs::path(out) / name).string());
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("census writes area counts and the cond1 verdict") {
    std::string out = temp_out("census");
    auto manifest = base_manifest(cli::Command::Census, out);
    manifest.universe = tsupport::fixture_path("universe_allmatch.json");
    CHECK(cli::run(manifest) == cli::kExitOk);

    std::string census = artifact(out, "census.json");
    CHECK(census.find("\"area\": \"area1\"") != std::string::npos);
    CHECK(census.find("\"count\": 6") != std::string::npos);
    CHECK(census.find("\"delta\": 0.0") != std::string::npos);
    CHECK(census.find("\"complies\": true") != std::string::npos);
}

TEST_CASE("engine runs are deterministic and exit 0 on success") {
    std::string out1 = temp_out("engine1");
    std::string out2 = temp_out("engine2");
    for (const std::string& out : {out1, out2}) {
        auto manifest = base_manifest(cli::Command::Engine, out);
        manifest.goal = tsupport::fixture_path("goal_minimal.json");
        manifest.catalog = tsupport::fixture_path("catalog_empty.json");
        manifest.criteria = tsupport::fixture_path("criteria_basic.json");
        manifest.config = tsupport::fixture_path("config_default.json");
        CHECK(cli::run(manifest) == cli::kExitOk);
    }
    CHECK(artifact(out1, "outcome.json") == artifact(out2, "outcome.json"));
    CHECK(artifact(out1, "lineage.log") == artifact(out2, "lineage.log"));
    CHECK(artifact(out1, "stack.json") == artifact(out2, "stack.json"));
    CHECK(artifact(out1, "outcome.json").find("\"result\": \"success\"") != std::string::npos);
}

TEST_CASE("engine failure exits 2 and still writes the outcome") {
    std::string out = temp_out("engine_fail");
    auto manifest = base_manifest(cli::Command::Engine, out);
    manifest.goal = tsupport::fixture_path("goal_no_evidence.json");
    manifest.catalog = tsupport::fixture_path("catalog_empty.json");
    manifest.criteria = tsupport::fixture_path("criteria_basic.json");
    manifest.config = tsupport::fixture_path("config_default.json");
    CHECK(cli::run(manifest) == cli::kExitEngineFailure);
    CHECK(artifact(out, "outcome.json").find("\"result\": \"failure\"") != std::string::npos);
    CHECK(fs::exists(fs::path(out) / "lineage.log"));
    CHECK_FALSE(fs::exists(fs::path(out) / "stack.json"));
}

TEST_CASE("simulate replays the scripted scenario") {
    std::string out = temp_out("simulate");
    auto manifest = base_manifest(cli::Command::Simulate, out);
    manifest.universe = tsupport::fixture_path("universe_fig3.json");
    manifest.scenario = tsupport::fixture_path("scenario_fig3.json");
    CHECK(cli::run(manifest) == cli::kExitOk);

    std::string trace = artifact(out, "trace.log");
    CHECK(trace.find("reintroduction_attempt") != std::string::npos);
    CHECK(trace.find("op=redesign") != std::string::npos);
    CHECK(trace.find("kind=monitor_fired") != std::string::npos);
    CHECK(fs::exists(fs::path(out) / "census.json"));
}

TEST_CASE("validate exits 1 when a document violates invariants") {
    std::string out = temp_out("validate_bad");
    // a universe whose monitor ring overlaps the expected set
    fs::create_directories(out);
    std::string bad_path = (fs::path(out) / "bad_universe.json").string();
    doc::write_file(bad_path, R"({"size": 2, "valid": [0, 1], "robust_valid": [],
        "perfectly_valid": [], "expected": [0], "monitor_ring": [0], "effective": [],
        "loss": [], "unacceptable_loss": []})");

    auto manifest = base_manifest(cli::Command::Validate, out);
    manifest.universe = bad_path;
    CHECK(cli::run(manifest) == cli::kExitViolations);
    CHECK(artifact(out, "violations.json").find("universe_invariant") != std::string::npos);

    manifest.universe = tsupport::fixture_path("universe_fig3.json");
    CHECK(cli::run(manifest) == cli::kExitOk);
}

TEST_CASE("validate checks an engine-produced stack in the output directory") {
    std::string out = temp_out("validate_stack");
    auto engine_manifest = base_manifest(cli::Command::Engine, out);
    engine_manifest.goal = tsupport::fixture_path("goal_minimal.json");
    engine_manifest.catalog = tsupport::fixture_path("catalog_empty.json");
    engine_manifest.criteria = tsupport::fixture_path("criteria_basic.json");
    engine_manifest.config = tsupport::fixture_path("config_default.json");
    REQUIRE(cli::run(engine_manifest) == cli::kExitOk);

    auto manifest = base_manifest(cli::Command::Validate, out);
    CHECK(cli::run(manifest) == cli::kExitOk);
    CHECK(artifact(out, "violations.json").find("\"label\": \"stack\"") != std::string::npos);
}

TEST_CASE("unreadable and unparseable inputs exit 3") {
    std::string out = temp_out("errors");
    auto manifest = base_manifest(cli::Command::Census, out);
    manifest.universe = "/nonexistent/universe.json";
    CHECK(cli::run(manifest) == cli::kExitInputError);

    fs::create_directories(out);
    std::string garbled = (fs::path(out) / "garbled.json").string();
    doc::write_file(garbled, "{not json");
    manifest.universe = garbled;
    CHECK(cli::run(manifest) == cli::kExitInputError);

    // missing required input for the command
    auto incomplete = base_manifest(cli::Command::Engine, out);
    CHECK(cli::run(incomplete) == cli::kExitInputError);
}

TEST_CASE("report merges engine and simulation artifacts") {
    std::string out = temp_out("report");
    auto engine_manifest = base_manifest(cli::Command::Engine, out);
    engine_manifest.goal = tsupport::fixture_path("goal_minimal.json");
    engine_manifest.catalog = tsupport::fixture_path("catalog_empty.json");
    engine_manifest.criteria = tsupport::fixture_path("criteria_basic.json");
    engine_manifest.config = tsupport::fixture_path("config_default.json");
    REQUIRE(cli::run(engine_manifest) == cli::kExitOk);

    auto simulate_manifest = base_manifest(cli::Command::Simulate, out);
    simulate_manifest.universe = tsupport::fixture_path("universe_fig3.json");
    simulate_manifest.scenario = tsupport::fixture_path("scenario_fig3.json");
    REQUIRE(cli::run(simulate_manifest) == cli::kExitOk);

    auto manifest = base_manifest(cli::Command::Report, out);
    CHECK(cli::run(manifest) == cli::kExitOk);
    std::string report = artifact(out, "report.md");
    for (const char* heading :
         {"## 1. Solutions effective as expected and valid",
          "## 2. Valid-solution space and the loss boundary",
          "## 3. Model coverage and monitored deviations", "## 4. Robust operation margin",
          "## 5. Deviations reachable by verification", "## 6. Incident detection before loss",
          "## 7. Unused design freedom"}) {
        CHECK(report.find(heading) != std::string::npos);
    }
    CHECK(report.find("Engine outcome: success") != std::string::npos);
}

TEST_CASE("binary maps unknown commands to exit 64") {
    std::string binary = TRIADVAL_CLI;
    std::string command = binary + " frobnicate >/dev/null 2>&1";
    int status = std::system(command.c_str());
    REQUIRE(status != -1);
    CHECK(WEXITSTATUS(status) == 64);

    command = binary + " census >/dev/null 2>&1"; // missing required flags
    status = std::system(command.c_str());
    CHECK(WEXITSTATUS(status) == 64);
}

} // TEST_SUITE
