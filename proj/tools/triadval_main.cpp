#include <string>

#include "CLI11.hpp"

#include "triadval/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"triadval - validity-argumentation engine and finite solution-space simulator"};
    app.require_subcommand(1);

    triadval::cli::RunManifest manifest;

    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", manifest.out_dir, "output directory for artifacts")
            ->required();
    };

    CLI::App* validate = app.add_subcommand("validate", "check documents and report violations");
    validate->add_option("--goal", manifest.goal, "goal document");
    validate->add_option("--catalog", manifest.catalog, "transformation catalog document");
    validate->add_option("--criteria", manifest.criteria, "quality criteria document");
    validate->add_option("--config", manifest.config, "engine config document");
    validate->add_option("--universe", manifest.universe, "universe document");
    validate->add_option("--scenario", manifest.scenario, "scenario script");
    add_out(validate);

    CLI::App* engine = app.add_subcommand("engine", "initialize and run planned transformations");
    engine->add_option("--goal", manifest.goal, "goal document")->required();
    engine->add_option("--catalog", manifest.catalog, "transformation catalog document")
        ->required();
    engine->add_option("--criteria", manifest.criteria, "quality criteria document")->required();
    engine->add_option("--config", manifest.config, "engine config document")->required();
    add_out(engine);

    CLI::App* simulate = app.add_subcommand("simulate", "replay a scenario script on a universe");
    simulate->add_option("--universe", manifest.universe, "universe document")->required();
    simulate->add_option("--scenario", manifest.scenario, "scenario script")->required();
    simulate->add_option("--tolerance", manifest.tolerance,
                         "tolerance for the final cond1 verdict");
    add_out(simulate);

    CLI::App* census = app.add_subcommand("census", "area counts and cond1 metrics");
    census->add_option("--universe", manifest.universe, "universe document")->required();
    census->add_option("--tolerance", manifest.tolerance, "tolerance for the cond1 verdict");
    add_out(census);

    CLI::App* report = app.add_subcommand("report", "merge run artifacts into a summary");
    add_out(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return triadval::cli::kExitUsage;
    }

    if (validate->parsed()) manifest.command = triadval::cli::Command::Validate;
    if (engine->parsed()) manifest.command = triadval::cli::Command::Engine;
    if (simulate->parsed()) manifest.command = triadval::cli::Command::Simulate;
    if (census->parsed()) manifest.command = triadval::cli::Command::Census;
    if (report->parsed()) manifest.command = triadval::cli::Command::Report;

    return triadval::cli::run(manifest);
}
