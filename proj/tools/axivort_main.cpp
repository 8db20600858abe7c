// axivort — configuration-driven driver for the axisymmetric vortex engine.
//
//   axivort run <config.json> [--out DIR] [--seed N]
//   axivort list
//
// Exit codes: 0 = experiment passed, 2 = a bound/consistency check failed,
// 1 = configuration or runtime error.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "axivort/io.hpp"
#include "axivort/registry.hpp"

int main(int argc, char** argv) {
    CLI::App app{"axisymmetric Euler vortex dynamics engine and estimate-certification harness"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    long long seed_override = -1;
    CLI::App* run_cmd = app.add_subcommand("run", "run an experiment from a JSON config");
    run_cmd->add_option("config", config_path, "config file (JSON)")->required();
    run_cmd->add_option("--out", out_dir, "output directory (overrides config output_dir)");
    run_cmd->add_option("--seed", seed_override, "corpus seed (overrides config seed)");

    CLI::App* list_cmd = app.add_subcommand("list", "list registered experiments");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 1;
    }

    if (list_cmd->parsed()) {
        for (const auto& [name, desc] : axivort::experiment_list())
            std::printf("%-20s %s\n", name.c_str(), desc.c_str());
        return 0;
    }

    try {
        const auto config_json = nlohmann::json::parse(axivort::read_text_file(config_path));
        axivort::RunConfig cfg = axivort::parse_run_config(config_json);
        if (!out_dir.empty()) cfg.output_dir = out_dir;
        if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);

        std::filesystem::create_directories(cfg.output_dir);
        const auto outcome = axivort::run_experiment(cfg);

        const auto path = [&](const char* name) {
            return (std::filesystem::path(cfg.output_dir) / name).string();
        };
        axivort::write_text_file(path("diagnostics.csv"), outcome.diagnostics_csv);
        axivort::write_text_file(path("report.json"), outcome.report.dump(2) + "\n");
        axivort::write_text_file(path("plot.dat"), outcome.plot_dat);

        std::printf("%s: %s\n", cfg.experiment.c_str(), outcome.pass ? "PASS" : "FAIL");
        return outcome.pass ? 0 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
