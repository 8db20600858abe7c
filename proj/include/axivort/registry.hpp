#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "axivort/dynamics.hpp"
#include "axivort/field.hpp"

#include "json.hpp"

namespace axivort {

/// Everything a config file can set. Defaults reproduce the reference runs.
struct RunConfig {
    std::string experiment;
    std::string output_dir = ".";
    std::uint64_t seed = 20240817;
    int workers = 0;              // 0 = AXIVORT_THREADS, else hardware
    bool use_kernel_table = true; // CLI runs default to the validated fast path

    SimConfig sim{0.05, 5.0, Integrator::rk4, 2, -1.0, 3, {}};
    DipoleParams dipole{{1.0, 1.0}, 0.25, 0.5, 36};

    struct Ring {
        HalfPlanePoint center{1.0, 0.0};
        double radius = 0.15;
        double amplitude = 1.0;
        int resolution = 16;
        int d = 3;
    } ring;

    struct Corpus {
        int n_fields = 100;
        int resolution = 12;
        bool check_doubling = true;
    } corpus;

    struct KernelBounds {
        double s_min = 1e-6;
        double s_max = 1e6;
        int n = 200;
    } kernel_bounds;

    struct HighD {
        int n_fields = 20;
        int resolution = 10;
    } highd;

    double beta_max = 4.0 / 3.0 + 0.15;
    int bound_corpus_n = 30;  // corpus size calibrating C for the pathwise checks

    EvalOptions eval() const { return {use_kernel_table, workers}; }
};

RunConfig parse_run_config(const nlohmann::json& j);

struct ExperimentOutcome {
    bool pass = false;
    nlohmann::ordered_json report;
    std::string diagnostics_csv;  // dynamics CSV format (may be header-only)
    std::string plot_dat;         // whitespace-separated columns, '#' header
};

/// Registered experiments in deterministic order: (name, one-line description).
const std::vector<std::pair<std::string, std::string>>& experiment_list();

/// Runs one registered experiment. Throws std::invalid_argument for unknown
/// names (message lists the valid ones) and propagates runtime failures.
ExperimentOutcome run_experiment(const RunConfig& cfg);

}  // namespace axivort
