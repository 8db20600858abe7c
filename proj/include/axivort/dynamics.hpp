#pragma once

#include <span>
#include <string>
#include <vector>

#include "axivort/biot_savart.hpp"
#include "axivort/field.hpp"
#include "axivort/parallel.hpp"

namespace axivort {

enum class Integrator { rk4, rk2 };

struct SimConfig {
    double dt = 0.01;
    double t_end = 1.0;
    Integrator integrator = Integrator::rk4;
    int diag_every = 1;   // steps between diagnostics emissions
    double delta = -1.0;  // blob length; < 0 means "use the field's"
    int d = 3;
    EvalOptions eval;

    void validate() const;
};

/// Per-emission conserved/monotone diagnostics.
struct DiagnosticsRecord {
    double t = 0.0;
    double R = 0.0;            // support radius
    double omega_max = 0.0;    // ||omega||_inf
    double relvort_L1 = 0.0;   // ||omega/r^(d-2)||_L1
    double relvort_Linf = 0.0; // ||omega/r^(d-2)||_Linf
    double r_omega_L1 = 0.0;   // ||r omega||_L1
    double energy = 0.0;       // ||u||_L2
    double I_r2 = 0.0;         // iint r^2 |omega| dr dz
    double I_z = 0.0;          // iint |z omega| dr dz
    double L = 1.0;            // length function 1 + int_0^t sup|u^r| ds
    double max_ur = 0.0;       // sup over elements of |u^r|
};

/// One Runge-Kutta advection step: positions advance under stage velocities of
/// the displaced configurations; q is never touched and each element's measure
/// r^(d-2) * area is held invariant (area is rescaled as r moves, which is the
/// discrete form of the flow's r^(d-2) dr dz incompressibility). Elements
/// crossing r < 0 are clamped to the axis; the count is reported via
/// `clamped_events` when non-null.
VorticityField step(const VorticityField& field, double dt,
                    Integrator integrator = Integrator::rk4, const EvalOptions& opts = {},
                    int* clamped_events = nullptr);

struct SimulationResult {
    std::vector<DiagnosticsRecord> records;
    VorticityField final_field;
    int clamped_events = 0;
    bool aborted = false;  // NaN velocity encountered; records end at last valid step
};

/// Advance to t_end, emitting a DiagnosticsRecord every diag_every steps
/// (always including t = 0 and the final step). L(t) accumulates
/// 1 + int sup|u^r| ds by trapezoid, the sup running over element positions
/// plus Chebyshev probes on the r = R(t) line.
SimulationResult run_simulation(const VorticityField& initial, const SimConfig& cfg);

/// Pathwise transport bounds: ||r omega(t)||_L1 <= (||omega0/r||_L1 + ||r omega0||_L1) L(t)^2
/// and ||omega(t)||_inf <= (||omega0/r||_inf + ||omega0||_inf) L(t). Ratios are
/// LHS/RHS; pass iff both stay <= 1 + tol.
struct ClaimBoundsReport {
    double max_ratio_r_omega = 0.0;
    double max_ratio_omega_inf = 0.0;
    double tol = 1e-6;
    bool pass = false;
};

ClaimBoundsReport check_claim_bounds(std::span<const DiagnosticsRecord> series,
                                     const VorticityField& initial, double tol = 1e-6);

// Diagnostics CSV (17 significant digits, one row per emission).
std::string diagnostics_csv_header();
std::string diagnostics_to_csv(std::span<const DiagnosticsRecord> series);
std::vector<DiagnosticsRecord> diagnostics_from_csv(const std::string& text);

}  // namespace axivort
