#pragma once

#include <span>
#include <string>
#include <vector>

#include "axivort/dynamics.hpp"
#include "axivort/inequalities.hpp"

namespace axivort {

struct GrowthFit {
    double beta = 0.0;       // least-squares slope of log(value) vs log(1+t)
    double t_lo = 0.0, t_hi = 0.0;
    double residual = 0.0;   // RMS log-log residual
    std::string series_name;
};

/// Fit over samples with t in [t_lo, t_hi]; needs >= 8 samples, all values > 0.
GrowthFit fit_growth_exponent(std::span<const double> t, std::span<const double> value,
                              double t_lo, double t_hi, const std::string& series_name);

/// Discrete form of |dR/dt| <= C (c1 + c2 R^(d/4 - 1/2)) with c1, c2 frozen
/// from the t = 0 record (conserved factors) and C an empirical constant from
/// the key-estimate corpus. Centered differences, one-sided ends, 5% slack.
struct TrajectoryBoundReport {
    bool pass = false;
    double max_ratio = 0.0;  // max |dR/dt| / bound
    double c1 = 0.0, c2 = 0.0, C = 0.0;
    double slack = 0.05;
};

TrajectoryBoundReport trajectory_bound_check(std::span<const DiagnosticsRecord> series, double C,
                                             int d = 3, double slack = 0.05);

/// Discrete form of dL/dt <= C_A L^(1/3), where C_A comes from the global
/// velocity estimate's factors at t = 0 combined with the transport claim
/// ||r omega(t)||_L1 <= (||omega0/r||_L1 + ||r omega0||_L1) L(t)^2.
struct Theorem13Report {
    bool pass = false;
    double max_ratio = 0.0;
    double C_A = 0.0;
    double slack = 0.05;
};

Theorem13Report theorem13_monitor(std::span<const DiagnosticsRecord> series, double C_global,
                                  double slack = 0.05);

/// Predicted upper growth exponents: (1+t)^(4/(6-d)) for d = 3,4,5 and
/// exponential for d = 6.
struct GrowthTableEntry {
    int d = 3;
    bool exponential = false;
    Rational exponent;  // meaningful when !exponential
};

std::vector<GrowthTableEntry> highd_growth_table(std::span<const int> d_list);

}  // namespace axivort
