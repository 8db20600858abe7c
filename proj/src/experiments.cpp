#include "axivort/experiments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace axivort {

GrowthFit fit_growth_exponent(std::span<const double> t, std::span<const double> value,
                              double t_lo, double t_hi, const std::string& series_name) {
    if (t.size() != value.size())
        throw std::invalid_argument("fit_growth_exponent: length mismatch");
    if (!(t_lo < t_hi)) throw std::invalid_argument("fit_growth_exponent: bad window");
    std::vector<double> x, y;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < t_lo || t[i] > t_hi) continue;
        if (!(value[i] > 0.0))
            throw std::domain_error("fit_growth_exponent: nonpositive value in window");
        x.push_back(std::log1p(t[i]));
        y.push_back(std::log(value[i]));
    }
    if (x.size() < 8)
        throw std::invalid_argument("fit_growth_exponent: fewer than 8 samples in window");

    const std::size_t n = x.size();
    double xm = 0.0, ym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        xm += x[i];
        ym += y[i];
    }
    xm /= n;
    ym /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - xm) * (x[i] - xm);
        sxy += (x[i] - xm) * (y[i] - ym);
    }
    GrowthFit fit;
    fit.t_lo = t_lo;
    fit.t_hi = t_hi;
    fit.series_name = series_name;
    fit.beta = sxx > 0.0 ? sxy / sxx : 0.0;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (ym + fit.beta * (x[i] - xm));
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

namespace {

std::vector<double> centered_derivative(std::span<const double> t, std::span<const double> v) {
    const std::size_t n = t.size();
    std::vector<double> d(n, 0.0);
    if (n < 2) return d;
    d[0] = (v[1] - v[0]) / (t[1] - t[0]);
    d[n - 1] = (v[n - 1] - v[n - 2]) / (t[n - 1] - t[n - 2]);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (t[i + 1] - t[i - 1]);
    return d;
}

}  // namespace

TrajectoryBoundReport trajectory_bound_check(std::span<const DiagnosticsRecord> series, double C,
                                             int d, double slack) {
    if (series.size() < 3)
        throw std::invalid_argument("trajectory_bound_check: need at least 3 records");
    TrajectoryBoundReport report;
    report.slack = slack;
    report.C = C;
    const auto& r0 = series[0];
    report.c1 = std::pow(r0.relvort_Linf, 1.0 / d) * std::pow(r0.relvort_L1, 1.0 - 1.0 / d);
    report.c2 = std::sqrt(r0.energy) * std::sqrt(r0.relvort_Linf);
    const double p = 0.25 * d - 0.5;

    std::vector<double> t(series.size()), R(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        t[i] = series[i].t;
        R[i] = series[i].R;
    }
    const auto dRdt = centered_derivative(t, R);
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double bound = C * (report.c1 + report.c2 * std::pow(R[i], p));
        if (bound > 0.0) {
            report.max_ratio = std::max(report.max_ratio, std::abs(dRdt[i]) / bound);
        } else if (std::abs(dRdt[i]) > 0.0) {
            report.max_ratio = std::numeric_limits<double>::infinity();
        }
    }
    report.pass = report.max_ratio <= 1.0 + slack;
    return report;
}

Theorem13Report theorem13_monitor(std::span<const DiagnosticsRecord> series, double C_global,
                                  double slack) {
    if (series.size() < 3)
        throw std::invalid_argument("theorem13_monitor: need at least 3 records");
    Theorem13Report report;
    report.slack = slack;
    const auto& r0 = series[0];
    report.C_A = C_global * std::cbrt(r0.energy) * std::sqrt(r0.relvort_Linf) *
                 std::pow(r0.relvort_L1 + r0.r_omega_L1, 1.0 / 6.0);

    std::vector<double> t(series.size()), L(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        t[i] = series[i].t;
        L[i] = series[i].L;
    }
    const auto dLdt = centered_derivative(t, L);
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double bound = report.C_A * std::cbrt(L[i]);
        if (bound > 0.0) {
            report.max_ratio = std::max(report.max_ratio, dLdt[i] / bound);
        } else if (dLdt[i] > 0.0) {
            report.max_ratio = std::numeric_limits<double>::infinity();
        }
    }
    report.pass = report.max_ratio <= 1.0 + slack;
    return report;
}

std::vector<GrowthTableEntry> highd_growth_table(std::span<const int> d_list) {
    std::vector<GrowthTableEntry> table;
    for (int d : d_list) {
        if (d < 3 || d > 6) throw std::invalid_argument("highd_growth_table: d must be in {3,4,5,6}");
        GrowthTableEntry e;
        e.d = d;
        if (d == 6) {
            e.exponential = true;
        } else {
            e.exponent = Rational(4, 6 - d);
        }
        table.push_back(e);
    }
    return table;
}

}  // namespace axivort
