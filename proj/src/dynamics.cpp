#include "axivort/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "axivort/io.hpp"
#include "axivort/summation.hpp"

namespace axivort {

namespace {

constexpr double kPi = 3.14159265358979323846;

double r_pow_int(double r, int e) {
    double v = 1.0;
    for (int i = 0; i < e; ++i) v *= r;
    return v;
}

struct Positions {
    std::vector<double> r, z;
};

Positions positions_of(const VorticityField& field) {
    Positions p;
    p.r.reserve(field.elements.size());
    p.z.reserve(field.elements.size());
    for (const auto& e : field.elements) {
        p.r.push_back(e.pos.r);
        p.z.push_back(e.pos.z);
    }
    return p;
}

VorticityField with_positions(const VorticityField& base, const Positions& pos,
                              int* clamped_events) {
    VorticityField out = base;
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
        double r = pos.r[i];
        if (r < 0.0) {
            r = 0.0;
            if (clamped_events) ++(*clamped_events);
        }
        const double r_old = out.elements[i].pos.r;
        out.elements[i].pos.r = r;
        out.elements[i].pos.z = pos.z[i];
        // Keep the element measure r^(d-2) * area a flow invariant.
        if (base.d > 2 && r > 0.0 && r_old > 0.0 && r != r_old) {
            out.elements[i].area *= r_pow_int(r_old / r, base.d - 2);
        }
    }
    return out;
}

bool any_nan(const std::vector<Velocity>& v) {
    for (const auto& u : v)
        if (!std::isfinite(u.ur) || !std::isfinite(u.uz)) return true;
    return false;
}

}  // namespace

void SimConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("SimConfig: dt must be positive");
    if (!(t_end >= 0.0)) throw std::invalid_argument("SimConfig: t_end must be >= 0");
    if (diag_every < 1) throw std::invalid_argument("SimConfig: diag_every must be >= 1");
    if (d < 3 || d > 6) throw std::invalid_argument("SimConfig: d must be in {3,4,5,6}");
}

VorticityField step(const VorticityField& field, double dt, Integrator integrator,
                    const EvalOptions& opts, int* clamped_events) {
    if (!(dt != 0.0)) throw std::invalid_argument("step: dt must be nonzero");
    const std::size_t n = field.elements.size();
    const Positions x0 = positions_of(field);

    auto stage_velocity = [&](const Positions& pos) {
        // Stage configuration: same q and same invariant measure, displaced positions.
        const VorticityField stage = with_positions(field, pos, nullptr);
        return element_velocities(stage, opts);
    };
    auto displaced = [&](const Positions& base, const std::vector<Velocity>& k, double c) {
        Positions p = base;
        for (std::size_t i = 0; i < n; ++i) {
            p.r[i] += c * k[i].ur;
            p.z[i] += c * k[i].uz;
        }
        return p;
    };

    Positions x1 = x0;
    if (integrator == Integrator::rk2) {
        const auto k1 = stage_velocity(x0);
        const auto k2 = stage_velocity(displaced(x0, k1, 0.5 * dt));
        for (std::size_t i = 0; i < n; ++i) {
            x1.r[i] = x0.r[i] + dt * k2[i].ur;
            x1.z[i] = x0.z[i] + dt * k2[i].uz;
        }
    } else {
        const auto k1 = stage_velocity(x0);
        const auto k2 = stage_velocity(displaced(x0, k1, 0.5 * dt));
        const auto k3 = stage_velocity(displaced(x0, k2, 0.5 * dt));
        const auto k4 = stage_velocity(displaced(x0, k3, dt));
        for (std::size_t i = 0; i < n; ++i) {
            x1.r[i] = x0.r[i] + dt / 6.0 * (k1[i].ur + 2.0 * k2[i].ur + 2.0 * k3[i].ur + k4[i].ur);
            x1.z[i] = x0.z[i] + dt / 6.0 * (k1[i].uz + 2.0 * k2[i].uz + 2.0 * k3[i].uz + k4[i].uz);
        }
    }
    return with_positions(field, x1, clamped_events);
}

namespace {

DiagnosticsRecord make_record(const VorticityField& field, double t, double L, double max_ur,
                              const EvalOptions& opts) {
    DiagnosticsRecord rec;
    rec.t = t;
    rec.L = L;
    rec.max_ur = max_ur;
    if (field.empty()) return rec;
    const double inf = std::numeric_limits<double>::infinity();
    rec.R = support_radius(field);
    rec.relvort_L1 = lp_norm_rel_vort(field, 1.0);
    rec.relvort_Linf = lp_norm_rel_vort(field, inf);
    rec.r_omega_L1 = weighted_l1(field, 1);
    double om = 0.0;
    for (std::size_t i = 0; i < field.elements.size(); ++i)
        om = std::max(om, std::abs(field.omega(i)));
    rec.omega_max = om;
    rec.energy = kinetic_energy(field, opts).value;
    const auto moments = half_plane_moments(field);
    rec.I_r2 = moments.first;
    rec.I_z = moments.second;
    return rec;
}

// sup|u^r| over element positions plus Chebyshev probes on the R(t) line.
double sup_ur(const VorticityField& field, const std::vector<Velocity>& element_vel,
              const EvalOptions& opts, double* element_sup_out) {
    double m_el = 0.0;
    for (const auto& v : element_vel) m_el = std::max(m_el, std::abs(v.ur));
    if (element_sup_out) *element_sup_out = m_el;
    const double R = field.empty() ? 0.0 : support_radius(field);
    if (R == 0.0) return m_el;
    double z_lo = field.elements[0].pos.z, z_hi = z_lo;
    for (const auto& e : field.elements) {
        z_lo = std::min(z_lo, e.pos.z);
        z_hi = std::max(z_hi, e.pos.z);
    }
    const double z_c = 0.5 * (z_lo + z_hi);
    const double w = std::max(3.0 * R, 2.5 * (z_hi - z_lo));
    constexpr int n_z = 33;
    std::vector<HalfPlanePoint> nodes(n_z);
    for (int i = 0; i < n_z; ++i) {
        const double theta = kPi * (2.0 * i + 1.0) / (2.0 * n_z);
        nodes[i] = {R, z_c + w * std::cos(theta)};
    }
    const auto vel = velocity_at_many(field, nodes, opts);
    double m = m_el;
    for (const auto& v : vel) m = std::max(m, std::abs(v.ur));
    return m;
}

}  // namespace

SimulationResult run_simulation(const VorticityField& initial, const SimConfig& cfg) {
    cfg.validate();
    if (cfg.d != initial.d)
        throw std::invalid_argument("run_simulation: SimConfig.d does not match the field");
    if (cfg.delta >= 0.0 && cfg.delta != initial.delta)
        throw std::invalid_argument("run_simulation: SimConfig.delta does not match the field");

    SimulationResult result;
    result.final_field = initial;

    const int n_steps = cfg.t_end > 0.0 ? static_cast<int>(std::ceil(cfg.t_end / cfg.dt - 1e-12)) : 0;

    VorticityField field = initial;
    double L = 1.0;
    double prev_sup = 0.0;
    double element_sup = 0.0;

    {
        const auto vel = initial.empty() ? std::vector<Velocity>{} : element_velocities(field, cfg.eval);
        prev_sup = sup_ur(field, vel, cfg.eval, &element_sup);
        result.records.push_back(make_record(field, 0.0, L, element_sup, cfg.eval));
    }

    for (int s = 1; s <= n_steps; ++s) {
        const double dt = std::min(cfg.dt, cfg.t_end - (s - 1) * cfg.dt);
        field = step(field, dt, cfg.integrator, cfg.eval, &result.clamped_events);
        const double t = std::min(s * cfg.dt, cfg.t_end);

        const auto vel = field.empty() ? std::vector<Velocity>{} : element_velocities(field, cfg.eval);
        if (any_nan(vel)) {
            result.aborted = true;
            break;
        }
        const double cur_sup = sup_ur(field, vel, cfg.eval, &element_sup);
        L += 0.5 * dt * (prev_sup + cur_sup);
        prev_sup = cur_sup;

        if (s % cfg.diag_every == 0 || s == n_steps) {
            result.records.push_back(make_record(field, t, L, element_sup, cfg.eval));
        }
    }
    result.final_field = field;
    return result;
}

ClaimBoundsReport check_claim_bounds(std::span<const DiagnosticsRecord> series,
                                     const VorticityField& initial, double tol) {
    if (initial.d != 3)
        throw std::domain_error("check_claim_bounds: the transport claims are stated for d = 3");
    ClaimBoundsReport report;
    report.tol = tol;
    if (series.empty() || initial.empty()) {
        report.pass = true;
        return report;
    }
    const double inf = std::numeric_limits<double>::infinity();
    const double rw0 = weighted_l1(initial, 1);
    const double rel_l1_0 = lp_norm_rel_vort(initial, 1.0);
    const double rel_inf_0 = lp_norm_rel_vort(initial, inf);
    double om0 = 0.0;
    for (std::size_t i = 0; i < initial.elements.size(); ++i)
        om0 = std::max(om0, std::abs(initial.omega(i)));

    for (const auto& rec : series) {
        const double rhs1 = (rel_l1_0 + rw0) * rec.L * rec.L;
        const double rhs2 = (rel_inf_0 + om0) * rec.L;
        if (rhs1 > 0.0) report.max_ratio_r_omega = std::max(report.max_ratio_r_omega, rec.r_omega_L1 / rhs1);
        if (rhs2 > 0.0) report.max_ratio_omega_inf = std::max(report.max_ratio_omega_inf, rec.omega_max / rhs2);
    }
    report.pass = report.max_ratio_r_omega <= 1.0 + tol && report.max_ratio_omega_inf <= 1.0 + tol;
    return report;
}

std::string diagnostics_csv_header() {
    return "t,R,omega_max,relvort_L1,relvort_Linf,r_omega_L1,energy,I_r2,I_z,L,max_ur\n";
}

std::string diagnostics_to_csv(std::span<const DiagnosticsRecord> series) {
    std::string out = diagnostics_csv_header();
    for (const auto& r : series) {
        out += csv_row({r.t, r.R, r.omega_max, r.relvort_L1, r.relvort_Linf, r.r_omega_L1, r.energy,
                        r.I_r2, r.I_z, r.L, r.max_ur});
    }
    return out;
}

std::vector<DiagnosticsRecord> diagnostics_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line + "\n" != diagnostics_csv_header())
        throw std::runtime_error("diagnostics CSV: bad header");
    std::vector<DiagnosticsRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        DiagnosticsRecord r;
        char c;
        std::istringstream row(line);
        row >> r.t >> c >> r.R >> c >> r.omega_max >> c >> r.relvort_L1 >> c >> r.relvort_Linf >>
            c >> r.r_omega_L1 >> c >> r.energy >> c >> r.I_r2 >> c >> r.I_z >> c >> r.L >> c >>
            r.max_ur;
        if (!row) throw std::runtime_error("diagnostics CSV: bad row: " + line);
        out.push_back(r);
    }
    return out;
}

}  // namespace axivort
