#include "axivort/biot_savart.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "axivort/errors.hpp"
#include "axivort/kernels.hpp"
#include "axivort/summation.hpp"

namespace axivort {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kStreamPrefactor = 1.0 / (2.0 * kPi);
constexpr double kFrPrefactor = -1.0 / kPi;
constexpr int kBlock = 64;

double r_pow_int(double r, int e) {
    double v = 1.0;
    for (int i = 0; i < e; ++i) v *= r;
    return v;
}

// Structure-of-arrays snapshot of the sources; gamma_j = omega_j * area_j is
// the element circulation. Sources on the axis contribute exactly zero and
// would poison the r^(d/2-2) powers for d = 3, so they are dropped up front.
struct SourceSet {
    int d = 3;
    double delta2 = 0.0;
    std::vector<double> r, z, gamma;
    std::vector<double> rp_m2;  // rbar^(d/2-2)
    const KernelEvaluator* ev = nullptr;

    std::size_t size() const { return r.size(); }
};

SourceSet make_sources(const VorticityField& field, const EvalOptions& opts) {
    SourceSet s;
    s.d = field.d;
    s.delta2 = field.delta * field.delta;
    s.ev = opts.use_kernel_table ? &KernelEvaluator::tabulated(field.d)
                                 : &KernelEvaluator::direct(field.d);
    s.r.reserve(field.elements.size());
    for (std::size_t i = 0; i < field.elements.size(); ++i) {
        const auto& e = field.elements[i];
        if (e.pos.r <= 0.0) continue;
        s.r.push_back(e.pos.r);
        s.z.push_back(e.pos.z);
        s.gamma.push_back(field.omega(i) * e.area);
        double rp;
        switch (field.d) {
            case 3: rp = 1.0 / std::sqrt(e.pos.r); break;
            case 4: rp = 1.0; break;
            case 5: rp = std::sqrt(e.pos.r); break;
            default: rp = e.pos.r; break;
        }
        s.rp_m2.push_back(rp);
    }
    return s;
}

template <int D>
Velocity target_velocity(const SourceSet& s, double tr, double tz) {
    const std::size_t n = s.size();
    if (n == 0) return {};
    const KernelEvaluator& ev = *s.ev;
    constexpr double half_d_m1 = 0.5 * D - 1.0;

    if (tr == 0.0) {
        // Axis limit: u^r = 0 and the axial kernel reduces to its closed form.
        const double c = kStreamPrefactor * (D - 1) * (D - 2) * cos2_sine_moment(D);
        std::vector<double> sums;
        sums.reserve(n / kBlock + 1);
        for (std::size_t b = 0; b < n; b += kBlock) {
            double acc = 0.0;
            const std::size_t e = std::min(b + kBlock, n);
            for (std::size_t j = b; j < e; ++j) {
                const double dz = tz - s.z[j];
                const double d2 = s.r[j] * s.r[j] + dz * dz + s.delta2;
                acc += s.gamma[j] * r_pow_int(s.r[j], D - 1) * std::pow(d2, -0.5 * D);
            }
            sums.push_back(acc);
        }
        return {0.0, c * pairwise_sum(sums)};
    }

    double t_pow;  // tr^(-d/2)
    switch (D) {
        case 3: t_pow = 1.0 / (tr * std::sqrt(tr)); break;
        case 4: t_pow = 1.0 / (tr * tr); break;
        case 5: t_pow = 1.0 / (tr * tr * std::sqrt(tr)); break;
        default: t_pow = 1.0 / (tr * tr * tr); break;
    }
    const double inv_tr = 1.0 / tr;

    std::vector<double> sums_r, sums_z;
    sums_r.reserve(n / kBlock + 1);
    sums_z.reserve(n / kBlock + 1);
    for (std::size_t b = 0; b < n; b += kBlock) {
        double acc_r = 0.0, acc_z = 0.0;
        const std::size_t e = std::min(b + kBlock, n);
        for (std::size_t j = b; j < e; ++j) {
            const double rb = s.r[j];
            const double dr = tr - rb;
            const double dz = tz - s.z[j];
            const double ss = (dr * dr + dz * dz + s.delta2) * inv_tr / rb;
            double fv, fp;
            ev.f_fp(ss, fv, fp);
            const double common = s.rp_m2[j] * s.gamma[j];
            acc_r += common * (kFrPrefactor * dz) * fp;
            const double bracket = half_d_m1 * rb * fv + (2.0 * dr - ss * rb) * fp;
            acc_z += common * kStreamPrefactor * bracket;
        }
        sums_r.push_back(acc_r);
        sums_z.push_back(acc_z);
    }
    return {t_pow * pairwise_sum(sums_r), t_pow * pairwise_sum(sums_z)};
}

Velocity dispatch_velocity(const SourceSet& s, double tr, double tz) {
    switch (s.d) {
        case 3: return target_velocity<3>(s, tr, tz);
        case 4: return target_velocity<4>(s, tr, tz);
        case 5: return target_velocity<5>(s, tr, tz);
        default: return target_velocity<6>(s, tr, tz);
    }
}

std::vector<Velocity> velocities_at(const SourceSet& s, std::span<const HalfPlanePoint> targets,
                                    const EvalOptions& opts) {
    std::vector<Velocity> out(targets.size());
    parallel_for(targets.size(), opts.workers,
                 [&](std::size_t i) { out[i] = dispatch_velocity(s, targets[i].r, targets[i].z); });
    return out;
}

}  // namespace

Velocity velocity_at(const VorticityField& field, const HalfPlanePoint& p, const EvalOptions& opts) {
    const SourceSet s = make_sources(field, opts);
    return dispatch_velocity(s, p.r, p.z);
}

std::vector<Velocity> velocity_at_many(const VorticityField& field,
                                       std::span<const HalfPlanePoint> targets,
                                       const EvalOptions& opts) {
    const SourceSet s = make_sources(field, opts);
    return velocities_at(s, targets, opts);
}

std::vector<Velocity> element_velocities(const VorticityField& field, const EvalOptions& opts) {
    const SourceSet s = make_sources(field, opts);
    std::vector<HalfPlanePoint> targets(field.elements.size());
    for (std::size_t i = 0; i < targets.size(); ++i) targets[i] = field.elements[i].pos;
    return velocities_at(s, targets, opts);
}

namespace {

struct SupportBox {
    double r_lo = 0.0, r_hi = 0.0, z_lo = 0.0, z_hi = 0.0;
    bool any = false;
};

SupportBox support_box(const VorticityField& field) {
    SupportBox box;
    double qmax = 0.0;
    for (const auto& e : field.elements) qmax = std::max(qmax, std::abs(e.q));
    const double cutoff = kSupportDeadband * qmax;
    for (const auto& e : field.elements) {
        if (std::abs(e.q) <= cutoff || e.q == 0.0) continue;
        if (!box.any) {
            box = {e.pos.r, e.pos.r, e.pos.z, e.pos.z, true};
        } else {
            box.r_lo = std::min(box.r_lo, e.pos.r);
            box.r_hi = std::max(box.r_hi, e.pos.r);
            box.z_lo = std::min(box.z_lo, e.pos.z);
            box.z_hi = std::max(box.z_hi, e.pos.z);
        }
    }
    return box;
}

double omega_z_centroid(const VorticityField& field) {
    double wsum = 0.0, zsum = 0.0;
    for (std::size_t i = 0; i < field.elements.size(); ++i) {
        const double w = std::abs(field.omega(i)) * field.elements[i].area;
        wsum += w;
        zsum += w * field.elements[i].pos.z;
    }
    return wsum > 0.0 ? zsum / wsum : 0.0;
}

}  // namespace

double max_radial_velocity_on_R(const VorticityField& field, int n_z, double z_window,
                                const EvalOptions& opts) {
    if (field.empty()) return 0.0;
    const double R = support_radius(field);
    if (R == 0.0) return 0.0;
    if (n_z <= 0) n_z = 48;
    if (n_z < 16) throw std::invalid_argument("max_radial_velocity_on_R: n_z must be >= 16");

    const SupportBox box = support_box(field);
    const double z_c = omega_z_centroid(field);
    if (z_window <= 0.0) z_window = std::max(3.0 * R, 2.5 * (box.z_hi - box.z_lo));

    const SourceSet s = make_sources(field, opts);
    auto scan = [&](double lo, double hi) {
        std::vector<HalfPlanePoint> nodes(n_z);
        for (int i = 0; i < n_z; ++i) {
            const double theta = kPi * (2.0 * i + 1.0) / (2.0 * n_z);
            nodes[i] = {R, 0.5 * (lo + hi) + 0.5 * (hi - lo) * std::cos(theta)};
        }
        const auto vel = velocities_at(s, nodes, opts);
        int best = 0;
        for (int i = 1; i < n_z; ++i)
            if (std::abs(vel[i].ur) > std::abs(vel[best].ur)) best = i;
        return std::pair<double, double>(std::abs(vel[best].ur), nodes[best].z);
    };

    auto [coarse_max, coarse_z] = scan(z_c - z_window, z_c + z_window);
    const double spacing = 2.0 * z_window / n_z;
    auto [fine_max, fine_z] = scan(coarse_z - spacing, coarse_z + spacing);
    (void)fine_z;
    return std::max(coarse_max, fine_max);
}

EnergyResult kinetic_energy(const VorticityField& field, const EvalOptions& opts) {
    EnergyResult result;
    result.method = EnergyResult::Method::stream_double_sum;
    if (field.empty()) return result;
    const SourceSet s = make_sources(field, opts);
    const std::size_t n = s.size();
    if (n == 0) return result;
    const KernelEvaluator& ev = *s.ev;
    const int d = field.d;
    const double half_d_m1e = 0.5 * d - 1.0;

    // psi_i = sum_j G_d(x_i, x_j) gamma_j, then ||u||^2 = sigma * sum_i psi_i gamma_i.
    std::vector<double> psi(n);
    parallel_for(n, opts.workers, [&](std::size_t i) {
        const double ri = s.r[i], zi = s.z[i];
        std::vector<double> sums;
        sums.reserve(n / kBlock + 1);
        for (std::size_t b = 0; b < n; b += kBlock) {
            double acc = 0.0;
            const std::size_t e = std::min(b + kBlock, n);
            for (std::size_t j = b; j < e; ++j) {
                const double dr = ri - s.r[j];
                const double dz = zi - s.z[j];
                const double ss = (dr * dr + dz * dz + s.delta2) / (ri * s.r[j]);
                acc += s.gamma[j] * std::pow(ri * s.r[j], half_d_m1e) * ev.f(ss);
            }
            sums.push_back(acc);
        }
        psi[i] = kStreamPrefactor * pairwise_sum(sums);
    });

    std::vector<double> terms(n);
    for (std::size_t i = 0; i < n; ++i) terms[i] = psi[i] * s.gamma[i];
    const double square = field.sigma() * repro_sum(terms);
    if (square < 0.0)
        throw NegativeEnergyError("kinetic_energy: discrete double sum went negative", square);
    result.value = std::sqrt(square);
    // Dominant systematic: the blob self-energy offset, linear in the blob
    // fraction of the support thickness. Crude, deliberately conservative.
    const SupportBox box = support_box(field);
    const double thickness = std::max(std::min(box.r_hi - box.r_lo, box.z_hi - box.z_lo), 1e-300);
    result.est_error = std::min(1.0, field.delta / thickness);
    return result;
}

EnergyResult kinetic_energy_grid(const VorticityField& field, const EvalOptions& opts,
                                 int panels_r, int panels_z) {
    EnergyResult result;
    result.method = EnergyResult::Method::grid_quadrature;
    if (field.empty()) return result;
    const double R = support_radius(field);
    if (R == 0.0) return result;
    const double z_c = omega_z_centroid(field);
    const double r_hi = 3.0 * R;
    const double z_lo = z_c - 3.0 * R, z_hi = z_c + 3.0 * R;

    // 4-point Gauss-Legendre per panel in each direction.
    static const double gx[2] = {0.3399810435848563, 0.8611363115940526};
    static const double gw[2] = {0.6521451548625461, 0.3478548451374538};
    std::vector<double> xr, wr, xz, wz;
    auto fill = [&](double lo, double hi, int panels, std::vector<double>& x, std::vector<double>& w) {
        const double hp = (hi - lo) / panels;
        for (int p = 0; p < panels; ++p) {
            const double c = lo + (p + 0.5) * hp;
            for (int g = 0; g < 2; ++g) {
                x.push_back(c - 0.5 * hp * gx[g]);
                w.push_back(0.5 * hp * gw[g]);
                x.push_back(c + 0.5 * hp * gx[g]);
                w.push_back(0.5 * hp * gw[g]);
            }
        }
    };
    fill(0.0, r_hi, panels_r, xr, wr);
    fill(z_lo, z_hi, panels_z, xz, wz);

    const SourceSet s = make_sources(field, opts);
    const int d = field.d;
    std::vector<double> row(xr.size() * xz.size());
    parallel_for(xr.size(), opts.workers, [&](std::size_t i) {
        for (std::size_t j = 0; j < xz.size(); ++j) {
            const Velocity v = dispatch_velocity(s, xr[i], xz[j]);
            const double u2 = v.ur * v.ur + v.uz * v.uz;
            row[i * xz.size() + j] = wr[i] * wz[j] * r_pow_int(xr[i], d - 2) * u2;
        }
    });
    const double inner = field.sigma() * repro_sum(row);

    // Tail bound: |u| <= C / rho^d outside the box (kernel far-field decay);
    // calibrate C on the box boundary and integrate the bound outward.
    double c_far = 0.0;
    for (int k = 0; k < 32; ++k) {
        const double zb = z_lo + (z_hi - z_lo) * k / 31.0;
        const Velocity v = dispatch_velocity(s, r_hi, zb);
        const double rho = std::hypot(r_hi, zb - z_c);
        c_far = std::max(c_far, std::hypot(v.ur, v.uz) * std::pow(rho, d));
    }
    // int_{rho > 3R} sigma rho^(d-1) (C rho^-d)^2 drho ~ sigma C^2 (3R)^(-d) / d
    const double tail = field.sigma() * c_far * c_far * std::pow(3.0 * R, -d) / d;

    const double square = inner;
    if (square < 0.0)
        throw NegativeEnergyError("kinetic_energy_grid: negative square", square);
    result.value = std::sqrt(square);
    result.est_error = square > 0.0 ? tail / square : 0.0;
    return result;
}

Velocity oracle_3d_ring_velocity(double ring_r, double ring_z, double circulation,
                                 const HalfPlanePoint& p, int n_phi) {
    if (n_phi < 64) throw std::invalid_argument("oracle_3d_ring_velocity: n_phi must be >= 64");
    if (!(ring_r > 0.0)) throw std::invalid_argument("oracle_3d_ring_velocity: ring_r must be positive");
    // Target in the phi = 0 meridian plane: x = (p.r, 0, p.z).
    const double px = p.r, pz = p.z;
    const double d_min2 = (p.r - ring_r) * (p.r - ring_r) + (p.z - ring_z) * (p.z - ring_z);
    if (d_min2 <= 1e-28 * ring_r * ring_r)
        throw SingularKernelError("oracle_3d_ring_velocity: target on the filament");

    // u(x) = Gamma rbar / (4 pi) int e_phi(phi) x (x - y(phi)) / |x - y|^3 dphi;
    // periodic trapezoid quadrature is spectrally accurate here.
    double ux = 0.0, uz = 0.0;
    const double dphi = 2.0 * kPi / n_phi;
    for (int k = 0; k < n_phi; ++k) {
        const double phi = k * dphi;
        const double cp = std::cos(phi), sp = std::sin(phi);
        const double yx = ring_r * cp, yy = ring_r * sp;
        const double rx = px - yx, ry = -yy, rz = pz - ring_z;
        const double rn = std::sqrt(rx * rx + ry * ry + rz * rz);
        const double inv3 = 1.0 / (rn * rn * rn);
        // e_phi = (-sp, cp, 0); e_phi x (x - y) = (cp*rz, sp*rz, -sp*ry - cp*rx)
        ux += cp * rz * inv3;
        uz += (-sp * ry - cp * rx) * inv3;
    }
    if (px == 0.0) ux = 0.0;  // exact axis symmetry
    const double scale = circulation * ring_r / (4.0 * kPi) * dphi;
    return {scale * ux, scale * uz};
}

std::vector<HalfPlanePoint> probe_points(const VorticityField& field, int lattice) {
    std::vector<HalfPlanePoint> pts;
    const SupportBox box = support_box(field);
    for (const auto& e : field.elements) pts.push_back(e.pos);
    if (!box.any || lattice < 2) return pts;
    const double rc = 0.5 * (box.r_lo + box.r_hi), zc = 0.5 * (box.z_lo + box.z_hi);
    const double rh = std::max(0.75 * (box.r_hi - box.r_lo), 1e-3 * std::max(1.0, rc));
    const double zh = std::max(0.75 * (box.z_hi - box.z_lo), 1e-3 * std::max(1.0, rc));
    for (int i = 0; i < lattice; ++i) {
        for (int j = 0; j < lattice; ++j) {
            const double r = rc - rh + 2.0 * rh * i / (lattice - 1);
            const double z = zc - zh + 2.0 * zh * j / (lattice - 1);
            if (r >= 0.0) pts.push_back({r, z});
        }
    }
    return pts;
}

}  // namespace axivort
