#include "axivort/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "axivort/kernels.hpp"
#include "axivort/summation.hpp"

namespace axivort {

namespace {

double r_pow(double r, int e) {
    double v = 1.0;
    for (int i = 0; i < e; ++i) v *= r;
    return v;
}

void require_nonempty(const VorticityField& field, const char* op) {
    if (field.empty()) throw std::invalid_argument(std::string(op) + ": field has no elements");
}

double max_abs_q(const VorticityField& field) {
    double m = 0.0;
    for (const auto& e : field.elements) m = std::max(m, std::abs(e.q));
    return m;
}

}  // namespace

double VorticityField::sigma() const { return sphere_measure(d); }

double VorticityField::omega(std::size_t i) const {
    const auto& e = elements[i];
    return e.q * r_pow(e.pos.r, d - 2);
}

double lp_norm_rel_vort(const VorticityField& field, double p) {
    require_nonempty(field, "lp_norm_rel_vort");
    if (p < 1.0) throw std::domain_error("lp_norm_rel_vort: p must be >= 1");
    if (std::isinf(p)) return max_abs_q(field);
    const double sig = field.sigma();
    std::vector<double> terms(field.elements.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& e = field.elements[i];
        terms[i] = std::pow(std::abs(e.q), p) * sig * r_pow(e.pos.r, field.d - 2) * e.area;
    }
    return std::pow(repro_sum(terms), 1.0 / p);
}

double weighted_l1(const VorticityField& field, int weight_power) {
    require_nonempty(field, "weighted_l1");
    if (weight_power != -(field.d - 2) && weight_power != 0 && weight_power != 1)
        throw std::domain_error("weighted_l1: weight power must be -(d-2), 0 or 1");
    const double sig = field.sigma();
    std::vector<double> terms(field.elements.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& e = field.elements[i];
        const int e1 = field.d - 2 + weight_power;  // |omega| r^k = |q| r^(d-2+k)
        terms[i] = std::abs(e.q) * r_pow(e.pos.r, e1) * sig * r_pow(e.pos.r, field.d - 2) * e.area;
    }
    return repro_sum(terms);
}

double support_radius(const VorticityField& field) {
    require_nonempty(field, "support_radius");
    const double cutoff = kSupportDeadband * max_abs_q(field);
    double radius = 0.0;
    for (const auto& e : field.elements) {
        if (std::abs(e.q) > cutoff && e.q != 0.0) radius = std::max(radius, e.pos.r);
    }
    return radius;
}

std::pair<double, double> half_plane_moments(const VorticityField& field) {
    require_nonempty(field, "half_plane_moments");
    std::vector<double> t1(field.elements.size()), t2(field.elements.size());
    for (std::size_t i = 0; i < field.elements.size(); ++i) {
        const auto& e = field.elements[i];
        const double aw = std::abs(field.omega(i)) * e.area;
        t1[i] = e.pos.r * e.pos.r * aw;
        t2[i] = std::abs(e.pos.z) * aw;
    }
    return {repro_sum(t1), repro_sum(t2)};
}

std::pair<double, double> monotone_quantities(const VorticityField& field) {
    if (field.d != 3)
        throw std::domain_error("monotone_quantities: defined for d = 3 only");
    return half_plane_moments(field);
}

VorticityField rescale(const VorticityField& field, double lambda, double z0) {
    if (!(lambda > 0.0)) throw std::domain_error("rescale: lambda must be positive");
    VorticityField out;
    out.d = field.d;
    out.delta = field.delta / lambda;
    out.elements.reserve(field.elements.size());
    const double q_scale = std::pow(lambda, field.d - 1);
    const double area_scale = 1.0 / (lambda * lambda);
    for (const auto& e : field.elements) {
        VortexElement m;
        m.pos.r = e.pos.r / lambda;
        m.pos.z = (e.pos.z - z0) / lambda;
        m.q = e.q * q_scale;
        m.area = e.area * area_scale;
        out.elements.push_back(m);
    }
    return out;
}

void DipoleParams::validate() const {
    if (!(amplitude > 0.0)) throw std::invalid_argument("DipoleParams: amplitude must be positive");
    if (!(radius > 0.0)) throw std::invalid_argument("DipoleParams: radius must be positive");
    if (!(center.z > radius))
        throw std::invalid_argument("DipoleParams: bumps must not straddle z = 0 (center.z > radius)");
    if (!(center.r > radius))
        throw std::invalid_argument("DipoleParams: support must stay off the axis (center.r > radius)");
    if (resolution < 4) throw std::invalid_argument("DipoleParams: resolution < 4 is under-resolved");
}

namespace {

double bump(double rho2_over_rad2, double amplitude) {
    if (rho2_over_rad2 >= 1.0) return 0.0;
    return amplitude * std::exp(1.0 - 1.0 / (1.0 - rho2_over_rad2));
}

// One grid bump; sign carries the orientation. mirror_sign != 0 adds the
// z-mirrored element with the opposite sign right after each cell.
VorticityField make_bump_field(const HalfPlanePoint& center, double radius, double amplitude,
                               int resolution, int d, double delta, bool with_mirror) {
    if (resolution < 4) throw std::invalid_argument("make_bump_field: resolution < 4 is under-resolved");
    if (!(radius > 0.0)) throw std::invalid_argument("make_bump_field: radius must be positive");
    VorticityField field;
    field.d = d;
    const double h = 2.0 * radius / resolution;
    field.delta = delta < 0.0 ? 1.5 * h : delta;
    const double area = h * h;
    for (int i = 0; i < resolution; ++i) {
        const double r = center.r - radius + (i + 0.5) * h;
        if (r <= 0.0) continue;
        for (int j = 0; j < resolution; ++j) {
            const double z = center.z - radius + (j + 0.5) * h;
            const double rho2 = ((r - center.r) * (r - center.r) + (z - center.z) * (z - center.z)) /
                                (radius * radius);
            const double phi = bump(rho2, std::abs(amplitude));
            if (phi == 0.0) continue;
            const double omega = amplitude < 0 ? -phi : phi;
            const double q = omega / r_pow(r, d - 2);
            field.elements.push_back({{r, z}, with_mirror ? -q : q, area});
            if (with_mirror) field.elements.push_back({{r, -z}, q, area});
        }
    }
    return field;
}

}  // namespace

VorticityField make_dipole(const DipoleParams& params, int d, double delta) {
    params.validate();
    return make_bump_field(params.center, params.radius, params.amplitude, params.resolution, d,
                           delta, /*with_mirror=*/true);
}

VorticityField make_single_ring(const HalfPlanePoint& center, double radius, double amplitude,
                                int resolution, int d, double delta) {
    if (amplitude == 0.0) throw std::invalid_argument("make_single_ring: amplitude must be nonzero");
    if (!(center.r > radius))
        throw std::invalid_argument("make_single_ring: support must stay off the axis");
    return make_bump_field(center, radius, amplitude, resolution, d, delta, /*with_mirror=*/false);
}

VorticityField merge_fields(const VorticityField& a, const VorticityField& b) {
    if (a.d != b.d) throw std::invalid_argument("merge_fields: dimension mismatch");
    if (a.delta != b.delta) throw std::invalid_argument("merge_fields: blob length mismatch");
    VorticityField out = a;
    out.elements.insert(out.elements.end(), b.elements.begin(), b.elements.end());
    return out;
}

}  // namespace axivort
