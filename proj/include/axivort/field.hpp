#pragma once

#include <string>
#include <utility>
#include <vector>

#include "axivort/geometry.hpp"

namespace axivort {

/// Lagrangian carrier of the transported scalar q = omega / r^(d-2).
/// The cell measure r^(d-2) * area is the element's flow invariant; `area`
/// tracks the deformed dr dz cell so that product stays fixed under advection.
struct VortexElement {
    HalfPlanePoint pos;
    double q = 0.0;     // relative vorticity omega / r^(d-2)
    double area = 0.0;  // half-plane cell area dr dz
};

/// Snapshot of the discrete vorticity on the half-plane.
/// Immutable after construction; all queries are read-only.
struct VorticityField {
    int d = 3;
    double delta = 0.0;  // blob regularization length
    std::vector<VortexElement> elements;

    double sigma() const;       // area of unit S^(d-2)
    bool empty() const { return elements.empty(); }

    double omega(std::size_t i) const;  // q_i * r_i^(d-2)
};

// Dead-band for support queries: |q| below this fraction of max|q| counts as zero.
constexpr double kSupportDeadband = 1e-14;

/// ||omega / r^(d-2)||_Lp(R^d); p = infinity returns max|q|.
double lp_norm_rel_vort(const VorticityField& field, double p);

/// ||r^k omega||_L1(R^d) for k in {-(d-2), 0, 1}.
double weighted_l1(const VorticityField& field, int weight_power);

/// Largest element radius with |q| above the dead-band; 0 for an all-zero field.
double support_radius(const VorticityField& field);

/// (iint_Pi r^2 |omega| dr dz, iint_Pi |z omega| dr dz), d = 3 only.
std::pair<double, double> monotone_quantities(const VorticityField& field);

// Same plain half-plane integrals without the dimension guard (diagnostics).
std::pair<double, double> half_plane_moments(const VorticityField& field);

/// omega(r,z) -> lambda * omega(lambda r, lambda z + z0); positions map
/// (r,z) -> (r/lambda, (z-z0)/lambda), areas scale by lambda^-2, q by
/// lambda^(d-1), and the blob length by 1/lambda so the regularized kernel
/// argument is invariant.
VorticityField rescale(const VorticityField& field, double lambda, double z0);

struct DipoleParams {
    HalfPlanePoint center{1.0, 1.0};  // bump center of phi
    double radius = 0.25;             // bump support radius
    double amplitude = 1.0;           // peak of phi
    int resolution = 36;              // cells per bump diameter

    void validate() const;
};

/// Anti-parallel ring pair omega0 = -phi(r,z) + phi(r,-z) on a cell-centered
/// uniform grid; odd in z and non-positive for z >= 0.  phi is the compactly
/// supported bump amplitude * exp(1 - 1/(1 - (rho/radius)^2)).
/// delta < 0 selects the default blob length 1.5 * cell size.
VorticityField make_dipole(const DipoleParams& params, int d = 3, double delta = -1.0);

/// Single signed bump (test fixture and corpus building block).
VorticityField make_single_ring(const HalfPlanePoint& center, double radius, double amplitude,
                                int resolution, int d = 3, double delta = -1.0);

/// Element-list concatenation (delta and d must match).
VorticityField merge_fields(const VorticityField& a, const VorticityField& b);

// Serialization: CSV with header r,z,q,area plus a JSON sidecar {d, delta, sigma}.
// Finite doubles print with 17 significant digits and round-trip bit-exactly.
void save_field_csv(const VorticityField& field, const std::string& csv_path,
                    const std::string& sidecar_json_path);
VorticityField load_field_csv(const std::string& csv_path, const std::string& sidecar_json_path);

}  // namespace axivort
