#pragma once

#include <span>
#include <vector>

#include "axivort/field.hpp"
#include "axivort/geometry.hpp"
#include "axivort/parallel.hpp"

namespace axivort {

/// Velocity induced by the field at one half-plane point:
///   u^r(p) = sum_i F^r_(d)(p, x_i; delta) * omega_i * area_i,   u^z analogous.
/// Summation is fixed-order block-pairwise, so results are bit-identical for
/// any worker count; p on the axis returns (0, finite uz).
Velocity velocity_at(const VorticityField& field, const HalfPlanePoint& p,
                     const EvalOptions& opts = {});

/// Batch version; targets evaluated independently (target-parallel).
std::vector<Velocity> velocity_at_many(const VorticityField& field,
                                       std::span<const HalfPlanePoint> targets,
                                       const EvalOptions& opts = {});

/// Velocities at the element positions themselves (self-pairs included;
/// the radial kernel vanishes there and the axial self-term is the blob's
/// regularized self-induction).
std::vector<Velocity> element_velocities(const VorticityField& field,
                                         const EvalOptions& opts = {});

/// sup_z |u^r(R, z)| over Chebyshev nodes in [z_c - z_window, z_c + z_window]
/// (z_c = |omega|-centroid), with one refinement pass around the discrete max.
/// n_z <= 0 picks the default node count (48); z_window <= 0 picks the default
/// half-width max(3R, 2.5 * support z-span).
double max_radial_velocity_on_R(const VorticityField& field, int n_z = 0, double z_window = 0.0,
                                const EvalOptions& opts = {});

struct EnergyResult {
    enum class Method { stream_double_sum, grid_quadrature };
    double value = 0.0;      // ||u||_L2(R^d)
    Method method = Method::stream_double_sum;
    double est_error = 0.0;  // relative error estimate
};

/// ||u||_L2 via the stream-function double sum
///   ||u||^2 = sigma * sum_ij G_d(x_i, x_j; delta) omega_i omega_j area_i area_j.
/// Throws NegativeEnergyError if discretization drives the square negative.
EnergyResult kinetic_energy(const VorticityField& field, const EvalOptions& opts = {});

/// Independent route: sigma * r^(d-2) |u|^2 integrated by tensor-product
/// Gauss-Legendre over [0, 3R] x [z_c -: 3R, z_c + 3R]; the omitted tail is
/// bounded via the kernel's far-field decay and reported in est_error.
EnergyResult kinetic_energy_grid(const VorticityField& field, const EvalOptions& opts = {},
                                 int panels_r = 48, int panels_z = 96);

/// Direct 3D Biot-Savart velocity of a singular circular filament (circulation
/// `circulation` at (ring_r, ring_z)) evaluated at p, by n_phi-panel azimuthal
/// trapezoid quadrature of the R^3 integral. Independent oracle for the
/// axisymmetric kernels; throws SingularKernelError if p lies on the filament.
Velocity oracle_3d_ring_velocity(double ring_r, double ring_z, double circulation,
                                 const HalfPlanePoint& p, int n_phi = 256);

/// Probe set used for sup-norm searches: element positions plus a lattice over
/// the support bounding box dilated by 1.5x.
std::vector<HalfPlanePoint> probe_points(const VorticityField& field, int lattice = 32);

}  // namespace axivort
