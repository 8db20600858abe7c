#pragma once

#include <memory>
#include <vector>

#include "axivort/geometry.hpp"

namespace axivort {

/// Which elliptic-integral derivative to evaluate: F_(d)^(ell).
struct KernelSpec {
    int d = 3;                   // spatial dimension, 3..6
    int ell = 0;                 // derivative order >= 0
    double quad_rel_tol = 1e-10; // relative quadrature tolerance

    void validate() const;  // throws std::invalid_argument on bad fields
};

/// F_(d)^(ell)(s) for s > 0 by adaptive quadrature of the differentiated
/// integrand c_ell * int_0^pi cos(a) sin^(d-3)(a) [2(1-cos a)+s]^(-(d/2-1+ell)) da,
/// with a series branch for large s where the quadrature would cancel badly.
double elliptic_f(const KernelSpec& spec, double s);

/// Area of the unit sphere S^(d-2) in R^(d-1): the angular factor of the
/// d-dimensional axisymmetric volume element sigma * r^(d-2) dr dz.
double sphere_measure(int d);

/// Per-dimension evaluator for F_(d) and F_(d)'. The memoized table
/// (log-spaced cubic Hermite, monotone-clamped) is an optional fast path;
/// instances are immutable after construction and safe to share.
class KernelEvaluator {
public:
    static const KernelEvaluator& direct(int d);     // quadrature every call (default path)
    static const KernelEvaluator& tabulated(int d);  // memo table, built once per d

    double f(double s) const;   // F_(d)(s)
    double fp(double s) const;  // F_(d)'(s)
    void f_fp(double s, double& f_out, double& fp_out) const;  // both, one table lookup

    int dim() const { return d_; }
    bool has_table() const { return !table_f_.empty(); }

private:
    explicit KernelEvaluator(int d, bool build_table);

    struct Cubic {
        double c0, c1, c2, c3;
    };
    double eval_table(const std::vector<Cubic>& table, double s) const;

    int d_;
    double x0_ = 0.0, inv_h_ = 0.0;  // table grid: x = ln s, uniform spacing
    std::vector<Cubic> table_f_, table_fp_;
    friend class KernelRegistryAccess;
};

// Axisymmetric Biot-Savart kernels with blob regularization
// s = (D^2 + delta^2)/(r rbar). The d=3 forms are the printed meridian
// kernels; d > 3 comes from the stream kernel
//   G_d(r,z,rb,zb) = (1/2pi) (r rb)^(d/2-1) F_(d)(s)
// via u^r = -r^-(d-2) dz G, u^z = r^-(d-2) dr G, which reproduces the d=3
// forms exactly and fixes the d-dependent normalization.

double kernel_fr(int d, const HalfPlanePoint& target, const HalfPlanePoint& source,
                 double delta, const KernelEvaluator& ev);
double kernel_fz(int d, const HalfPlanePoint& target, const HalfPlanePoint& source,
                 double delta, const KernelEvaluator& ev);
double stream_kernel(int d, const HalfPlanePoint& target, const HalfPlanePoint& source,
                     double delta, const KernelEvaluator& ev);

// Convenience overloads on the direct (untabulated) evaluator.
double kernel_fr(int d, const HalfPlanePoint& target, const HalfPlanePoint& source, double delta);
double kernel_fz(int d, const HalfPlanePoint& target, const HalfPlanePoint& source, double delta);
double stream_kernel(int d, const HalfPlanePoint& target, const HalfPlanePoint& source, double delta);

/// cos^2-weighted sine moment int_0^pi cos^2(a) sin^(d-3)(a) da; together with
/// sphere_measure it fixes the on-axis kernel limit.
double cos2_sine_moment(int d);

/// Empirical constant for |F^(ell)| against the decay comparator
/// min{s^-ell, s^-(ell+d/2)} (ell >= 1), or min{|log s|+1, s^-(d/2)} (ell = 0).
struct KernelBoundReport {
    KernelSpec spec;
    std::vector<double> s_grid;   // strictly increasing, positive
    double empirical_constant = 0.0;
    double worst_s = 0.0;
};

KernelBoundReport verify_kernel_bounds(const KernelSpec& spec, double s_min, double s_max, int n);

}  // namespace axivort
