// Elliptic integral, meridian kernel, and decay-bound tests. The d = 4 closed
// form and the curl/divergence identities are the independent oracles here.
#include <cmath>
#include <limits>
#include <stdexcept>

#include "axivort/biot_savart.hpp"
#include "axivort/errors.hpp"
#include "axivort/field.hpp"
#include "axivort/kernels.hpp"
#include "harness.hpp"

using namespace axivort;
using harness::check_le;
using harness::check_near;
using harness::check_throws;
using harness::check_true;
using harness::record;

namespace {

// F_(4)(s) = (1/4)[(2+s) ln(1+4/s) - 4]; long double keeps the large-s
// cancellation below the comparison tolerance.
double closed_form_f4(double s) {
    const long double ls = s;
    return static_cast<double>(0.25L * ((2.0L + ls) * std::log1p(4.0L / ls) - 4.0L));
}

void test_elliptic_values() {
    check_near("F4(2) = ln 3 - 1", elliptic_f({4, 0, 1e-12}, 2.0), std::log(3.0) - 1.0, 1e-10);

    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double s = 1e-4 * std::pow(1e8, i / 49.0);
        const double got = elliptic_f({4, 0, 1e-10}, s);
        worst = std::max(worst, std::abs(got / closed_form_f4(s) - 1.0));
    }
    check_le("F4 closed form on [1e-4, 1e4], 50 log-spaced points", worst, 1e-8);

    const double s_far = 1e6;
    check_near("F3 large-s asymptote (pi/2) s^-3/2", elliptic_f({3, 0, 1e-12}, s_far),
               0.5 * M_PI * std::pow(s_far, -1.5), 1e-2);

    const double fp_small = elliptic_f({3, 1, 1e-12}, 1e-6);
    check_true("F3'(1e-6) negative", fp_small < 0.0);
    check_le("|F3'(s)| s bounded as s -> 0", std::abs(fp_small) * 1e-6, 1.0);
    // Remark-level behavior: F(s) ~ -(1/2) log s, F'(s) ~ -(1/2) s^-1.
    check_near("F3(s)/|log s| -> 1/2 at s = 1e-10", elliptic_f({3, 0, 1e-12}, 1e-10) / std::log(1e10),
               0.5, 2e-2);
    check_near("s F3'(s) -> -1/2", fp_small * 1e-6, -0.5, 1e-4);

    check_throws<std::domain_error>("elliptic_f rejects s = 0",
                                    [] { elliptic_f({3, 0, 1e-10}, 0.0); });
    check_throws<std::domain_error>("elliptic_f rejects s < 0",
                                    [] { elliptic_f({3, 1, 1e-10}, -1.0); });
    check_throws<std::invalid_argument>("KernelSpec rejects d = 7",
                                        [] { elliptic_f({7, 0, 1e-10}, 1.0); });
    check_throws<std::invalid_argument>("KernelSpec rejects ell < 0",
                                        [] { elliptic_f({3, -1, 1e-10}, 1.0); });
    check_throws<std::invalid_argument>("KernelSpec rejects quad_rel_tol >= 1e-3",
                                        [] { elliptic_f({3, 0, 1e-2}, 1.0); });
    check_throws<QuadratureError>("unreachable tolerance raises a convergence error",
                                  [] { elliptic_f({3, 0, 1e-30}, 0.37); });
    try {
        elliptic_f({3, 0, 1e-30}, 0.37);
    } catch (const QuadratureError& e) {
        check_true("convergence error carries the achieved tolerance", e.achieved_rel_err() > 0.0);
    }
}

void test_kernel_parities() {
    const HalfPlanePoint target{1.0, 0.0};
    check_near("Fr vanishes when z = zbar", kernel_fr(3, target, {2.0, 0.0}, 0.3), 0.0, 1e-300);
    const double plus = kernel_fr(3, target, {2.0, 1.0}, 0.0);
    const double minus = kernel_fr(3, target, {2.0, -1.0}, 0.0);
    record("Fr odd in z - zbar (exact)", plus == -minus);
    const double fz_p = kernel_fz(3, {1.0, 1.0}, {2.0, 0.0}, 0.0);
    const double fz_m = kernel_fz(3, {1.0, -1.0}, {2.0, 0.0}, 0.0);
    record("Fz even in z - zbar (exact)", fz_p == fz_m);

    check_throws<SingularKernelError>("Fz coincident points, delta = 0", [] {
        kernel_fz(3, {1.0, 0.5}, {1.0, 0.5}, 0.0);
    });
    check_near("Fr at target.r = 0 is the axis limit 0", kernel_fr(3, {0.0, 1.0}, {1.0, 0.0}, 0.1),
               0.0, 1e-300);
    check_near("Fr at source.r = 0 vanishes", kernel_fr(3, {1.0, 1.0}, {0.0, 0.0}, 0.1), 0.0,
               1e-300);
}

// Printed d = 3 axial kernel, written exactly as in the source formula.
double printed_fz3(const HalfPlanePoint& t, const HalfPlanePoint& s, double delta) {
    const double d2 = dist2(t, s) + delta * delta;
    const double ss = d2 / (t.r * s.r);
    const double f = elliptic_f({3, 0, 1e-12}, ss);
    const double fp = elliptic_f({3, 1, 1e-12}, ss);
    const double r32 = t.r * std::sqrt(t.r);
    return (t.r - s.r) / (M_PI * r32 * std::sqrt(s.r)) * fp +
           std::sqrt(s.r) / (4.0 * M_PI * r32) * (f - 2.0 * ss * fp);
}

void test_fz_reduction_and_oracle() {
    double worst = 0.0;
    const HalfPlanePoint targets[] = {{1.0, 1.0}, {0.7, -0.3}, {2.5, 0.1}, {1.2, 2.0}};
    const HalfPlanePoint sources[] = {{2.0, 0.0}, {1.1, 0.8}, {0.5, -1.0}, {3.0, 0.5}};
    for (const auto& t : targets)
        for (const auto& s : sources) {
            const double got = kernel_fz(3, t, s, 0.05);
            const double want = printed_fz3(t, s, 0.05);
            worst = std::max(worst, std::abs(got / want - 1.0));
        }
    check_le("stream-derived Fz reduces to the printed d=3 form", worst, 1e-10);

    // Kernel pair against the direct 3D filament integral.
    const HalfPlanePoint p{1.0, 0.5};
    const HalfPlanePoint src{1.5, 0.0};
    const double gamma = 0.8;
    const Velocity o = oracle_3d_ring_velocity(src.r, src.z, gamma, p, 1024);
    check_near("Fr * Gamma matches 3D ring oracle", kernel_fr(3, p, src, 0.0) * gamma, o.ur, 1e-6);
    check_near("Fz * Gamma matches 3D ring oracle", kernel_fz(3, p, src, 0.0) * gamma, o.uz, 1e-6);
}

void test_divergence_identity() {
    // One blob element: the induced field solves the same stream-function
    // relations, so d_r(r^(d-2) u^r) + r^(d-2) d_z u^z = 0 away from the source.
    for (int d = 3; d <= 6; ++d) {
        VorticityField f;
        f.d = d;
        f.delta = 0.2;
        f.elements = {{{1.0, 0.0}, 0.7, 0.01}};
        const HalfPlanePoint c{1.4, 0.3};
        auto div_at = [&](double h) {
            auto u = [&](double r, double z) { return velocity_at(f, {r, z}); };
            const Velocity upr = u(c.r + h, c.z), umr = u(c.r - h, c.z);
            const Velocity upz = u(c.r, c.z + h), umz = u(c.r, c.z - h);
            auto rp = [&](double r) { return std::pow(r, d - 2); };
            return (rp(c.r + h) * upr.ur - rp(c.r - h) * umr.ur) / (2 * h) +
                   rp(c.r) * (upz.uz - umz.uz) / (2 * h);
        };
        const double d1 = std::abs(div_at(1e-2));
        const double d2 = std::abs(div_at(5e-3));
        const double scale = std::abs(velocity_at(f, c).ur) / 0.1;  // velocity scale / length
        char name[96];
        std::snprintf(name, sizeof(name), "weighted divergence vanishes to O(h^2), d=%d", d);
        check_le(name, d1 / scale, 1e-3);
        std::snprintf(name, sizeof(name), "divergence residual drops ~4x under h/2, d=%d", d);
        check_le(name, d2 / std::max(d1, 1e-300), 0.5);
    }
}

void test_curl_inversion() {
    // Finite-difference curl of the summed velocity recovers omega inside a
    // smooth bump and ~0 outside; this pins the d-dependent normalization
    // (the high-d analogue of the oracle agreement already checked at d = 3).
    for (int d = 3; d <= 6; ++d) {
        VorticityField ring = make_single_ring({1.0, 0.0}, 0.3, 1.0, 40, d, -1.0);
        EvalOptions opts;
        opts.use_kernel_table = true;
        auto curl_at = [&](double r0, double z0) {
            const double h = 1e-3;
            auto u = [&](double r, double z) { return velocity_at(ring, {r, z}, opts); };
            const Velocity upr = u(r0 + h, z0), umr = u(r0 - h, z0);
            const Velocity upz = u(r0, z0 + h), umz = u(r0, z0 - h);
            return (upz.ur - umz.ur) / (2 * h) - (upr.uz - umr.uz) / (2 * h);
        };
        const double rho2 = (0.08 * 0.08 + 0.05 * 0.05) / (0.3 * 0.3);
        const double omega_in = std::exp(1.0 - 1.0 / (1.0 - rho2));
        char name[96];
        std::snprintf(name, sizeof(name), "curl(u) recovers omega inside the bump, d=%d", d);
        check_near(name, curl_at(1.08, 0.05), omega_in, 0.08);
        std::snprintf(name, sizeof(name), "curl(u) vanishes outside the support, d=%d", d);
        check_le(name, std::abs(curl_at(1.8, 0.9)) / omega_in, 5e-3);
    }
}

void test_kernel_bounds() {
    const auto r1 = verify_kernel_bounds({3, 1, 1e-10}, 1e-6, 1e6, 200);
    check_true("d=3 ell=1 constant finite", std::isfinite(r1.empirical_constant),
               harness::qoi(r1.empirical_constant, 0));
    check_true("d=3 ell=1 constant positive", r1.empirical_constant > 0.0);
    check_true("s_grid strictly increasing",
               std::is_sorted(r1.s_grid.begin(), r1.s_grid.end()) && r1.s_grid.front() > 0.0);

    const auto r2 = verify_kernel_bounds({5, 2, 1e-10}, 1e-6, 1e6, 200);
    check_true("d=5 ell=2 constant finite", std::isfinite(r2.empirical_constant) &&
               r2.empirical_constant > 0.0);

    const auto r0 = verify_kernel_bounds({3, 0, 1e-10}, 1e-6, 1.0, 200);
    check_true("d=3 ell=0 log-comparator constant finite",
               std::isfinite(r0.empirical_constant) && r0.empirical_constant > 0.0);

    const auto fine = verify_kernel_bounds({3, 1, 1e-10}, 1e-6, 1e6, 400);
    check_le("constant stable under grid doubling",
             std::abs(fine.empirical_constant / r1.empirical_constant - 1.0), 0.05);

    check_throws<std::invalid_argument>("rejects s_min <= 0",
                                        [] { verify_kernel_bounds({3, 1, 1e-10}, 0.0, 1.0, 10); });
    check_throws<std::invalid_argument>("rejects n < 2",
                                        [] { verify_kernel_bounds({3, 1, 1e-10}, 1.0, 2.0, 1); });
}

void test_memo_table() {
    check_true("direct evaluator has no table", !KernelEvaluator::direct(3).has_table());
    double worst_f = 0.0, worst_fp = 0.0;
    for (int d = 3; d <= 6; ++d) {
        const auto& tab = KernelEvaluator::tabulated(d);
        check_true("tabulated evaluator reports a table", tab.has_table());
        for (int i = 0; i < 160; ++i) {
            const double s = std::pow(10.0, -8.0 + 16.0 * i / 159.0);
            worst_f = std::max(worst_f, std::abs(tab.f(s) / elliptic_f({d, 0, 1e-12}, s) - 1.0));
            worst_fp = std::max(worst_fp, std::abs(tab.fp(s) / elliptic_f({d, 1, 1e-12}, s) - 1.0));
        }
    }
    check_le("table F within 1e-8 of quadrature (all d)", worst_f, 1e-8);
    check_le("table F' within 1e-8 of quadrature (all d)", worst_fp, 1e-8);

    // Monotone interpolation: F decreasing and positive, F' negative.
    const auto& tab = KernelEvaluator::tabulated(3);
    bool monotone = true, signs = true;
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4000; ++i) {
        const double s = std::pow(10.0, -9.0 + 18.0 * i / 3999.0);
        const double f = tab.f(s);
        monotone = monotone && f <= prev;
        signs = signs && f > 0.0 && tab.fp(s) < 0.0;
        prev = f;
    }
    check_true("table F monotone decreasing", monotone);
    check_true("table F positive, F' negative", signs);
}

}  // namespace

int main() {
    test_elliptic_values();
    test_kernel_parities();
    test_fz_reduction_and_oracle();
    test_divergence_identity();
    test_curl_inversion();
    test_kernel_bounds();
    test_memo_table();
    return harness::summary("test_kernels");
}
