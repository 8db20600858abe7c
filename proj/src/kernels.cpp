#include "axivort/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "axivort/errors.hpp"
#include "axivort/quadrature.hpp"

namespace axivort {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kStreamPrefactor = 1.0 / (2.0 * kPi);  // a_d in G_d
constexpr double kFrPrefactor = -1.0 / kPi;             // c_d = -2 a_d
constexpr double kSeriesSwitch = 1e4;                   // quadrature below, series above

double sin_pow(double sa, int m) {
    switch (m) {
        case 0: return 1.0;
        case 1: return sa;
        case 2: return sa * sa;
        default: return sa * sa * sa;
    }
}

/// int_0^pi sin^n(a) da
double sine_moment(int n) {
    return std::sqrt(kPi) * std::tgamma(0.5 * (n + 1)) / std::tgamma(0.5 * n + 1.0);
}

// Moments M_k = int_0^pi cos(a) sin^(d-3)(a) sin^(2k)(a/2) da of the large-s
// expansion F^(ell)(s) = c_ell s^-p sum_k binom(-p,k) (4/s)^k M_k.  Expanding
// sin^2(a/2) = (1-cos a)/2 binomially, only odd cosine powers survive.
constexpr int kSeriesTerms = 14;

const std::array<double, kSeriesTerms>& series_moments(int d) {
    static std::array<std::array<double, kSeriesTerms>, 4> cache;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int dd = 3; dd <= 6; ++dd) {
            auto& m = cache[dd - 3];
            for (int k = 0; k < kSeriesTerms; ++k) {
                double sum = 0.0;
                double binom = 1.0;  // C(k, j)
                for (int j = 0; j <= k; ++j) {
                    if (j % 2 == 1) {
                        // int_0^pi cos^(j+1) sin^(d-3) = B((d-2)/2, (j+2)/2), j+1 even
                        const double beta = std::tgamma(0.5 * (dd - 2)) * std::tgamma(0.5 * (j + 2)) /
                                            std::tgamma(0.5 * (dd + j));
                        sum -= binom * beta;  // (-1)^j = -1
                    }
                    binom *= static_cast<double>(k - j) / static_cast<double>(j + 1);
                }
                m[k] = std::ldexp(sum, -k);
            }
        }
    });
    return cache[d - 3];
}

double elliptic_f_series(int d, int ell, double s) {
    const double p = 0.5 * d - 1.0 + ell;
    const auto& moments = series_moments(d);
    const double y = 4.0 / s;
    double coeff = 1.0;  // binom(-p, k)
    double sum = 0.0, yk = 1.0;
    for (int k = 1; k < kSeriesTerms; ++k) {
        coeff *= (-p - (k - 1)) / k;
        yk *= y;
        const double term = coeff * yk * moments[k];
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    double c_ell = 1.0;
    for (int j = 0; j < ell; ++j) c_ell *= -(0.5 * d - 1.0 + j);
    return c_ell * sum * std::pow(s, -p);
}

double elliptic_f_quadrature(int d, int ell, double s, double rel_tol) {
    const double p = 0.5 * d - 1.0 + ell;
    const int m = d - 3;
    auto integrand = [p, m, s](double a) {
        const double sh = std::sin(0.5 * a);
        const double base = 4.0 * sh * sh + s;  // 2(1 - cos a) + s, stable near a = 0
        return std::cos(a) * sin_pow(std::sin(a), m) * std::pow(base, -p);
    };
    // The integrand peaks at a = 0 with width ~ sqrt(s); seed graded panels there.
    std::vector<double> breaks;
    if (s < 4.0) {
        double x = std::sqrt(s);
        while (x < kPi) {
            breaks.push_back(x);
            x *= 4.0;
        }
    }
    breaks.push_back(0.5 * kPi);
    const QuadratureResult q = adaptive_gk(integrand, 0.0, kPi, rel_tol, breaks);
    double c_ell = 1.0;
    for (int j = 0; j < ell; ++j) c_ell *= -(0.5 * d - 1.0 + j);
    return c_ell * q.value;
}

}  // namespace

void KernelSpec::validate() const {
    if (d < 3 || d > 6) throw std::invalid_argument("KernelSpec: d must be in {3,4,5,6}");
    if (ell < 0) throw std::invalid_argument("KernelSpec: ell must be >= 0");
    if (!(quad_rel_tol > 0.0) || quad_rel_tol >= 1e-3)
        throw std::invalid_argument("KernelSpec: quad_rel_tol must lie in (0, 1e-3)");
}

double elliptic_f(const KernelSpec& spec, double s) {
    spec.validate();
    if (!(s > 0.0)) throw std::domain_error("elliptic_f: s must be positive");
    if (s >= kSeriesSwitch) return elliptic_f_series(spec.d, spec.ell, s);
    return elliptic_f_quadrature(spec.d, spec.ell, s, spec.quad_rel_tol);
}

double sphere_measure(int d) {
    return 2.0 * std::pow(kPi, 0.5 * (d - 1)) / std::tgamma(0.5 * (d - 1));
}

double cos2_sine_moment(int d) {
    return sine_moment(d - 3) - sine_moment(d - 1);
}

// ---------------------------------------------------------------------------
// KernelEvaluator

namespace {

struct TableGrid {
    static constexpr double kXLo = -23.5;  // ln s range, ~ [6e-11, 1.6e10]
    static constexpr double kXHi = 23.5;
    static constexpr double kH = 0.0075;   // F' interp error ~ (1+d/2)^4 h^4/384 < 1e-8 at d=6
};

}  // namespace

KernelEvaluator::KernelEvaluator(int d, bool build_table) : d_(d) {
    if (d < 3 || d > 6) throw std::invalid_argument("KernelEvaluator: d must be in {3,4,5,6}");
    if (!build_table) return;

    const int n = static_cast<int>(std::ceil((TableGrid::kXHi - TableGrid::kXLo) / TableGrid::kH)) + 1;
    x0_ = TableGrid::kXLo;
    const double h = (TableGrid::kXHi - TableGrid::kXLo) / (n - 1);
    inv_h_ = 1.0 / h;

    std::vector<double> f(n), fp(n), fpp(n);
    const double tol = 1e-12;
    for (int i = 0; i < n; ++i) {
        const double s = std::exp(x0_ + i * h);
        f[i] = elliptic_f({d, 0, tol}, s);
        fp[i] = elliptic_f({d, 1, tol}, s);
        fpp[i] = elliptic_f({d, 2, tol}, s);
    }

    // Cubic Hermite in x = ln s with analytic slopes (dF/dx = s F', dF'/dx = s F''),
    // clamped Fritsch-Carlson style so the interpolant stays monotone like F and F'.
    auto build = [&](const std::vector<double>& v, const std::vector<double>& slope_src,
                     std::vector<Cubic>& out) {
        out.resize(n - 1);
        for (int i = 0; i + 1 < n; ++i) {
            const double delta = (v[i + 1] - v[i]) / h;
            auto clamp_slope = [&](double m) {
                if (delta == 0.0) return 0.0;
                if (m * delta < 0.0) return 0.0;
                return std::abs(m) > 3.0 * std::abs(delta) ? 3.0 * delta : m;
            };
            const double m0 = clamp_slope(slope_src[i]);
            const double m1 = clamp_slope(slope_src[i + 1]);
            Cubic c;
            c.c0 = v[i];
            c.c1 = m0;
            c.c2 = (3.0 * delta - 2.0 * m0 - m1) / h;
            c.c3 = (m0 + m1 - 2.0 * delta) / (h * h);
            out[i] = c;
        }
    };
    std::vector<double> df(n), dfp(n);
    for (int i = 0; i < n; ++i) {
        const double s = std::exp(x0_ + i * h);
        df[i] = s * fp[i];
        dfp[i] = s * fpp[i];
    }
    build(f, df, table_f_);
    build(fp, dfp, table_fp_);
}

double KernelEvaluator::eval_table(const std::vector<Cubic>& table, double s) const {
    const double x = std::log(s);
    const double t = (x - x0_) * inv_h_;
    const int i = std::clamp(static_cast<int>(t), 0, static_cast<int>(table.size()) - 1);
    const double u = (x - x0_) - i / inv_h_;
    const Cubic& c = table[i];
    return ((c.c3 * u + c.c2) * u + c.c1) * u + c.c0;
}

double KernelEvaluator::f(double s) const {
    if (!table_f_.empty() && s > std::exp(TableGrid::kXLo) && s < std::exp(TableGrid::kXHi))
        return eval_table(table_f_, s);
    if (s >= kSeriesSwitch) return elliptic_f_series(d_, 0, s);
    return elliptic_f_quadrature(d_, 0, s, 1e-10);
}

double KernelEvaluator::fp(double s) const {
    if (!table_fp_.empty() && s > std::exp(TableGrid::kXLo) && s < std::exp(TableGrid::kXHi))
        return eval_table(table_fp_, s);
    if (s >= kSeriesSwitch) return elliptic_f_series(d_, 1, s);
    return elliptic_f_quadrature(d_, 1, s, 1e-10);
}

void KernelEvaluator::f_fp(double s, double& f_out, double& fp_out) const {
    if (!table_f_.empty() && s > std::exp(TableGrid::kXLo) && s < std::exp(TableGrid::kXHi)) {
        const double x = std::log(s);
        const double t = (x - x0_) * inv_h_;
        const int i = std::clamp(static_cast<int>(t), 0, static_cast<int>(table_f_.size()) - 1);
        const double u = (x - x0_) - i / inv_h_;
        const Cubic& cf = table_f_[i];
        const Cubic& cp = table_fp_[i];
        f_out = ((cf.c3 * u + cf.c2) * u + cf.c1) * u + cf.c0;
        fp_out = ((cp.c3 * u + cp.c2) * u + cp.c1) * u + cp.c0;
        return;
    }
    f_out = f(s);
    fp_out = fp(s);
}

class KernelRegistryAccess {
public:
    static std::unique_ptr<KernelEvaluator> make(int d, bool table) {
        return std::unique_ptr<KernelEvaluator>(new KernelEvaluator(d, table));
    }
};

namespace {

std::mutex g_registry_mutex;

const KernelEvaluator& registry_get(int d, bool table) {
    static std::map<std::pair<int, bool>, std::unique_ptr<KernelEvaluator>> registry;
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto& slot = registry[{d, table}];
    if (!slot) slot = KernelRegistryAccess::make(d, table);
    return *slot;
}

}  // namespace

const KernelEvaluator& KernelEvaluator::direct(int d) { return registry_get(d, false); }
const KernelEvaluator& KernelEvaluator::tabulated(int d) { return registry_get(d, true); }

// ---------------------------------------------------------------------------
// Meridian kernels

namespace {

double pow_half_int(double x, int twice_exponent) {
    // x^(twice_exponent/2) for the small set of exponents the kernels need.
    switch (twice_exponent) {
        case -3: return 1.0 / (x * std::sqrt(x));
        case -2: return 1.0 / x;
        case -1: return 1.0 / std::sqrt(x);
        case 0: return 1.0;
        case 1: return std::sqrt(x);
        case 2: return x;
        case 3: return x * std::sqrt(x);
        default: return std::pow(x, 0.5 * twice_exponent);
    }
}

}  // namespace

double kernel_fr(int d, const HalfPlanePoint& target, const HalfPlanePoint& source,
                 double delta, const KernelEvaluator& ev) {
    if (target.r == 0.0) return 0.0;  // forced axis limit
    if (source.r == 0.0) return 0.0;  // vanishing measure
    const double dz = target.z - source.z;
    if (dz == 0.0) return 0.0;        // odd factor vanishes (covers self-pairs)
    const double s = (dist2(target, source) + delta * delta) / (target.r * source.r);
    return kFrPrefactor * pow_half_int(source.r, d - 4) * dz * pow_half_int(target.r, -d) *
           ev.fp(s);
}

double kernel_fz(int d, const HalfPlanePoint& target, const HalfPlanePoint& source,
                 double delta, const KernelEvaluator& ev) {
    if (source.r == 0.0) return 0.0;
    const double d2 = dist2(target, source) + delta * delta;
    if (target.r == 0.0) {
        // Exact axis limit of r^-(d-2) dr G_d.
        const double c = kStreamPrefactor * (d - 1) * (d - 2) * cos2_sine_moment(d);
        return c * std::pow(source.r, d - 1) * std::pow(d2, -0.5 * d);
    }
    if (d2 == 0.0) throw SingularKernelError("kernel_fz: coincident points with zero blob length");
    const double s = d2 / (target.r * source.r);
    const double dr = target.r - source.r;
    const double bracket = (0.5 * d - 1.0) * source.r * ev.f(s) + (2.0 * dr - s * source.r) * ev.fp(s);
    return kStreamPrefactor * pow_half_int(target.r, -d) * pow_half_int(source.r, d - 4) * bracket;
}

double stream_kernel(int d, const HalfPlanePoint& target, const HalfPlanePoint& source,
                     double delta, const KernelEvaluator& ev) {
    if (target.r == 0.0 || source.r == 0.0) return 0.0;
    const double d2 = dist2(target, source) + delta * delta;
    if (d2 == 0.0) throw SingularKernelError("stream_kernel: coincident points with zero blob length");
    const double s = d2 / (target.r * source.r);
    return kStreamPrefactor * pow_half_int(target.r * source.r, d - 2) * ev.f(s);
}

double kernel_fr(int d, const HalfPlanePoint& target, const HalfPlanePoint& source, double delta) {
    return kernel_fr(d, target, source, delta, KernelEvaluator::direct(d));
}
double kernel_fz(int d, const HalfPlanePoint& target, const HalfPlanePoint& source, double delta) {
    return kernel_fz(d, target, source, delta, KernelEvaluator::direct(d));
}
double stream_kernel(int d, const HalfPlanePoint& target, const HalfPlanePoint& source, double delta) {
    return stream_kernel(d, target, source, delta, KernelEvaluator::direct(d));
}

// ---------------------------------------------------------------------------
// Decay-bound certification

KernelBoundReport verify_kernel_bounds(const KernelSpec& spec, double s_min, double s_max, int n) {
    spec.validate();
    if (!(s_min > 0.0) || !(s_min < s_max)) {
        throw std::invalid_argument("verify_kernel_bounds: need 0 < s_min < s_max");
    }
    if (n < 2) throw std::invalid_argument("verify_kernel_bounds: need n >= 2");

    KernelBoundReport report;
    report.spec = spec;
    report.s_grid.reserve(n);
    const double ratio = std::log(s_max / s_min);
    double worst = 0.0, worst_s = s_min;
    for (int i = 0; i < n; ++i) {
        const double s = s_min * std::exp(ratio * i / (n - 1));
        report.s_grid.push_back(s);
        const double value = std::abs(elliptic_f(spec, s));
        double comparator;
        if (spec.ell == 0) {
            comparator = std::min(std::abs(std::log(s)) + 1.0, std::pow(s, -0.5 * spec.d));
        } else {
            comparator = std::min(std::pow(s, -static_cast<double>(spec.ell)),
                                  std::pow(s, -(spec.ell + 0.5 * spec.d)));
        }
        const double c = value / comparator;
        if (c > worst) {
            worst = c;
            worst_s = s;
        }
    }
    report.empirical_constant = worst;
    report.worst_s = worst_s;
    return report;
}

}  // namespace axivort
