#include "axivort/inequalities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "axivort/biot_savart.hpp"
#include "axivort/errors.hpp"

namespace axivort {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double probe_max_ur(const VorticityField& field, const EvalOptions& opts) {
    const auto pts = probe_points(field);
    const auto vel = velocity_at_many(field, pts, opts);
    double m = 0.0;
    for (const auto& v : vel) m = std::max(m, std::abs(v.ur));
    return m;
}

double probe_max_speed(const VorticityField& field, const EvalOptions& opts) {
    const auto pts = probe_points(field);
    const auto vel = velocity_at_many(field, pts, opts);
    double m = 0.0;
    for (const auto& v : vel) m = std::max(m, std::hypot(v.ur, v.uz));
    return m;
}

InequalityReport finish_report(InequalityReport report) {
    const double rhs = report.rhs();
    report.empirical_constant = rhs > 0.0 ? report.lhs / rhs : 0.0;
    return report;
}

}  // namespace

const char* inequality_name_str(InequalityName name) {
    switch (name) {
        case InequalityName::key_R14: return "key_R14";
        case InequalityName::key_highd: return "key_highd";
        case InequalityName::global_energy: return "global_energy";
        case InequalityName::feng_sverak: return "feng_sverak";
        case InequalityName::majda_bertozzi: return "majda_bertozzi";
    }
    return "?";
}

double InequalityReport::rhs() const {
    int n_terms = 0;
    for (const auto& f : factors) n_terms = std::max(n_terms, f.term + 1);
    double total = 0.0;
    for (int t = 0; t < n_terms; ++t) {
        double prod = 1.0;
        bool present = false;
        for (const auto& f : factors) {
            if (f.term != t) continue;
            present = true;
            prod *= std::pow(f.value, f.exponent);
        }
        if (present) total += prod;
    }
    return total;
}

namespace {

InequalityReport key_estimate_impl(const VorticityField& field, const EvalOptions& opts,
                                   const std::string& field_id, InequalityName name) {
    InequalityReport report;
    report.name = name;
    report.field_id = field_id;
    if (field.empty()) return report;
    const int d = field.d;
    const double R = support_radius(field);
    const double linf = lp_norm_rel_vort(field, kInf);
    if (R == 0.0 || linf == 0.0) return report;
    const double l1 = lp_norm_rel_vort(field, 1.0);
    const double energy = kinetic_energy(field, opts).value;

    report.lhs = max_radial_velocity_on_R(field, 0, 0.0, opts);
    report.factors = {
        {"relvort_Linf", linf, 1.0 / d, 0},
        {"relvort_L1", l1, 1.0 - 1.0 / d, 0},
        {"R", R, 0.25 * d - 0.5, 1},
        {"energy", energy, 0.5, 1},
        {"relvort_Linf", linf, 0.5, 1},
    };
    return finish_report(std::move(report));
}

}  // namespace

InequalityReport check_key_estimate(const VorticityField& field, const EvalOptions& opts,
                                    const std::string& field_id) {
    if (field.d != 3)
        throw std::domain_error("check_key_estimate: d = 3 form; use check_key_estimate_highd");
    return key_estimate_impl(field, opts, field_id, InequalityName::key_R14);
}

InequalityReport check_key_estimate_highd(const VorticityField& field, const EvalOptions& opts,
                                          const std::string& field_id) {
    return key_estimate_impl(field, opts, field_id, InequalityName::key_highd);
}

InequalityReport check_global_estimate(const VorticityField& field, const EvalOptions& opts,
                                       const std::string& field_id) {
    if (field.d != 3) throw std::domain_error("check_global_estimate: stated for d = 3");
    InequalityReport report;
    report.name = InequalityName::global_energy;
    report.field_id = field_id;
    if (field.empty()) return report;
    const double linf = lp_norm_rel_vort(field, kInf);
    if (linf == 0.0) return report;
    report.lhs = probe_max_ur(field, opts);
    report.factors = {
        {"energy", kinetic_energy(field, opts).value, 1.0 / 3.0, 0},
        {"relvort_Linf", linf, 0.5, 0},
        {"r_omega_L1", weighted_l1(field, 1), 1.0 / 6.0, 0},
    };
    return finish_report(std::move(report));
}

InequalityReport check_feng_sverak(const VorticityField& field, const EvalOptions& opts,
                                   const std::string& field_id) {
    if (field.d != 3) throw std::domain_error("check_feng_sverak: stated for d = 3");
    InequalityReport report;
    report.name = InequalityName::feng_sverak;
    report.field_id = field_id;
    if (field.empty()) return report;
    const double linf = lp_norm_rel_vort(field, kInf);
    if (linf == 0.0) return report;
    report.lhs = probe_max_speed(field, opts);
    report.factors = {
        {"relvort_Linf", linf, 0.5, 0},
        {"relvort_L1", lp_norm_rel_vort(field, 1.0), 0.25, 0},
        {"r_omega_L1", weighted_l1(field, 1), 0.25, 0},
    };
    return finish_report(std::move(report));
}

InequalityReport check_majda_bertozzi(const VorticityField& field, const EvalOptions& opts,
                                      const std::string& field_id) {
    if (field.d != 3) throw std::domain_error("check_majda_bertozzi: stated for d = 3");
    InequalityReport report;
    report.name = InequalityName::majda_bertozzi;
    report.field_id = field_id;
    if (field.empty()) return report;
    double omega_max = 0.0, qmax = 0.0;
    for (std::size_t i = 0; i < field.elements.size(); ++i) {
        omega_max = std::max(omega_max, std::abs(field.omega(i)));
        qmax = std::max(qmax, std::abs(field.elements[i].q));
    }
    if (omega_max == 0.0) return report;
    double volume = 0.0;
    const double cutoff = kSupportDeadband * qmax;
    for (std::size_t i = 0; i < field.elements.size(); ++i) {
        const auto& e = field.elements[i];
        if (std::abs(e.q) > cutoff) {
            double rp = 1.0;
            for (int k = 0; k < field.d - 2; ++k) rp *= e.pos.r;
            volume += field.sigma() * rp * e.area;
        }
    }
    report.lhs = probe_max_speed(field, opts);
    report.factors = {
        {"omega_Linf", omega_max, 1.0, 0},
        {"support_volume", volume, 0.0, 0},  // recorded, not normalized (see docs)
    };
    return finish_report(std::move(report));
}

// ---------------------------------------------------------------------------
// Rational arithmetic and the exponent solver

namespace {

long long checked_mul(long long a, long long b) {
    const __int128 p = static_cast<__int128>(a) * b;
    if (p > std::numeric_limits<long long>::max() || p < std::numeric_limits<long long>::min())
        throw std::overflow_error("Rational: overflow");
    return static_cast<long long>(p);
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(checked_mul(num, o.den) + checked_mul(o.num, den), checked_mul(den, o.den));
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(checked_mul(num, o.den) - checked_mul(o.num, den), checked_mul(den, o.den));
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(checked_mul(num, o.num), checked_mul(den, o.den));
}
Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw std::domain_error("Rational: division by zero");
    return Rational(checked_mul(num, o.den), checked_mul(den, o.num));
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

ExponentTriple solve_exponents(std::span<const LinearConstraint> constraints) {
    if (constraints.size() != 3)
        throw std::invalid_argument("solve_exponents: exactly 3 constraints required, got " +
                                    std::to_string(constraints.size()));
    Rational m[3][4];
    for (int i = 0; i < 3; ++i) {
        m[i][0] = constraints[i].a;
        m[i][1] = constraints[i].b;
        m[i][2] = constraints[i].c;
        m[i][3] = constraints[i].rhs;
    }
    // Exact Gaussian elimination.
    for (int col = 0; col < 3; ++col) {
        int pivot = -1;
        for (int row = col; row < 3; ++row) {
            if (!m[row][col].is_zero()) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) {
            // Column has no pivot; decide between rank deficiency and inconsistency below.
            continue;
        }
        if (pivot != col) std::swap(m[pivot], m[col]);
        for (int row = 0; row < 3; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            const Rational f = m[row][col] / m[col][col];
            for (int k = col; k < 4; ++k) m[row][k] = m[row][k] - f * m[col][k];
        }
    }
    for (int row = 0; row < 3; ++row) {
        const bool zero_coeffs = m[row][0].is_zero() && m[row][1].is_zero() && m[row][2].is_zero();
        if (zero_coeffs && !m[row][3].is_zero())
            throw ExponentSolveError("solve_exponents: inconsistent system (0 = " + m[row][3].str() + ")",
                                     "inconsistent");
    }
    for (int row = 0; row < 3; ++row) {
        const bool zero_coeffs = m[row][0].is_zero() && m[row][1].is_zero() && m[row][2].is_zero();
        if (zero_coeffs || m[row][row].is_zero())
            throw ExponentSolveError(
                "solve_exponents: rank-deficient system (fewer than 3 independent constraints)",
                "rank-deficient");
    }
    return ExponentTriple{m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

std::vector<LinearConstraint> feng_sverak_system() {
    return {
        {1, 1, 1, 1, "homogeneity"},
        {2, -1, -3, 0, "3d-scaling"},
        {1, 0, 0, {1, 2}, "two-dimensionalization (alpha = 1/2)"},
    };
}

std::vector<LinearConstraint> global_energy_system() {
    // Unknowns (e, alpha, gamma) on (||u||_2, ||w/r||_inf, ||r w||_1).
    return {
        {1, 1, 1, 1, "homogeneity"},
        {-3, 4, -6, 0, "3d-scaling"},
        {-1, 1, -1, 0, "two-dimensionalization"},
    };
}

// ---------------------------------------------------------------------------
// Scaling invariance suite

namespace {

double constant_with_perturbation(const InequalityReport& report, const std::string& norm,
                                  double dexp) {
    InequalityReport tweaked = report;
    for (auto& f : tweaked.factors) {
        if (f.norm == norm) f.exponent += dexp;
    }
    const double rhs = tweaked.rhs();
    return rhs > 0.0 ? tweaked.lhs / rhs : 0.0;
}

InequalityReport run_named_check(InequalityName name, const VorticityField& field,
                                 const EvalOptions& opts, const std::string& id) {
    switch (name) {
        case InequalityName::key_R14: return check_key_estimate(field, opts, id);
        case InequalityName::key_highd: return check_key_estimate_highd(field, opts, id);
        case InequalityName::global_energy: return check_global_estimate(field, opts, id);
        case InequalityName::feng_sverak: return check_feng_sverak(field, opts, id);
        case InequalityName::majda_bertozzi: return check_majda_bertozzi(field, opts, id);
    }
    throw std::logic_error("run_named_check: unknown name");
}

}  // namespace

ScalingSuiteResult scaling_invariance_suite(InequalityName name, const VorticityField& field,
                                            std::span<const double> lambdas, const EvalOptions& opts,
                                            const std::string& perturb_norm, double perturb_dexp,
                                            double tol) {
    for (double l : lambdas)
        if (!(l > 0.0)) throw std::domain_error("scaling_invariance_suite: lambdas must be positive");

    ScalingSuiteResult result;
    const InequalityReport base = run_named_check(name, field, opts, "scaling-base");
    const double c0 = perturb_norm.empty() ? base.empirical_constant
                                           : constant_with_perturbation(base, perturb_norm, perturb_dexp);
    result.samples.push_back({1.0, c0});
    double max_dev = 0.0;
    for (double lambda : lambdas) {
        const VorticityField scaled = rescale(field, lambda, 0.0);
        const InequalityReport rep = run_named_check(name, scaled, opts, "scaling");
        const double c = perturb_norm.empty() ? rep.empirical_constant
                                              : constant_with_perturbation(rep, perturb_norm, perturb_dexp);
        result.samples.push_back({lambda, c});
        if (c0 != 0.0) max_dev = std::max(max_dev, std::abs(c / c0 - 1.0));
    }
    result.max_deviation = max_dev;
    result.pass = max_dev < tol;
    return result;
}

// ---------------------------------------------------------------------------
// Random corpus

std::uint64_t SplitMix64::next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double SplitMix64::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

std::vector<VorticityField> build_random_corpus(const CorpusParams& params) {
    if (params.n_fields < 1) throw std::invalid_argument("build_random_corpus: n_fields >= 1");
    std::vector<VorticityField> corpus;
    corpus.reserve(params.n_fields);
    SplitMix64 rng(params.seed);
    for (int i = 0; i < params.n_fields; ++i) {
        const int n_rings = 1 + static_cast<int>(rng.next() % 5);
        VorticityField field;
        bool first = true;
        double delta = 0.0;
        // Common blob length so rings can be merged; set from the smallest ring.
        std::vector<std::array<double, 4>> specs;
        double min_radius = kInf;
        for (int k = 0; k < n_rings; ++k) {
            const double rc = rng.log_uniform(0.2, 5.0);
            const double zc = rng.uniform(-2.0, 2.0);
            const double radius = rc * rng.uniform(0.2, 0.55);
            const double amp = (rng.uniform01() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.5, 2.0);
            specs.push_back({rc, zc, radius, amp});
            min_radius = std::min(min_radius, radius);
        }
        delta = 1.5 * (2.0 * min_radius / params.resolution);
        for (const auto& s : specs) {
            VorticityField ring =
                make_single_ring({s[0], s[1]}, s[2], s[3], params.resolution, params.d, delta);
            field = first ? ring : merge_fields(field, ring);
            first = false;
        }
        corpus.push_back(std::move(field));
    }
    return corpus;
}

}  // namespace axivort
