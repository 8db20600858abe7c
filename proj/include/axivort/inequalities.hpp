#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "axivort/field.hpp"
#include "axivort/parallel.hpp"

namespace axivort {

enum class InequalityName { key_R14, key_highd, global_energy, feng_sverak, majda_bertozzi };

const char* inequality_name_str(InequalityName name);

/// One multiplicative factor of an inequality's right-hand side. `term` groups
/// factors into products; the RHS is the sum of the per-term products.
struct RhsFactor {
    std::string norm;
    double value = 0.0;
    double exponent = 0.0;
    int term = 0;
};

struct InequalityReport {
    InequalityName name = InequalityName::key_R14;
    double lhs = 0.0;
    std::vector<RhsFactor> factors;
    double empirical_constant = 0.0;  // lhs / rhs
    std::string field_id;

    /// RHS reconstructed from the factor list (sum over terms of factor products).
    double rhs() const;
};

// sup_z |u^r(R,z)| <= C (||w/r^(d-2)||_inf^(1/d) ||w/r^(d-2)||_1^(1-1/d)
//                        + R^(d/4-1/2) ||u||_2^(1/2) ||w/r^(d-2)||_inf^(1/2)).
InequalityReport check_key_estimate(const VorticityField& field, const EvalOptions& opts = {},
                                    const std::string& field_id = "");  // d = 3 form
InequalityReport check_key_estimate_highd(const VorticityField& field, const EvalOptions& opts = {},
                                          const std::string& field_id = "");

// ||u^r||_inf <= C ||u||_2^(1/3) ||w/r||_inf^(1/2) ||r w||_1^(1/6)   (d = 3)
InequalityReport check_global_estimate(const VorticityField& field, const EvalOptions& opts = {},
                                       const std::string& field_id = "");

// ||u||_inf <= C ||w/r||_inf^(1/2) ||w/r||_1^(1/4) ||r w||_1^(1/4)   (d = 3)
InequalityReport check_feng_sverak(const VorticityField& field, const EvalOptions& opts = {},
                                   const std::string& field_id = "");

// ||u||_inf <= C ||w||_inf, support volume recorded as an exponent-0 factor
// (reported as a diagnostic only; the intended normalization is implicit).
InequalityReport check_majda_bertozzi(const VorticityField& field, const EvalOptions& opts = {},
                                      const std::string& field_id = "");

// ---------------------------------------------------------------------------
// Exact-rational exponent determination

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d);

    Rational operator+(const Rational&) const;
    Rational operator-(const Rational&) const;
    Rational operator*(const Rational&) const;
    Rational operator/(const Rational&) const;
    bool operator==(const Rational&) const = default;
    bool is_zero() const { return num == 0; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

struct LinearConstraint {
    Rational a, b, c;  // coefficients on (alpha, beta, gamma)
    Rational rhs;
    std::string name;
};

struct ExponentTriple {
    Rational alpha, beta, gamma;
};

/// Exact solve of a 3x3 rational system; throws ExponentSolveError naming
/// "rank-deficient" or "inconsistent" systems, std::invalid_argument unless
/// exactly 3 constraints are supplied.
ExponentTriple solve_exponents(std::span<const LinearConstraint> constraints);

// Constraint sets for the two determined systems. Unknowns for the
// Feng-Sverak family are the exponents on (||w/r||_inf, ||w/r||_1, ||r w||_1);
// for the energy variant they sit on (||u||_2, ||w/r||_inf, ||r w||_1).
std::vector<LinearConstraint> feng_sverak_system();    // -> (1/2, 1/4, 1/4)
std::vector<LinearConstraint> global_energy_system();  // -> (1/3, 1/2, 1/6)

// ---------------------------------------------------------------------------
// Scaling invariance

struct ScalingSample {
    double lambda = 1.0;
    double constant = 0.0;
};

struct ScalingSuiteResult {
    bool pass = false;
    double max_deviation = 0.0;  // relative to the unscaled constant
    std::vector<ScalingSample> samples;
};

/// Asserts the named inequality's empirical constant is invariant (to 1e-6
/// relative) across rescalings. Setting perturb_norm/perturb_dexp bumps the
/// exponent of every factor with that norm name, which must break invariance
/// detectably for wrong exponents.
ScalingSuiteResult scaling_invariance_suite(InequalityName name, const VorticityField& field,
                                            std::span<const double> lambdas,
                                            const EvalOptions& opts = {},
                                            const std::string& perturb_norm = "",
                                            double perturb_dexp = 0.0, double tol = 1e-6);

// ---------------------------------------------------------------------------
// Randomized field corpus (1-5 rings, log-uniform radii, signed amplitudes)

struct CorpusParams {
    std::uint64_t seed = 20240817;
    int n_fields = 100;
    int d = 3;
    int resolution = 12;
};

std::vector<VorticityField> build_random_corpus(const CorpusParams& params);

/// Deterministic 64-bit generator (splitmix64) so corpora are identical across
/// platforms and standard libraries.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    double uniform01();                      // [0, 1)
    double uniform(double lo, double hi);
    double log_uniform(double lo, double hi);
};

}  // namespace axivort
