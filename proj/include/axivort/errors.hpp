#pragma once

#include <stdexcept>
#include <string>

namespace axivort {

/// Adaptive quadrature ran out of panel budget before reaching the requested tolerance.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved_rel_err, int panels)
        : std::runtime_error(what), achieved_rel_err_(achieved_rel_err), panels_(panels) {}
    double achieved_rel_err() const { return achieved_rel_err_; }
    int panels() const { return panels_; }

private:
    double achieved_rel_err_;
    int panels_;
};

/// Kernel evaluated at coincident points with zero blob length.
class SingularKernelError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Stream-function double sum produced a negative squared energy.
class NegativeEnergyError : public std::runtime_error {
public:
    NegativeEnergyError(const std::string& what, double value)
        : std::runtime_error(what), value_(value) {}
    double value() const { return value_; }

private:
    double value_;
};

/// Exponent system is rank-deficient or inconsistent; defect() names which.
class ExponentSolveError : public std::runtime_error {
public:
    ExponentSolveError(const std::string& what, std::string defect)
        : std::runtime_error(what), defect_(std::move(defect)) {}
    const std::string& defect() const { return defect_; }

private:
    std::string defect_;
};

}  // namespace axivort
