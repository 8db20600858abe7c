#pragma once

#include <functional>
#include <span>
#include <vector>

namespace axivort {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;  // estimated
    int panels = 0;
};

/// Globally adaptive Gauss-Kronrod 7-15 integration of f over [a, b].
///
/// `breakpoints` seeds the initial panel set (values outside (a, b) are ignored);
/// panels are then bisected worst-first until the summed error estimate meets
/// rel_tol, or QuadratureError is thrown once max_panels is exhausted.
QuadratureResult adaptive_gk(const std::function<double(double)>& f, double a, double b,
                             double rel_tol, std::span<const double> breakpoints = {},
                             int max_panels = 4000);

}  // namespace axivort
