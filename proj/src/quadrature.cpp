#include "axivort/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "axivort/errors.hpp"

namespace axivort {

namespace {

// Gauss-Kronrod 7-15 nodes/weights (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Panel {
    double a, b;
    double value;
    double err;
    long seq;  // insertion order; deterministic heap tie-break
};

struct PanelLess {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.err != y.err) return x.err < y.err;
        return x.seq > y.seq;
    }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b, long seq) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double kronrod = kWgk[7] * f(c);
    double gauss = kWg[3] * f(c);
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double fsum = f(c - dx) + f(c + dx);
        kronrod += kWgk[i] * fsum;
        if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
    }
    kronrod *= h;
    gauss *= h;
    return Panel{a, b, kronrod, std::abs(kronrod - gauss), seq};
}

}  // namespace

QuadratureResult adaptive_gk(const std::function<double(double)>& f, double a, double b,
                             double rel_tol, std::span<const double> breakpoints,
                             int max_panels) {
    std::vector<double> pts;
    pts.push_back(a);
    for (double x : breakpoints)
        if (x > a && x < b) pts.push_back(x);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::priority_queue<Panel, std::vector<Panel>, PanelLess> heap;
    long seq = 0;
    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Panel p = evaluate_panel(f, pts[i], pts[i + 1], seq++);
        total += p.value;
        total_err += p.err;
        heap.push(p);
    }

    const double span = b - a;
    int panels = static_cast<int>(pts.size()) - 1;
    double frozen_err = 0.0;  // panels already at the roundoff width floor
    while (total_err > rel_tol * std::abs(total) && total_err > 1e-300 && !heap.empty()) {
        if (panels >= max_panels) break;
        Panel worst = heap.top();
        heap.pop();
        if (worst.err == 0.0) break;  // nothing reducible left
        if (worst.b - worst.a < 1e-15 * span) {
            frozen_err += worst.err;
            total_err -= worst.err;
            continue;  // value stays in `total`; panel can't be improved further
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = evaluate_panel(f, worst.a, mid, seq++);
        Panel right = evaluate_panel(f, mid, worst.b, seq++);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    const double full_err = total_err + frozen_err;
    if (full_err > rel_tol * std::abs(total) && full_err > 1e-300) {
        const double achieved = std::abs(total) > 0 ? full_err / std::abs(total) : full_err;
        throw QuadratureError("adaptive quadrature: tolerance not reached within panel budget",
                              achieved, panels);
    }
    return QuadratureResult{total, full_err, panels};
}

}  // namespace axivort
