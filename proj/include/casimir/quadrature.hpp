#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace casimir {

/// Accuracy and budget knobs shared by every numerical routine.
struct QuadratureConfig {
    double rel_tol = 1e-9;          ///< relative target for energies/forces
    double abs_tol_energy = 1e-22;  ///< J/m^2, absolute floor for F_E and E_T
    long max_l = 100000;            ///< Matsubara summation cap
    int tail_consecutive = 3;       ///< small terms in a row required to stop
    int max_nodes_per_integral = 4096;
};

/// Throws domain_error when a knob is outside its supported range.
void validate(const QuadratureConfig& cfg);

namespace quad {

/// ln(1 - x) for x in [0, 1): uses the log-of-one-plus form below 0.5 where
/// 1 - x would lose low bits, the direct form above.
inline double ln_one_minus(double x) {
    return x < 0.5 ? std::log1p(-x) : std::log(1.0 - x);
}

struct Estimate {
    double value = 0.0;
    double error = 0.0;
    int nodes = 0;
    bool converged = true;
};

namespace detail {

// 7/15 Gauss-Kronrod nodes and weights (QUADPACK dqk15 constants).
inline constexpr double xgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double wgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018,
    0.14065325971552592, 0.16900472663926790, 0.19035057806478541,
    0.20443294007529889, 0.20948214108472783};
inline constexpr double wg[4] = {
    0.12948496616886969, 0.27970539148927664, 0.38183005050511894,
    0.41795918367346939};

struct Panel {
    double lo, hi, value, error;
};

template <class F>
Panel gk15(F&& f, double lo, double hi) {
    const double h = 0.5 * (hi - lo);
    const double mid = 0.5 * (lo + hi);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(mid - h * xgk[i]);
        fv[14 - i] = f(mid + h * xgk[i]);
    }
    fv[7] = f(mid);
    double resk = wgk[7] * fv[7];
    double resg = wg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        resk += wgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) resg += wg[i / 2] * (fv[i] + fv[14 - i]);
    }
    const double reskh = 0.5 * resk;
    double resasc = wgk[7] * std::abs(fv[7] - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += wgk[i] * (std::abs(fv[i] - reskh) + std::abs(fv[14 - i] - reskh));
    resasc *= h;
    double err = std::abs(resk - resg) * h;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return {lo, hi, resk * h, err};
}

} // namespace detail

/// Adaptive Gauss-Kronrod on [lo, hi]. `breakpoints` force first-level panel
/// edges (values outside (lo, hi) are ignored). Refines the worst panel until
/// the summed error estimate meets max(abs_tol, rel_tol*|value|) or the node
/// budget is exhausted (converged = false then; the caller decides whether
/// that is fatal).
template <class F>
Estimate adaptive_gk(F&& f, double lo, double hi, double rel_tol, double abs_tol,
                     int max_nodes, std::span<const double> breakpoints = {}) {
    Estimate out;
    if (!(hi > lo)) return out;

    std::vector<double> edges;
    edges.push_back(lo);
    for (double b : breakpoints)
        if (b > lo && b < hi) edges.push_back(b);
    edges.push_back(hi);
    std::sort(edges.begin(), edges.end());

    std::vector<detail::Panel> panels;
    panels.reserve(edges.size() + 32);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (edges[i + 1] <= edges[i]) continue;
        panels.push_back(detail::gk15(f, edges[i], edges[i + 1]));
        out.nodes += 15;
    }

    auto totals = [&panels](double& v, double& e) {
        v = 0.0; e = 0.0;
        for (const auto& p : panels) { v += p.value; e += p.error; }
    };

    double value, error;
    totals(value, error);
    while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
        if (out.nodes + 30 > max_nodes) {
            out.converged = false;
            break;
        }
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].error > panels[worst].error) worst = i;
        const detail::Panel p = panels[worst];
        const double mid = 0.5 * (p.lo + p.hi);
        if (mid <= p.lo || mid >= p.hi) {  // interval at floating-point resolution
            out.converged = false;
            break;
        }
        panels[worst] = detail::gk15(f, p.lo, mid);
        panels.push_back(detail::gk15(f, mid, p.hi));
        out.nodes += 30;
        totals(value, error);
    }
    out.value = value;
    out.error = error;
    return out;
}

/// Tail integral over [y0, inf) of an exponentially decaying integrand via the
/// exp-sinh double-exponential map y = y0 + exp((pi/2) sinh t), trapezoid in t.
/// The error estimate compares against the half-resolution grid (even nodes),
/// which bounds the discretization error conservatively.
template <class F>
Estimate exp_sinh_tail(F&& f, double y0) {
    constexpr double h = 0.0625;
    constexpr int N = 56;  // |t| <= 3.5: y - y0 spans ~1e-11 .. ~1e11
    Estimate out;
    double sum = 0.0;
    double sum_coarse = 0.0;
    for (int j = -N; j <= N; ++j) {
        const double t = h * j;
        const double u = 1.5707963267948966 * std::sinh(t);
        const double ey = std::exp(u);
        const double w = 1.5707963267948966 * std::cosh(t) * ey;
        const double y = y0 + ey;
        const double fy = f(y);
        if (fy != 0.0) {
            sum += w * fy;
            if (j % 2 == 0) sum_coarse += w * fy;
        }
        ++out.nodes;
    }
    out.value = sum * h;
    out.error = std::abs(sum * h - sum_coarse * (2.0 * h));
    return out;
}

} // namespace quad
} // namespace casimir
