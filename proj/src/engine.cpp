#include "casimir/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/reflection.hpp"

namespace casimir {

namespace {

using std::numbers::pi;

/// Matsubara reach: intervals beyond 2 a q / (hbar c scale) = kYStop carry
/// contributions at the e^-50 level, far below double-precision relevance.
constexpr double kYStop = 50.0;

/// Span (in the reduced variable) covered by panels before handing the
/// remainder to the double-exponential tail rule. Used for both the
/// transverse integral (in y - y_min) and the continuous frequency integral
/// (in z = 2 a xi / c); both integrands decay like e^-span there.
constexpr double kPanelSpan = 60.0;

/// First-level transverse panel edges (offsets above the lower limit).
/// Log-spaced near zero, where the integrand can develop y ln y structure,
/// then stretching towards the exponential tail. The layout is rigid --
/// identical at every frequency -- so the quadrature bias drifts smoothly
/// with frequency and cancels in the entropy's integral-minus-trapezoid
/// assembly.
constexpr double kInnerOffsets[] = {2.5e-4, 1e-3, 4e-3, 1e-2, 0.04, 0.1, 0.25,
                                    0.5,    1.0,  1.5,  2.0,  3.0,  4.0, 6.0,
                                    8.0,    12.0, 16.0, 24.0, 32.0, 45.0};

enum class Kernel {
    LogEnergy,           ///< y [ln(1 - r_par^2 e^-y) + ln(1 - r_perp^2 e^-y)]
    PressureDerivative,  ///< y^2 sum over pol of r^2 e^-y / (1 - r^2 e^-y)
};

/// Everything that stays fixed along one transverse integral.
struct FrequencyPoint {
    const PlateSystem* sys;
    double xi = 0.0;   ///< rad/s; 0 marks the prescription-defined zero term
    double z = 0.0;    ///< 2 a xi / c
    double eps = 0.0;  ///< permittivity (finite models at xi > 0 only)
    bool ideal = false;
    bool zero_freq = false;

    ReflectionPair reflect(double s) const {
        // y^2 = z^2 + (2 a k_perp)^2 with y = z + s, solved for k_perp
        // without cancellation:
        const double k_perp =
            std::sqrt(s * (s + 2.0 * z)) / (2.0 * sys->separation_a);
        if (zero_freq)
            return refl_sq_zero(sys->material, sys->prescription, k_perp,
                                sys->temperature_T);
        if (ideal) return {1.0, 1.0};
        return refl_sq_from_eps(eps, xi, k_perp);
    }
};

FrequencyPoint at_xi(const PlateSystem& sys, double xi) {
    FrequencyPoint p;
    p.sys = &sys;
    p.ideal = std::holds_alternative<IdealMetal>(sys.material);
    if (xi <= 0.0) {
        p.zero_freq = true;
        return p;
    }
    p.xi = xi;
    p.z = 2.0 * sys.separation_a * xi / codata.c;
    if (!p.ideal) p.eps = eps_imag_axis(sys.material, xi, sys.temperature_T);
    return p;
}

FrequencyPoint at_z(const PlateSystem& sys, double z) {
    return at_xi(sys, z * codata.c / (2.0 * sys.separation_a));
}

double kernel_value(const FrequencyPoint& p, Kernel kind, double s) {
    const double y = p.z + s;
    if (!(y > 0.0)) return 0.0;
    const double t = std::exp(-y);
    if (t == 0.0) return 0.0;
    const ReflectionPair r = p.reflect(s);
    if (kind == Kernel::LogEnergy) {
        double sum = 0.0;
        if (r.r_par_sq > 0.0) sum += quad::ln_one_minus(r.r_par_sq * t);
        if (r.r_perp_sq > 0.0) sum += quad::ln_one_minus(r.r_perp_sq * t);
        return y * sum;
    }
    double sum = 0.0;
    for (const double r_sq : {r.r_par_sq, r.r_perp_sq}) {
        if (r_sq <= 0.0) continue;
        // 1 - r^2 e^-y cancels only when r^2 == 1 and y is small.
        const double denom = r_sq == 1.0 ? -std::expm1(-y) : 1.0 - r_sq * t;
        sum += r_sq * t / denom;
    }
    return y * y * sum;
}

/// Transverse integral at one frequency: fixed panel layout over
/// [0, kPanelSpan] plus a double-exponential tail. Throws numerical_error
/// when the panel stage cannot meet its tolerance within the node budget.
quad::Estimate transverse_integral(const FrequencyPoint& p, Kernel kind,
                                   const QuadratureConfig& cfg) {
    const double rel = std::min(1e-11, cfg.rel_tol);
    auto f = [&](double s) { return kernel_value(p, kind, s); };
    quad::Estimate est =
        quad::adaptive_gk(f, 0.0, kPanelSpan, rel, 1e-18,
                          cfg.max_nodes_per_integral, kInnerOffsets);
    if (!est.converged)
        throw numerical_error(
            "transverse momentum integral did not converge within "
            "max_nodes_per_integral",
            est.value, -1);
    const quad::Estimate tail = quad::exp_sinh_tail(f, kPanelSpan);
    est.value += tail.value;
    est.error += tail.error;
    est.nodes += tail.nodes;
    return est;
}

/// Reduced frequency z_c = 2 a xi_c / c of the dissipative transverse
/// crossover xi_c = gamma (delta_0 / 2a)^2, or 0 when the material has none.
/// Below xi_c the transverse reflection collapses; frequency integrals need
/// panel edges across this region.
double dissipative_crossover_z(const PlateSystem& sys) {
    const auto* drude = std::get_if<Drude>(&sys.material);
    if (!drude) return 0.0;
    const double gamma = gamma_of_T(drude->gamma, sys.temperature_T);
    if (gamma <= 0.0) return 0.0;
    const double a = sys.separation_a;
    const double delta_0 = codata.c / drude->omega_p;
    const double half_ratio = delta_0 / (2.0 * a);
    const double xi_c = gamma * half_ratio * half_ratio;
    return 2.0 * a * xi_c / codata.c;
}

/// Panel edges for frequency integrals whose lower limit is z = 0, where the
/// integrand has z^2 ln z curvature and (for dissipative metals) rapid
/// variation around the crossover z_c.
std::vector<double> low_frequency_edges(const PlateSystem& sys, double hi) {
    std::vector<double> edges;
    for (const double d : {1e-9, 1e-8, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2,
                           0.1, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0})
        if (d < hi) edges.push_back(d);
    for (const double frac : {1e-4, 1e-3, 0.01, 0.05, 0.1, 0.2, 0.35, 0.5,
                              0.65, 0.8, 0.9})
        edges.push_back(frac * hi);
    const double z_c = dissipative_crossover_z(sys);
    if (z_c > 0.0)
        for (const double decade : {1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3}) {
            const double z = z_c * decade;
            if (z < hi) edges.push_back(z);
        }
    return edges;
}

struct ContinuousResult {
    double integral;  ///< integral over z in [0, inf)
    double error;     ///< same units, conservative
};

/// Continuous-frequency integral of the transverse kernel over z in
/// [0, inf): adaptive panels over [0, kPanelSpan] with low-z edges, then a
/// double-exponential tail. abs_tol_z is the absolute target in z units.
ContinuousResult continuous_integral(const PlateSystem& sys, Kernel kind,
                                     const QuadratureConfig& cfg,
                                     double abs_tol_z) {
    double worst_inner = 0.0;
    auto f = [&](double z) {
        const quad::Estimate e = transverse_integral(at_z(sys, z), kind, cfg);
        worst_inner = std::max(worst_inner, e.error);
        return e.value;
    };
    const std::vector<double> edges = low_frequency_edges(sys, kPanelSpan);
    const quad::Estimate main =
        quad::adaptive_gk(f, 0.0, kPanelSpan, cfg.rel_tol, abs_tol_z,
                          cfg.max_nodes_per_integral, edges);
    if (!main.converged)
        throw numerical_error(
            "frequency integral did not converge within max_nodes_per_integral",
            main.value, -1);
    const quad::Estimate tail = quad::exp_sinh_tail(f, kPanelSpan);
    return {main.value + tail.value,
            main.error + tail.error + kPanelSpan * worst_inner};
}

/// Truncated Matsubara sum of prefactor * w_l * (transverse integral at
/// xi_l), with the tail-consecutive stopping rule and a geometric bound on
/// the dropped remainder folded into the error estimate.
EnergyResult matsubara_sum(const PlateSystem& sys, Kernel kind,
                           double prefactor, const QuadratureConfig& cfg) {
    const double T = sys.temperature_T;
    const double dz =
        4.0 * pi * sys.separation_a * codata.k_B * T / (codata.hbar * codata.c);
    double partial = 0.0;
    double err = 0.0;
    double term = 0.0;
    int below = 0;
    long l = 0;
    for (;; ++l) {
        if (l > cfg.max_l)
            throw numerical_error(
                "Matsubara sum reached max_l = " + std::to_string(cfg.max_l) +
                    " before meeting the truncation criterion",
                partial, cfg.max_l);
        const FrequencyPoint p =
            at_xi(sys, l == 0 ? 0.0 : matsubara_frequency(l, T));
        const quad::Estimate est = transverse_integral(p, kind, cfg);
        const double w = l == 0 ? 0.5 : 1.0;
        term = w * prefactor * est.value;
        partial += term;
        err += w * std::abs(prefactor) * est.error;
        if (l >= 1) {
            if (std::abs(term) < cfg.rel_tol * std::abs(partial)) {
                if (++below >= cfg.tail_consecutive) break;
            } else {
                below = 0;
            }
        }
    }
    // Terms decay essentially like e^-dz per step; the factor 2 covers the
    // slowly varying algebraic prefactor of the decay.
    const double rho = std::exp(-dz);
    err += 2.0 * std::abs(term) * rho / (1.0 - rho);

    EnergyResult out;
    out.value = partial;
    out.err_estimate = err;
    out.l_max_used = l;
    if (zero_term_uses_drude_limit(sys.material, sys.prescription))
        out.flags |= kZeroFreqIndeterminate;
    return out;
}

} // namespace

double matsubara_term(const PlateSystem& system, long l,
                      const QuadratureConfig& cfg) {
    validate(system);
    validate(cfg);
    if (!(system.temperature_T > 0.0))
        throw domain_error("matsubara_term requires T > 0");
    if (l < 0) throw domain_error("matsubara_term requires l >= 0");
    const double xi =
        l == 0 ? 0.0 : matsubara_frequency(l, system.temperature_T);
    const quad::Estimate est =
        transverse_integral(at_xi(system, xi), Kernel::LogEnergy, cfg);
    const double a = system.separation_a;
    const double k_f = codata.k_B * system.temperature_T / (8.0 * pi * a * a);
    return (l == 0 ? 0.5 : 1.0) * k_f * est.value;
}

EnergyResult free_energy(const PlateSystem& system,
                         const QuadratureConfig& cfg) {
    validate(system);
    validate(cfg);
    if (!(system.temperature_T > 0.0))
        throw domain_error(
            "free_energy requires T > 0 (zero_point_energy covers T = 0)");
    const double a = system.separation_a;
    const double k_f = codata.k_B * system.temperature_T / (8.0 * pi * a * a);
    return matsubara_sum(system, Kernel::LogEnergy, k_f, cfg);
}

EnergyResult zero_point_energy(const PlateSystem& system,
                               const QuadratureConfig& cfg) {
    validate(system);
    validate(cfg);
    const double a = system.separation_a;
    const double k_e =
        codata.hbar * codata.c / (32.0 * pi * pi * a * a * a);
    const ContinuousResult r =
        continuous_integral(system, Kernel::LogEnergy, cfg,
                            std::max(1e-18, cfg.abs_tol_energy / k_e));
    EnergyResult out;
    out.value = k_e * r.integral;
    out.err_estimate = k_e * r.error;
    return out;
}

EnergyResult force_plates(const PlateSystem& system,
                          const QuadratureConfig& cfg) {
    validate(system);
    validate(cfg);
    const double a = system.separation_a;
    if (system.temperature_T > 0.0) {
        const double k_p =
            codata.k_B * system.temperature_T / (8.0 * pi * a * a * a);
        return matsubara_sum(system, Kernel::PressureDerivative, -k_p, cfg);
    }
    const double k_p0 =
        codata.hbar * codata.c / (32.0 * pi * pi * a * a * a * a);
    const ContinuousResult r = continuous_integral(
        system, Kernel::PressureDerivative, cfg,
        std::max(1e-18, cfg.abs_tol_energy / (k_p0 * a)));
    EnergyResult out;
    out.value = -k_p0 * r.integral;
    out.err_estimate = k_p0 * r.error;
    return out;
}

EnergyResult force_sphere_plate(const PlateSystem& system,
                                const QuadratureConfig& cfg) {
    validate(system);
    validate(cfg);
    if (system.geometry != Geometry::SpherePlate)
        throw domain_error(
            "force_sphere_plate requires SpherePlate geometry (force_plates "
            "handles parallel plates)");
    PlateSystem plates = system;
    plates.geometry = Geometry::ParallelPlates;
    plates.sphere_radius_R = 0.0;
    const EnergyResult base = system.temperature_T > 0.0
                                  ? free_energy(plates, cfg)
                                  : zero_point_energy(plates, cfg);
    const double factor = 2.0 * pi * system.sphere_radius_R;
    EnergyResult out = base;
    out.value *= factor;
    out.err_estimate *= factor;
    if (sphere_radius_suspect(system)) out.flags |= kSphereMappingSuspect;
    return out;
}

ThermoResult thermo_point(const PlateSystem& system,
                          const QuadratureConfig& cfg) {
    validate(system);
    validate(cfg);
    const double T = system.temperature_T;
    if (!(T > 0.0))
        throw domain_error(
            "thermo_point requires T > 0 (the entropy is a finite-T quantity)");
    const double a = system.separation_a;
    const double dz =
        4.0 * pi * a * codata.k_B * T / (codata.hbar * codata.c);
    const long L =
        std::max<long>(1, static_cast<long>(std::ceil(kYStop / dz - 1e-9)));
    if (L > cfg.max_l)
        throw numerical_error("thermo_point needs " + std::to_string(L) +
                                  " Matsubara intervals, above max_l = " +
                                  std::to_string(cfg.max_l),
                              0.0, cfg.max_l);
    const double k_e =
        codata.hbar * codata.c / (32.0 * pi * pi * a * a * a);

    // Transverse integrals at the Matsubara nodes, l in [0, L].
    std::vector<double> g(L + 1), g_err(L + 1);
    {
        const quad::Estimate e0 =
            transverse_integral(at_xi(system, 0.0), Kernel::LogEnergy, cfg);
        g[0] = e0.value;
        g_err[0] = e0.error;
    }
    for (long l = 1; l <= L; ++l) {
        const quad::Estimate e =
            transverse_integral(at_z(system, l * dz), Kernel::LogEnergy, cfg);
        g[l] = e.value;
        g_err[l] = e.error;
    }

    // Interval-by-interval difference between the frequency integral and its
    // trapezoid. Summed, this is (E - F) / k_e; forming it per interval lets
    // the quadrature bias common to both evaluations of the shared integrand
    // cancel, which is what resolves the entropy at low temperature.
    const double outer_rel = std::min(1e-10, cfg.rel_tol);
    const double outer_abs =
        std::max(1e-18, cfg.abs_tol_energy / k_e) / static_cast<double>(L);
    double sum_diff = 0.0;
    double integral_err = 0.0;
    double worst_inner = 0.0;
    auto g_of_z = [&](double z) {
        const quad::Estimate e =
            transverse_integral(at_z(system, z), Kernel::LogEnergy, cfg);
        worst_inner = std::max(worst_inner, e.error);
        return e.value;
    };
    for (long l = 0; l < L; ++l) {
        const double lo = static_cast<double>(l) * dz;
        const double hi = static_cast<double>(l + 1) * dz;
        quad::Estimate seg;
        if (l == 0) {
            const std::vector<double> edges = low_frequency_edges(system, hi);
            seg = quad::adaptive_gk(g_of_z, lo, hi, outer_rel, outer_abs,
                                    cfg.max_nodes_per_integral, edges);
        } else {
            seg = quad::adaptive_gk(g_of_z, lo, hi, outer_rel, outer_abs,
                                    cfg.max_nodes_per_integral);
        }
        if (!seg.converged)
            throw numerical_error("frequency interval " + std::to_string(l) +
                                      " did not converge within "
                                      "max_nodes_per_integral",
                                  k_e * sum_diff, l);
        sum_diff += seg.value - 0.5 * dz * (g[l] + g[l + 1]);
        integral_err += seg.error;
    }

    double trapezoid = 0.5 * g[0] + 0.5 * g[L];
    double node_err = 0.5 * g_err[0] + 0.5 * g_err[L];
    for (long l = 1; l < L; ++l) {
        trapezoid += g[l];
        node_err += g_err[l];
    }

    // Dropped tails beyond z_L = L dz >= kYStop, both bounded via
    // |g(z)| <= 4 (1 + z) e^-z there; they are ~1e-20 in reduced units.
    const double z_last = static_cast<double>(L) * dz;
    const double tail_integral = 4.0 * (2.0 + z_last) * std::exp(-z_last);
    const double rho = std::exp(-dz);
    const double tail_sum =
        dz * std::abs(g[L]) * (0.5 + rho / (1.0 - rho));

    ThermoResult out;
    out.free_energy_F = k_e * dz * trapezoid;
    out.zero_point_E = out.free_energy_F + k_e * sum_diff;
    out.entropy_S = k_e * sum_diff / T;
    out.l_max_used = L;
    const double err_integral_side =
        k_e * (integral_err + z_last * worst_inner + tail_integral);
    const double err_sum_side = k_e * (dz * node_err + tail_sum);
    out.err_estimate = err_integral_side + err_sum_side;
    out.entropy_err = out.err_estimate / T;
    if (zero_term_uses_drude_limit(system.material, system.prescription))
        out.flags |= kZeroFreqIndeterminate;
    return out;
}

} // namespace casimir
