#include "casimir/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

using std::numbers::pi;

void check_expansion_domain(const char* fn, double a, double T, double omega_p) {
    if (!(a > 0.0)) throw domain_error(std::string(fn) + " requires a > 0");
    if (!(T >= 0.0)) throw domain_error(std::string(fn) + " requires T >= 0");
    if (!(omega_p > 0.0))
        throw domain_error(std::string(fn) + " requires omega_p > 0");
    const double T_eff = codata.hbar * codata.c / (2.0 * a * codata.k_B);
    if (!(T / T_eff < 0.3))
        throw domain_error(std::string(fn) +
                           ": expansion valid only for T/T_eff < 0.3 (got " +
                           std::to_string(T / T_eff) + ")");
    const double lambda_p = 2.0 * pi * codata.c / omega_p;
    if (!(a >= lambda_p))
        throw domain_error(std::string(fn) +
                           ": expansion valid only for a >= lambda_p (got a/lambda_p = " +
                           std::to_string(a / lambda_p) + ")");
}

} // namespace

EntropyCurvePoint entropy(const PlateSystem& system, const QuadratureConfig& cfg) {
    const ThermoResult r = thermo_point(system, cfg);
    EntropyCurvePoint p;
    p.T = system.temperature_T;
    p.S = r.entropy_S;
    p.S_MeV_per_m2_K = r.entropy_S / MeV_per_m2K;
    p.err = r.entropy_err;
    p.flags = r.flags;
    return p;
}

double entropy_lowT_plasma(double separation_a, double T, double omega_p) {
    check_expansion_domain("entropy_lowT_plasma", separation_a, T, omega_p);
    const double a = separation_a;
    const double T_eff = codata.hbar * codata.c / (2.0 * a * codata.k_B);
    const double tau = T / T_eff;
    const double delta_0 = codata.c / omega_p;
    const double cubic = pi * pi * pi / (45.0 * zeta3);
    const double lead = codata.k_B * zeta3 / (8.0 * pi * a * a);
    return lead * tau * tau *
           (1.0 - cubic * tau + 2.0 * (delta_0 / a) * (1.0 - 2.0 * cubic * tau));
}

double entropy_lowT_modified(double separation_a, double T, double omega_p) {
    check_expansion_domain("entropy_lowT_modified", separation_a, T, omega_p);
    const double a = separation_a;
    const double delta_0 = codata.c / omega_p;
    const double offset = codata.k_B * zeta3 / (4.0 * pi * a * a) *
                          (delta_0 / a) * (1.0 - 3.0 * delta_0 / a);
    return offset + entropy_lowT_plasma(separation_a, T, omega_p);
}

double s_offset_identity(double separation_a) {
    if (!(separation_a > 0.0))
        throw domain_error("s_offset_identity requires a > 0");
    return codata.k_B * zeta3 / (16.0 * pi * separation_a * separation_a);
}

double entropy_plateau(double separation_a) {
    if (!(separation_a > 0.0))
        throw domain_error("entropy_plateau requires a > 0");
    return codata.k_B * zeta3 / (8.0 * pi * separation_a * separation_a);
}

NernstVerdict nernst_limit(const PlateSystem& system, const QuadratureConfig& cfg,
                           std::span<const double> T_grid, double threshold_rel) {
    validate(system);
    validate(cfg);
    if (T_grid.size() < 4)
        throw domain_error("nernst_limit needs at least 4 temperatures");
    for (std::size_t i = 1; i < T_grid.size(); ++i)
        if (!(T_grid[i] < T_grid[i - 1]))
            throw domain_error(
                "nernst_limit temperature grid must be strictly descending");
    if (!(T_grid.back() >= 0.5))
        throw domain_error(
            "nernst_limit grid must stay at or above 0.5 K, where the matched "
            "evaluation still resolves S");
    if (!(threshold_rel > 0.0))
        throw domain_error("nernst_limit requires threshold_rel > 0");

    NernstVerdict v;
    v.threshold = threshold_rel * s_offset_identity(system.separation_a);
    v.details.reserve(T_grid.size());
    PlateSystem probe = system;
    for (const double T : T_grid) {
        probe.temperature_T = T;
        v.details.push_back(entropy(probe, cfg));
        const EntropyCurvePoint& p = v.details.back();
        if (p.S < -p.err) v.negative_anywhere = true;
    }

    // Least-squares S = S0 + c2 T^2 over the four lowest temperatures.
    const std::size_t n = v.details.size();
    double sx = 0.0, sxx = 0.0, sy = 0.0, sxy = 0.0, err_mean = 0.0;
    for (std::size_t i = n - 4; i < n; ++i) {
        const double x = v.details[i].T * v.details[i].T;
        const double y = v.details[i].S;
        sx += x;
        sxx += x * x;
        sy += y;
        sxy += x * y;
        err_mean += v.details[i].err;
    }
    err_mean /= 4.0;
    const double det = 4.0 * sxx - sx * sx;
    const double S0 = (sxx * sy - sx * sxy) / det;
    const double c2 = (4.0 * sxy - sx * sy) / det;
    double rss = 0.0;
    for (std::size_t i = n - 4; i < n; ++i) {
        const double x = v.details[i].T * v.details[i].T;
        const double r = v.details[i].S - (S0 + c2 * x);
        rss += r * r;
    }
    v.S_limit = S0;
    v.fit_residual = std::sqrt(rss / 4.0);
    v.admissible = std::abs(S0) <= v.threshold;
    v.reliable = v.fit_residual <= std::max(10.0 * err_mean, 0.1 * v.threshold);
    return v;
}

std::optional<double> find_sign_crossing(const DielectricSpec& model,
                                         ZeroFreqPrescription prescription, double T,
                                         std::pair<double, double> bracket_m,
                                         const QuadratureConfig& cfg) {
    const double lo = bracket_m.first;
    const double hi = bracket_m.second;
    if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi))
        throw domain_error("find_sign_crossing requires a bracket with 0 < lo < hi");
    if (!(T > 0.0)) throw domain_error("find_sign_crossing requires T > 0");

    PlateSystem probe;
    probe.material = model;
    probe.prescription = prescription;
    probe.temperature_T = T;
    probe.geometry = Geometry::ParallelPlates;
    auto S_at = [&](double a) {
        probe.separation_a = a;
        return thermo_point(probe, cfg).entropy_S;
    };

    // Geometric scan for a sign change, then bisection to 3 significant
    // figures.
    constexpr int kScan = 12;
    double x0 = lo;
    double s0 = S_at(lo);
    if (s0 == 0.0) return lo;
    double blo = 0.0, bhi = 0.0, s_blo = 0.0;
    bool bracketed = false;
    for (int i = 1; i <= kScan; ++i) {
        const double x1 =
            i == kScan ? hi : lo * std::pow(hi / lo, static_cast<double>(i) / kScan);
        const double s1 = S_at(x1);
        if (s1 == 0.0) return x1;
        if ((s0 < 0.0) != (s1 < 0.0)) {
            blo = x0;
            bhi = x1;
            s_blo = s0;
            bracketed = true;
            break;
        }
        x0 = x1;
        s0 = s1;
    }
    if (!bracketed) return std::nullopt;

    while (bhi - blo > 5e-4 * (bhi + blo)) {
        const double mid = 0.5 * (blo + bhi);
        const double sm = S_at(mid);
        if (sm == 0.0) return mid;
        if ((sm < 0.0) == (s_blo < 0.0)) {
            blo = mid;
            s_blo = sm;
        } else {
            bhi = mid;
        }
    }
    return 0.5 * (blo + bhi);
}

} // namespace casimir
