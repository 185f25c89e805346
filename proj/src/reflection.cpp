#include "casimir/reflection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <variant>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

/// Transverse coefficient of the dissipationless zero-frequency limit,
/// r_perp = (c k_perp - sqrt(omega_p^2 + c^2 k_perp^2)) / (c k_perp + ...),
/// written in u = c k_perp / omega_p as 1/(u + sqrt(1 + u^2))^4 so the
/// difference never cancels.
double zero_freq_perp_plasma(double omega_p, double k_perp) {
    const double u = codata.c * k_perp / omega_p;
    const double denom = u + std::sqrt(1.0 + u * u);
    const double r = 1.0 / (denom * denom);
    return clamp01(r * r);
}

/// Transverse coefficient of the relaxation-dependent zero-frequency rule:
/// the plasma form with omega_p^2 replaced by omega_p^2 ck_perp/(ck_perp + gamma).
double zero_freq_perp_modified(double omega_p, double gamma, double k_perp) {
    const double u = codata.c * k_perp / omega_p;
    const double gamma_hat = gamma / omega_p;
    const double b = u / (u + gamma_hat);  // in (0, 1]
    const double s = std::sqrt(b + u * u);
    const double r = b / ((u + s) * (u + s));
    return clamp01(r * r);
}

} // namespace

double matsubara_frequency(long l, double T) {
    if (!(T > 0.0))
        throw domain_error("matsubara_frequency requires T > 0 (the zero-temperature "
                           "path integrates over continuous frequency)");
    if (l < 0) throw domain_error("matsubara_frequency requires l >= 0");
    return 2.0 * std::numbers::pi * static_cast<double>(l) * codata.k_B * T / codata.hbar;
}

WaveNumbers wave_numbers(double eps, double xi, double k_perp) {
    const double x = xi / codata.c;
    const double q = std::hypot(x, k_perp);
    const double k = std::sqrt(q * q + (eps - 1.0) * x * x);
    return {q, k};
}

ReflectionPair refl_sq_from_eps(double eps, double xi, double k_perp) {
    if (std::isinf(eps)) return {1.0, 1.0};
    if (!(eps >= 1.0)) throw domain_error("refl_sq_from_eps requires eps >= 1");
    const double x = xi / codata.c;
    const double em1 = eps - 1.0;
    const double q = std::hypot(x, k_perp);
    const double k = std::sqrt(q * q + em1 * x * x);
    // Difference-over-sum forms with the cancelling subtractions rewritten:
    //   q - k        = -(eps-1) x^2 / (q + k)
    //   eps q - k    =  (eps-1)(k_perp^2 + q k) / (eps q + k)
    const double r_perp = em1 * x * x / ((q + k) * (q + k));
    const double r_par = em1 * (k_perp * k_perp + q * k) / ((q + k) * (eps * q + k));
    return {clamp01(r_par * r_par), clamp01(r_perp * r_perp)};
}

ReflectionPair refl_sq(const DielectricSpec& spec, double xi, double k_perp, double T) {
    if (!(xi > 0.0))
        throw domain_error("refl_sq requires xi > 0; the zero-frequency term routes "
                           "through refl_sq_zero");
    if (!(k_perp >= 0.0)) throw domain_error("refl_sq requires k_perp >= 0");
    if (std::holds_alternative<IdealMetal>(spec)) return {1.0, 1.0};
    return refl_sq_from_eps(eps_imag_axis(spec, xi, T), xi, k_perp);
}

ReflectionPair refl_sq_zero(const DielectricSpec& spec, ZeroFreqPrescription prescription,
                            double k_perp, double T) {
    if (!(k_perp > 0.0)) throw domain_error("refl_sq_zero requires k_perp > 0");
    if (std::holds_alternative<IdealMetal>(spec)) return {1.0, 1.0};
    if (prescription == ZeroFreqPrescription::IdealMetalRule) return {1.0, 1.0};

    if (const auto* plasma = std::get_if<Plasma>(&spec)) {
        // Both remaining prescriptions coincide for the dissipationless model:
        // the relaxation-dependent rule at gamma = 0 is its intrinsic limit.
        return {1.0, zero_freq_perp_plasma(plasma->omega_p, k_perp)};
    }

    const auto& drude = std::get<Drude>(spec);
    const double gamma = gamma_of_T(drude.gamma, T);
    if (prescription == ZeroFreqPrescription::ModifiedTransverse)
        return {1.0, zero_freq_perp_modified(drude.omega_p, gamma, k_perp)};

    // ModelIntrinsic: with any dissipation the transverse limit collapses to
    // zero; with gamma identically zero the model is the plasma model and
    // keeps its smooth limit.
    if (gamma > 0.0) return {1.0, 0.0};
    return {1.0, zero_freq_perp_plasma(drude.omega_p, k_perp)};
}

bool zero_term_uses_drude_limit(const DielectricSpec& spec, ZeroFreqPrescription prescription) {
    if (prescription != ZeroFreqPrescription::ModelIntrinsic) return false;
    return std::holds_alternative<Drude>(spec) && !satisfies_zero_frequency_condition(spec);
}

} // namespace casimir
