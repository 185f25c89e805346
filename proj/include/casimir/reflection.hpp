#pragma once

#include "casimir/dielectric.hpp"

namespace casimir {

/// How the l = 0 (zero-frequency) reflection coefficients are assigned.
enum class ZeroFreqPrescription {
    ModelIntrinsic,     ///< the model's own xi -> 0 limit
    IdealMetalRule,     ///< both polarizations reflect perfectly: (1, 1)
    ModifiedTransverse, ///< transverse coefficient from the surface-impedance
                        ///< form with the actual gamma(T); parallel stays 1
};

/// Squared reflection coefficients for the two polarizations.
struct ReflectionPair {
    double r_par_sq;   ///< parallel (TM), in [0, 1]
    double r_perp_sq;  ///< perpendicular (TE), in [0, 1]
};

/// Imaginary-axis wave numbers: q^2 = xi^2/c^2 + k_perp^2,
/// k^2 = eps * xi^2/c^2 + k_perp^2.
struct WaveNumbers {
    double q;
    double k;
};

/// Matsubara frequency xi_l = 2 pi l k_B T / hbar. Requires T > 0, l >= 0.
double matsubara_frequency(long l, double T);

WaveNumbers wave_numbers(double eps, double xi, double k_perp);

/// Squared reflection coefficients from a finite permittivity (eps >= 1).
ReflectionPair refl_sq_from_eps(double eps, double xi, double k_perp);

/// Squared reflection coefficients at xi > 0 for a material model.
ReflectionPair refl_sq(const DielectricSpec& spec, double xi, double k_perp, double T);

/// Zero-frequency coefficients under a prescription (the l = 0 Matsubara term).
ReflectionPair refl_sq_zero(const DielectricSpec& spec, ZeroFreqPrescription prescription,
                            double k_perp, double T);

/// True when the combination reproduces the zero-frequency assignment that the
/// third-law audit flags: a Drude metal with its own (discontinuous) limit.
bool zero_term_uses_drude_limit(const DielectricSpec& spec, ZeroFreqPrescription prescription);

} // namespace casimir
