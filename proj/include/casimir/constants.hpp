#pragma once

namespace casimir {

/** CODATA-fixed physical constants (SI). */
struct PhysicalConstants {
    double hbar;    ///< reduced Planck constant, J s
    double c;       ///< speed of light, m/s
    double k_B;     ///< Boltzmann constant, J/K
    double eV;      ///< electron volt, J
};

inline constexpr PhysicalConstants codata{
    1.054571817e-34,
    2.99792458e8,
    1.380649e-23,
    1.602176634e-19,
};

/// Riemann zeta(3) (Apery's constant).
inline constexpr double zeta3 = 1.2020569031595943;

/// 1 MeV per square metre per kelvin, expressed in J m^-2 K^-1.
inline constexpr double MeV_per_m2K = 1.602176634e-13;

/// Converts an angular frequency given in eV (via E = hbar*omega) to rad/s.
constexpr double omega_from_eV(double energy_eV) {
    return energy_eV * codata.eV / codata.hbar;
}

} // namespace casimir
