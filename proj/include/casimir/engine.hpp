#pragma once

#include "casimir/quadrature.hpp"
#include "casimir/system.hpp"

namespace casimir {

/// Diagnostic bits carried by every engine result.
enum ResultFlags : unsigned {
    /// The zero-frequency term was taken from a model whose xi -> 0 scattering
    /// problem is indeterminate (a dissipative Drude metal evaluated with its
    /// own discontinuous limit). The computation proceeds; the flag records
    /// that this combination is exactly what the third-law audit rejects.
    kZeroFreqIndeterminate = 1u << 0,
    /// Sphere-plate proximity mapping requested with R < 100 a.
    kSphereMappingSuspect = 1u << 1,
};

/// Value + diagnostics for a single energy/force evaluation.
struct EnergyResult {
    double value = 0.0;         ///< J/m^2 for energies, Pa for plate force, N for sphere
    double err_estimate = 0.0;  ///< same unit as value, >= 0
    long l_max_used = 0;        ///< highest Matsubara index summed (0 for continuous paths)
    unsigned flags = 0;         ///< ResultFlags
};

/// Matched evaluation of all three thermodynamic quantities at one (a, T).
struct ThermoResult {
    double free_energy_F = 0.0;  ///< J/m^2
    double zero_point_E = 0.0;   ///< J/m^2
    double entropy_S = 0.0;      ///< J/(m^2 K)
    long l_max_used = 0;
    double err_estimate = 0.0;   ///< J/m^2, bound for the energies
    double entropy_err = 0.0;    ///< J/(m^2 K), bound for the entropy difference
    unsigned flags = 0;          ///< ResultFlags
};

/// The l-th summand of the Matsubara free-energy sum, including its weight
/// (1/2 at l = 0, 1 otherwise): w_l * (k_B T / (8 pi a^2)) * g(xi_l), where
/// g is the transverse-momentum integral of the two log terms. The l = 0
/// reflection pair follows the system's zero-frequency prescription.
/// Requires T > 0. Throws numerical_error when the integral does not
/// converge within cfg.max_nodes_per_integral.
double matsubara_term(const PlateSystem& system, long l, const QuadratureConfig& cfg);

/// Free energy per unit area at T > 0: sum of matsubara_term over l,
/// truncated once cfg.tail_consecutive successive terms each fall below
/// rel_tol * |partial sum|; a geometric bound on the dropped tail is folded
/// into err_estimate. Throws numerical_error if cfg.max_l is reached first.
EnergyResult free_energy(const PlateSystem& system, const QuadratureConfig& cfg);

/// Zero-point energy per unit area: the continuous-frequency double integral.
/// The permittivity uses gamma(T) at the system's ambient temperature, so the
/// value retains its thermal dependence through the material.
EnergyResult zero_point_energy(const PlateSystem& system, const QuadratureConfig& cfg);

/// Pressure between the plates (negative = attraction), from the analytic
/// a-derivative applied under the integral sign. T > 0 uses the Matsubara
/// sum; T = 0 integrates over continuous frequency.
EnergyResult force_plates(const PlateSystem& system, const QuadratureConfig& cfg);

/// Sphere-plate force via the proximity mapping: 2 pi R times free_energy
/// (T > 0) or zero_point_energy (T = 0). Requires SpherePlate geometry;
/// sets kSphereMappingSuspect when R < 100 a.
EnergyResult force_sphere_plate(const PlateSystem& system, const QuadratureConfig& cfg);

/// Computes F, E and S = (E - F)/T together at T > 0. The sum (for F) and the
/// frequency integral (for E) are assembled from the same per-frequency
/// integrand evaluated on a rigidly translated inner grid, and S is formed
/// panel-by-panel as (integral - trapezoid) of that shared integrand, so the
/// quadrature bias common to E and F cancels in the difference. This is the
/// only reliable way to resolve S at low temperature, where |S| * T is many
/// orders of magnitude below |F|.
ThermoResult thermo_point(const PlateSystem& system, const QuadratureConfig& cfg);

} // namespace casimir
