#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace casimir {

// ---------------------------------------------------------------------------
// Relaxation-frequency providers: gamma(T) for the Drude model.
// ---------------------------------------------------------------------------

/// Temperature-independent relaxation frequency (rad/s). gamma >= 0; zero
/// makes the Drude model coincide with the plasma model at every xi > 0.
struct GammaConstant {
    double gamma = 0.0;
};

/// Tabulated gamma(T): strictly increasing temperatures, positive values.
/// Interpolated with a shape-preserving (Fritsch-Carlson) monotone cubic;
/// below the first point gamma follows (T/T_front)^low_T_exponent, above the
/// last point the value is clamped.
struct GammaTable {
    std::vector<double> T_K;          ///< strictly increasing, K
    std::vector<double> gamma_rad_s;  ///< same length, > 0
    double low_T_exponent = 5.0;      ///< power-law extension exponent below the table
};

/// Bloch-Gruneisen form: gamma(T) = gamma_ref * B(T)/B(T_ref) with
/// B(T) = (T/T_debye)^n * J_n(T_debye/T), J_n(x) = int_0^x t^n e^t/(e^t-1)^2 dt.
/// Linear in T well above ~T_debye/4 and proportional to T^n well below it.
struct BlochGruneisen {
    double gamma_ref;      ///< rad/s, value pinned at T_ref
    double T_ref;          ///< K
    double T_debye;        ///< K
    int exponent_n = 5;    ///< 2..5
};

using GammaProvider = std::variant<GammaConstant, GammaTable, BlochGruneisen>;

/// Relaxation frequency at temperature T (rad/s). T >= 0.
double gamma_of_T(const GammaProvider& provider, double T);

/// Dimensionless 2*a*gamma(T)/c.
double gamma_tilde(double separation_a, const GammaProvider& provider, double T);

/// Parses a two-column (T_K  gamma_rad_s) whitespace-separated table;
/// '#' starts a comment. Throws config_error on malformed input.
GammaTable load_gamma_table(std::istream& in, const std::string& origin = "<stream>");
GammaTable load_gamma_table_file(const std::string& path);

/// Built-in aluminium gamma(T) table: Bloch-Gruneisen shape (T_debye = 428 K,
/// n = 5) sampled at standard temperatures and anchored so that
/// gamma(300 K) = 9.6e13 rad/s exactly.
const GammaTable& aluminum_gamma_table();

// ---------------------------------------------------------------------------
// Dielectric models along the imaginary frequency axis.
// ---------------------------------------------------------------------------

/// Perfectly conducting boundary: both reflection coefficients are 1 at every
/// frequency; eps_imag_axis reports +infinity.
struct IdealMetal {};

/// eps(i xi) = 1 + omega_p^2 / xi^2   (dissipationless free electrons).
struct Plasma {
    double omega_p;  ///< plasma frequency, rad/s, > 0
};

/// eps(i xi) = 1 + omega_p^2 / (xi * (xi + gamma(T)))   (relaxation included).
struct Drude {
    double omega_p;        ///< plasma frequency, rad/s, > 0
    GammaProvider gamma;
};

using DielectricSpec = std::variant<IdealMetal, Plasma, Drude>;

/// Permittivity on the imaginary axis; xi > 0. IdealMetal yields +infinity.
/// Throws domain_error for xi <= 0 or gamma(T) >= omega_p.
double eps_imag_axis(const DielectricSpec& spec, double xi, double T);

/// Plasma frequency if the model has one.
bool has_plasma_frequency(const DielectricSpec& spec);
double plasma_frequency(const DielectricSpec& spec);  ///< throws domain_error for IdealMetal

/// True when lim_{xi->0} xi^2 eps(i xi) is a nonzero constant, i.e. the
/// zero-frequency term is determined by the model itself (IdealMetal, Plasma).
/// The Drude model fails this condition and needs an explicit prescription.
bool satisfies_zero_frequency_condition(const DielectricSpec& spec);

/// Built-in aluminium parameter sets: omega_p = 1.9e16 rad/s; the Drude
/// variant uses aluminum_gamma_table().
Drude aluminum_drude();
Plasma aluminum_plasma();

} // namespace casimir
