#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "casimir/engine.hpp"

namespace casimir {

/// Entropy at one temperature, in SI and in MeV m^-2 K^-1.
struct EntropyCurvePoint {
    double T = 0.0;                ///< K
    double S = 0.0;                ///< J/(m^2 K)
    double S_MeV_per_m2_K = 0.0;   ///< S / 1.602176634e-13
    double err = 0.0;              ///< J/(m^2 K)
    unsigned flags = 0;            ///< ResultFlags from the underlying evaluation
};

/// Outcome of the third-law (Nernst) audit of one model/prescription pair.
struct NernstVerdict {
    double S_limit = 0.0;        ///< J/(m^2 K), extrapolated S(T -> 0)
    bool admissible = false;     ///< |S_limit| <= threshold
    bool negative_anywhere = false;  ///< any sampled S below -err
    bool reliable = true;        ///< fit residual consistent with the error estimates
    double threshold = 0.0;      ///< J/(m^2 K) used for the admissibility call
    double fit_residual = 0.0;   ///< rms of (S_i - fit_i) over the fitted points
    std::vector<EntropyCurvePoint> details;  ///< the sampled curve, as given
};

/// Entropy per unit area at system.temperature_T (> 0), via the matched
/// evaluation in thermo_point.
EntropyCurvePoint entropy(const PlateSystem& system, const QuadratureConfig& cfg);

/// Low-temperature expansion of the plasma-model entropy (terms through
/// (T/T_eff)^3, first power of delta_0/a). Valid for T/T_eff < 0.3 and
/// a >= lambda_p = 2 pi c / omega_p; throws domain_error naming the violated
/// bound otherwise.
double entropy_lowT_plasma(double separation_a, double T, double omega_p);

/// Same expansion under the perfect-reflection zero-frequency rule: the
/// plasma expansion shifted by the nonzero T = 0 offset
/// (k_B zeta(3) / (4 pi a^2)) (delta_0/a) (1 - 3 delta_0/a).
double entropy_lowT_modified(double separation_a, double T, double omega_p);

/// The exact entropy offset between the perfect-reflection rule and the
/// dissipative-limit rule: k_B zeta(3) / (16 pi a^2).
double s_offset_identity(double separation_a);

/// High-temperature entropy plateau of the perfectly conducting pair:
/// k_B zeta(3) / (8 pi a^2).
double entropy_plateau(double separation_a);

/// Audits S(T -> 0) for the system's model/prescription pair. T_grid must be
/// descending, have at least 4 points, and end at or above 0.5 K (below that,
/// quadrature cancellation dominates the signal). Fits S = S0 + c2 T^2 to the
/// lowest four points; admissible iff |S0| <= threshold_rel * the offset
/// scale k_B zeta(3)/(16 pi a^2). The verdict is flagged unreliable when the
/// fit residual exceeds what the per-point error estimates support.
NernstVerdict nernst_limit(const PlateSystem& system, const QuadratureConfig& cfg,
                           std::span<const double> T_grid, double threshold_rel = 1e-3);

/// Locates the separation where S(a) changes sign at fixed T, by scanning the
/// bracket and bisecting to 3 significant figures. Returns nothing when the
/// entropy keeps one sign across the whole bracket.
std::optional<double> find_sign_crossing(const DielectricSpec& model,
                                         ZeroFreqPrescription prescription, double T,
                                         std::pair<double, double> bracket_m,
                                         const QuadratureConfig& cfg);

} // namespace casimir
