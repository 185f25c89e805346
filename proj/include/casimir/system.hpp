#pragma once

#include <optional>

#include "casimir/dielectric.hpp"
#include "casimir/reflection.hpp"

namespace casimir {

enum class Geometry {
    ParallelPlates,
    SpherePlate,  ///< proximity-force mapping of the plate result
};

/// A fully specified plate pair (or sphere-plate pair) at temperature T.
struct PlateSystem {
    double separation_a = 2e-6;   ///< m, > 0
    double temperature_T = 300.0; ///< K, >= 0
    DielectricSpec material = Plasma{1.9e16};
    ZeroFreqPrescription prescription = ZeroFreqPrescription::ModelIntrinsic;
    Geometry geometry = Geometry::ParallelPlates;
    double sphere_radius_R = 0.0;  ///< m, > 0 when geometry == SpherePlate
};

/// Characteristic scales of a configuration.
struct DerivedScales {
    double T_eff;                         ///< K, k_B T_eff = hbar c / (2a)
    std::optional<double> delta_0;        ///< m, c/omega_p (models with omega_p)
    std::optional<double> lambda_p;       ///< m, 2 pi c/omega_p
};

/// Validates ranges (a > 0, T >= 0, omega_p > 0, sphere radius when needed);
/// throws domain_error naming the offending field.
void validate(const PlateSystem& system);

DerivedScales derived_scales(const PlateSystem& system);

/// True when the proximity-force mapping is questionable (R < 100 a).
bool sphere_radius_suspect(const PlateSystem& system);

} // namespace casimir
