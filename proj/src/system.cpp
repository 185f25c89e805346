#include "casimir/system.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <variant>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

void validate_material(const DielectricSpec& spec) {
    if (const auto* plasma = std::get_if<Plasma>(&spec)) {
        if (!(plasma->omega_p > 0.0) || !std::isfinite(plasma->omega_p))
            throw domain_error("Plasma.omega_p must be positive and finite");
    } else if (const auto* drude = std::get_if<Drude>(&spec)) {
        if (!(drude->omega_p > 0.0) || !std::isfinite(drude->omega_p))
            throw domain_error("Drude.omega_p must be positive and finite");
        if (const auto* constant = std::get_if<GammaConstant>(&drude->gamma)) {
            if (!(constant->gamma >= 0.0) || !std::isfinite(constant->gamma))
                throw domain_error("GammaConstant.gamma must be >= 0 and finite");
        } else if (const auto* table = std::get_if<GammaTable>(&drude->gamma)) {
            if (table->T_K.empty())
                throw domain_error("GammaTable must contain at least one point");
            if (table->T_K.size() != table->gamma_rad_s.size())
                throw domain_error("GammaTable temperature/value lengths differ");
            if (!(table->low_T_exponent > 0.0))
                throw domain_error("GammaTable.low_T_exponent must be > 0");
        } else if (const auto* bg = std::get_if<BlochGruneisen>(&drude->gamma)) {
            if (!(bg->gamma_ref > 0.0) || !(bg->T_ref > 0.0) || !(bg->T_debye > 0.0))
                throw domain_error("BlochGruneisen parameters must be positive");
            if (bg->exponent_n < 2 || bg->exponent_n > 5)
                throw domain_error("BlochGruneisen.exponent_n must be in [2, 5]");
        }
    }
}

} // namespace

void validate(const PlateSystem& system) {
    if (!(system.separation_a > 0.0) || !std::isfinite(system.separation_a))
        throw domain_error("PlateSystem.separation_a must be positive and finite");
    if (!(system.temperature_T >= 0.0) || !std::isfinite(system.temperature_T))
        throw domain_error("PlateSystem.temperature_T must be >= 0 and finite");
    validate_material(system.material);
    if (system.geometry == Geometry::SpherePlate &&
        (!(system.sphere_radius_R > 0.0) || !std::isfinite(system.sphere_radius_R)))
        throw domain_error("PlateSystem.sphere_radius_R must be positive for sphere-plate geometry");
}

DerivedScales derived_scales(const PlateSystem& system) {
    validate(system);
    DerivedScales scales{};
    scales.T_eff = codata.hbar * codata.c / (2.0 * system.separation_a * codata.k_B);
    if (has_plasma_frequency(system.material)) {
        const double omega_p = plasma_frequency(system.material);
        scales.delta_0 = codata.c / omega_p;
        scales.lambda_p = 2.0 * std::numbers::pi * codata.c / omega_p;
    }
    return scales;
}

bool sphere_radius_suspect(const PlateSystem& system) {
    return system.geometry == Geometry::SpherePlate &&
           system.sphere_radius_R < 100.0 * system.separation_a;
}

} // namespace casimir
