#pragma once

// Independent reference integrator used only by the test suite. Everything is
// recomputed from the textbook formulas in long double on fixed composite
// Gauss-Legendre grids: no adaptive refinement, no rewritten difference
// quotients, no code shared with the library's numerical core. Supports the
// ideal, plasma, and constant-relaxation Drude models.

#include <casimir/system.hpp>

namespace oracle {

/// Free energy per unit area at T > 0 (J/m^2), brute-force Matsubara sum.
long double free_energy(const casimir::PlateSystem& sys);

/// Zero-point energy per unit area (J/m^2), brute-force double integral.
long double zero_point_energy(const casimir::PlateSystem& sys);

/// Entropy per unit area (J m^-2 K^-1) as (E - F)/T in long double.
long double entropy(const casimir::PlateSystem& sys);

} // namespace oracle
