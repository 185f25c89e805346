#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "casimir/quadrature.hpp"

namespace casimir {

/// One acceptance-suite criterion outcome.
struct CriterionResult {
    int id = 0;               ///< 1-based criterion number
    std::string name;         ///< short slug
    bool pass = false;
    std::string detail;       ///< measured values vs bounds, human-readable
};

/// Runs the full acceptance suite at the given tolerances. Criteria are
/// evaluated in order; `progress`, when non-null, receives one line per
/// criterion as it completes (format: "RESULT,<id>,<PASS|FAIL>,<name>,<detail>").
std::vector<CriterionResult> run_acceptance(const QuadratureConfig& cfg,
                                            std::ostream* progress = nullptr);

/// Runs a single criterion by id (1..9); same reporting contract.
CriterionResult run_criterion(int id, const QuadratureConfig& cfg);

/// Number of criteria in the suite.
int criterion_count();

} // namespace casimir
