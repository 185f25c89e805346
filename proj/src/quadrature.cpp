#include "casimir/quadrature.hpp"

#include <string>

#include "casimir/errors.hpp"

namespace casimir {

void validate(const QuadratureConfig& cfg) {
    if (!(cfg.rel_tol > 1e-14 && cfg.rel_tol < 1e-3))
        throw domain_error("QuadratureConfig.rel_tol must lie in (1e-14, 1e-3), got " +
                           std::to_string(cfg.rel_tol));
    if (cfg.max_l < 10)
        throw domain_error("QuadratureConfig.max_l must be >= 10, got " +
                           std::to_string(cfg.max_l));
    if (cfg.tail_consecutive < 1)
        throw domain_error("QuadratureConfig.tail_consecutive must be >= 1, got " +
                           std::to_string(cfg.tail_consecutive));
    if (cfg.max_nodes_per_integral < 512)
        throw domain_error("QuadratureConfig.max_nodes_per_integral must be >= 512, got " +
                           std::to_string(cfg.max_nodes_per_integral));
    if (!(cfg.abs_tol_energy > 0.0))
        throw domain_error("QuadratureConfig.abs_tol_energy must be > 0");
}

} // namespace casimir
