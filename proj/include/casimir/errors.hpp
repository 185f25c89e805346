#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Invalid physical or numerical input (bad separation, temperature, config ...).
class domain_error : public std::invalid_argument {
  public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed configuration file / unknown key / unparsable value.
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Quadrature or summation failed to converge within its budgets.
class numerical_error : public std::runtime_error {
  public:
    numerical_error(const std::string& what, double partial, long l_reached)
        : std::runtime_error(what), partial_value(partial), l_max_reached(l_reached) {}
    double partial_value;   ///< best value accumulated before the failure
    long l_max_reached;     ///< Matsubara index reached (-1 if not applicable)
};

} // namespace casimir
