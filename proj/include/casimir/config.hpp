#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "casimir/quadrature.hpp"
#include "casimir/system.hpp"

namespace casimir {

/// One layer of configuration: every knob optional, so layers can be merged
/// with later layers winning (defaults < config file < command-line flags).
struct Options {
    // material
    std::optional<std::string> model;         ///< "ideal" | "plasma" | "drude"
    std::optional<double> omega_p_ev;         ///< plasma frequency, eV
    std::optional<double> omega_p_rad_s;      ///< plasma frequency, rad/s
    std::optional<double> gamma_ev;           ///< constant relaxation, eV
    std::optional<double> gamma_rad_s;        ///< constant relaxation, rad/s
    std::optional<std::string> gamma_table;   ///< path to a T/gamma table file
    std::optional<double> gamma_low_t_exponent;  ///< power law below the table

    // geometry & state
    std::optional<std::string> prescription;  ///< "intrinsic" | "eq9" | "eq10"
    std::optional<double> a_um;               ///< plate separation, micrometres
    std::optional<double> T_K;                ///< temperature, K
    std::optional<std::string> geometry;      ///< "plates" | "sphere"
    std::optional<double> sphere_radius_um;   ///< sphere radius, micrometres

    // numerics
    std::optional<double> rel_tol;
    std::optional<double> abs_tol_energy;
    std::optional<long> max_l;
    std::optional<int> tail_consecutive;
    std::optional<int> max_nodes;

    // output
    std::optional<std::string> out;           ///< output path ("" = stdout)
};

/// Parses the flat key=value format ('#' comments, blank lines ignored).
/// Unknown keys and unparsable values raise config_error naming the line.
Options parse_options(std::istream& in, const std::string& origin);
Options load_options_file(const std::string& path);

/// Overlays `over` onto `base`: any field set in `over` wins.
void merge_options(Options& base, const Options& over);

/// Materializes a PlateSystem from merged options (library defaults fill the
/// gaps: drude aluminium, eq10, a = 2 um, T = 300 K, parallel plates).
/// Throws config_error on contradictory or unknown settings.
PlateSystem make_system(const Options& opts);

/// Materializes the numeric knobs (defaults from QuadratureConfig).
QuadratureConfig make_quadrature(const Options& opts);

/// The effective configuration as ordered key/value pairs, for provenance
/// echoing into CSV comment lines. Deterministic order and formatting.
std::vector<std::pair<std::string, std::string>> effective_key_values(
    const PlateSystem& system, const QuadratureConfig& cfg);

/// Token helpers shared by the CLI and the config parser.
ZeroFreqPrescription prescription_from_token(const std::string& token);  ///< throws config_error
std::string to_token(ZeroFreqPrescription prescription);
std::string model_name(const DielectricSpec& spec);  ///< "ideal" | "plasma" | "drude"

} // namespace casimir
