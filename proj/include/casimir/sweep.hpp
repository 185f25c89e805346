#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "casimir/engine.hpp"
#include "casimir/system.hpp"

namespace casimir {

enum class SweepMode {
    SweepSeparation,   ///< a varies, T fixed
    SweepTemperature,  ///< T varies, a fixed
    GammaTildeCurve,   ///< 2 a gamma(T)/c vs T (Drude material required)
    SinglePoint,       ///< one row at the template's (a, T)
};

/// A grid of evaluations over one swept variable.
struct SweepSpec {
    SweepMode mode = SweepMode::SinglePoint;
    double start = 0.0;  ///< m or K (ignored for SinglePoint)
    double stop = 0.0;   ///< m or K
    int count = 1;       ///< >= 2 for sweeps
    /// Non-uniform grid override (same units as start/stop). When non-empty
    /// it replaces the linear start/stop/count grid; must be strictly
    /// increasing and positive.
    std::vector<double> explicit_grid;
    PlateSystem base;    ///< template; the swept field is overwritten per point
    std::string output_path;  ///< empty = standard output
};

/// Throws domain_error when the grid is degenerate (count < 2 for a sweep,
/// start >= stop, nonpositive values).
void validate(const SweepSpec& spec);

/// One CSV record. Failed points carry NaN values and the failure reason in
/// `diag`; successful points have diag == "ok".
struct CsvRow {
    double a_m, T_K;
    double F_E_J_per_m2, E_T_J_per_m2;
    double S_J_per_m2_K, S_MeV_per_m2_K;
    std::string model, prescription;
    long l_max_used;
    double err_estimate;
    std::string diag;
};

/// Serializes header + rows; 12 significant digits, NaN spelled "nan".
void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const CsvRow& row);

/// Runs the sweep, writing '#'-prefixed config-echo lines, the header, and one
/// row per grid point in grid order. Returns 0 when every point succeeded,
/// 2 when at least one point failed (those rows carry NaN + diagnostics).
int run_sweep(const SweepSpec& spec, const QuadratureConfig& cfg, std::ostream& os,
              const std::vector<std::pair<std::string, std::string>>& config_echo);

/// Like run_sweep but resolves spec.output_path ("" = stdout). Returns 1 when
/// the path cannot be opened.
int run_sweep_to_path(const SweepSpec& spec, const QuadratureConfig& cfg,
                      const std::vector<std::pair<std::string, std::string>>& config_echo);

/// Writes figure-N.csv (and figure-N-landmarks.csv with derived crossings and
/// T -> 0 limits) into out_dir using the preset grids for the four standard
/// plots. Returns an exit code with the run_sweep conventions.
int write_figure(int n, const std::string& out_dir, const QuadratureConfig& cfg);

} // namespace casimir
