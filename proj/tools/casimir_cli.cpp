// Command-line front end: point evaluations, sweeps, figure presets, and the
// built-in validation suite, all emitting deterministic CSV.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "casimir/config.hpp"
#include "casimir/errors.hpp"
#include "casimir/sweep.hpp"
#include "casimir/validate.hpp"

namespace {

/// Raw flag values plus presence tracking; folded into casimir::Options so the
/// file < flags precedence comes from one merge path.
struct FlagBag {
    std::string config_path;
    std::string model, prescription, geometry, gamma_table, out;
    double a_um = 0, T_K = 0;
    double omega_p_ev = 0, omega_p_rad_s = 0, gamma_ev = 0, gamma_rad_s = 0;
    double gamma_low_t_exponent = 0, sphere_radius_um = 0;
    double rel_tol = 0, abs_tol_energy = 0;
    long max_l = 0;
    int tail_consecutive = 0, max_nodes = 0;
};

casimir::Options options_from_flags(const CLI::App& app, const FlagBag& f) {
    casimir::Options o;
    auto seen = [&app](const std::string& name) {
        return app.count(name) > 0;
    };
    if (seen("--model")) o.model = f.model;
    if (seen("--omega-p-ev")) o.omega_p_ev = f.omega_p_ev;
    if (seen("--omega-p-rad-s")) o.omega_p_rad_s = f.omega_p_rad_s;
    if (seen("--gamma-ev")) o.gamma_ev = f.gamma_ev;
    if (seen("--gamma-rad-s")) o.gamma_rad_s = f.gamma_rad_s;
    if (seen("--gamma-table")) o.gamma_table = f.gamma_table;
    if (seen("--gamma-low-t-exponent"))
        o.gamma_low_t_exponent = f.gamma_low_t_exponent;
    if (seen("--prescription")) o.prescription = f.prescription;
    if (seen("--a-um")) o.a_um = f.a_um;
    if (seen("--T-K")) o.T_K = f.T_K;
    if (seen("--geometry")) o.geometry = f.geometry;
    if (seen("--sphere-radius-um")) o.sphere_radius_um = f.sphere_radius_um;
    if (seen("--rel-tol")) o.rel_tol = f.rel_tol;
    if (seen("--abs-tol-energy")) o.abs_tol_energy = f.abs_tol_energy;
    if (seen("--max-l")) o.max_l = f.max_l;
    if (seen("--tail-consecutive")) o.tail_consecutive = f.tail_consecutive;
    if (seen("--max-nodes")) o.max_nodes = f.max_nodes;
    if (seen("--out")) o.out = f.out;
    return o;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thermal Casimir free energy, force, and entropy between "
                 "parallel metal plates (Lifshitz theory)"};
    app.require_subcommand(1);
    app.fallthrough();

    FlagBag f;
    app.add_option("--config", f.config_path,
                   "key=value configuration file (flags override it)");
    app.add_option("--model", f.model, "ideal | plasma | drude");
    app.add_option("--prescription", f.prescription,
                   "zero-frequency term: intrinsic | eq9 | eq10");
    app.add_option("--a-um", f.a_um, "plate separation, micrometres");
    app.add_option("--T-K", f.T_K, "temperature, kelvin");
    app.add_option("--omega-p-ev", f.omega_p_ev, "plasma frequency, eV");
    app.add_option("--omega-p-rad-s", f.omega_p_rad_s, "plasma frequency, rad/s");
    app.add_option("--gamma-ev", f.gamma_ev, "constant relaxation frequency, eV");
    app.add_option("--gamma-rad-s", f.gamma_rad_s,
                   "constant relaxation frequency, rad/s");
    app.add_option("--gamma-table", f.gamma_table,
                   "two-column T gamma(T) table file");
    app.add_option("--gamma-low-t-exponent", f.gamma_low_t_exponent,
                   "power law for gamma below the table's first row");
    app.add_option("--geometry", f.geometry, "plates | sphere");
    app.add_option("--sphere-radius-um", f.sphere_radius_um,
                   "sphere radius for the proximity force mapping, micrometres");
    app.add_option("--rel-tol", f.rel_tol, "relative tolerance");
    app.add_option("--abs-tol-energy", f.abs_tol_energy,
                   "absolute energy floor, J/m^2");
    app.add_option("--max-l", f.max_l, "hard cap on Matsubara terms");
    app.add_option("--tail-consecutive", f.tail_consecutive,
                   "consecutive negligible terms before truncation");
    app.add_option("--max-nodes", f.max_nodes,
                   "node budget per transverse integral");
    app.add_option("--out", f.out, "output CSV path (default: stdout)");

    CLI::App* cmd_point =
        app.add_subcommand("point", "one (a, T) evaluation as a CSV row");

    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "sweep separation, temperature, or the "
                                    "dimensionless relaxation curve");
    std::string sweep_mode;
    double sweep_start = 0, sweep_stop = 0;
    int sweep_count = 50;
    cmd_sweep->add_option("--mode", sweep_mode, "a | T | gamma-tilde")
        ->required();
    cmd_sweep->add_option("--start", sweep_start, "first grid value (um or K)")
        ->required();
    cmd_sweep->add_option("--stop", sweep_stop, "last grid value (um or K)")
        ->required();
    cmd_sweep->add_option("--count", sweep_count, "number of grid points");

    CLI::App* cmd_figure =
        app.add_subcommand("figure", "write a preset dataset: figure-N.csv "
                                     "plus figure-N-landmarks.csv");
    int figure_n = 0;
    std::string out_dir = ".";
    cmd_figure->add_option("--n", figure_n, "preset number, 1..4")->required();
    cmd_figure->add_option("--out-dir", out_dir, "target directory");

    CLI::App* cmd_validate =
        app.add_subcommand("validate", "run the acceptance suite");
    int criterion = 0;
    cmd_validate->add_option("--criterion", criterion,
                             "run a single criterion, 1..9");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        casimir::Options opts;
        if (app.count("--config") > 0)
            opts = casimir::load_options_file(f.config_path);
        casimir::merge_options(opts, options_from_flags(app, f));

        const casimir::PlateSystem sys = casimir::make_system(opts);
        const casimir::QuadratureConfig cfg = casimir::make_quadrature(opts);
        const std::string out_path = opts.out.value_or("");

        if (cmd_point->parsed()) {
            casimir::SweepSpec spec;
            spec.mode = casimir::SweepMode::SinglePoint;
            spec.base = sys;
            spec.output_path = out_path;
            casimir::validate(spec);
            return casimir::run_sweep_to_path(
                spec, cfg, casimir::effective_key_values(sys, cfg));
        }

        if (cmd_sweep->parsed()) {
            casimir::SweepSpec spec;
            spec.base = sys;
            spec.output_path = out_path;
            spec.count = sweep_count;
            if (sweep_mode == "a") {
                spec.mode = casimir::SweepMode::SweepSeparation;
                spec.start = sweep_start * 1e-6;
                spec.stop = sweep_stop * 1e-6;
            } else if (sweep_mode == "T") {
                spec.mode = casimir::SweepMode::SweepTemperature;
                spec.start = sweep_start;
                spec.stop = sweep_stop;
            } else if (sweep_mode == "gamma-tilde") {
                spec.mode = casimir::SweepMode::GammaTildeCurve;
                spec.start = sweep_start;
                spec.stop = sweep_stop;
            } else {
                throw casimir::config_error(
                    "sweep --mode must be one of: a, T, gamma-tilde (got '" +
                    sweep_mode + "')");
            }
            casimir::validate(spec);
            return casimir::run_sweep_to_path(
                spec, cfg, casimir::effective_key_values(sys, cfg));
        }

        if (cmd_figure->parsed()) {
            if (figure_n < 1 || figure_n > 4)
                throw casimir::config_error("figure --n must be in 1..4");
            return casimir::write_figure(figure_n, out_dir, cfg);
        }

        if (cmd_validate->parsed()) {
            if (cmd_validate->count("--criterion") > 0) {
                const casimir::CriterionResult r =
                    casimir::run_criterion(criterion, cfg);
                std::cout << "RESULT," << r.id << ','
                          << (r.pass ? "PASS" : "FAIL") << ',' << r.name << ','
                          << r.detail << '\n';
                std::cout << "SUMMARY," << (r.pass ? 1 : 0) << "/1\n";
                return r.pass ? 0 : 1;
            }
            const auto results = casimir::run_acceptance(cfg, &std::cout);
            int npass = 0;
            for (const auto& r : results) npass += r.pass ? 1 : 0;
            std::cout << "SUMMARY," << npass << '/' << results.size() << '\n';
            return npass == static_cast<int>(results.size()) ? 0 : 1;
        }
    } catch (const casimir::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 2;
    } catch (const casimir::config_error& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 1;
    } catch (const casimir::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
