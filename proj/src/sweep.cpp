#include "casimir/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <variant>

#include "casimir/config.hpp"
#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/thermo.hpp"

namespace casimir {

namespace {

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string sanitize(std::string text) {
    for (char& c : text) {
        if (c == ',') c = ';';
        if (c == '\n' || c == '\r') c = ' ';
    }
    return text;
}

void fill_failure(CsvRow& row, const std::string& why) {
    const double nan = std::nan("");
    row.F_E_J_per_m2 = nan;
    row.E_T_J_per_m2 = nan;
    row.S_J_per_m2_K = nan;
    row.S_MeV_per_m2_K = nan;
    row.l_max_used = 0;
    row.err_estimate = nan;
    row.diag = sanitize(why);
}

CsvRow evaluate_row(const PlateSystem& sys, const QuadratureConfig& cfg) {
    CsvRow row;
    row.a_m = sys.separation_a;
    row.T_K = sys.temperature_T;
    row.model = model_name(sys.material);
    row.prescription = to_token(sys.prescription);
    try {
        const ThermoResult r = thermo_point(sys, cfg);
        row.F_E_J_per_m2 = r.free_energy_F;
        row.E_T_J_per_m2 = r.zero_point_E;
        row.S_J_per_m2_K = r.entropy_S;
        row.S_MeV_per_m2_K = r.entropy_S / MeV_per_m2K;
        row.l_max_used = r.l_max_used;
        row.err_estimate = r.err_estimate;
        row.diag = "ok";
    } catch (const numerical_error& e) {
        fill_failure(row, e.what());
    } catch (const domain_error& e) {
        fill_failure(row, e.what());
    }
    return row;
}

std::vector<double> make_grid(const SweepSpec& spec) {
    if (!spec.explicit_grid.empty()) return spec.explicit_grid;
    std::vector<double> grid;
    grid.reserve(spec.count);
    for (int i = 0; i < spec.count; ++i)
        grid.push_back(spec.start +
                       (spec.stop - spec.start) * i / (spec.count - 1));
    return grid;
}

} // namespace

void validate(const SweepSpec& spec) {
    validate(spec.base);
    if (spec.mode == SweepMode::SinglePoint) return;
    if (spec.mode == SweepMode::GammaTildeCurve &&
        !std::holds_alternative<Drude>(spec.base.material))
        throw domain_error("gamma-tilde sweep requires a drude material");
    if (!spec.explicit_grid.empty()) {
        if (spec.explicit_grid.size() < 2)
            throw domain_error("sweep grid needs at least 2 points");
        double prev = 0.0;
        for (const double x : spec.explicit_grid) {
            if (!(x > prev) || !std::isfinite(x))
                throw domain_error(
                    "sweep grid must be positive, finite, strictly increasing");
            prev = x;
        }
        return;
    }
    if (spec.count < 2) throw domain_error("sweep count must be >= 2");
    if (!(spec.start > 0.0) || !(spec.stop > spec.start) ||
        !std::isfinite(spec.stop))
        throw domain_error("sweep requires 0 < start < stop, both finite");
}

void write_csv_header(std::ostream& os) {
    os << "a_m,T_K,F_E_J_per_m2,E_T_J_per_m2,S_J_per_m2_K,S_MeV_per_m2_K,"
          "model,prescription,l_max_used,err_estimate,diag\n";
}

void write_csv_row(std::ostream& os, const CsvRow& row) {
    os << num(row.a_m) << ',' << num(row.T_K) << ',' << num(row.F_E_J_per_m2)
       << ',' << num(row.E_T_J_per_m2) << ',' << num(row.S_J_per_m2_K) << ','
       << num(row.S_MeV_per_m2_K) << ',' << row.model << ','
       << row.prescription << ',' << row.l_max_used << ','
       << num(row.err_estimate) << ',' << row.diag << '\n';
}

int run_sweep(const SweepSpec& spec, const QuadratureConfig& cfg, std::ostream& os,
              const std::vector<std::pair<std::string, std::string>>& config_echo) {
    validate(spec);
    validate(cfg);
    for (const auto& [key, value] : config_echo)
        os << "# " << key << "=" << value << '\n';

    if (spec.mode == SweepMode::GammaTildeCurve) {
        const auto& drude = std::get<Drude>(spec.base.material);
        os << "T_K,gamma_rad_s,gamma_tilde\n";
        for (const double T : make_grid(spec)) {
            const double gamma = gamma_of_T(drude.gamma, T);
            const double tilde =
                gamma_tilde(spec.base.separation_a, drude.gamma, T);
            os << num(T) << ',' << num(gamma) << ',' << num(tilde) << '\n';
        }
        return 0;
    }

    write_csv_header(os);
    int rc = 0;
    if (spec.mode == SweepMode::SinglePoint) {
        const CsvRow row = evaluate_row(spec.base, cfg);
        write_csv_row(os, row);
        return row.diag == "ok" ? 0 : 2;
    }
    for (const double x : make_grid(spec)) {
        PlateSystem sys = spec.base;
        if (spec.mode == SweepMode::SweepSeparation)
            sys.separation_a = x;
        else
            sys.temperature_T = x;
        const CsvRow row = evaluate_row(sys, cfg);
        write_csv_row(os, row);
        if (row.diag != "ok") rc = 2;
    }
    return rc;
}

int run_sweep_to_path(const SweepSpec& spec, const QuadratureConfig& cfg,
                      const std::vector<std::pair<std::string, std::string>>& config_echo) {
    if (spec.output_path.empty())
        return run_sweep(spec, cfg, std::cout, config_echo);
    std::ofstream os(spec.output_path);
    if (!os) return 1;
    return run_sweep(spec, cfg, os, config_echo);
}

namespace {

/// T grid shared by the entropy-vs-temperature figures: dense below 5 K where
/// the low-temperature limits live, then every 5 K up to 350 K.
std::vector<double> figure_temperature_grid() {
    std::vector<double> T{0.5, 1.0, 2.0, 3.0, 4.0};
    for (int t = 5; t <= 350; t += 5) T.push_back(static_cast<double>(t));
    return T;
}

constexpr double kLimitGrid[] = {4.0, 3.0, 2.0, 1.0, 0.5};

} // namespace

int write_figure(int n, const std::string& out_dir, const QuadratureConfig& cfg) {
    validate(cfg);
    if (n < 1 || n > 4) throw domain_error("figure number must be in 1..4");
    const std::string stem = out_dir + "/figure-" + std::to_string(n);
    std::ofstream os(stem + ".csv");
    if (!os) return 1;
    std::ofstream marks(stem + "-landmarks.csv");
    if (!marks) return 1;
    marks << "name,value,unit\n";
    int rc = 0;

    if (n == 1) {
        // Entropy vs separation at 300 K for the dissipative metal with its
        // intrinsic zero-frequency limit; S changes sign around 4 um.
        SweepSpec spec;
        spec.mode = SweepMode::SweepSeparation;
        spec.start = 0.5e-6;
        spec.stop = 6.0e-6;
        spec.count = 56;
        spec.base.material = aluminum_drude();
        spec.base.prescription = ZeroFreqPrescription::ModelIntrinsic;
        spec.base.temperature_T = 300.0;
        rc = run_sweep(spec, cfg, os, effective_key_values(spec.base, cfg));
        const auto crossing =
            find_sign_crossing(spec.base.material, spec.base.prescription,
                               300.0, {3.8e-6, 4.4e-6}, cfg);
        marks << "sign_crossing_a,"
              << (crossing ? num(*crossing * 1e6) : std::string("nan"))
              << ",um\n";
        return rc;
    }

    if (n == 2) {
        // Reduced relaxation 2 a gamma(T) / c of the built-in aluminium table.
        SweepSpec spec;
        spec.mode = SweepMode::GammaTildeCurve;
        spec.base.material = aluminum_drude();
        spec.base.separation_a = 2e-6;
        for (int t = 1; t <= 10; ++t)
            spec.explicit_grid.push_back(static_cast<double>(t));
        for (int t = 15; t <= 400; t += 5)
            spec.explicit_grid.push_back(static_cast<double>(t));
        rc = run_sweep(spec, cfg, os, effective_key_values(spec.base, cfg));
        const auto& drude = std::get<Drude>(spec.base.material);
        marks << "gamma_tilde_300K,"
              << num(gamma_tilde(2e-6, drude.gamma, 300.0))
              << ",dimensionless\n";
        return rc;
    }

    // Figures 3 and 4: entropy vs temperature at a = 2 um, several
    // zero-frequency prescriptions of one material in a single CSV.
    std::vector<ZeroFreqPrescription> curves;
    PlateSystem base;
    base.separation_a = 2e-6;
    if (n == 3) {
        base.material = aluminum_drude();
        curves = {ZeroFreqPrescription::ModelIntrinsic,
                  ZeroFreqPrescription::IdealMetalRule,
                  ZeroFreqPrescription::ModifiedTransverse};
    } else {
        base.material = aluminum_plasma();
        curves = {ZeroFreqPrescription::ModelIntrinsic,
                  ZeroFreqPrescription::IdealMetalRule};
    }
    base.prescription = curves.front();
    for (const auto& [key, value] : effective_key_values(base, cfg))
        os << "# " << key << "=" << value << '\n';
    os << "# curves=";
    for (std::size_t i = 0; i < curves.size(); ++i)
        os << (i ? "," : "") << to_token(curves[i]);
    os << '\n';
    write_csv_header(os);

    const std::vector<double> grid = figure_temperature_grid();
    for (const ZeroFreqPrescription pres : curves) {
        PlateSystem sys = base;
        sys.prescription = pres;
        for (const double T : grid) {
            sys.temperature_T = T;
            const CsvRow row = evaluate_row(sys, cfg);
            write_csv_row(os, row);
            if (row.diag != "ok") rc = 2;
        }
    }
    for (const ZeroFreqPrescription pres : curves) {
        PlateSystem sys = base;
        sys.prescription = pres;
        const NernstVerdict v = nernst_limit(sys, cfg, kLimitGrid);
        marks << "S0_" << to_token(pres) << ','
              << num(v.S_limit / MeV_per_m2K) << ",MeV m^-2 K^-1\n";
    }
    return rc;
}

} // namespace casimir
