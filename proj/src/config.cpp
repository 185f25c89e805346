#include "casimir/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <variant>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& text, const std::string& where) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size())
            throw config_error(where + ": trailing characters after number '" + text + "'");
        return v;
    } catch (const config_error&) {
        throw;
    } catch (const std::exception&) {
        throw config_error(where + ": cannot parse number '" + text + "'");
    }
}

long parse_long(const std::string& text, const std::string& where) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(text, &pos);
        if (pos != text.size())
            throw config_error(where + ": trailing characters after integer '" + text + "'");
        return v;
    } catch (const config_error&) {
        throw;
    } catch (const std::exception&) {
        throw config_error(where + ": cannot parse integer '" + text + "'");
    }
}

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

Options parse_options(std::istream& in, const std::string& origin) {
    Options opts;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const std::string where = origin + ":" + std::to_string(line_no);
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw config_error(where + ": expected key=value, got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) throw config_error(where + ": empty key");
        if (value.empty()) throw config_error(where + ": empty value for key '" + key + "'");

        if (key == "model") {
            opts.model = value;
        } else if (key == "omega_p_ev") {
            opts.omega_p_ev = parse_double(value, where);
        } else if (key == "omega_p_rad_s") {
            opts.omega_p_rad_s = parse_double(value, where);
        } else if (key == "gamma_ev") {
            opts.gamma_ev = parse_double(value, where);
        } else if (key == "gamma_rad_s") {
            opts.gamma_rad_s = parse_double(value, where);
        } else if (key == "gamma_table") {
            opts.gamma_table = value;
        } else if (key == "gamma_low_t_exponent") {
            opts.gamma_low_t_exponent = parse_double(value, where);
        } else if (key == "prescription") {
            opts.prescription = value;
        } else if (key == "a_um") {
            opts.a_um = parse_double(value, where);
        } else if (key == "T_K") {
            opts.T_K = parse_double(value, where);
        } else if (key == "geometry") {
            opts.geometry = value;
        } else if (key == "sphere_radius_um") {
            opts.sphere_radius_um = parse_double(value, where);
        } else if (key == "rel_tol") {
            opts.rel_tol = parse_double(value, where);
        } else if (key == "abs_tol_energy") {
            opts.abs_tol_energy = parse_double(value, where);
        } else if (key == "max_l") {
            opts.max_l = parse_long(value, where);
        } else if (key == "tail_consecutive") {
            opts.tail_consecutive = static_cast<int>(parse_long(value, where));
        } else if (key == "max_nodes") {
            opts.max_nodes = static_cast<int>(parse_long(value, where));
        } else if (key == "out") {
            opts.out = value;
        } else {
            throw config_error(where + ": unknown key '" + key + "'");
        }
    }
    return opts;
}

Options load_options_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    return parse_options(in, path);
}

void merge_options(Options& base, const Options& over) {
    auto take = [](auto& dst, const auto& src) {
        if (src) dst = src;
    };
    take(base.model, over.model);
    take(base.omega_p_ev, over.omega_p_ev);
    take(base.omega_p_rad_s, over.omega_p_rad_s);
    take(base.gamma_ev, over.gamma_ev);
    take(base.gamma_rad_s, over.gamma_rad_s);
    take(base.gamma_table, over.gamma_table);
    take(base.gamma_low_t_exponent, over.gamma_low_t_exponent);
    take(base.prescription, over.prescription);
    take(base.a_um, over.a_um);
    take(base.T_K, over.T_K);
    take(base.geometry, over.geometry);
    take(base.sphere_radius_um, over.sphere_radius_um);
    take(base.rel_tol, over.rel_tol);
    take(base.abs_tol_energy, over.abs_tol_energy);
    take(base.max_l, over.max_l);
    take(base.tail_consecutive, over.tail_consecutive);
    take(base.max_nodes, over.max_nodes);
    take(base.out, over.out);
}

namespace {

double resolve_omega_p(const Options& opts) {
    if (opts.omega_p_ev && opts.omega_p_rad_s)
        throw config_error("set omega_p_ev or omega_p_rad_s, not both");
    if (opts.omega_p_ev) {
        if (!(*opts.omega_p_ev > 0.0))
            throw config_error("omega_p_ev must be > 0");
        return omega_from_eV(*opts.omega_p_ev);
    }
    if (opts.omega_p_rad_s) return *opts.omega_p_rad_s;
    return 1.9e16;  // aluminium
}

GammaProvider resolve_gamma(const Options& opts) {
    const int constant_sources = (opts.gamma_ev ? 1 : 0) + (opts.gamma_rad_s ? 1 : 0);
    if (constant_sources == 2)
        throw config_error("set gamma_ev or gamma_rad_s, not both");
    if (constant_sources == 1 && opts.gamma_table)
        throw config_error("a constant gamma and a gamma_table are mutually exclusive");
    if (constant_sources == 1 && opts.gamma_low_t_exponent)
        throw config_error("gamma_low_t_exponent applies only to table-based gamma(T)");
    if (opts.gamma_ev) return GammaConstant{omega_from_eV(*opts.gamma_ev)};
    if (opts.gamma_rad_s) return GammaConstant{*opts.gamma_rad_s};
    GammaTable table =
        opts.gamma_table ? load_gamma_table_file(*opts.gamma_table) : aluminum_gamma_table();
    if (opts.gamma_low_t_exponent) table.low_T_exponent = *opts.gamma_low_t_exponent;
    return table;
}

void reject_material_keys(const Options& opts, const std::string& model,
                          bool allow_omega_p) {
    if (!allow_omega_p && (opts.omega_p_ev || opts.omega_p_rad_s))
        throw config_error("model=" + model + " takes no plasma frequency");
    if (opts.gamma_ev || opts.gamma_rad_s || opts.gamma_table ||
        opts.gamma_low_t_exponent)
        throw config_error("model=" + model + " takes no relaxation settings");
}

} // namespace

PlateSystem make_system(const Options& opts) {
    PlateSystem sys;

    const std::string model = opts.model.value_or("drude");
    if (model == "ideal") {
        reject_material_keys(opts, model, false);
        sys.material = IdealMetal{};
    } else if (model == "plasma") {
        reject_material_keys(opts, model, true);
        sys.material = Plasma{resolve_omega_p(opts)};
    } else if (model == "drude") {
        sys.material = Drude{resolve_omega_p(opts), resolve_gamma(opts)};
    } else {
        throw config_error("unknown model '" + model + "' (ideal, plasma, drude)");
    }

    sys.prescription = prescription_from_token(opts.prescription.value_or("eq10"));
    sys.separation_a = opts.a_um.value_or(2.0) * 1e-6;
    sys.temperature_T = opts.T_K.value_or(300.0);

    const std::string geometry = opts.geometry.value_or("plates");
    if (geometry == "plates") {
        if (opts.sphere_radius_um)
            throw config_error("sphere_radius_um requires geometry=sphere");
        sys.geometry = Geometry::ParallelPlates;
    } else if (geometry == "sphere") {
        sys.geometry = Geometry::SpherePlate;
        if (!opts.sphere_radius_um)
            throw config_error("geometry=sphere requires sphere_radius_um");
        sys.sphere_radius_R = *opts.sphere_radius_um * 1e-6;
    } else {
        throw config_error("unknown geometry '" + geometry + "' (plates, sphere)");
    }

    validate(sys);
    return sys;
}

QuadratureConfig make_quadrature(const Options& opts) {
    QuadratureConfig cfg;
    if (opts.rel_tol) cfg.rel_tol = *opts.rel_tol;
    if (opts.abs_tol_energy) cfg.abs_tol_energy = *opts.abs_tol_energy;
    if (opts.max_l) cfg.max_l = *opts.max_l;
    if (opts.tail_consecutive) cfg.tail_consecutive = *opts.tail_consecutive;
    if (opts.max_nodes) cfg.max_nodes_per_integral = *opts.max_nodes;
    validate(cfg);
    return cfg;
}

std::vector<std::pair<std::string, std::string>> effective_key_values(
    const PlateSystem& system, const QuadratureConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("model", model_name(system.material));
    if (has_plasma_frequency(system.material))
        kv.emplace_back("omega_p_rad_s", fmt_g(plasma_frequency(system.material)));
    if (const auto* drude = std::get_if<Drude>(&system.material)) {
        if (const auto* constant = std::get_if<GammaConstant>(&drude->gamma)) {
            kv.emplace_back("gamma_model", "constant");
            kv.emplace_back("gamma_rad_s", fmt_g(constant->gamma));
        } else if (const auto* table = std::get_if<GammaTable>(&drude->gamma)) {
            kv.emplace_back("gamma_model", "table");
            kv.emplace_back("gamma_table_points", std::to_string(table->T_K.size()));
            kv.emplace_back("gamma_low_t_exponent", fmt_g(table->low_T_exponent));
        } else {
            const auto& bg = std::get<BlochGruneisen>(drude->gamma);
            kv.emplace_back("gamma_model", "bloch_gruneisen");
            kv.emplace_back("gamma_ref_rad_s", fmt_g(bg.gamma_ref));
            kv.emplace_back("gamma_T_ref_K", fmt_g(bg.T_ref));
            kv.emplace_back("gamma_T_debye_K", fmt_g(bg.T_debye));
            kv.emplace_back("gamma_exponent_n", std::to_string(bg.exponent_n));
        }
    }
    kv.emplace_back("prescription", to_token(system.prescription));
    kv.emplace_back("a_um", fmt_g(system.separation_a * 1e6));
    kv.emplace_back("T_K", fmt_g(system.temperature_T));
    kv.emplace_back("geometry",
                    system.geometry == Geometry::SpherePlate ? "sphere" : "plates");
    if (system.geometry == Geometry::SpherePlate)
        kv.emplace_back("sphere_radius_um", fmt_g(system.sphere_radius_R * 1e6));
    kv.emplace_back("rel_tol", fmt_g(cfg.rel_tol));
    kv.emplace_back("abs_tol_energy", fmt_g(cfg.abs_tol_energy));
    kv.emplace_back("max_l", std::to_string(cfg.max_l));
    kv.emplace_back("tail_consecutive", std::to_string(cfg.tail_consecutive));
    kv.emplace_back("max_nodes", std::to_string(cfg.max_nodes_per_integral));
    return kv;
}

ZeroFreqPrescription prescription_from_token(const std::string& token) {
    if (token == "intrinsic") return ZeroFreqPrescription::ModelIntrinsic;
    if (token == "eq9") return ZeroFreqPrescription::IdealMetalRule;
    if (token == "eq10") return ZeroFreqPrescription::ModifiedTransverse;
    throw config_error("unknown prescription '" + token +
                       "' (intrinsic, eq9, eq10)");
}

std::string to_token(ZeroFreqPrescription prescription) {
    switch (prescription) {
        case ZeroFreqPrescription::ModelIntrinsic: return "intrinsic";
        case ZeroFreqPrescription::IdealMetalRule: return "eq9";
        case ZeroFreqPrescription::ModifiedTransverse: return "eq10";
    }
    return "intrinsic";
}

std::string model_name(const DielectricSpec& spec) {
    if (std::holds_alternative<IdealMetal>(spec)) return "ideal";
    if (std::holds_alternative<Plasma>(spec)) return "plasma";
    return "drude";
}

} // namespace casimir
