#include "casimir/dielectric.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <variant>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

// ---------------------------------------------------------------------------
// Shape-preserving cubic interpolation (Fritsch-Carlson / PCHIP slopes).
// The data is strictly monotone in practice, but the slope limiter below is
// correct for any data and guarantees no overshoot between nodes.
// ---------------------------------------------------------------------------

std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> m(n, 0.0);
    if (n == 1) return m;
    std::vector<double> h(n - 1), d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        d[i] = (y[i + 1] - y[i]) / h[i];
    }
    if (n == 2) {
        m[0] = m[1] = d[0];
        return m;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] == 0.0 || d[i] == 0.0 || (d[i - 1] > 0.0) != (d[i] > 0.0)) {
            m[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    auto endpoint = [](double h0, double h1, double d0, double d1) {
        double m0 = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (m0 * d0 <= 0.0)
            m0 = 0.0;
        else if (d0 * d1 < 0.0 && std::abs(m0) > 3.0 * std::abs(d0))
            m0 = 3.0 * d0;
        return m0;
    };
    m[0] = endpoint(h[0], h[1], d[0], d[1]);
    m[n - 1] = endpoint(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
    return m;
}

double pchip_eval(const std::vector<double>& x, const std::vector<double>& y,
                  const std::vector<double>& m, double xq) {
    const auto it = std::upper_bound(x.begin(), x.end(), xq);
    const std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(
        0, std::min<std::ptrdiff_t>(it - x.begin() - 1,
                                    static_cast<std::ptrdiff_t>(x.size()) - 2)));
    const double h = x[i + 1] - x[i];
    const double t = (xq - x[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * y[i] + h10 * h * m[i] + h01 * y[i + 1] + h11 * h * m[i + 1];
}

void check_table(const GammaTable& table) {
    if (table.T_K.empty()) throw config_error("gamma(T) table is empty");
    if (table.T_K.size() != table.gamma_rad_s.size())
        throw config_error("gamma(T) table temperature/value lengths differ");
    for (std::size_t i = 0; i < table.T_K.size(); ++i) {
        if (!(table.T_K[i] > 0.0) || !std::isfinite(table.T_K[i]))
            throw config_error("gamma(T) table temperatures must be positive and finite");
        if (!(table.gamma_rad_s[i] > 0.0) || !std::isfinite(table.gamma_rad_s[i]))
            throw config_error("gamma(T) table values must be positive and finite");
        if (i > 0 && !(table.T_K[i] > table.T_K[i - 1]))
            throw config_error("gamma(T) table temperatures must be strictly increasing");
    }
    if (!(table.low_T_exponent > 0.0))
        throw config_error("gamma(T) table low-temperature exponent must be > 0");
}

double gamma_from_table(const GammaTable& table, double T) {
    check_table(table);
    const double T_front = table.T_K.front();
    const double T_back = table.T_K.back();
    if (T <= T_front)
        return table.gamma_rad_s.front() * std::pow(T / T_front, table.low_T_exponent);
    if (T >= T_back) return table.gamma_rad_s.back();
    // Slopes are cached by table content; comparing two short vectors is far
    // cheaper than recomputing the slopes on every evaluation.
    static thread_local std::vector<double> cached_T, cached_gamma, cached_slopes;
    if (cached_T != table.T_K || cached_gamma != table.gamma_rad_s) {
        cached_slopes = pchip_slopes(table.T_K, table.gamma_rad_s);
        cached_T = table.T_K;
        cached_gamma = table.gamma_rad_s;
    }
    return pchip_eval(table.T_K, table.gamma_rad_s, cached_slopes, T);
}

/// Sharp-crossover interpolation between gamma ~ T^n (low T) and gamma ~ T
/// (high T): B(T) = T [1 + (T_debye / (8 T))^8]^(-(n-1)/8). The crossover
/// sits at T_debye/8; the blend exponent 8 keeps the asymptotic deviations
/// below 2% once T > T_debye/4 and below 5% once T < T_debye/20.
double bloch_gruneisen_shape(double T, double T_debye, int n) {
    if (T <= 0.0) return 0.0;
    const double ratio = 8.0 * T / T_debye;
    const double p = (n - 1) / 8.0;
    if (ratio < 1.0) {
        // low-T form, overflow-free: T (8T/Theta)^(n-1) (1 + (8T/Theta)^8)^(-p)
        const double r8 = std::pow(ratio, 8);
        return T * std::pow(ratio, n - 1) * std::pow(1.0 + r8, -p);
    }
    const double inv8 = std::pow(1.0 / ratio, 8);
    return T * std::pow(1.0 + inv8, -p);
}

} // namespace

double gamma_of_T(const GammaProvider& provider, double T) {
    if (!(T >= 0.0) || !std::isfinite(T))
        throw domain_error("gamma_of_T requires T >= 0 and finite");
    return std::visit(
        [T](const auto& p) -> double {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, GammaConstant>) {
                if (!(p.gamma >= 0.0)) throw domain_error("GammaConstant.gamma must be >= 0");
                return p.gamma;
            } else if constexpr (std::is_same_v<P, GammaTable>) {
                return gamma_from_table(p, T);
            } else {
                static_assert(std::is_same_v<P, BlochGruneisen>);
                if (!(p.gamma_ref > 0.0) || !(p.T_ref > 0.0) || !(p.T_debye > 0.0))
                    throw domain_error("BlochGruneisen parameters must be positive");
                if (p.exponent_n < 2 || p.exponent_n > 5)
                    throw domain_error("BlochGruneisen.exponent_n must be in [2, 5]");
                return p.gamma_ref * bloch_gruneisen_shape(T, p.T_debye, p.exponent_n) /
                       bloch_gruneisen_shape(p.T_ref, p.T_debye, p.exponent_n);
            }
        },
        provider);
}

double gamma_tilde(double separation_a, const GammaProvider& provider, double T) {
    if (!(separation_a > 0.0)) throw domain_error("gamma_tilde requires a > 0");
    return 2.0 * separation_a * gamma_of_T(provider, T) / codata.c;
}

GammaTable load_gamma_table(std::istream& in, const std::string& origin) {
    GammaTable table;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        double T = 0.0, gamma = 0.0;
        if (!(fields >> T)) continue;  // blank or comment-only line
        if (!(fields >> gamma))
            throw config_error(origin + ":" + std::to_string(line_no) +
                               ": expected two columns (T_kelvin gamma_rad_per_s)");
        std::string extra;
        if (fields >> extra)
            throw config_error(origin + ":" + std::to_string(line_no) +
                               ": unexpected extra column '" + extra + "'");
        table.T_K.push_back(T);
        table.gamma_rad_s.push_back(gamma);
    }
    try {
        check_table(table);
    } catch (const config_error& e) {
        throw config_error(origin + ": " + e.what());
    }
    return table;
}

GammaTable load_gamma_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open gamma table file '" + path + "'");
    return load_gamma_table(in, path);
}

const GammaTable& aluminum_gamma_table() {
    // Generated offline from the Grueneisen phonon-resistivity integral
    // (crossover temperature 428 K, low-temperature exponent 5), scaled so
    // that gamma(300 K) = 9.6e13 rad/s exactly.
    static const GammaTable table{
        {1.0, 4.0, 10.0, 20.0, 50.0, 77.0, 100.0, 150.0, 200.0, 250.0, 273.0, 300.0, 350.0,
         400.0},
        {5.303079e3, 5.430353e6, 5.303079e8, 1.696945e10, 1.425221e12, 7.155521e12,
         1.495199e13, 3.523451e13, 5.603730e13, 7.629107e13, 8.541691e13, 9.600000e13,
         1.152964e14, 1.342927e14},
        5.0,
    };
    return table;
}

double eps_imag_axis(const DielectricSpec& spec, double xi, double T) {
    return std::visit(
        [xi, T](const auto& model) -> double {
            using M = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<M, IdealMetal>) {
                return std::numeric_limits<double>::infinity();
            } else {
                if (!(xi > 0.0))
                    throw domain_error("eps_imag_axis requires xi > 0 (the zero-frequency "
                                       "term is prescription-defined, not a limit)");
                if constexpr (std::is_same_v<M, Plasma>) {
                    if (!(model.omega_p > 0.0)) throw domain_error("Plasma.omega_p must be > 0");
                    const double r = model.omega_p / xi;
                    return 1.0 + r * r;
                } else {
                    static_assert(std::is_same_v<M, Drude>);
                    if (!(model.omega_p > 0.0)) throw domain_error("Drude.omega_p must be > 0");
                    const double gamma = gamma_of_T(model.gamma, T);
                    if (gamma >= model.omega_p)
                        throw domain_error("Drude model requires gamma(T) < omega_p");
                    return 1.0 + model.omega_p * model.omega_p / (xi * (xi + gamma));
                }
            }
        },
        spec);
}

bool has_plasma_frequency(const DielectricSpec& spec) {
    return !std::holds_alternative<IdealMetal>(spec);
}

double plasma_frequency(const DielectricSpec& spec) {
    if (const auto* plasma = std::get_if<Plasma>(&spec)) return plasma->omega_p;
    if (const auto* drude = std::get_if<Drude>(&spec)) return drude->omega_p;
    throw domain_error("IdealMetal has no plasma frequency");
}

bool satisfies_zero_frequency_condition(const DielectricSpec& spec) {
    if (std::holds_alternative<IdealMetal>(spec) || std::holds_alternative<Plasma>(spec))
        return true;
    // A Drude metal with identically zero relaxation is the plasma model; any
    // actual dissipation makes xi^2 eps(i xi) vanish at zero frequency.
    const auto& drude = std::get<Drude>(spec);
    if (const auto* constant = std::get_if<GammaConstant>(&drude.gamma))
        return constant->gamma == 0.0;
    return false;
}

Drude aluminum_drude() { return Drude{1.9e16, aluminum_gamma_table()}; }

Plasma aluminum_plasma() { return Plasma{1.9e16}; }

} // namespace casimir
