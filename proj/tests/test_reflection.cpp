#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <casimir/constants.hpp>
#include <casimir/errors.hpp>
#include <casimir/reflection.hpp>

using namespace casimir;

namespace {

double rel_err(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

/// Textbook difference-over-sum forms in long double, kept deliberately
/// independent of the library's rewritten algebra.
struct Textbook {
    double r_par_sq, r_perp_sq;
};

Textbook textbook_refl(double eps_d, double xi_d, double k_perp_d) {
    const long double eps = eps_d, xi = xi_d, k_perp = k_perp_d;
    const long double x = xi / codata.c;
    const long double q = std::sqrt(x * x + k_perp * k_perp);
    const long double k = std::sqrt(k_perp * k_perp + eps * x * x);
    const long double r_par = (eps * q - k) / (eps * q + k);
    const long double r_perp = (q - k) / (q + k);
    return {static_cast<double>(r_par * r_par),
            static_cast<double>(r_perp * r_perp)};
}

Textbook textbook_zero_plasma(double omega_p_d, double k_perp_d) {
    const long double w = omega_p_d, k_perp = k_perp_d;
    const long double ck = codata.c * k_perp;
    const long double root = std::sqrt(ck * ck + w * w);
    const long double r = (ck - root) / (ck + root);
    return {1.0, static_cast<double>(r * r)};
}

Textbook textbook_zero_modified(double omega_p_d, double gamma_d, double k_perp_d) {
    const long double w = omega_p_d, gamma = gamma_d, k_perp = k_perp_d;
    const long double ck = codata.c * k_perp;
    const long double w_sq_eff = w * w * ck / (ck + gamma);
    const long double root = std::sqrt(ck * ck + w_sq_eff);
    const long double r = (ck - root) / (ck + root);
    return {1.0, static_cast<double>(r * r)};
}

} // namespace

TEST_CASE("Matsubara frequencies") {
    CHECK(matsubara_frequency(0, 300.0) == 0.0);
    CHECK(rel_err(matsubara_frequency(1, 300.0), 2.4677902552e14) <= 1e-10);
    CHECK(rel_err(matsubara_frequency(7, 300.0), 7.0 * matsubara_frequency(1, 300.0)) <= 1e-14);
    CHECK(rel_err(matsubara_frequency(1, 150.0), 0.5 * matsubara_frequency(1, 300.0)) <= 1e-14);
    CHECK_THROWS_AS(matsubara_frequency(1, 0.0), domain_error);
    CHECK_THROWS_AS(matsubara_frequency(-1, 300.0), domain_error);
}

TEST_CASE("wave numbers") {
    const WaveNumbers wn = wave_numbers(100.0, 1e15, 2e6);
    CHECK(rel_err(wn.q, std::hypot(1e15 / codata.c, 2e6)) <= 1e-14);
    CHECK(wn.k > wn.q);  // eps > 1 always raises k above q
    const WaveNumbers vacuum = wave_numbers(1.0, 1e15, 2e6);
    CHECK(rel_err(vacuum.k, vacuum.q) <= 1e-15);
}

TEST_CASE("finite-permittivity coefficients match the textbook forms") {
    for (const double eps : {1.0 + 1e-9, 2.0, 50.0, 362.0, 1e6, 1e12}) {
        for (const double xi : {1e12, 1e14, 2.5e15, 1e17}) {
            for (const double k_perp : {1e2, 1e5, 5e6, 1e8}) {
                const ReflectionPair got = refl_sq_from_eps(eps, xi, k_perp);
                const Textbook want = textbook_refl(eps, xi, k_perp);
                CAPTURE(eps);
                CAPTURE(xi);
                CAPTURE(k_perp);
                CHECK(std::abs(got.r_par_sq - want.r_par_sq) <= 1e-12);
                CHECK(std::abs(got.r_perp_sq - want.r_perp_sq) <= 1e-12);
            }
        }
    }
}

TEST_CASE("coefficient bounds and ordering") {
    for (const double eps : {1.0, 3.0, 100.0, 1e8}) {
        for (const double xi : {1e13, 1e15, 1e17}) {
            for (const double k_perp : {1e3, 1e6, 1e8}) {
                const ReflectionPair r = refl_sq_from_eps(eps, xi, k_perp);
                CHECK(r.r_par_sq >= 0.0);
                CHECK(r.r_par_sq <= 1.0);
                CHECK(r.r_perp_sq >= 0.0);
                CHECK(r.r_perp_sq <= 1.0);
                CHECK(r.r_par_sq >= r.r_perp_sq);  // TM reflects at least as well as TE
            }
        }
    }
}

TEST_CASE("limits of the finite-permittivity coefficients") {
    SUBCASE("vacuum does not reflect") {
        const ReflectionPair r = refl_sq_from_eps(1.0, 1e15, 1e6);
        CHECK(r.r_par_sq == 0.0);
        CHECK(r.r_perp_sq == 0.0);
    }
    SUBCASE("huge permittivity approaches perfect reflection") {
        const ReflectionPair r = refl_sq_from_eps(1e14, 1e15, 1e6);
        CHECK(r.r_par_sq > 1.0 - 1e-5);
        CHECK(r.r_perp_sq > 1.0 - 1e-5);
    }
    SUBCASE("infinite permittivity is exactly perfect") {
        const double inf = std::numeric_limits<double>::infinity();
        const ReflectionPair r = refl_sq_from_eps(inf, 1e15, 1e6);
        CHECK(r.r_par_sq == 1.0);
        CHECK(r.r_perp_sq == 1.0);
    }
    SUBCASE("eps < 1 is rejected") {
        CHECK_THROWS_AS(refl_sq_from_eps(0.5, 1e15, 1e6), domain_error);
    }
}

TEST_CASE("material dispatch at xi > 0") {
    const ReflectionPair ideal = refl_sq(IdealMetal{}, 1e15, 1e6, 300.0);
    CHECK(ideal.r_par_sq == 1.0);
    CHECK(ideal.r_perp_sq == 1.0);

    const DielectricSpec plasma = Plasma{1.9e16};
    const ReflectionPair got = refl_sq(plasma, 1e15, 1e6, 300.0);
    const Textbook want = textbook_refl(362.0, 1e15, 1e6);
    CHECK(std::abs(got.r_par_sq - want.r_par_sq) <= 1e-12);
    CHECK(std::abs(got.r_perp_sq - want.r_perp_sq) <= 1e-12);

    CHECK_THROWS_AS(refl_sq(plasma, 0.0, 1e6, 300.0), domain_error);
    CHECK_THROWS_AS(refl_sq(plasma, 1e15, -1.0, 300.0), domain_error);
}

TEST_CASE("zero-frequency coefficients under each prescription") {
    const DielectricSpec plasma = Plasma{1.9e16};
    const DielectricSpec drude = Drude{1.9e16, GammaConstant{9.6e13}};
    const DielectricSpec lossless = Drude{1.9e16, GammaConstant{0.0}};

    SUBCASE("ideal metal is perfect under every prescription") {
        for (const auto p : {ZeroFreqPrescription::ModelIntrinsic,
                             ZeroFreqPrescription::IdealMetalRule,
                             ZeroFreqPrescription::ModifiedTransverse}) {
            const ReflectionPair r = refl_sq_zero(IdealMetal{}, p, 1e6, 300.0);
            CHECK(r.r_par_sq == 1.0);
            CHECK(r.r_perp_sq == 1.0);
        }
    }
    SUBCASE("perfect-reflection rule forces (1, 1) for any material") {
        const ReflectionPair r =
            refl_sq_zero(drude, ZeroFreqPrescription::IdealMetalRule, 1e6, 300.0);
        CHECK(r.r_par_sq == 1.0);
        CHECK(r.r_perp_sq == 1.0);
    }
    SUBCASE("plasma intrinsic limit matches the textbook form") {
        for (const double k_perp : {1e3, 1e5, 1e6, 6.34e7, 1e9}) {
            const ReflectionPair got =
                refl_sq_zero(plasma, ZeroFreqPrescription::ModelIntrinsic, k_perp, 300.0);
            const Textbook want = textbook_zero_plasma(1.9e16, k_perp);
            CAPTURE(k_perp);
            CHECK(got.r_par_sq == 1.0);
            CHECK(std::abs(got.r_perp_sq - want.r_perp_sq) <= 1e-12);
        }
    }
    SUBCASE("dissipative intrinsic limit drops the transverse mode") {
        const ReflectionPair r =
            refl_sq_zero(drude, ZeroFreqPrescription::ModelIntrinsic, 1e6, 300.0);
        CHECK(r.r_par_sq == 1.0);
        CHECK(r.r_perp_sq == 0.0);
    }
    SUBCASE("lossless drude falls back to the plasma form") {
        const ReflectionPair got =
            refl_sq_zero(lossless, ZeroFreqPrescription::ModelIntrinsic, 1e6, 300.0);
        const Textbook want = textbook_zero_plasma(1.9e16, 1e6);
        CHECK(std::abs(got.r_perp_sq - want.r_perp_sq) <= 1e-12);
    }
    SUBCASE("relaxation-dependent rule matches the textbook form") {
        for (const double k_perp : {1e3, 1e5, 3.2e5, 1e6, 6.34e7, 1e9}) {
            const ReflectionPair got = refl_sq_zero(
                drude, ZeroFreqPrescription::ModifiedTransverse, k_perp, 300.0);
            const Textbook want = textbook_zero_modified(1.9e16, 9.6e13, k_perp);
            CAPTURE(k_perp);
            CHECK(got.r_par_sq == 1.0);
            CHECK(std::abs(got.r_perp_sq - want.r_perp_sq) <= 1e-12);
        }
    }
    SUBCASE("relaxation-dependent rule at gamma = 0 equals the plasma form") {
        const ReflectionPair a = refl_sq_zero(
            lossless, ZeroFreqPrescription::ModifiedTransverse, 1e6, 300.0);
        const ReflectionPair b =
            refl_sq_zero(plasma, ZeroFreqPrescription::ModelIntrinsic, 1e6, 300.0);
        CHECK(std::abs(a.r_perp_sq - b.r_perp_sq) <= 1e-14);
    }
    SUBCASE("relaxation weakens the zero-frequency transverse reflection") {
        const double with_gamma =
            refl_sq_zero(drude, ZeroFreqPrescription::ModifiedTransverse, 1e6, 300.0)
                .r_perp_sq;
        const double without =
            refl_sq_zero(plasma, ZeroFreqPrescription::ModelIntrinsic, 1e6, 300.0)
                .r_perp_sq;
        CHECK(with_gamma < without);
        CHECK(with_gamma > 0.0);
    }
    SUBCASE("transverse coefficient decreases with k_perp") {
        double prev = 1.0;
        for (double k_perp = 1e4; k_perp <= 1e10; k_perp *= 10.0) {
            const double val =
                refl_sq_zero(plasma, ZeroFreqPrescription::ModelIntrinsic, k_perp, 300.0)
                    .r_perp_sq;
            CHECK(val < prev);
            CHECK(val >= 0.0);
            prev = val;
        }
    }
    SUBCASE("k_perp must be positive") {
        CHECK_THROWS_AS(
            refl_sq_zero(plasma, ZeroFreqPrescription::ModelIntrinsic, 0.0, 300.0),
            domain_error);
    }
    SUBCASE("temperature enters through gamma(T)") {
        const DielectricSpec tabled = Drude{1.9e16, GammaTable{{1.0, 300.0},
                                                               {1e10, 9.6e13},
                                                               5.0}};
        const double cold = refl_sq_zero(
            tabled, ZeroFreqPrescription::ModifiedTransverse, 1e6, 1.0).r_perp_sq;
        const double hot = refl_sq_zero(
            tabled, ZeroFreqPrescription::ModifiedTransverse, 1e6, 300.0).r_perp_sq;
        CHECK(cold > hot);  // smaller gamma, stronger reflection
    }
}

TEST_CASE("audit flag for the indeterminate zero-frequency combination") {
    const DielectricSpec drude_tab = Drude{1.9e16, aluminum_gamma_table()};
    const DielectricSpec drude_const = Drude{1.9e16, GammaConstant{9.6e13}};
    const DielectricSpec lossless = Drude{1.9e16, GammaConstant{0.0}};
    CHECK(zero_term_uses_drude_limit(drude_tab, ZeroFreqPrescription::ModelIntrinsic));
    CHECK(zero_term_uses_drude_limit(drude_const, ZeroFreqPrescription::ModelIntrinsic));
    CHECK(!zero_term_uses_drude_limit(drude_tab, ZeroFreqPrescription::IdealMetalRule));
    CHECK(!zero_term_uses_drude_limit(drude_tab, ZeroFreqPrescription::ModifiedTransverse));
    CHECK(!zero_term_uses_drude_limit(lossless, ZeroFreqPrescription::ModelIntrinsic));
    CHECK(!zero_term_uses_drude_limit(Plasma{1.9e16}, ZeroFreqPrescription::ModelIntrinsic));
    CHECK(!zero_term_uses_drude_limit(IdealMetal{}, ZeroFreqPrescription::ModelIntrinsic));
}
