#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include <casimir/constants.hpp>
#include <casimir/errors.hpp>
#include <casimir/system.hpp>

using namespace casimir;

namespace {
double rel_err(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }
} // namespace

TEST_CASE("physical constants are the fixed SI values") {
    CHECK(codata.hbar == 1.054571817e-34);
    CHECK(codata.c == 2.99792458e8);
    CHECK(codata.k_B == 1.380649e-23);
    CHECK(codata.eV == 1.602176634e-19);
    CHECK(zeta3 == 1.2020569031595943);
    CHECK(MeV_per_m2K == 1.602176634e-13);
}

TEST_CASE("omega_from_eV converts through E = hbar omega") {
    CHECK(rel_err(omega_from_eV(1.0), codata.eV / codata.hbar) <= 1e-15);
    CHECK(rel_err(omega_from_eV(12.5), 12.5 * codata.eV / codata.hbar) <= 1e-15);
}

TEST_CASE("derived scales at a = 2 um") {
    PlateSystem sys;  // defaults: a = 2 um, plasma aluminium
    const DerivedScales s = derived_scales(sys);
    CHECK(rel_err(s.T_eff, 572.4711298019) <= 1e-10);
    REQUIRE(s.delta_0.has_value());
    REQUIRE(s.lambda_p.has_value());
    CHECK(rel_err(*s.delta_0, 1.5778550421e-8) <= 1e-9);
    CHECK(rel_err(*s.lambda_p, 9.9139556174e-8) <= 1e-9);
    CHECK(rel_err(*s.lambda_p, 2.0 * 3.14159265358979324 * *s.delta_0) <= 1e-14);
}

TEST_CASE("ideal metal has no plasma-frequency scales") {
    PlateSystem sys;
    sys.material = IdealMetal{};
    const DerivedScales s = derived_scales(sys);
    CHECK(!s.delta_0.has_value());
    CHECK(!s.lambda_p.has_value());
    CHECK(s.T_eff > 0.0);
}

TEST_CASE("T_eff scales inversely with separation") {
    PlateSystem near, far;
    near.separation_a = 1e-6;
    far.separation_a = 4e-6;
    CHECK(rel_err(derived_scales(near).T_eff, 4.0 * derived_scales(far).T_eff) <= 1e-14);
}

TEST_CASE("system validation rejects bad ranges") {
    PlateSystem sys;
    SUBCASE("nonpositive separation") {
        sys.separation_a = 0.0;
        CHECK_THROWS_AS(validate(sys), domain_error);
        sys.separation_a = -1e-6;
        CHECK_THROWS_AS(validate(sys), domain_error);
    }
    SUBCASE("non-finite separation") {
        sys.separation_a = std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS(validate(sys), domain_error);
        sys.separation_a = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS(validate(sys), domain_error);
    }
    SUBCASE("negative temperature") {
        sys.temperature_T = -1.0;
        CHECK_THROWS_AS(validate(sys), domain_error);
    }
    SUBCASE("zero temperature is allowed") {
        sys.temperature_T = 0.0;
        CHECK_NOTHROW(validate(sys));
    }
    SUBCASE("nonpositive plasma frequency") {
        sys.material = Plasma{0.0};
        CHECK_THROWS_AS(validate(sys), domain_error);
        sys.material = Plasma{-1e16};
        CHECK_THROWS_AS(validate(sys), domain_error);
    }
    SUBCASE("negative constant relaxation") {
        sys.material = Drude{1.9e16, GammaConstant{-1.0}};
        CHECK_THROWS_AS(validate(sys), domain_error);
    }
    SUBCASE("malformed gamma table") {
        GammaTable empty;
        sys.material = Drude{1.9e16, empty};
        CHECK_THROWS_AS(validate(sys), domain_error);

        GammaTable mismatched;
        mismatched.T_K = {1.0, 2.0};
        mismatched.gamma_rad_s = {1e10};
        sys.material = Drude{1.9e16, mismatched};
        CHECK_THROWS_AS(validate(sys), domain_error);

        GammaTable bad_exponent;
        bad_exponent.T_K = {1.0, 2.0};
        bad_exponent.gamma_rad_s = {1e10, 2e10};
        bad_exponent.low_T_exponent = 0.0;
        sys.material = Drude{1.9e16, bad_exponent};
        CHECK_THROWS_AS(validate(sys), domain_error);
    }
    SUBCASE("Bloch-Gruneisen parameter ranges") {
        sys.material = Drude{1.9e16, BlochGruneisen{9.6e13, 300.0, 428.0, 7}};
        CHECK_THROWS_AS(validate(sys), domain_error);
        sys.material = Drude{1.9e16, BlochGruneisen{9.6e13, 300.0, -428.0, 5}};
        CHECK_THROWS_AS(validate(sys), domain_error);
        sys.material = Drude{1.9e16, BlochGruneisen{9.6e13, 300.0, 428.0, 5}};
        CHECK_NOTHROW(validate(sys));
    }
    SUBCASE("sphere geometry needs a radius") {
        sys.geometry = Geometry::SpherePlate;
        CHECK_THROWS_AS(validate(sys), domain_error);
        sys.sphere_radius_R = 100e-6;
        CHECK_NOTHROW(validate(sys));
    }
}

TEST_CASE("proximity-mapping suspicion threshold is R < 100 a") {
    PlateSystem sys;
    sys.separation_a = 1e-6;
    sys.geometry = Geometry::SpherePlate;
    sys.sphere_radius_R = 100e-6;
    CHECK(!sphere_radius_suspect(sys));
    sys.sphere_radius_R = 99e-6;
    CHECK(sphere_radius_suspect(sys));
    sys.geometry = Geometry::ParallelPlates;
    CHECK(!sphere_radius_suspect(sys));
}
