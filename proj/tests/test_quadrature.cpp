#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include <casimir/errors.hpp>
#include <casimir/quadrature.hpp>

using namespace casimir;

namespace {
double rel_err(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }
} // namespace

TEST_CASE("tolerance knob validation") {
    QuadratureConfig cfg;
    CHECK_NOTHROW(validate(cfg));
    SUBCASE("rel_tol range") {
        cfg.rel_tol = 1e-2;
        CHECK_THROWS_AS(validate(cfg), domain_error);
        cfg.rel_tol = 1e-15;
        CHECK_THROWS_AS(validate(cfg), domain_error);
        cfg.rel_tol = 1e-6;
        CHECK_NOTHROW(validate(cfg));
    }
    SUBCASE("max_l floor") {
        cfg.max_l = 9;
        CHECK_THROWS_AS(validate(cfg), domain_error);
    }
    SUBCASE("tail_consecutive floor") {
        cfg.tail_consecutive = 0;
        CHECK_THROWS_AS(validate(cfg), domain_error);
    }
    SUBCASE("node budget floor") {
        cfg.max_nodes_per_integral = 256;
        CHECK_THROWS_AS(validate(cfg), domain_error);
    }
    SUBCASE("absolute floor must be positive") {
        cfg.abs_tol_energy = 0.0;
        CHECK_THROWS_AS(validate(cfg), domain_error);
    }
}

TEST_CASE("ln_one_minus is accurate on both sides of its branch point") {
    CHECK(quad::ln_one_minus(0.0) == 0.0);
    CHECK(rel_err(quad::ln_one_minus(0.25), std::log(0.75)) <= 1e-15);
    CHECK(rel_err(quad::ln_one_minus(0.75), std::log(0.25)) <= 1e-15);
    // continuity across the branch switch at 0.5
    const double below = quad::ln_one_minus(std::nextafter(0.5, 0.0));
    const double above = quad::ln_one_minus(0.5);
    CHECK(std::abs(below - above) <= 1e-15);
    // tiny arguments keep full precision (log1p path)
    CHECK(rel_err(quad::ln_one_minus(1e-12), -1e-12) <= 1e-9);
}

TEST_CASE("adaptive integrator on closed-form integrals") {
    SUBCASE("polynomial is exact") {
        const auto est = quad::adaptive_gk([](double x) { return x * x; }, 0.0,
                                           1.0, 1e-12, 1e-16, 4096);
        CHECK(est.converged);
        CHECK(rel_err(est.value, 1.0 / 3.0) <= 1e-14);
    }
    SUBCASE("sine over a full arch") {
        const auto est = quad::adaptive_gk([](double x) { return std::sin(x); },
                                           0.0, 3.14159265358979324, 1e-12,
                                           1e-16, 4096);
        CHECK(est.converged);
        CHECK(rel_err(est.value, 2.0) <= 1e-13);
    }
    SUBCASE("integrable endpoint singularity (no endpoint evaluations)") {
        const auto est = quad::adaptive_gk(
            [](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-9, 1e-12,
            4096);
        CHECK(rel_err(est.value, 2.0) <= 1e-7);
    }
    SUBCASE("exponential decay") {
        const auto est = quad::adaptive_gk([](double x) { return std::exp(-x); },
                                           0.0, 60.0, 1e-12, 1e-18, 4096);
        CHECK(est.converged);
        CHECK(rel_err(est.value, 1.0) <= 1e-12);
    }
}

TEST_CASE("breakpoints pin interior structure") {
    const auto f = [](double x) { return std::abs(x - 0.3); };
    const std::vector<double> bp = {0.3};
    const auto est = quad::adaptive_gk(f, 0.0, 1.0, 1e-13, 1e-16, 4096, bp);
    CHECK(est.converged);
    // int_0^1 |x - 0.3| dx = 0.29; the kink sits exactly on a panel edge
    CHECK(rel_err(est.value, 0.29) <= 1e-14);
    // breakpoints outside the interval are ignored
    const std::vector<double> outside = {-1.0, 2.0};
    const auto est2 = quad::adaptive_gk(f, 0.0, 1.0, 1e-9, 1e-16, 4096, outside);
    CHECK(rel_err(est2.value, 0.29) <= 1e-9);
}

TEST_CASE("node budget exhaustion reports non-convergence") {
    const auto est = quad::adaptive_gk(
        [](double x) { return std::sin(1000.0 * x); }, 0.0, 1.0, 1e-13, 1e-18,
        512);
    CHECK(!est.converged);
    CHECK(est.nodes <= 512);
}

TEST_CASE("degenerate intervals integrate to zero") {
    const auto est =
        quad::adaptive_gk([](double x) { return x; }, 1.0, 1.0, 1e-9, 1e-16, 4096);
    CHECK(est.value == 0.0);
    const auto rev =
        quad::adaptive_gk([](double x) { return x; }, 2.0, 1.0, 1e-9, 1e-16, 4096);
    CHECK(rev.value == 0.0);
}

TEST_CASE("double-exponential tail on decaying integrands") {
    SUBCASE("pure exponential from zero") {
        const auto est = quad::exp_sinh_tail([](double y) { return std::exp(-y); }, 0.0);
        CHECK(rel_err(est.value, 1.0) <= 1e-10);
    }
    SUBCASE("pure exponential from a large offset") {
        const auto est =
            quad::exp_sinh_tail([](double y) { return std::exp(-y); }, 50.0);
        CHECK(rel_err(est.value, std::exp(-50.0)) <= 1e-10);
    }
    SUBCASE("polynomial times exponential") {
        const auto est = quad::exp_sinh_tail(
            [](double y) { return y * y * std::exp(-y); }, 0.0);
        CHECK(rel_err(est.value, 2.0) <= 1e-9);
    }
}

TEST_CASE("repeated evaluations are bit-identical") {
    const auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x); };
    const auto a = quad::adaptive_gk(f, 0.0, 40.0, 1e-11, 1e-18, 4096);
    const auto b = quad::adaptive_gk(f, 0.0, 40.0, 1e-11, 1e-18, 4096);
    CHECK(a.value == b.value);
    CHECK(a.error == b.error);
    CHECK(a.nodes == b.nodes);
    const auto t1 = quad::exp_sinh_tail(f, 5.0);
    const auto t2 = quad::exp_sinh_tail(f, 5.0);
    CHECK(t1.value == t2.value);
}
