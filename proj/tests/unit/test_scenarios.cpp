#include "apcsldg/errors.hpp"
#include "apcsldg/moments.hpp"
#include "apcsldg/scenarios.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace apcsldg;

namespace {
constexpr double pi = std::numbers::pi;
const double sqrt_2pi = std::sqrt(2.0 * pi);

double scenario_mass(const Scenario& s, int n, int degree) {
    NodalBasis basis(degree);
    auto f = sample_ic(s.f0, {s.x_lo, s.x_hi, n}, {s.v_lo, s.v_hi, n}, degree);
    return total_mass(f, basis);
}

bool nonnegative_at_gauss(const Scenario& s, int n, int degree) {
    auto f = sample_ic(s.f0, {s.x_lo, s.x_hi, n}, {s.v_lo, s.v_hi, n}, degree);
    return min_nodal_value(f) >= 0.0;
}
} // namespace

TEST_CASE("landau") {
    auto s = landau(0.5, 0.5);
    CHECK(s.f0(0.0, 0.0) == doctest::Approx(1.5 / sqrt_2pi).epsilon(1e-13));
    CHECK(s.f0(0.0, 0.0) == doctest::Approx(0.598413).epsilon(1e-6));
    CHECK(s.x_hi == doctest::Approx(4.0 * pi));
    CHECK(s.v_hi == 5.0);

    // alpha = 0: uniform density erf(vm/sqrt2) at every midpoint
    auto s0 = landau(0.0, 0.5);
    NodalBasis basis(2);
    auto f = sample_ic(s0.f0, {s0.x_lo, s0.x_hi, 32}, {s0.v_lo, s0.v_hi, 64}, 2);
    auto m = compute_moments(f, basis);
    const double trunc = std::erf(5.0 / std::sqrt(2.0));
    for (double r : m.rho) CHECK(r == doctest::Approx(trunc).epsilon(1e-9));

    // mass is alpha-independent: 4pi up to the v-truncation
    const double m_half = scenario_mass(landau(0.5, 0.5), 64, 2);
    const double m_zero = scenario_mass(s0, 64, 2);
    CHECK(m_half == doctest::Approx(4.0 * pi).epsilon(1e-5));
    CHECK(m_half == doctest::Approx(m_zero).epsilon(1e-12));

    CHECK_THROWS_AS(landau(1.0, 0.5), InputError);
}

TEST_CASE("two-stream I") {
    auto s = two_stream_1();
    // unperturbed value at v = 0 is 2/(7 sqrt(2pi))
    const double at0 = 2.0 / (7.0 * sqrt_2pi);
    CHECK(at0 == doctest::Approx(0.113986).epsilon(1e-5));
    // the perturbation at x=0 scales it by 1 + alpha(1/1.2+1/1.2+1)
    CHECK(s.f0(0.0, 0.0) ==
          doctest::Approx(at0 * (1.0 + 0.01 * (2.0 / 1.2 + 1.0))).epsilon(1e-12));

    // density of the unperturbed profile: (2/7)(1+5) = 12/7
    NodalBasis basis(2);
    Scenario flat = s;
    flat.f0 = [](double, double v) {
        return 2.0 / (7.0 * sqrt_2pi) * (1.0 + 5.0 * v * v) * std::exp(-0.5 * v * v);
    };
    auto f = sample_ic(flat.f0, {s.x_lo, s.x_hi, 8}, {s.v_lo, s.v_hi, 128}, 2);
    auto m = compute_moments(f, basis);
    for (double r : m.rho) CHECK(r == doctest::Approx(12.0 / 7.0).epsilon(1e-9));

    CHECK(nonnegative_at_gauss(s, 64, 2));
    CHECK(s.x_hi == doctest::Approx(4.0 * pi));
}

TEST_CASE("two-stream II") {
    auto s = two_stream_2();
    CHECK(s.x_hi == doctest::Approx(13.0 * pi));
    // at a node of the cosine the perturbation factor is 1
    const double x_node = 13.0 * pi / 4.0; // cos(2x/13)=cos(pi/2)=0
    const double expected =
        1.0 / (2.0 * 0.3 * sqrt_2pi) * (1.0 + std::exp(-2.0 * 0.99 * 0.99 / 0.09));
    CHECK(s.f0(x_node, 0.99) == doctest::Approx(expected).epsilon(1e-10));
    CHECK(s.f0(x_node, 0.99) == doctest::Approx(0.664904).epsilon(1e-5));

    // even in v at t=0
    for (double x : {0.3, 5.0, 24.0})
        for (double v : {0.2, 0.99, 3.7})
            CHECK(s.f0(x, v) == doctest::Approx(s.f0(x, -v)).epsilon(1e-14));

    // mass = 13pi, the perturbation integrates out
    CHECK(scenario_mass(s, 96, 2) == doctest::Approx(13.0 * pi).epsilon(1e-6));
    CHECK(nonnegative_at_gauss(s, 64, 2));
}

TEST_CASE("near equilibrium") {
    auto s = near_equilibrium(1e-16);
    NodalBasis basis(1);
    auto f = sample_ic(s.f0, {s.x_lo, s.x_hi, 128}, {s.v_lo, s.v_hi, 128}, 1);
    auto m = compute_moments(f, basis);
    for (double r : m.rho) CHECK(std::abs(r - 1.0) < 1e-14);
    for (double j : m.current) CHECK(std::abs(j) < 1e-16);

    SpectralWorkspace ws(128, s.x_hi - s.x_lo);
    auto rep = validate_well_prepared(f, basis, ws, 0.0, 1e-12);
    CHECK(rep.pass);
    CHECK(rep.rho_residual <= 1e-12);
    CHECK(rep.current_residual <= 1e-12);
}

TEST_CASE("ill-prepared data fails the lambda=0 validation") {
    // degree 2 so the midpoint is itself a Gauss node (no interpolation bias)
    auto s = landau(0.5, 0.5);
    NodalBasis basis(2);
    auto f = sample_ic(s.f0, {s.x_lo, s.x_hi, 64}, {s.v_lo, s.v_hi, 64}, 2);
    SpectralWorkspace ws(64, s.x_hi - s.x_lo);
    auto rep = validate_well_prepared(f, basis, ws, 0.0, 1e-12);
    CHECK(!rep.pass);
    // the ripple has L2 size 0.5 sqrt(2pi) (up to erf truncation)
    CHECK(rep.rho_residual == doctest::Approx(0.5 * sqrt_2pi).epsilon(1e-4));
}

TEST_CASE("lambda > 0 compatibility residuals are definitionally small") {
    auto s = landau(0.5, 0.5);
    NodalBasis basis(2);
    auto f = sample_ic(s.f0, {s.x_lo, s.x_hi, 64}, {s.v_lo, s.v_hi, 64}, 2);
    SpectralWorkspace ws(64, s.x_hi - s.x_lo);
    auto rep = validate_well_prepared(f, basis, ws, 1.0, 1e-10);
    CHECK(rep.pass);
    CHECK(rep.poisson_residual <= 1e-10);
    CHECK(rep.dt_poisson_residual <= 1e-10);
}

TEST_CASE("bump on tail") {
    SUBCASE("perturbation amplitude follows lambda") {
        CHECK(bump_on_tail(1.0).f0(0.0, 0.0) / bump_on_tail(1.0).f0(pi / 0.3, 0.0) ==
              doctest::Approx((1.0 + 0.04) / (1.0 - 0.04)).epsilon(1e-12));
        // alpha(1) = 0.04, alpha(0) = 0.0004
        const double f_ratio_1 = 0.04;
        const double f_ratio_0 = 0.0004;
        auto s1 = bump_on_tail(1.0);
        auto s0 = bump_on_tail(0.0);
        const double fp0_1 = 0.5 * (s1.f0(0.0, 0.0) + s1.f0(pi / 0.3, 0.0));
        CHECK((s1.f0(0.0, 0.0) - fp0_1) / fp0_1 == doctest::Approx(f_ratio_1).epsilon(1e-10));
        const double fp0_0 = 0.5 * (s0.f0(0.0, 0.0) + s0.f0(pi / 0.3, 0.0));
        CHECK((s0.f0(0.0, 0.0) - fp0_0) / fp0_0 == doctest::Approx(f_ratio_0).epsilon(1e-10));
    }
    SUBCASE("v-domain switches at lambda = 1e-3") {
        CHECK(bump_on_tail(0.1).v_lo == -6.0);
        CHECK(bump_on_tail(0.1).v_hi == 9.0);
        CHECK(bump_on_tail(1e-3).v_lo == -12.0);
        CHECK(bump_on_tail(0.0).v_hi == 12.0);
    }
    SUBCASE("unit total density: bulk 0.9 plus bump 0.1") {
        auto s = bump_on_tail(0.0);
        NodalBasis basis(2);
        auto f = sample_ic(s.f0, {s.x_lo, s.x_hi, 16}, {s.v_lo, s.v_hi, 256}, 2);
        auto m = compute_moments(f, basis);
        double mean = 0.0;
        for (double r : m.rho) mean += r;
        mean /= m.rho.size();
        CHECK(mean == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("nonnegative on both v-domains") {
        CHECK(nonnegative_at_gauss(bump_on_tail(1.0), 64, 2));
        CHECK(nonnegative_at_gauss(bump_on_tail(0.0), 64, 2));
    }
}
