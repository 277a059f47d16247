#include "apcsldg/errors.hpp"
#include "apcsldg/quad_basis.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace apcsldg;

TEST_CASE("gauss rule closed forms for k=1,2") {
    auto r1 = gauss_rule(1);
    CHECK(r1.nodes[0] == doctest::Approx(-0.5773502691896258).epsilon(1e-14));
    CHECK(r1.nodes[1] == doctest::Approx(0.5773502691896258).epsilon(1e-14));
    CHECK(r1.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r1.weights[1] == doctest::Approx(1.0).epsilon(1e-14));

    auto r2 = gauss_rule(2);
    CHECK(r2.nodes[0] == doctest::Approx(-0.7745966692414834).epsilon(1e-14));
    CHECK(r2.nodes[1] == doctest::Approx(0.0));
    CHECK(r2.nodes[2] == doctest::Approx(0.7745966692414834).epsilon(1e-14));
    CHECK(r2.weights[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-14));
    CHECK(r2.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
    CHECK(r2.weights[2] == doctest::Approx(5.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("gauss rule invariants for all supported degrees") {
    for (int k = 0; k <= 3; ++k) {
        auto r = gauss_rule(k);
        REQUIRE(r.num_points() == k + 1);

        double wsum = 0.0;
        for (int p = 0; p <= k; ++p) {
            wsum += r.weights[p];
            CHECK(r.weights[p] > 0.0);
            CHECK(r.nodes[p] == doctest::Approx(-r.nodes[k - p]).epsilon(1e-15));
            CHECK(r.weights[p] == doctest::Approx(r.weights[k - p]).epsilon(1e-15));
            if (p > 0) CHECK(r.nodes[p] > r.nodes[p - 1]);
        }
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));

        // monomial sweep: exact up to degree 2k+1
        for (int m = 0; m <= 2 * k + 1; ++m) {
            double quad = 0.0;
            for (int p = 0; p <= k; ++p) quad += r.weights[p] * std::pow(r.nodes[p], m);
            const double exact = (m % 2 == 0) ? 2.0 / (m + 1) : 0.0;
            if (exact == 0.0)
                CHECK(std::abs(quad) < 1e-14);
            else
                CHECK(quad == doctest::Approx(exact).epsilon(1e-13));
        }
    }
    {
        // int x^2 over [-1,1] with the 2-point rule
        auto r = gauss_rule(1);
        double quad = 0.0;
        for (int p = 0; p < 2; ++p) quad += r.weights[p] * r.nodes[p] * r.nodes[p];
        CHECK(quad == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(gauss_rule(4), ConfigError);
    CHECK_THROWS_AS(gauss_rule(-1), ConfigError);
}

TEST_CASE("nodal basis cardinality and partition of unity") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> xi_dist(-1.0, 1.0);
    for (int k = 0; k <= 3; ++k) {
        NodalBasis basis(k);
        for (int p = 0; p <= k; ++p)
            for (int q = 0; q <= k; ++q) {
                const double val = basis.cardinal(p, basis.rule().nodes[q]);
                if (p == q)
                    CHECK(val == doctest::Approx(1.0).epsilon(1e-13));
                else
                    CHECK(std::abs(val) < 1e-13);
            }
        for (int trial = 0; trial < 50; ++trial) {
            const double xi = xi_dist(rng);
            double sum = 0.0;
            for (int p = 0; p <= k; ++p) sum += basis.cardinal(p, xi);
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("eval_nodal reproduces interpolants") {
    NodalBasis b1(1), b2(2);
    const double c[3] = {3.25, 3.25, 3.25};
    CHECK(b2.eval({c, 3}, 0.3317) == doctest::Approx(3.25).epsilon(1e-14));
    CHECK(b1.eval({b1.rule().nodes.data(), 2}, 0.0) == doctest::Approx(0.0));
    double sq[3];
    for (int p = 0; p < 3; ++p) sq[p] = b2.rule().nodes[p] * b2.rule().nodes[p];
    CHECK(b2.eval({sq, 3}, 0.5) == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("diagonal mass matrix under the collocated quadrature") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int k = 0; k <= 3; ++k) {
        NodalBasis basis(k);
        const auto& r = basis.rule();
        const double length = 0.7;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> u(k + 1), v(k + 1);
            for (int p = 0; p <= k; ++p) {
                u[p] = dist(rng);
                v[p] = dist(rng);
            }
            double quad = 0.0, diag = 0.0;
            for (int g = 0; g <= k; ++g) {
                quad += r.weights[g] * basis.eval(u, r.nodes[g]) * basis.eval(v, r.nodes[g]);
                diag += r.weights[g] * u[g] * v[g];
            }
            quad *= length / 2.0;
            diag *= length / 2.0;
            CHECK(quad == doctest::Approx(diag).epsilon(1e-13));
        }
    }
}

TEST_CASE("node symmetry mirrors evaluations") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int k = 0; k <= 3; ++k) {
        NodalBasis basis(k);
        std::vector<double> u(k + 1), rev(k + 1);
        for (int p = 0; p <= k; ++p) u[p] = dist(rng);
        for (int p = 0; p <= k; ++p) rev[p] = u[k - p];
        for (int trial = 0; trial < 20; ++trial) {
            const double xi = dist(rng);
            CHECK(basis.eval(rev, -xi) == doctest::Approx(basis.eval(u, xi)).epsilon(1e-12));
        }
    }
}

TEST_CASE("fit through points") {
    {
        const double xs[2] = {0.0, 1.0}, ys[2] = {1.0, 1.0};
        FittedPoly p({xs, 2}, {ys, 2});
        CHECK(p(0.37) == doctest::Approx(1.0));
    }
    {
        const double xs[2] = {0.0, 1.0}, ys[2] = {0.0, 2.0};
        FittedPoly p({xs, 2}, {ys, 2});
        CHECK(p(0.5) == doctest::Approx(1.0).epsilon(1e-14));
    }
    {
        const double xs[3] = {-1.0, 0.0, 1.0}, ys[3] = {1.0, 0.0, 1.0};
        FittedPoly p({xs, 3}, {ys, 3});
        CHECK(p(0.5) == doctest::Approx(0.25).epsilon(1e-13));
    }
    {
        const double xs[3] = {0.0, 1.0, 1.0}, ys[3] = {0.0, 1.0, 2.0};
        CHECK_THROWS_AS(FittedPoly({xs, 3}, {ys, 3}), InputError);
    }
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int k = 1; k <= 3; ++k) {
        std::vector<double> xs(k + 1), ys(k + 1);
        for (int i = 0; i <= k; ++i) {
            xs[i] = i + 0.1 * dist(rng);
            ys[i] = dist(rng);
        }
        FittedPoly p(xs, ys);
        for (int i = 0; i <= k; ++i) CHECK(p(xs[i]) == doctest::Approx(ys[i]).epsilon(1e-12));
    }
}
