#include "apcsldg/limiter.hpp"
#include "apcsldg/phase_space.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace apcsldg;

TEST_CASE("worked two-node example") {
    double vals[2] = {-0.5, 2.5};
    const double w[2] = {1.0, 1.0};
    LimiterStats stats;
    const double theta = pp_limit_cell({vals, 2}, {w, 2}, 1e-15, &stats);
    CHECK(theta == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(vals[0] >= 1e-15 - 1e-16);
    CHECK(vals[0] == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(vals[1] == doctest::Approx(2.0).epsilon(1e-12));
    // mean preserved
    CHECK(0.5 * (vals[0] + vals[1]) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(stats.scaled_cells == 1);
}

TEST_CASE("cells already above the floor are untouched bit-for-bit") {
    double vals[3] = {0.3, 1.7, 0.9};
    const double orig[3] = {0.3, 1.7, 0.9};
    const double w[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
    LimiterStats stats;
    const double theta = pp_limit_cell({vals, 3}, {w, 3}, 1e-15, &stats);
    CHECK(theta == 1.0);
    for (int i = 0; i < 3; ++i) CHECK(vals[i] == orig[i]);
    CHECK(stats.scaled_cells == 0);

    double c[2] = {0.4, 0.4};
    const double w2[2] = {1.0, 1.0};
    pp_limit_cell({c, 2}, {w2, 2}, 1e-15, nullptr);
    CHECK(c[0] == 0.4);
    CHECK(c[1] == 0.4);
}

TEST_CASE("cell mean below the floor flattens to the mean") {
    double vals[2] = {-1e-18, 3e-18};
    const double w[2] = {1.0, 1.0};
    LimiterStats stats;
    const double theta = pp_limit_cell({vals, 2}, {w, 2}, 1e-15, &stats);
    CHECK(theta == 0.0);
    CHECK(vals[0] == doctest::Approx(1e-18).epsilon(1e-12));
    CHECK(vals[1] == vals[0]);
    CHECK(stats.mean_clamped_cells == 1);
}

TEST_CASE("conservation and positivity on random cells") {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> vdist(-0.5, 2.0);
    NodalBasis basis(2);
    const auto& w1 = basis.rule().weights;
    std::vector<double> w(9);
    for (int q = 0; q < 3; ++q)
        for (int p = 0; p < 3; ++p) w[q * 3 + p] = w1[q] * w1[p];

    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> vals(9);
        double mean_before = 0.0, wsum = 0.0;
        for (int i = 0; i < 9; ++i) {
            vals[i] = vdist(rng);
            mean_before += w[i] * vals[i];
            wsum += w[i];
        }
        mean_before /= wsum;
        if (mean_before < 1e-15) continue;
        pp_limit_cell(vals, w, 1e-15, nullptr);
        double mean_after = 0.0, vmin = vals[0];
        for (int i = 0; i < 9; ++i) {
            mean_after += w[i] * vals[i];
            vmin = std::min(vmin, vals[i]);
        }
        mean_after /= wsum;
        CHECK(mean_after == doctest::Approx(mean_before).epsilon(1e-14));
        CHECK(vmin >= 1e-15 - 1e-16);
    }
}

TEST_CASE("identity on smooth strictly positive fields at moderate resolution") {
    constexpr double pi = std::numbers::pi;
    for (int n : {32, 64}) {
        NodalBasis basis(2);
        auto f = sample_ic(
            [](double x, double v) {
                return (1.0 + 0.5 * std::cos(0.5 * x)) * std::exp(-0.5 * v * v) /
                       std::sqrt(2.0 * pi);
            },
            {0.0, 4.0 * pi, n}, {-5.0, 5.0, n}, 2);
        LimiterStats stats;
        pp_limit_field(f, basis, 1e-15, stats);
        CHECK(stats.scaled_cells == 0);
        CHECK(stats.mean_clamped_cells == 0);
    }
}
