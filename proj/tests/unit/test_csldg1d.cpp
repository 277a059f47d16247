#include "apcsldg/csldg1d.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace apcsldg;

namespace {

// Independent k=0 oracle: each new cell average is the length-weighted mix
// of the upstream cells covered by [x_{j-1/2}-s, x_{j+1/2}-s], computed by
// direct interval intersection with every background cell image.
std::vector<double> overlap_oracle_k0(const std::vector<double>& avg, double s, double dx) {
    const int n = static_cast<int>(avg.size());
    const double length = n * dx;
    std::vector<double> out(n, 0.0);
    for (int j = 0; j < n; ++j) {
        double lo = j * dx - s;
        double hi = lo + dx;
        // wrap the upstream interval into [0, length)
        lo -= length * std::floor(lo / length);
        hi = lo + dx;
        for (int c = 0; c < n; ++c) { // background cells over two periods
            for (int rep = 0; rep < 2; ++rep) {
                const double clo = c * dx + rep * length;
                const double chi = clo + dx;
                const double olo = std::max(lo, clo);
                const double ohi = std::min(hi, chi);
                if (ohi > olo) out[j] += avg[c] * (ohi - olo) / dx;
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("shift decomposition reconstructs s") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> sdist(-40.0, 40.0);
    const double dx = 0.173;
    for (int trial = 0; trial < 500; ++trial) {
        const double s = sdist(rng);
        auto d = decompose_shift(s, dx);
        CHECK(d.frac >= 0.0);
        CHECK(d.frac < 1.0);
        CHECK((d.cells + d.frac) * dx == doctest::Approx(s).epsilon(1e-15));
    }
    // exactly representable integer multiple
    auto d0 = decompose_shift(3.0 * 0.25, 0.25);
    CHECK(d0.cells == 3);
    CHECK(d0.frac == 0.0);
}

TEST_CASE("zero and integer shifts are exact permutations") {
    NodalBasis basis(2);
    const int n = 7;
    const double dx = 0.31;
    SliceField u(n, 2);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (auto& v : u.u) v = dist(rng);

    auto same = advect_const(basis, u, 0.0, dx);
    for (std::size_t i = 0; i < u.u.size(); ++i) CHECK(same.u[i] == u.u[i]);

    for (int m : {1, 3, -2, 12, -9}) {
        auto shifted = advect_const(basis, u, m * dx, dx);
        for (int j = 0; j < n; ++j)
            for (int q = 0; q < 3; ++q)
                CHECK(shifted.at(j, q) == u.at(((j - m) % n + n) % n, q));
        // forward then back is the identity bit pattern
        auto back = advect_const(basis, shifted, -m * dx, dx);
        for (std::size_t i = 0; i < u.u.size(); ++i) CHECK(back.u[i] == u.u[i]);
    }
}

TEST_CASE("k=0 update matches the overlap-fraction oracle") {
    NodalBasis basis(0);
    SUBCASE("worked example") {
        SliceField u(4, 0);
        u.u = {1.0, 0.0, 0.0, 0.0};
        auto out = advect_const(basis, u, 0.25, 1.0);
        CHECK(out.u[0] == doctest::Approx(0.75).epsilon(1e-14));
        CHECK(out.u[1] == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(out.u[2] == doctest::Approx(0.0));
        CHECK(out.u[3] == doctest::Approx(0.0));
    }
    SUBCASE("randomized against the oracle") {
        std::mt19937 rng(31);
        std::uniform_int_distribution<int> ndist(2, 48);
        std::uniform_real_distribution<double> vdist(-2.0, 2.0), sdist(-12.0, 12.0);
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = ndist(rng);
            const double dx = 0.05 + 0.4 * std::abs(vdist(rng));
            SliceField u(n, 0);
            for (auto& v : u.u) v = vdist(rng);
            const double s = sdist(rng) * dx;
            auto out = advect_const(basis, u, s, dx);
            auto ref = overlap_oracle_k0(u.u, s, dx);
            for (int j = 0; j < n; ++j)
                CHECK(out.u[j] == doctest::Approx(ref[j]).epsilon(1e-13).scale(1.0));
        }
    }
}

TEST_CASE("mass conservation and L2 non-increase for random shifts") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> vdist(-2.0, 2.0), sdist(-8.0, 8.0);
    for (int k = 0; k <= 3; ++k) {
        NodalBasis basis(k);
        const int n = 24;
        const double dx = 0.42;
        for (int trial = 0; trial < 100; ++trial) {
            SliceField u(n, k);
            for (auto& v : u.u) v = vdist(rng);
            const double s = sdist(rng);
            auto out = advect_const(basis, u, s, dx);
            const double m_in = slice_mass(basis, u, dx);
            const double m_out = slice_mass(basis, out, dx);
            CHECK(m_out == doctest::Approx(m_in).epsilon(1e-13).scale(1.0));
            CHECK(slice_l2(basis, out, dx) <= slice_l2(basis, u, dx) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("slice mass examples") {
    for (int k = 0; k <= 3; ++k) {
        NodalBasis basis(k);
        const int n = 10;
        const double dx = 0.7; // L = 7
        SliceField u(n, k);
        for (auto& v : u.u) v = 1.0;
        CHECK(slice_mass(basis, u, dx) == doctest::Approx(7.0).epsilon(1e-14));

        // cardinal spike at one node carries w_q dx/2
        SliceField spike(n, k);
        spike.at(3, k) = 1.0;
        CHECK(slice_mass(basis, spike, dx) ==
              doctest::Approx(basis.rule().weights[k] * dx / 2.0).epsilon(1e-14));
    }
}

TEST_CASE("round trip at fractional shift is exact for constant fields") {
    NodalBasis basis(3);
    SliceField u(9, 3);
    for (auto& v : u.u) v = 2.5;
    auto fwd = advect_const(basis, u, 0.377, 0.31);
    auto back = advect_const(basis, fwd, -0.377, 0.31);
    for (double v : back.u) CHECK(v == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("single fractional shift converges at order k+1") {
    // smooth periodic profile, shift by 0.37 dx, refine the mesh
    auto profile = [](double x) { return std::sin(x) + 0.4 * std::cos(2.0 * x); };
    const double length = 2.0 * std::numbers::pi;
    for (int k = 0; k <= 3; ++k) {
        NodalBasis basis(k);
        std::vector<double> errs;
        for (int n : {16, 32, 64, 128}) {
            const double dx = length / n;
            const double s = 0.37 * dx;
            SliceField u(n, k);
            for (int j = 0; j < n; ++j)
                for (int q = 0; q <= k; ++q)
                    u.at(j, q) = profile((j + 0.5) * dx + 0.5 * dx * basis.rule().nodes[q]);
            auto out = advect_const(basis, u, s, dx);
            double err2 = 0.0;
            for (int j = 0; j < n; ++j)
                for (int q = 0; q <= k; ++q) {
                    const double x = (j + 0.5) * dx + 0.5 * dx * basis.rule().nodes[q];
                    const double d = out.at(j, q) - profile(x - s);
                    err2 += basis.rule().weights[q] * d * d;
                }
            errs.push_back(std::sqrt(err2 * dx / 2.0));
        }
        for (std::size_t i = 1; i < errs.size(); ++i) {
            if (errs[i] < 1e-13) continue; // rounding floor
            const double order = std::log2(errs[i - 1] / errs[i]);
            CHECK(order >= k + 0.8);
        }
    }
}
