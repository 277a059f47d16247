#include "apcsldg/scenarios.hpp"

#include "apcsldg/errors.hpp"
#include "apcsldg/moments.hpp"

#include <cmath>
#include <numbers>

namespace apcsldg {

namespace {
const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
}

Scenario landau(double alpha, double k_wave) {
    if (std::abs(alpha) >= 1.0) throw InputError("landau: |alpha| >= 1 makes f0 negative");
    Scenario s;
    s.name = "landau";
    s.x_lo = 0.0;
    s.x_hi = 4.0 * std::numbers::pi;
    s.v_lo = -5.0;
    s.v_hi = 5.0;
    s.f0 = [alpha, k_wave](double x, double v) {
        return inv_sqrt_2pi * (1.0 + alpha * std::cos(k_wave * x)) * std::exp(-0.5 * v * v);
    };
    s.default_nx = s.default_nv = 64;
    s.default_degree = 2;
    s.default_cfl = 0.1;
    s.default_T = 0.5;
    s.default_lambda = 1.0;
    return s;
}

Scenario two_stream_1() {
    constexpr double alpha = 0.01;
    constexpr double k_wave = 0.5;
    Scenario s;
    s.name = "two_stream_1";
    s.x_lo = 0.0;
    s.x_hi = 2.0 * std::numbers::pi / k_wave;
    s.v_lo = -10.0;
    s.v_hi = 10.0;
    s.f0 = [](double x, double v) {
        const double mode = (std::cos(2.0 * k_wave * x) + std::cos(3.0 * k_wave * x)) / 1.2 +
                            std::cos(k_wave * x);
        return 2.0 / 7.0 * inv_sqrt_2pi * (1.0 + 5.0 * v * v) * (1.0 + alpha * mode) *
               std::exp(-0.5 * v * v);
    };
    s.default_nx = s.default_nv = 256;
    s.default_degree = 2;
    s.default_cfl = 1.0;
    s.default_T = 80.0;
    s.default_lambda = 1.0;
    return s;
}

Scenario two_stream_2() {
    constexpr double u = 0.99;
    constexpr double vth = 0.3;
    constexpr double k_wave = 2.0 / 13.0;
    Scenario s;
    s.name = "two_stream_2";
    s.x_lo = 0.0;
    s.x_hi = 2.0 * std::numbers::pi / k_wave; // 13 pi
    s.v_lo = -5.0;
    s.v_hi = 5.0;
    s.f0 = [](double x, double v) {
        const double norm = 1.0 / (2.0 * vth) * inv_sqrt_2pi;
        const double beams = std::exp(-0.5 * (v - u) * (v - u) / (vth * vth)) +
                             std::exp(-0.5 * (v + u) * (v + u) / (vth * vth));
        return norm * (1.0 + 0.05 * std::cos(k_wave * x)) * beams;
    };
    s.default_nx = 128;
    s.default_nv = 256;
    s.default_degree = 2;
    s.default_cfl = 3.0;
    s.default_T = 40.0;
    s.default_lambda = 1.0;
    s.default_scheme = Scheme::ap_csldg_2;
    return s;
}

Scenario near_equilibrium(double alpha) {
    Scenario s;
    s.name = "near_equilibrium";
    s.x_lo = 0.0;
    s.x_hi = 4.0 * std::numbers::pi;
    s.v_lo = -12.0;
    s.v_hi = 12.0;
    s.f0 = [alpha](double x, double v) {
        return inv_sqrt_2pi * (1.0 + alpha * std::cos(0.5 * x)) * std::exp(-0.5 * v * v);
    };
    s.default_nx = s.default_nv = 128;
    s.default_degree = 1;
    s.default_cfl = 1.0;
    s.default_T = 80.0;
    s.default_lambda = 0.0;
    // the quasi-neutral consistency analysis pairs rho* with S^n
    s.default_moments_source = MomentsSource::pre_advection;
    return s;
}

Scenario bump_on_tail(double lambda) {
    constexpr double k_wave = 0.3;
    const double alpha = 0.04 * (0.01 + 0.99 * lambda);
    // bulk and bump weights; the second weight is read as n_b
    constexpr double u = 4.5;
    constexpr double rt = 0.25;
    const double n_p = 9.0 / 10.0 * inv_sqrt_2pi;
    const double n_b = 2.0 / 10.0 * inv_sqrt_2pi;

    Scenario s;
    s.name = "bump_on_tail";
    s.x_lo = 0.0;
    s.x_hi = 2.0 * std::numbers::pi / k_wave;
    if (lambda > 1e-3) {
        s.v_lo = -6.0;
        s.v_hi = 9.0;
    } else {
        s.v_lo = -12.0;
        s.v_hi = 12.0;
    }
    s.f0 = [alpha, n_p, n_b](double x, double v) {
        const double fp =
            n_p * std::exp(-0.5 * v * v) + n_b * std::exp(-0.5 * (v - u) * (v - u) / rt);
        return fp * (1.0 + alpha * std::cos(k_wave * x));
    };
    s.default_nx = s.default_nv = 256;
    s.default_degree = 2;
    s.default_cfl = 0.9;
    s.default_T = 20.0;
    s.default_lambda = lambda;
    return s;
}

WellPreparedReport validate_well_prepared(const PhaseField& f, const NodalBasis& basis,
                                          SpectralWorkspace& workspace, double lambda,
                                          double tol) {
    WellPreparedReport rep;
    const MomentSet m = compute_moments(f, basis);
    const double dx = f.grid_x().width();
    const int n = workspace.size();

    if (lambda <= 0.0) {
        double rho_dev = 0.0;
        for (double r : m.rho) rho_dev += (r - 1.0) * (r - 1.0);
        rep.rho_residual = std::sqrt(rho_dev * dx);
        std::vector<double> dj = workspace.derivative(m.current);
        double dj2 = 0.0;
        for (double d : dj) dj2 += d * d;
        rep.current_residual = std::sqrt(dj2 * dx);
        rep.pass = rep.rho_residual <= tol && rep.current_residual <= tol;
        return rep;
    }

    // lambda^2 phi_xx = rho - 1 with the solved initial potential
    PotentialField pot = workspace.solve_poisson(m.rho, lambda);
    std::vector<double> lap = workspace.derivative(workspace.derivative(pot.phi));
    double mean = 0.0;
    for (double r : m.rho) mean += r - 1.0;
    mean /= n;
    double res1 = 0.0;
    for (int j = 0; j < n; ++j) {
        const double d = lambda * lambda * lap[j] - (m.rho[j] - 1.0 - mean);
        res1 += d * d;
    }
    rep.poisson_residual = std::sqrt(res1 * dx);

    // time-differentiated Poisson with continuity: lambda^2 (dphi/dt)_xx = -dJ/dx
    std::vector<double> dj = workspace.derivative(m.current);
    std::vector<double> neg_dj_rho(n);
    for (int j = 0; j < n; ++j) neg_dj_rho[j] = 1.0 - dj[j];
    PotentialField dpot = workspace.solve_poisson(neg_dj_rho, lambda); // lambda^2 psi_xx = -dJ/dx
    std::vector<double> lap_dt = workspace.derivative(workspace.derivative(dpot.phi));
    double dj_mean = 0.0;
    for (double d : dj) dj_mean += d;
    dj_mean /= n;
    double res2 = 0.0;
    for (int j = 0; j < n; ++j) {
        const double d = lambda * lambda * lap_dt[j] + (dj[j] - dj_mean);
        res2 += d * d;
    }
    rep.dt_poisson_residual = std::sqrt(res2 * dx);

    rep.pass = rep.poisson_residual <= tol && rep.dt_poisson_residual <= tol;
    return rep;
}

} // namespace apcsldg
