#pragma once

#include "apcsldg/field_solver.hpp"
#include "apcsldg/phase_space.hpp"
#include "apcsldg/splitting.hpp"

#include <functional>
#include <string>

namespace apcsldg {

// One of the benchmark initial-value problems: pointwise f0, phase-space
// domain, and the default discretization used in the experiments.
struct Scenario {
    std::string name;
    double x_lo = 0.0, x_hi = 1.0;
    double v_lo = -1.0, v_hi = 1.0;
    std::function<double(double, double)> f0;

    int default_nx = 128, default_nv = 128;
    int default_degree = 2;
    double default_cfl = 1.0;
    double default_T = 10.0;
    double default_lambda = 1.0;
    Scheme default_scheme = Scheme::ap_csldg_1;
    MomentsSource default_moments_source = MomentsSource::pre_advection;
};

// f0 = (1+alpha cos(k x)) exp(-v^2/2)/sqrt(2 pi) on [0,4pi]x[-5,5]
Scenario landau(double alpha, double k_wave);

// warm symmetric two-stream, (1+5v^2) Maxwellian times a three-mode
// perturbation, [0,4pi]x[-10,10]
Scenario two_stream_1();

// counter-streaming Maxwellians at u = +-0.99, vth = 0.3, [0,13pi]x[-5,5]
Scenario two_stream_2();

// uniform Maxwellian with an alpha cos(x/2) ripple on [0,4pi]x[-12,12];
// alpha ~ 1e-16 satisfies the quasi-neutral constraints to rounding
Scenario near_equilibrium(double alpha);

// Maxwellian plus a drifting tail bump; the perturbation amplitude and the
// v-domain depend on the Debye length
Scenario bump_on_tail(double lambda);

struct WellPreparedReport {
    bool pass = false;
    double rho_residual = 0.0;      // ||rho - 1|| (lambda = 0)
    double current_residual = 0.0;  // ||dJ/dx||   (lambda = 0)
    double poisson_residual = 0.0;  // ||lambda^2 phi_xx - (rho-1)|| (lambda > 0)
    double dt_poisson_residual = 0.0; // ||lambda^2 (dphi/dt)_xx + dJ/dx||
};

// Lambda = 0: checks the quasi-neutral constraints on the sampled data.
// Lambda > 0: checks the two initial Poisson compatibility conditions,
// with dphi/dt obtained from the time-differentiated Poisson solve.
WellPreparedReport validate_well_prepared(const PhaseField& f, const NodalBasis& basis,
                                          SpectralWorkspace& workspace, double lambda, double tol);

} // namespace apcsldg
