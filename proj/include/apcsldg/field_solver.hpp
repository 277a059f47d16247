#pragma once

#include "apcsldg/phase_space.hpp"
#include "apcsldg/quad_basis.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <span>
#include <vector>

namespace apcsldg {

// Electrostatic potential and field on the x-mesh, zero-mean gauge on phi.
// e_gauss holds the reconstruction of E = dphi/dx at the (k+1) Gauss
// abscissae of every cell, [j*(k+1)+q].
struct PotentialField {
    std::vector<double> phi;
    std::vector<double> e_mid;
    std::vector<double> e_gauss;

    double max_abs_e() const {
        double m = 0.0;
        for (double e : e_mid)
            if (std::abs(e) > m) m = std::abs(e);
        return m;
    }
};

// Fourier-collocation machinery on the Nx cell midpoints of a periodic
// domain, plus the dense spectral derivative operator used to assemble
// variable-coefficient elliptic systems. For even Nx the Nyquist mode of
// the derivative is zeroed, keeping D skew-symmetric.
class SpectralWorkspace {
  public:
    SpectralWorkspace(int n, double length);
    ~SpectralWorkspace();
    SpectralWorkspace(const SpectralWorkspace&) = delete;
    SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;

    int size() const { return n_; }
    double length() const { return length_; }

    void derivative(std::span<const double> in, std::span<double> out);
    std::vector<double> derivative(std::span<const double> in);
    const Eigen::MatrixXd& derivative_matrix() const { return d_; }

    // lambda^2 phi_xx = rho - 1, classical Poisson solve. Requires lambda > 0.
    PotentialField solve_poisson(std::span<const double> rho, double lambda);

    // -d/dx[(lambda^2 + rho*dt^2) dphi/dx] = -dt^2 S_xx + dt J_x - rho + 1
    PotentialField solve_rpe1(std::span<const double> rho, std::span<const double> current,
                              std::span<const double> stress, double lambda, double dt);

    // -d/dx[(lambda^2 - dt^2/24 rho_h) dphi/dx]
    //     = dt^2/24 S_h_xx + dt/3 J_h_x + dt/6 J_n_x - rho_n + 1
    PotentialField solve_rpe2(std::span<const double> rho_half, std::span<const double> current_half,
                              std::span<const double> stress_half, std::span<const double> rho_n,
                              std::span<const double> current_n, double lambda, double dt);

    // d/dx(rho dphi/dx) = S_xx, the quasi-neutral potential equation.
    PotentialField solve_quasineutral(std::span<const double> rho, std::span<const double> stress);

  private:
    // solves sign * D diag(c) D phi = rhs (mean removed) with zero-mean gauge
    PotentialField elliptic_solve(const std::vector<double>& coeff, std::vector<double> rhs,
                                  double sign);
    // 2/3-rule low-pass: grid-scale content in the field solves feeds an
    // unphysical self-excitation loop through the frozen-field v-kicks
    void dealias(std::span<double> x);

    int n_;
    int cutoff_mode_;
    double length_;
    std::vector<double> kappa_; // 2 pi m / L for the half spectrum
    Eigen::MatrixXd d_;
    void* plan_fwd_;
    void* plan_bwd_;
    double* real_buf_;
    void* cplx_buf_;
};

// Per-cell degree-k interpolation of midpoint E values onto the Gauss
// abscissae; the stencil is centered for even k and one cell left-biased
// for odd k, with periodic wrap.
void reconstruct_e_at_gauss(const NodalBasis& basis, const Grid1D& grid_x, PotentialField& pot);

// Second-order reconstruction of rho_tt at the half step from values and
// time derivatives of rho at t^n and t^{n+1/2}.
double rpe2_time_stencil(double rho_half, double rho_n, double drho_half, double drho_n, double dt);

} // namespace apcsldg
