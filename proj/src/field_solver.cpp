#include "apcsldg/field_solver.hpp"

#include "apcsldg/errors.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace apcsldg {

SpectralWorkspace::SpectralWorkspace(int n, double length)
    : n_(n), length_(length), cutoff_mode_(2 * (n / 2) / 3) {
    if (n < 2 || length <= 0.0) throw ConfigError("SpectralWorkspace: need n >= 2 and length > 0");
    const int nc = n / 2 + 1;
    kappa_.resize(nc);
    for (int m = 0; m < nc; ++m) kappa_[m] = 2.0 * std::numbers::pi * m / length;

    real_buf_ = fftw_alloc_real(n);
    cplx_buf_ = fftw_alloc_complex(nc);
    plan_fwd_ = fftw_plan_dft_r2c_1d(n, real_buf_, static_cast<fftw_complex*>(cplx_buf_),
                                     FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_c2r_1d(n, static_cast<fftw_complex*>(cplx_buf_), real_buf_,
                                     FFTW_ESTIMATE);

    // dense derivative operator, one FFT pass per unit vector
    d_.resize(n, n);
    std::vector<double> e(n, 0.0), col(n);
    for (int j = 0; j < n; ++j) {
        e[j] = 1.0;
        derivative(e, col);
        for (int r = 0; r < n; ++r) d_(r, j) = col[r];
        e[j] = 0.0;
    }
}

SpectralWorkspace::~SpectralWorkspace() {
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
    fftw_free(real_buf_);
    fftw_free(cplx_buf_);
}

void SpectralWorkspace::derivative(std::span<const double> in, std::span<double> out) {
    const int nc = n_ / 2 + 1;
    std::copy(in.begin(), in.end(), real_buf_);
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    auto* c = static_cast<fftw_complex*>(cplx_buf_);
    for (int m = 0; m < nc; ++m) {
        const double re = c[m][0], im = c[m][1];
        c[m][0] = -kappa_[m] * im;
        c[m][1] = kappa_[m] * re;
    }
    if (n_ % 2 == 0) c[n_ / 2][0] = c[n_ / 2][1] = 0.0; // Nyquist
    fftw_execute(static_cast<fftw_plan>(plan_bwd_));
    const double scale = 1.0 / n_;
    for (int j = 0; j < n_; ++j) out[j] = real_buf_[j] * scale;
}

std::vector<double> SpectralWorkspace::derivative(std::span<const double> in) {
    std::vector<double> out(n_);
    derivative(in, out);
    return out;
}

void SpectralWorkspace::dealias(std::span<double> x) {
    const int nc = n_ / 2 + 1;
    std::copy(x.begin(), x.end(), real_buf_);
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    auto* c = static_cast<fftw_complex*>(cplx_buf_);
    for (int m = cutoff_mode_ + 1; m < nc; ++m) c[m][0] = c[m][1] = 0.0;
    fftw_execute(static_cast<fftw_plan>(plan_bwd_));
    const double scale = 1.0 / n_;
    for (int j = 0; j < n_; ++j) x[j] = real_buf_[j] * scale;
}

PotentialField SpectralWorkspace::solve_poisson(std::span<const double> rho, double lambda) {
    if (lambda <= 0.0)
        throw SolverError("solve_poisson: lambda <= 0, use solve_quasineutral or solve_rpe1");
    const int nc = n_ / 2 + 1;
    double mean = 0.0;
    for (int j = 0; j < n_; ++j) mean += rho[j] - 1.0;
    mean /= n_;
    for (int j = 0; j < n_; ++j) real_buf_[j] = rho[j] - 1.0 - mean;
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    auto* c = static_cast<fftw_complex*>(cplx_buf_);

    PotentialField pot;
    pot.phi.resize(n_);
    pot.e_mid.resize(n_);

    // phi_hat = -(rho-1)_hat / (lambda^2 kappa^2), E_hat = i kappa phi_hat
    std::vector<double> phat_re(nc), phat_im(nc);
    c[0][0] = c[0][1] = 0.0;
    for (int m = 1; m < nc; ++m) {
        const double denom = -lambda * lambda * kappa_[m] * kappa_[m];
        c[m][0] /= denom;
        c[m][1] /= denom;
        if (m > cutoff_mode_) c[m][0] = c[m][1] = 0.0;
        phat_re[m] = c[m][0];
        phat_im[m] = c[m][1];
    }
    if (n_ % 2 == 0) c[n_ / 2][0] = c[n_ / 2][1] = phat_re[n_ / 2] = phat_im[n_ / 2] = 0.0;
    fftw_execute(static_cast<fftw_plan>(plan_bwd_));
    const double scale = 1.0 / n_;
    for (int j = 0; j < n_; ++j) pot.phi[j] = real_buf_[j] * scale;

    c[0][0] = c[0][1] = 0.0;
    for (int m = 1; m < nc; ++m) {
        c[m][0] = -kappa_[m] * phat_im[m];
        c[m][1] = kappa_[m] * phat_re[m];
    }
    fftw_execute(static_cast<fftw_plan>(plan_bwd_));
    for (int j = 0; j < n_; ++j) pot.e_mid[j] = real_buf_[j] * scale;
    return pot;
}

PotentialField SpectralWorkspace::elliptic_solve(const std::vector<double>& coeff,
                                                 std::vector<double> rhs, double sign) {
    dealias(rhs);
    double mean = 0.0;
    for (double r : rhs) mean += r;
    mean /= n_;
    for (double& r : rhs) r -= mean;

    // sign * D diag(c) D, bordered with constraint rows that pin the
    // nullspace of D: the mean always, and for even n also the Nyquist
    // sawtooth (D has it zeroed). The multipliers absorb whatever part of
    // the rhs falls outside the operator range.
    Eigen::MatrixXd op = d_;
    for (int j = 0; j < n_; ++j) op.row(j) *= coeff[j];
    op = sign * d_ * op;

    const int nc = (n_ % 2 == 0) ? 2 : 1;
    Eigen::MatrixXd sys(n_ + nc, n_ + nc);
    sys.setZero();
    sys.topLeftCorner(n_, n_) = op;
    for (int j = 0; j < n_; ++j) {
        sys(j, n_) = 1.0;
        sys(n_, j) = 1.0;
        if (nc == 2) {
            const double saw = (j % 2 == 0) ? 1.0 : -1.0;
            sys(j, n_ + 1) = saw;
            sys(n_ + 1, j) = saw;
        }
    }
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n_ + nc);
    for (int j = 0; j < n_; ++j) b(j) = rhs[j];

    Eigen::VectorXd sol = sys.partialPivLu().solve(b);

    double rhs_scale = 0.0;
    for (int j = 0; j < n_; ++j) rhs_scale = std::max(rhs_scale, std::abs(rhs[j]));
    Eigen::VectorXd phi = sol.head(n_);
    Eigen::VectorXd reconstructed = op * phi + Eigen::VectorXd::Constant(n_, sol(n_));
    if (nc == 2)
        for (int j = 0; j < n_; ++j) reconstructed(j) += ((j % 2 == 0) ? 1.0 : -1.0) * sol(n_ + 1);
    const double residual =
        (reconstructed - Eigen::Map<Eigen::VectorXd>(rhs.data(), n_)).cwiseAbs().maxCoeff();
    if (rhs_scale > 0.0 && residual > 1e-8 * std::max(rhs_scale, 1.0))
        throw SolverError("elliptic_solve: ill-conditioned system, residual " +
                          std::to_string(residual));

    PotentialField pot;
    pot.phi.assign(phi.data(), phi.data() + n_);
    dealias(pot.phi);
    pot.e_mid.resize(n_);
    derivative(pot.phi, pot.e_mid);
    return pot;
}

PotentialField SpectralWorkspace::solve_rpe1(std::span<const double> rho,
                                             std::span<const double> current,
                                             std::span<const double> stress, double lambda,
                                             double dt) {
    std::vector<double> coeff(n_);
    double cmin = std::numeric_limits<double>::max();
    for (int j = 0; j < n_; ++j) {
        coeff[j] = lambda * lambda + rho[j] * dt * dt;
        cmin = std::min(cmin, coeff[j]);
    }
    if (cmin <= 0.0) throw SolverError("solve_rpe1: coefficient lambda^2 + rho dt^2 not positive");

    std::vector<double> ds = derivative(stress);
    std::vector<double> dds = derivative(ds);
    std::vector<double> dj = derivative(current);
    std::vector<double> rhs(n_);
    for (int j = 0; j < n_; ++j) rhs[j] = -dt * dt * dds[j] + dt * dj[j] - rho[j] + 1.0;
    return elliptic_solve(coeff, std::move(rhs), -1.0);
}

PotentialField SpectralWorkspace::solve_rpe2(std::span<const double> rho_half,
                                             std::span<const double> current_half,
                                             std::span<const double> stress_half,
                                             std::span<const double> rho_n,
                                             std::span<const double> current_n, double lambda,
                                             double dt) {
    std::vector<double> coeff(n_);
    double cmin = std::numeric_limits<double>::max(), cmax = std::numeric_limits<double>::lowest();
    for (int j = 0; j < n_; ++j) {
        coeff[j] = lambda * lambda - dt * dt / 24.0 * rho_half[j];
        cmin = std::min(cmin, coeff[j]);
        cmax = std::max(cmax, coeff[j]);
    }
    if (cmin < 0.0 && cmax > 0.0)
        throw SolverError("solve_rpe2: coefficient changes sign, lambda/dt outside validity");
    if (cmin == 0.0 && cmax == 0.0) throw SolverError("solve_rpe2: singular coefficient");

    std::vector<double> ds = derivative(stress_half);
    std::vector<double> dds = derivative(ds);
    std::vector<double> dj_half = derivative(current_half);
    std::vector<double> dj_n = derivative(current_n);
    std::vector<double> rhs(n_);
    for (int j = 0; j < n_; ++j)
        rhs[j] = dt * dt / 24.0 * dds[j] + dt / 3.0 * dj_half[j] + dt / 6.0 * dj_n[j] - rho_n[j] +
                 1.0;
    return elliptic_solve(coeff, std::move(rhs), -1.0);
}

PotentialField SpectralWorkspace::solve_quasineutral(std::span<const double> rho,
                                                     std::span<const double> stress) {
    std::vector<double> coeff(rho.begin(), rho.end());
    for (double r : coeff)
        if (r <= 0.0) throw SolverError("solve_quasineutral: non-positive density");
    std::vector<double> ds = derivative(stress);
    std::vector<double> rhs = derivative(ds);
    return elliptic_solve(coeff, std::move(rhs), 1.0);
}

void reconstruct_e_at_gauss(const NodalBasis& basis, const Grid1D& grid_x, PotentialField& pot) {
    const int k = basis.degree();
    const int kp1 = k + 1;
    const int n = grid_x.n;
    const int start = -(k + 1) / 2; // centered for even k, one cell left for odd k

    // fixed map from the k+1 stencil midpoints to the cell's Gauss points;
    // geometry is uniform so it is computed once in units of dx
    std::vector<double> map(kp1 * kp1);
    {
        std::vector<double> xs(kp1), ys(kp1, 0.0);
        for (int o = 0; o < kp1; ++o) xs[o] = start + o;
        for (int o = 0; o < kp1; ++o) {
            ys[o] = 1.0;
            FittedPoly poly(xs, ys);
            for (int q = 0; q < kp1; ++q)
                map[q * kp1 + o] = poly(0.5 * basis.rule().nodes[q]);
            ys[o] = 0.0;
        }
    }

    pot.e_gauss.assign(static_cast<std::size_t>(n) * kp1, 0.0);
    for (int j = 0; j < n; ++j) {
        for (int q = 0; q < kp1; ++q) {
            double acc = 0.0;
            for (int o = 0; o < kp1; ++o) {
                const int src = ((j + start + o) % n + n) % n;
                acc += map[q * kp1 + o] * pot.e_mid[src];
            }
            pot.e_gauss[static_cast<std::size_t>(j) * kp1 + q] = acc;
        }
    }
}

double rpe2_time_stencil(double rho_half, double rho_n, double drho_half, double drho_n,
                         double dt) {
    return (-24.0 * rho_half + 24.0 * rho_n + 8.0 * dt * drho_half + 4.0 * dt * drho_n) /
           (dt * dt);
}

} // namespace apcsldg
