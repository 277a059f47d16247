#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace apcsldg {

// Linearized von Neumann amplification system of the frozen-field
// v-advection stage about the steady state rho = 1, J = 0, dphi/dx = 0,
// over the Fourier state (rho, J, phi, psi) with psi the backward
// difference quotient of phi.
struct AmplificationSystem {
    double lambda = 1.0;
    double dt = 1.0;
    double kappa = 1.0;

    Eigen::Matrix4cd b_matrix() const;
    Eigen::Matrix4cd a_matrix() const;
};

// Spectrum of B^{-1}A sorted by modulus, largest first. The matrix is
// balanced before the QR iteration and eigenvalue clusters (exact multiple
// roots split by rounding) are replaced by their cluster mean, which is
// accurate to O(eps) where the raw values are only O(sqrt(eps)).
std::array<std::complex<double>, 4> amplification_eigenvalues(double lambda, double dt,
                                                              double kappa);

// (lambda^2 + i lambda dt, lambda^2 - i lambda dt) / (lambda^2 + dt^2)
std::pair<std::complex<double>, std::complex<double>> closed_form_mu34(double lambda, double dt);

} // namespace apcsldg
