#include "apcsldg/vn_stability.hpp"

#include "apcsldg/errors.hpp"

#include <algorithm>
#include <cmath>

namespace apcsldg {

Eigen::Matrix4cd AmplificationSystem::b_matrix() const {
    using namespace std::complex_literals;
    Eigen::Matrix4cd b = Eigen::Matrix4cd::Zero();
    b(0, 0) = 1.0;
    b(1, 1) = 1.0;
    b(1, 2) = -1i * kappa * dt;
    b(2, 2) = 1.0;
    b(2, 3) = -dt;
    b(3, 2) = dt;
    b(3, 3) = lambda * lambda;
    return b;
}

Eigen::Matrix4cd AmplificationSystem::a_matrix() const {
    Eigen::Matrix4cd a = Eigen::Matrix4cd::Zero();
    a(0, 0) = 1.0;
    a(1, 1) = 1.0;
    a(2, 2) = 1.0;
    a(3, 0) = dt;
    a(3, 3) = lambda * lambda;
    return a;
}

namespace {

// Osborne-style diagonal balancing with powers of two.
void balance(Eigen::Matrix4cd& m) {
    for (int pass = 0; pass < 20; ++pass) {
        bool converged = true;
        for (int i = 0; i < 4; ++i) {
            double row = 0.0, col = 0.0;
            for (int j = 0; j < 4; ++j) {
                if (j == i) continue;
                row += std::abs(m(i, j));
                col += std::abs(m(j, i));
            }
            if (row == 0.0 || col == 0.0) continue;
            double scale = 1.0;
            while (col < row / 2.0) {
                col *= 2.0;
                row /= 2.0;
                scale *= 2.0;
            }
            while (col > row * 2.0) {
                col /= 2.0;
                row *= 2.0;
                scale /= 2.0;
            }
            if (scale != 1.0) {
                converged = false;
                m.col(i) *= scale;
                m.row(i) /= scale;
            }
        }
        if (converged) break;
    }
}

} // namespace

std::array<std::complex<double>, 4> amplification_eigenvalues(double lambda, double dt,
                                                              double kappa) {
    if (lambda < 0.0 || dt <= 0.0) throw ConfigError("amplification_eigenvalues: need lambda >= 0, dt > 0");
    const AmplificationSystem sys{lambda, dt, kappa};
    const Eigen::Matrix4cd b = sys.b_matrix();
    if (std::abs(b.determinant()) == 0.0)
        throw SolverError("amplification_eigenvalues: singular B");
    Eigen::Matrix4cd m = b.partialPivLu().solve(sys.a_matrix());
    balance(m);

    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(m, false);
    std::array<std::complex<double>, 4> mu;
    for (int i = 0; i < 4; ++i) mu[i] = solver.eigenvalues()(i);

    // exact double roots split by ~sqrt(eps) under QR; their mean is good
    // to eps, so average clusters
    constexpr double cluster_tol = 3e-5;
    std::sort(mu.begin(), mu.end(), [](auto a, auto b2) {
        if (a.real() != b2.real()) return a.real() < b2.real();
        return a.imag() < b2.imag();
    });
    for (int i = 0; i < 4;) {
        int j = i + 1;
        while (j < 4 && std::abs(mu[j] - mu[i]) < cluster_tol) ++j;
        if (j - i > 1) {
            std::complex<double> mean = 0.0;
            for (int l = i; l < j; ++l) mean += mu[l];
            mean /= static_cast<double>(j - i);
            for (int l = i; l < j; ++l) mu[l] = mean;
        }
        i = j;
    }

    std::sort(mu.begin(), mu.end(),
              [](auto a, auto b2) { return std::abs(a) > std::abs(b2); });
    return mu;
}

std::pair<std::complex<double>, std::complex<double>> closed_form_mu34(double lambda, double dt) {
    if (lambda * lambda + dt * dt <= 0.0) throw ConfigError("closed_form_mu34: lambda^2 + dt^2 = 0");
    const double denom = lambda * lambda + dt * dt;
    const std::complex<double> mu3(lambda * lambda / denom, lambda * dt / denom);
    return {mu3, std::conj(mu3)};
}

} // namespace apcsldg
