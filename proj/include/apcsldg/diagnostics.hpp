#pragma once

#include "apcsldg/field_solver.hpp"
#include "apcsldg/phase_space.hpp"
#include "apcsldg/quad_basis.hpp"

#include <vector>

namespace apcsldg {

// Conserved quantities and asymptotic-deviation measures at one output time.
struct DiagRecord {
    double t = 0.0;
    double mass = 0.0;
    double l1 = 0.0;
    double l2 = 0.0;
    double entropy = 0.0;
    double energy = 0.0; // kinetic + (lambda^2/2) int E^2
    double eps_p = 0.0;  // (lambda^2/2) int E^2
    double log10_eps_p = 0.0;
    double rho_dev_l2 = 0.0; // ||rho - 1||_2 at midpoints
    double div_j_l2 = 0.0;   // ||d(rho u)/dx||_2 at midpoints
    // deviation from the t = 0 value: relative when the initial value is
    // nonzero, absolute otherwise
    double mass_dev = 0.0;
    double l1_dev = 0.0;
    double l2_dev = 0.0;
    double entropy_dev = 0.0;
    double energy_dev = 0.0;
};

// Phase-space integrals via tensor Gauss quadrature, int E^2 via the
// midpoint sum. The entropy integrand floors f at entropy_floor before the
// logarithm.
DiagRecord record(const PhaseField& f, const PotentialField& pot, SpectralWorkspace& workspace,
                  const NodalBasis& basis, double lambda, double t,
                  double entropy_floor = 1e-15);

void fill_deviations(DiagRecord& rec, const DiagRecord& initial);

// (||rho - 1||_2, ||dJ/dx||_2) in midpoint collocation norms.
std::pair<double, double> quasineutral_deviation(const PhaseField& f, const NodalBasis& basis,
                                                 SpectralWorkspace& workspace);

} // namespace apcsldg
