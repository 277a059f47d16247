#pragma once

#include "apcsldg/phase_space.hpp"
#include "apcsldg/quad_basis.hpp"

#include <vector>

namespace apcsldg {

// Velocity moments of the DG distribution evaluated at the x-cell
// midpoints: density rho, current J = rho*u, momentum tensor S = int v^2 f,
// kinetic energy density W = S/2.
struct MomentSet {
    std::vector<double> rho;
    std::vector<double> current;
    std::vector<double> stress;
    std::vector<double> kinetic;
};

// The v-integration uses the DG space's own Gauss rule (exact for the
// stored polynomial); the in-cell x-polynomial of each moment is then
// evaluated at the midpoint xi = 0.
MomentSet compute_moments(const PhaseField& f, const NodalBasis& basis);

} // namespace apcsldg
