#pragma once

#include "apcsldg/phase_space.hpp"
#include "apcsldg/quad_basis.hpp"

#include <cstdint>
#include <span>

namespace apcsldg {

struct LimiterParams {
    double floor = 1e-15;
};

struct LimiterStats {
    std::int64_t scaled_cells = 0;       // theta < 1 applied
    std::int64_t mean_clamped_cells = 0; // cell mean below the floor, flattened
};

// Scaling limiter toward the cell mean: f~ = theta (f - fbar) + fbar with
// theta = min(|(m0 - fbar)/(mmin - fbar)|, 1). Keeps the weighted mean and
// lifts the minimum nodal value to the floor m0. A cell whose mean is
// already below m0 breaks the scheme's inductive positivity assumption;
// recovery is to flatten it to its mean.
double pp_limit_cell(std::span<double> values, std::span<const double> weights, double floor_m0,
                     LimiterStats* stats);

// Cell-wise application over all (k+1)^2 tensor nodes with tensor weights.
void pp_limit_field(PhaseField& f, const NodalBasis& basis, double floor_m0, LimiterStats& stats);

} // namespace apcsldg
