#pragma once

#include "apcsldg/phase_space.hpp"
#include "apcsldg/quad_basis.hpp"

#include <array>
#include <cstdint>

namespace apcsldg {

// Displacement s split into whole cells plus a fractional offset,
// s = (cells + frac) * dx with frac in [0,1).
struct ShiftDecomposition {
    double s = 0.0;
    std::int64_t cells = 0;
    double frac = 0.0;
};

ShiftDecomposition decompose_shift(double s, double dx);

// Precomputed update for one constant-speed CSLDG step on a uniform
// periodic mesh. The upstream interval I_j - s overlaps exactly two
// background cells once the whole-cell offset is removed; the update is
//   u_new[j] = wa * u[j - cells - 1] + wb * u[j - cells]
// with (k+1)x(k+1) blocks wa, wb that depend only on frac. Sub-interval
// integrals use a (k+1)-point Gauss rule, exact for the degree <= 2k
// integrand, so mass conservation holds to rounding.
struct ShiftPlan {
    std::int64_t cells = 0;
    double frac = 0.0;
    int kp1 = 1;
    std::array<double, 16> wa{}; // row-major [q][r], target node q, upstream node r
    std::array<double, 16> wb{};
};

ShiftPlan make_shift_plan(const NodalBasis& basis, double s, double dx);

// Applies the plan with periodic wrap. frac == 0 is a pure cell
// permutation, bit-exact.
void apply_shift_plan(const ShiftPlan& plan, const SliceField& in, SliceField& out);

// Weak-form semi-Lagrangian update of u under u_t + (a u)_x = 0 with
// constant a over the step, displacement s = a * dt. No CFL restriction.
SliceField advect_const(const NodalBasis& basis, const SliceField& in, double s, double dx);

double slice_mass(const NodalBasis& basis, const SliceField& u, double dx);
double slice_l2(const NodalBasis& basis, const SliceField& u, double dx);

} // namespace apcsldg
