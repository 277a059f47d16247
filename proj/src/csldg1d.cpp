#include "apcsldg/csldg1d.hpp"

#include <cmath>
#include <cstring>

namespace apcsldg {

ShiftDecomposition decompose_shift(double s, double dx) {
    ShiftDecomposition d;
    d.s = s;
    const double cells_exact = s / dx;
    double m = std::floor(cells_exact);
    double frac = cells_exact - m;
    if (frac >= 1.0) { // rounding at an integer boundary
        m += 1.0;
        frac = 0.0;
    }
    d.cells = static_cast<std::int64_t>(m);
    d.frac = frac;
    return d;
}

ShiftPlan make_shift_plan(const NodalBasis& basis, double s, double dx) {
    const auto dec = decompose_shift(s, dx);
    ShiftPlan plan;
    plan.cells = dec.cells;
    plan.frac = dec.frac;
    plan.kp1 = basis.num_points();

    const int kp1 = plan.kp1;
    if (dec.frac == 0.0) {
        for (int q = 0; q < kp1; ++q) plan.wb[q * kp1 + q] = 1.0;
        return plan;
    }

    const auto& gauss = basis.rule();
    const double xi = dec.frac;
    // piece A: upstream cell j-cells-1, reference range [1-2xi, 1],
    // test function argument shifted by 2xi-2
    // piece B: upstream cell j-cells, reference range [-1, 1-2xi],
    // test function argument shifted by 2xi
    for (int g = 0; g < kp1; ++g) {
        const double eta_a = (1.0 - xi) + xi * gauss.nodes[g];
        const double eta_b = -xi + (1.0 - xi) * gauss.nodes[g];
        for (int q = 0; q < kp1; ++q) {
            const double test_a = basis.cardinal(q, eta_a + 2.0 * xi - 2.0);
            const double test_b = basis.cardinal(q, eta_b + 2.0 * xi);
            for (int r = 0; r < kp1; ++r) {
                plan.wa[q * kp1 + r] += xi * gauss.weights[g] * basis.cardinal(r, eta_a) * test_a;
                plan.wb[q * kp1 + r] +=
                    (1.0 - xi) * gauss.weights[g] * basis.cardinal(r, eta_b) * test_b;
            }
        }
    }
    // divide by the diagonal mass matrix entry w_q (cell length cancels)
    for (int q = 0; q < kp1; ++q)
        for (int r = 0; r < kp1; ++r) {
            plan.wa[q * kp1 + r] /= gauss.weights[q];
            plan.wb[q * kp1 + r] /= gauss.weights[q];
        }
    return plan;
}

void apply_shift_plan(const ShiftPlan& plan, const SliceField& in, SliceField& out) {
    const int n = in.n;
    const int kp1 = plan.kp1;
    out.n = n;
    out.degree = in.degree;
    out.u.resize(in.u.size());

    const std::int64_t shift = ((plan.cells % n) + n) % n; // wrapped whole-cell offset
    if (plan.frac == 0.0) {
        for (int j = 0; j < n; ++j) {
            const int src = static_cast<int>((j - shift + n) % n);
            std::memcpy(out.u.data() + static_cast<std::size_t>(j) * kp1,
                        in.u.data() + static_cast<std::size_t>(src) * kp1,
                        sizeof(double) * kp1);
        }
        return;
    }

    for (int j = 0; j < n; ++j) {
        const int src_b = static_cast<int>((j - shift + n) % n);
        const int src_a = (src_b - 1 + n) % n;
        const double* ua = in.u.data() + static_cast<std::size_t>(src_a) * kp1;
        const double* ub = in.u.data() + static_cast<std::size_t>(src_b) * kp1;
        double* o = out.u.data() + static_cast<std::size_t>(j) * kp1;
        for (int q = 0; q < kp1; ++q) {
            double acc = 0.0;
            const double* wa = plan.wa.data() + q * kp1;
            const double* wb = plan.wb.data() + q * kp1;
            for (int r = 0; r < kp1; ++r) acc += wa[r] * ua[r] + wb[r] * ub[r];
            o[q] = acc;
        }
    }
}

SliceField advect_const(const NodalBasis& basis, const SliceField& in, double s, double dx) {
    SliceField out(in.n, in.degree);
    const ShiftPlan plan = make_shift_plan(basis, s, dx);
    apply_shift_plan(plan, in, out);
    return out;
}

double slice_mass(const NodalBasis& basis, const SliceField& u, double dx) {
    const auto& w = basis.rule().weights;
    const int kp1 = basis.num_points();
    double acc = 0.0;
    for (int j = 0; j < u.n; ++j)
        for (int q = 0; q < kp1; ++q) acc += w[q] * u.at(j, q);
    return acc * 0.5 * dx;
}

double slice_l2(const NodalBasis& basis, const SliceField& u, double dx) {
    const auto& w = basis.rule().weights;
    const int kp1 = basis.num_points();
    double acc = 0.0;
    for (int j = 0; j < u.n; ++j)
        for (int q = 0; q < kp1; ++q) acc += w[q] * u.at(j, q) * u.at(j, q);
    return std::sqrt(acc * 0.5 * dx);
}

} // namespace apcsldg
