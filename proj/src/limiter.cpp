#include "apcsldg/limiter.hpp"

#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace apcsldg {

double pp_limit_cell(std::span<double> values, std::span<const double> weights, double floor_m0,
                     LimiterStats* stats) {
    const std::size_t n = values.size();
    double wsum = 0.0, acc = 0.0, vmin = values[0];
    for (std::size_t i = 0; i < n; ++i) {
        wsum += weights[i];
        acc += weights[i] * values[i];
        if (values[i] < vmin) vmin = values[i];
    }
    const double mean = acc / wsum;

    if (mean < floor_m0) {
        for (std::size_t i = 0; i < n; ++i) values[i] = mean;
        if (stats) ++stats->mean_clamped_cells;
        return 0.0;
    }
    if (vmin >= floor_m0) return 1.0;

    const double theta = std::min(std::abs((floor_m0 - mean) / (vmin - mean)), 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        double v = theta * (values[i] - mean) + mean;
        // rounding can undershoot the floor by a few ulps of the mean
        if (v < floor_m0) v = floor_m0;
        values[i] = v;
    }
    if (stats) ++stats->scaled_cells;
    return theta;
}

void pp_limit_field(PhaseField& f, const NodalBasis& basis, double floor_m0, LimiterStats& stats) {
    const int nx = f.grid_x().n;
    const int nv = f.grid_v().n;
    const int kp1 = basis.num_points();
    std::vector<double> w2d(static_cast<std::size_t>(kp1) * kp1);
    for (int q = 0; q < kp1; ++q)
        for (int p = 0; p < kp1; ++p)
            w2d[static_cast<std::size_t>(q) * kp1 + p] =
                basis.rule().weights[q] * basis.rule().weights[p];

    std::int64_t scaled = 0, clamped = 0;
#pragma omp parallel for schedule(static) reduction(+ : scaled, clamped)
    for (int j = 0; j < nx; ++j) {
        LimiterStats local;
        for (int i = 0; i < nv; ++i) pp_limit_cell(f.cell(j, i), w2d, floor_m0, &local);
        scaled += local.scaled_cells;
        clamped += local.mean_clamped_cells;
    }
    stats.scaled_cells += scaled;
    stats.mean_clamped_cells += clamped;
}

} // namespace apcsldg
