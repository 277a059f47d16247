#include "apcsldg/phase_space.hpp"

#include "apcsldg/errors.hpp"

#include <cmath>

namespace apcsldg {

PhaseField::PhaseField(Grid1D grid_x, Grid1D grid_v, int degree)
    : gx_(grid_x), gv_(grid_v), degree_(degree), kp1_(degree + 1),
      data_(static_cast<std::size_t>(grid_x.n) * grid_v.n * kp1_ * kp1_, 0.0) {
    if (gx_.n < 1 || gv_.n < 1 || gx_.hi <= gx_.lo || gv_.hi <= gv_.lo)
        throw ConfigError("PhaseField: invalid grid");
}

PhaseField sample_ic(const std::function<double(double, double)>& f0, const Grid1D& grid_x,
                     const Grid1D& grid_v, int degree) {
    const NodalBasis basis(degree);
    const auto& nodes = basis.rule().nodes;
    PhaseField f(grid_x, grid_v, degree);
    const int kp1 = degree + 1;
    for (int j = 0; j < grid_x.n; ++j) {
        for (int i = 0; i < grid_v.n; ++i) {
            for (int q = 0; q < kp1; ++q) {
                const double x = grid_x.point(j, nodes[q]);
                for (int p = 0; p < kp1; ++p) {
                    const double v = grid_v.point(i, nodes[p]);
                    const double val = f0(x, v);
                    if (!std::isfinite(val))
                        throw InputError("sample_ic: non-finite sample at (x,v)=(" +
                                         std::to_string(x) + "," + std::to_string(v) + ")");
                    f.at(j, i, q, p) = val;
                }
            }
        }
    }
    return f;
}

PhaseField reflect_v(const PhaseField& f) {
    const Grid1D& gv = f.grid_v();
    if (std::abs(gv.lo + gv.hi) > 1e-12 * (gv.hi - gv.lo))
        throw ConfigError("reflect_v: v-domain must be symmetric about 0");
    const int k = f.degree();
    PhaseField g(f.grid_x(), gv, k);
    for (int j = 0; j < f.grid_x().n; ++j)
        for (int i = 0; i < gv.n; ++i)
            for (int q = 0; q <= k; ++q)
                for (int p = 0; p <= k; ++p)
                    g.at(j, i, q, p) = f.at(j, gv.n - 1 - i, q, k - p);
    return g;
}

double lp_norm(const PhaseField& f, const NodalBasis& basis, double p) {
    if (p < 1.0) throw ConfigError("lp_norm: p must be >= 1");
    const auto& w = basis.rule().weights;
    const int kp1 = basis.num_points();
    const double cell_measure = f.grid_x().width() * f.grid_v().width() / 4.0;
    double acc = 0.0;
    for (int j = 0; j < f.grid_x().n; ++j)
        for (int i = 0; i < f.grid_v().n; ++i) {
            auto c = f.cell(j, i);
            for (int q = 0; q < kp1; ++q)
                for (int r = 0; r < kp1; ++r)
                    acc += w[q] * w[r] * std::pow(std::abs(c[q * kp1 + r]), p);
        }
    return std::pow(acc * cell_measure, 1.0 / p);
}

double l2_norm(const PhaseField& f, const NodalBasis& basis) {
    const auto& w = basis.rule().weights;
    const int kp1 = basis.num_points();
    const double cell_measure = f.grid_x().width() * f.grid_v().width() / 4.0;
    double acc = 0.0;
    for (int j = 0; j < f.grid_x().n; ++j)
        for (int i = 0; i < f.grid_v().n; ++i) {
            auto c = f.cell(j, i);
            for (int q = 0; q < kp1; ++q)
                for (int r = 0; r < kp1; ++r) {
                    const double v = c[q * kp1 + r];
                    acc += w[q] * w[r] * v * v;
                }
        }
    return std::sqrt(acc * cell_measure);
}

double total_mass(const PhaseField& f, const NodalBasis& basis) {
    const auto& w = basis.rule().weights;
    const int kp1 = basis.num_points();
    const double cell_measure = f.grid_x().width() * f.grid_v().width() / 4.0;
    double acc = 0.0;
    for (int j = 0; j < f.grid_x().n; ++j)
        for (int i = 0; i < f.grid_v().n; ++i) {
            auto c = f.cell(j, i);
            for (int q = 0; q < kp1; ++q)
                for (int r = 0; r < kp1; ++r) acc += w[q] * w[r] * c[q * kp1 + r];
        }
    return acc * cell_measure;
}

double min_nodal_value(const PhaseField& f) {
    double m = f.values().front();
    for (double v : f.values())
        if (v < m) m = v;
    return m;
}

double l2_distance(const PhaseField& f, const PhaseField& g, const NodalBasis& basis) {
    const auto& w = basis.rule().weights;
    const int kp1 = basis.num_points();
    const double cell_measure = f.grid_x().width() * f.grid_v().width() / 4.0;
    double acc = 0.0;
    for (int j = 0; j < f.grid_x().n; ++j)
        for (int i = 0; i < f.grid_v().n; ++i) {
            auto a = f.cell(j, i);
            auto b = g.cell(j, i);
            for (int q = 0; q < kp1; ++q)
                for (int r = 0; r < kp1; ++r) {
                    const double d = a[q * kp1 + r] - b[q * kp1 + r];
                    acc += w[q] * w[r] * d * d;
                }
        }
    return std::sqrt(acc * cell_measure);
}

} // namespace apcsldg
