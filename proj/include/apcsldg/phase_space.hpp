#pragma once

#include "apcsldg/quad_basis.hpp"

#include <functional>
#include <span>
#include <vector>

namespace apcsldg {

// Uniform 1D mesh of [lo,hi] with n cells.
struct Grid1D {
    double lo = 0.0;
    double hi = 1.0;
    int n = 1;

    double width() const { return (hi - lo) / n; }
    double left(int j) const { return lo + j * width(); }
    double midpoint(int j) const { return lo + (j + 0.5) * width(); }
    // physical coordinate of reference point xi in cell j
    double point(int j, double xi) const { return midpoint(j) + 0.5 * width() * xi; }
};

// Nodal tensor-product DG representation of f(x,v): values at the Gauss
// points (x_{j,q}, v_{i,p}) of each rectangular cell, stored row-major
// in (j, i, q, p).
class PhaseField {
  public:
    PhaseField(Grid1D grid_x, Grid1D grid_v, int degree);

    const Grid1D& grid_x() const { return gx_; }
    const Grid1D& grid_v() const { return gv_; }
    int degree() const { return degree_; }
    int points_per_dim() const { return degree_ + 1; }

    double& at(int j, int i, int q, int p) { return data_[index(j, i, q, p)]; }
    double at(int j, int i, int q, int p) const { return data_[index(j, i, q, p)]; }

    // (k+1)^2 nodal values of cell (j,i), p fastest
    std::span<double> cell(int j, int i) {
        return {data_.data() + index(j, i, 0, 0), static_cast<std::size_t>(kp1_ * kp1_)};
    }
    std::span<const double> cell(int j, int i) const {
        return {data_.data() + index(j, i, 0, 0), static_cast<std::size_t>(kp1_ * kp1_)};
    }

    std::span<double> values() { return data_; }
    std::span<const double> values() const { return data_; }

  private:
    std::size_t index(int j, int i, int q, int p) const {
        return ((static_cast<std::size_t>(j) * gv_.n + i) * kp1_ + q) * kp1_ + p;
    }

    Grid1D gx_, gv_;
    int degree_;
    int kp1_;
    std::vector<double> data_;
};

// One-dimensional degree-k DG field, u[j*(k+1)+q].
struct SliceField {
    int n = 0;
    int degree = 0;
    std::vector<double> u;

    SliceField() = default;
    SliceField(int n_, int degree_) : n(n_), degree(degree_), u(static_cast<std::size_t>(n_) * (degree_ + 1), 0.0) {}
    double& at(int j, int q) { return u[static_cast<std::size_t>(j) * (degree + 1) + q]; }
    double at(int j, int q) const { return u[static_cast<std::size_t>(j) * (degree + 1) + q]; }
};

// Collocate f0 at all phase-space Gauss points. Throws InputError on
// non-finite samples.
PhaseField sample_ic(const std::function<double(double, double)>& f0, const Grid1D& grid_x,
                     const Grid1D& grid_v, int degree);

// G(x,v) = F(x,-v) as the exact index permutation (i,p) -> (Nv-1-i, k-p).
// Requires a v-domain symmetric about 0.
PhaseField reflect_v(const PhaseField& f);

double lp_norm(const PhaseField& f, const NodalBasis& basis, double p);
double l2_norm(const PhaseField& f, const NodalBasis& basis);
double total_mass(const PhaseField& f, const NodalBasis& basis);
double min_nodal_value(const PhaseField& f);

// discrete L2 norm of f - g on a shared grid
double l2_distance(const PhaseField& f, const PhaseField& g, const NodalBasis& basis);

} // namespace apcsldg
