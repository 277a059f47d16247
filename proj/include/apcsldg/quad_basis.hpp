#pragma once

#include <span>
#include <vector>

namespace apcsldg {

// Gauss-Legendre rule on the reference interval [-1,1].
// nodes are strictly increasing and symmetric about 0; weights sum to 2;
// the rule is exact for polynomials of degree <= 2k+1.
struct QuadRule {
    int degree = 0;               // polynomial degree k; k+1 points
    std::vector<double> nodes;
    std::vector<double> weights;

    int num_points() const { return degree + 1; }
};

// Supported range is k = 0..3 (P^0..P^3 elements).
QuadRule gauss_rule(int degree);

// Lagrange cardinal basis collocated at the Gauss nodes of its own rule.
// With this choice the element mass matrix is diagonal with entries
// w_p * (cell length) / 2, so DG solves reduce to per-node scalings.
class NodalBasis {
  public:
    explicit NodalBasis(int degree);

    int degree() const { return rule_.degree; }
    int num_points() const { return rule_.num_points(); }
    const QuadRule& rule() const { return rule_; }

    // cardinal_p(node_q) = delta_pq
    double cardinal(int p, double xi) const;

    // value at xi of the interpolant through (node_p, nodal[p])
    double eval(std::span<const double> nodal, double xi) const;

    // cardinal values at the cell midpoint xi = 0
    std::span<const double> cardinal_at_zero() const { return center_values_; }

  private:
    QuadRule rule_;
    std::vector<double> inv_denom_;     // 1 / prod_{r!=p}(x_p - x_r)
    std::vector<double> center_values_;
};

// Newton-form interpolating polynomial through arbitrary distinct abscissae.
class FittedPoly {
  public:
    FittedPoly(std::span<const double> abscissae, std::span<const double> values);

    double operator()(double x) const;
    int degree() const { return static_cast<int>(coef_.size()) - 1; }

  private:
    std::vector<double> centers_;
    std::vector<double> coef_;
};

} // namespace apcsldg
