#include "apcsldg/quad_basis.hpp"

#include "apcsldg/errors.hpp"

#include <cmath>
#include <cstddef>

namespace apcsldg {

namespace {

// Legendre P_n and its derivative at x, by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0, p1 = x;
    if (n == 0) return {1.0, 0.0};
    for (int m = 2; m <= n; ++m) {
        double p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
        p0 = p1;
        p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

} // namespace

QuadRule gauss_rule(int degree) {
    if (degree < 0 || degree > 3)
        throw ConfigError("gauss_rule: degree must be in [0,3], got " + std::to_string(degree));

    const int n = degree + 1;
    QuadRule rule;
    rule.degree = degree;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    // Newton iteration on P_n, Chebyshev-like initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = -std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            auto [p, dp] = legendre(n, x);
            double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        auto [p, dp] = legendre(n, x);
        (void)p;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = -x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
        auto [p, dp] = legendre(n, 0.0);
        (void)p;
        rule.weights[n / 2] = 2.0 / (dp * dp);
    }
    return rule;
}

NodalBasis::NodalBasis(int degree) : rule_(gauss_rule(degree)) {
    const int n = rule_.num_points();
    inv_denom_.resize(n);
    for (int p = 0; p < n; ++p) {
        double d = 1.0;
        for (int r = 0; r < n; ++r)
            if (r != p) d *= rule_.nodes[p] - rule_.nodes[r];
        inv_denom_[p] = 1.0 / d;
    }
    center_values_.resize(n);
    for (int p = 0; p < n; ++p) center_values_[p] = cardinal(p, 0.0);
}

double NodalBasis::cardinal(int p, double xi) const {
    const int n = rule_.num_points();
    double num = 1.0;
    for (int r = 0; r < n; ++r)
        if (r != p) num *= xi - rule_.nodes[r];
    return num * inv_denom_[p];
}

double NodalBasis::eval(std::span<const double> nodal, double xi) const {
    const int n = rule_.num_points();
    double acc = 0.0;
    for (int p = 0; p < n; ++p) acc += nodal[p] * cardinal(p, xi);
    return acc;
}

FittedPoly::FittedPoly(std::span<const double> abscissae, std::span<const double> values)
    : centers_(abscissae.begin(), abscissae.end()), coef_(values.begin(), values.end()) {
    const std::size_t n = centers_.size();
    // divided differences in place
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            double dx = centers_[i] - centers_[i - level];
            if (dx == 0.0)
                throw InputError("FittedPoly: coincident abscissae");
            coef_[i] = (coef_[i] - coef_[i - 1]) / dx;
        }
    }
}

double FittedPoly::operator()(double x) const {
    const std::size_t n = coef_.size();
    double acc = coef_[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) acc = acc * (x - centers_[i]) + coef_[i];
    return acc;
}

} // namespace apcsldg
