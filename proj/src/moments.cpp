#include "apcsldg/moments.hpp"

namespace apcsldg {

MomentSet compute_moments(const PhaseField& f, const NodalBasis& basis) {
    const Grid1D& gx = f.grid_x();
    const Grid1D& gv = f.grid_v();
    const int kp1 = basis.num_points();
    const auto& w = basis.rule().weights;
    const auto& nodes = basis.rule().nodes;
    const auto phi0 = basis.cardinal_at_zero();
    const double half_dv = 0.5 * gv.width();

    MomentSet m;
    m.rho.assign(gx.n, 0.0);
    m.current.assign(gx.n, 0.0);
    m.stress.assign(gx.n, 0.0);
    m.kinetic.assign(gx.n, 0.0);

    std::vector<double> rho_q(kp1), cur_q(kp1), str_q(kp1);
    for (int j = 0; j < gx.n; ++j) {
        for (int q = 0; q < kp1; ++q) rho_q[q] = cur_q[q] = str_q[q] = 0.0;
        for (int i = 0; i < gv.n; ++i) {
            auto c = f.cell(j, i);
            for (int p = 0; p < kp1; ++p) {
                const double v = gv.point(i, nodes[p]);
                const double wv = w[p] * half_dv;
                for (int q = 0; q < kp1; ++q) {
                    const double fv = c[q * kp1 + p];
                    rho_q[q] += wv * fv;
                    cur_q[q] += wv * v * fv;
                    str_q[q] += wv * v * v * fv;
                }
            }
        }
        double r = 0.0, cu = 0.0, st = 0.0;
        for (int q = 0; q < kp1; ++q) {
            r += phi0[q] * rho_q[q];
            cu += phi0[q] * cur_q[q];
            st += phi0[q] * str_q[q];
        }
        m.rho[j] = r;
        m.current[j] = cu;
        m.stress[j] = st;
        m.kinetic[j] = 0.5 * st;
    }
    return m;
}

} // namespace apcsldg
