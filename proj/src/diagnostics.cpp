#include "apcsldg/diagnostics.hpp"

#include "apcsldg/moments.hpp"

#include <cmath>

namespace apcsldg {

DiagRecord record(const PhaseField& f, const PotentialField& pot, SpectralWorkspace& workspace,
                  const NodalBasis& basis, double lambda, double t, double entropy_floor) {
    DiagRecord rec;
    rec.t = t;

    const auto& w = basis.rule().weights;
    const auto& nodes = basis.rule().nodes;
    const int kp1 = basis.num_points();
    const Grid1D& gx = f.grid_x();
    const Grid1D& gv = f.grid_v();
    const double cell_measure = gx.width() * gv.width() / 4.0;

    double mass = 0.0, l1 = 0.0, l2 = 0.0, entropy = 0.0, kinetic = 0.0;
    for (int j = 0; j < gx.n; ++j)
        for (int i = 0; i < gv.n; ++i) {
            auto c = f.cell(j, i);
            for (int q = 0; q < kp1; ++q)
                for (int p = 0; p < kp1; ++p) {
                    const double ww = w[q] * w[p];
                    const double val = c[q * kp1 + p];
                    const double v = gv.point(i, nodes[p]);
                    mass += ww * val;
                    l1 += ww * std::abs(val);
                    l2 += ww * val * val;
                    const double fl = std::max(val, entropy_floor);
                    entropy += ww * fl * std::log(fl);
                    kinetic += ww * 0.5 * v * v * val;
                }
        }
    rec.mass = mass * cell_measure;
    rec.l1 = l1 * cell_measure;
    rec.l2 = std::sqrt(l2 * cell_measure);
    rec.entropy = entropy * cell_measure;

    double e2 = 0.0;
    for (double e : pot.e_mid) e2 += e * e;
    e2 *= gx.width();
    rec.eps_p = 0.5 * lambda * lambda * e2;
    rec.log10_eps_p = std::log10(rec.eps_p);
    rec.energy = kinetic * cell_measure + rec.eps_p;

    auto [rho_dev, div_j] = quasineutral_deviation(f, basis, workspace);
    rec.rho_dev_l2 = rho_dev;
    rec.div_j_l2 = div_j;
    return rec;
}

void fill_deviations(DiagRecord& rec, const DiagRecord& initial) {
    auto dev = [](double now, double init) {
        return std::abs(init) > 1e-12 ? std::abs(now - init) / std::abs(init)
                                      : std::abs(now - init);
    };
    rec.mass_dev = dev(rec.mass, initial.mass);
    rec.l1_dev = dev(rec.l1, initial.l1);
    rec.l2_dev = dev(rec.l2, initial.l2);
    rec.entropy_dev = dev(rec.entropy, initial.entropy);
    rec.energy_dev = dev(rec.energy, initial.energy);
}

std::pair<double, double> quasineutral_deviation(const PhaseField& f, const NodalBasis& basis,
                                                 SpectralWorkspace& workspace) {
    const MomentSet m = compute_moments(f, basis);
    const double dx = f.grid_x().width();
    double rho_dev = 0.0;
    for (double r : m.rho) rho_dev += (r - 1.0) * (r - 1.0);
    rho_dev = std::sqrt(rho_dev * dx);

    std::vector<double> dj = workspace.derivative(m.current);
    double div_j = 0.0;
    for (double d : dj) div_j += d * d;
    div_j = std::sqrt(div_j * dx);
    return {rho_dev, div_j};
}

} // namespace apcsldg
