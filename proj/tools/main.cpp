// Benchmark front end for the AP-CSLDG Vlasov-Poisson library.
//
// Subcommands:
//   run       one simulation from an INI config
//   converge  time-reversal convergence study
//   sweep     repeat a config over a CFL / lambda / mesh axis
//   vn-check  von Neumann amplification sweep
//
// Exit codes: 0 success (including flagged blow-up runs, the flag is data),
// 2 configuration errors.

#include "apcsldg/errors.hpp"
#include "apcsldg/runner.hpp"
#include "apcsldg/vn_stability.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace {

struct Range {
    double lo = 0.0, hi = 1.0;
    int count = 1;
};

Range parse_range(const std::string& spec) {
    Range r;
    char colon1 = 0, colon2 = 0;
    std::istringstream ss(spec);
    if (!(ss >> r.lo >> colon1 >> r.hi >> colon2 >> r.count) || colon1 != ':' || colon2 != ':' ||
        r.count < 1)
        throw apcsldg::ConfigError("expected range lo:hi:count, got '" + spec + "'");
    return r;
}

std::vector<double> parse_values(const std::string& csv) {
    std::vector<double> vals;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) vals.push_back(std::stod(item));
    return vals;
}

int cmd_run(const std::string& config_path, const std::string& out_override, bool paper_scale) {
    apcsldg::RunConfig cfg = apcsldg::parse_run_config_file(config_path);
    if (!out_override.empty()) cfg.output.dir = out_override;
    apcsldg::ResolvedRun run = apcsldg::resolve_run(cfg, paper_scale);
    apcsldg::RunResult res = apcsldg::run_simulation(run);

    const auto& s = res.summary;
    std::printf("scenario=%s mesh=%dx%d P%d lambda=%g\n", run.scenario.name.c_str(), run.grid_x.n,
                run.grid_v.n, run.scheme.degree, run.scheme.lambda);
    std::printf("steps=%ld final_t=%.6g wall=%.2fs blow_up=%s\n", s.steps, s.final_time,
                s.wall_seconds, s.blow_up ? "yes" : "no");
    std::printf("max_mass_dev=%.3e peak_eps_p=%.6g max_l2_growth-1=%.3e min_nodal=%.3e\n",
                s.max_mass_dev, s.peak_eps_p, s.max_l2_growth - 1.0, s.min_recorded_nodal);
    if (run.output.dir.empty()) {
        apcsldg::write_diagnostics_csv(std::cout, res.rows);
    }
    return 0;
}

int cmd_converge(const std::string& scenario_name, int degree, const std::string& meshes_csv,
                 double T, double cfl, const std::string& out) {
    apcsldg::RunConfig cfg;
    cfg.scenario_name = scenario_name;
    apcsldg::Scenario sc = apcsldg::resolve_run(cfg, true).scenario;

    std::vector<int> meshes;
    for (double v : parse_values(meshes_csv)) meshes.push_back(static_cast<int>(v));
    auto rows = apcsldg::convergence_reversal(sc, degree, meshes, T, cfl);

    std::printf("# %s P%d reversal T=%g cfl=%g\n", scenario_name.c_str(), degree, T, cfl);
    std::printf("%-10s %-14s %s\n", "mesh", "l2_error", "order");
    std::ostringstream csv;
    csv << "mesh,l2_error,order\n";
    for (const auto& r : rows) {
        std::printf("%-10d %-14.6e %.2f\n", r.mesh, r.l2_error, r.order);
        csv << r.mesh << ',' << r.l2_error << ',' << r.order << "\n";
    }
    if (!out.empty()) {
        std::filesystem::create_directories(std::filesystem::path(out).parent_path().empty()
                                                ? "."
                                                : std::filesystem::path(out).parent_path());
        std::ofstream f(out);
        f << csv.str();
    }
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& axis_spec,
              const std::string& out_override, bool paper_scale) {
    apcsldg::RunConfig cfg = apcsldg::parse_run_config_file(config_path);
    const auto eq = axis_spec.find('=');
    if (eq == std::string::npos)
        throw apcsldg::ConfigError("axis must be cfl=..., lambda=... or mesh=...");
    const std::string axis_name = axis_spec.substr(0, eq);
    apcsldg::SweepAxis axis;
    if (axis_name == "cfl") axis = apcsldg::SweepAxis::cfl;
    else if (axis_name == "lambda") axis = apcsldg::SweepAxis::lambda;
    else if (axis_name == "mesh") axis = apcsldg::SweepAxis::mesh;
    else throw apcsldg::ConfigError("unknown sweep axis '" + axis_name + "'");

    std::vector<double> values = parse_values(axis_spec.substr(eq + 1));
    std::string dir = out_override.empty() ? cfg.output.dir : out_override;
    auto results = apcsldg::sweep(cfg, axis, values, dir, paper_scale);
    for (const auto& r : results)
        std::printf("%s=%-12g steps=%-8ld blow_up=%-3s peak_eps_p=%.6g\n", axis_name.c_str(),
                    r.value, r.result.summary.steps, r.result.summary.blow_up ? "yes" : "no",
                    r.result.summary.peak_eps_p);
    return 0;
}

int cmd_vn_check(const std::string& lambda_range, const std::string& dt_range, double kappa,
                 const std::string& out) {
    const Range lr = parse_range(lambda_range);
    const Range dr = parse_range(dt_range);
    std::ostringstream csv;
    csv << "lambda,dt,max_mu3\n";
    double worst = 0.0;
    for (int i = 0; i < lr.count; ++i) {
        const double lambda =
            lr.count == 1 ? lr.lo : lr.lo + (lr.hi - lr.lo) * i / (lr.count - 1.0);
        for (int j = 0; j < dr.count; ++j) {
            // geometric spacing over the (usually decades-wide) dt range
            const double dt = dr.count == 1
                                  ? dr.lo
                                  : dr.lo * std::pow(dr.hi / dr.lo, (j + 1.0) / dr.count);
            auto mu = apcsldg::amplification_eigenvalues(lambda, dt, kappa);
            const double m3 = std::abs(mu[2]);
            worst = std::max(worst, std::abs(mu[0]));
            csv << lambda << ',' << dt << ',' << m3 << "\n";
        }
    }
    if (out.empty())
        std::cout << csv.str();
    else {
        std::ofstream f(out);
        f << csv.str();
    }
    std::fprintf(stderr, "max |mu| over sweep: %.15f\n", worst);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"AP-CSLDG benchmark CLI for the 1D1V Vlasov-Poisson system"};
    app.require_subcommand(1);

    std::string config_path, out_dir, axis_spec, meshes = "16,32,64,128";
    std::string scenario_name = "landau", lambda_range, dt_range, out_file;
    bool paper_scale = false;
    int degree = 2;
    double T = 0.5, cfl = 0.1, kappa = 1.0;

    auto* run = app.add_subcommand("run", "run one configured simulation");
    run->add_option("config", config_path, "INI config file")->required();
    run->add_option("--out", out_dir, "output directory override");
    run->add_flag("--paper-scale", paper_scale, "lift the desk-scale mesh/time caps");

    auto* conv = app.add_subcommand("converge", "time-reversal convergence study");
    conv->add_option("scenario", scenario_name, "scenario name")->required();
    conv->add_option("degree", degree, "polynomial degree k")->required();
    conv->add_option("meshes", meshes, "comma list of mesh sizes")->required();
    conv->add_option("T", T, "reversal time")->required();
    conv->add_option("--cfl", cfl, "dt = cfl*min(dx,dv)^(k+1)");
    conv->add_option("--out", out_file, "CSV output file");

    auto* sw = app.add_subcommand("sweep", "sweep one axis of a config");
    sw->add_option("config", config_path, "INI config file")->required();
    sw->add_option("axis", axis_spec, "cfl=...|lambda=...|mesh=... (comma values)")->required();
    sw->add_option("--out", out_dir, "output directory override");
    sw->add_flag("--paper-scale", paper_scale, "lift the desk-scale caps");

    auto* vn = app.add_subcommand("vn-check", "von Neumann amplification sweep");
    vn->add_option("lambda-range", lambda_range, "lo:hi:count (linear)")->required();
    vn->add_option("dt-range", dt_range, "lo:hi:count (geometric)")->required();
    vn->add_option("--kappa", kappa, "Fourier wavenumber");
    vn->add_option("--out", out_file, "CSV output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, out_dir, paper_scale);
        if (conv->parsed()) return cmd_converge(scenario_name, degree, meshes, T, cfl, out_file);
        if (sw->parsed()) return cmd_sweep(config_path, axis_spec, out_dir, paper_scale);
        if (vn->parsed()) return cmd_vn_check(lambda_range, dt_range, kappa, out_file);
    } catch (const apcsldg::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const apcsldg::InputError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
