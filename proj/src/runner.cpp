#include "apcsldg/runner.hpp"

#include "apcsldg/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace apcsldg {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("invalid numeric value for " + key + ": '" + v + "'");
    }
}

int parse_int(const std::string& key, const std::string& v) {
    const double x = parse_double(key, v);
    if (x != std::floor(x)) throw ConfigError("expected integer for " + key + ": '" + v + "'");
    return static_cast<int>(x);
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "on" || v == "1") return true;
    if (v == "false" || v == "off" || v == "0") return false;
    throw ConfigError("invalid boolean for " + key + ": '" + v + "'");
}

Scheme parse_scheme(const std::string& v) {
    if (v == "ap_csldg_1") return Scheme::ap_csldg_1;
    if (v == "ap_csldg_2") return Scheme::ap_csldg_2;
    if (v == "reference_csldg") return Scheme::reference_csldg;
    throw ConfigError("unknown scheme '" + v + "'");
}

MomentsSource parse_moments_source(const std::string& v) {
    if (v == "pre_advection") return MomentsSource::pre_advection;
    if (v == "post_advection") return MomentsSource::post_advection;
    throw ConfigError("unknown moments_source '" + v + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(key, item));
    }
    return out;
}

std::string format_g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

RunConfig parse_run_config(std::istream& in) {
    RunConfig cfg;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("malformed section at line " + std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            if (section != "scenario" && section != "scheme" && section != "output")
                throw ConfigError("unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value at line " + std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));

        if (section == "scenario") {
            if (key == "name") cfg.scenario_name = val;
            else if (key == "alpha") cfg.alpha = parse_double(key, val);
            else if (key == "k_wave") cfg.k_wave = parse_double(key, val);
            else if (key == "nx") cfg.nx = parse_int(key, val);
            else if (key == "nv") cfg.nv = parse_int(key, val);
            else if (key == "v_min") cfg.v_lo = parse_double(key, val);
            else if (key == "v_max") cfg.v_hi = parse_double(key, val);
            else throw ConfigError("unknown [scenario] key '" + key + "'");
        } else if (section == "scheme") {
            if (key == "scheme") cfg.scheme = parse_scheme(val);
            else if (key == "degree") cfg.degree = parse_int(key, val);
            else if (key == "lambda") cfg.lambda = parse_double(key, val);
            else if (key == "cfl") cfg.cfl = parse_double(key, val);
            else if (key == "final_time") cfg.final_time = parse_double(key, val);
            else if (key == "fixed_dt") cfg.fixed_dt = parse_double(key, val);
            else if (key == "moments_source") cfg.moments_source = parse_moments_source(val);
            else if (key == "limiter") cfg.limiter_on = parse_bool(key, val);
            else throw ConfigError("unknown [scheme] key '" + key + "'");
        } else if (section == "output") {
            if (key == "dir") cfg.output.dir = val;
            else if (key == "every_steps") cfg.output.every_steps = parse_int(key, val);
            else if (key == "every_time") cfg.output.every_time = parse_double(key, val);
            else if (key == "snapshots") cfg.output.snapshot_times = parse_list(key, val);
            else throw ConfigError("unknown [output] key '" + key + "'");
        } else {
            throw ConfigError("key '" + key + "' outside any section");
        }
    }
    if (cfg.scenario_name.empty()) throw ConfigError("missing [scenario] name");
    if (cfg.output.every_steps < 1) throw ConfigError("every_steps must be >= 1");
    if (cfg.output.every_time < 0.0) throw ConfigError("every_time must be >= 0");
    return cfg;
}

RunConfig parse_run_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_run_config(in);
}

ResolvedRun resolve_run(const RunConfig& cfg, bool paper_scale) {
    ResolvedRun run;
    const std::string& name = cfg.scenario_name;
    if (name == "landau")
        run.scenario = landau(cfg.alpha.value_or(0.5), cfg.k_wave.value_or(0.5));
    else if (name == "two_stream_1")
        run.scenario = two_stream_1();
    else if (name == "two_stream_2")
        run.scenario = two_stream_2();
    else if (name == "near_equilibrium")
        run.scenario = near_equilibrium(cfg.alpha.value_or(1e-16));
    else if (name == "bump_on_tail")
        run.scenario = bump_on_tail(cfg.lambda.value_or(1.0));
    else
        throw ConfigError("unknown scenario '" + name + "'");

    const Scenario& sc = run.scenario;
    int nx = cfg.nx.value_or(sc.default_nx);
    int nv = cfg.nv.value_or(sc.default_nv);
    double T = cfg.final_time.value_or(sc.default_T);
    if (!paper_scale) {
        if (!cfg.nx) nx = std::min(nx, 128);
        if (!cfg.nv) nv = std::min(nv, 128);
        if (!cfg.final_time) T = std::min(T, 10.0);
    }
    if (nx < 2 || nv < 1) throw ConfigError("mesh too small");
    if (T < 0.0) throw ConfigError("final_time must be >= 0");

    run.grid_x = {sc.x_lo, sc.x_hi, nx};
    run.grid_v = {cfg.v_lo.value_or(sc.v_lo), cfg.v_hi.value_or(sc.v_hi), nv};
    if (run.grid_v.hi <= run.grid_v.lo) throw ConfigError("empty v-domain");

    run.scheme.scheme = cfg.scheme.value_or(sc.default_scheme);
    run.scheme.degree = cfg.degree.value_or(sc.default_degree);
    run.scheme.lambda = cfg.lambda.value_or(sc.default_lambda);
    run.scheme.cfl = cfg.cfl.value_or(sc.default_cfl);
    run.scheme.final_time = T;
    run.scheme.fixed_dt = cfg.fixed_dt;
    run.scheme.moments_source = cfg.moments_source.value_or(sc.default_moments_source);
    run.scheme.limiter_on = cfg.limiter_on.value_or(true);
    if (run.scheme.degree < 0 || run.scheme.degree > 3)
        throw ConfigError("degree must be in [0,3]");
    if (run.scheme.lambda < 0.0) throw ConfigError("lambda must be >= 0");
    if (run.scheme.fixed_dt && *run.scheme.fixed_dt <= 0.0)
        throw ConfigError("fixed_dt must be > 0");

    run.output = cfg.output;
    return run;
}

void write_diagnostics_csv(std::ostream& out, std::span<const RecordRow> rows) {
    out << diagnostics_csv_header() << "\n";
    for (const auto& r : rows) {
        const DiagRecord& d = r.diag;
        out << format_g17(d.t) << ',' << format_g17(d.mass) << ',' << format_g17(d.l1) << ','
            << format_g17(d.l2) << ',' << format_g17(d.entropy) << ',' << format_g17(d.energy)
            << ',' << format_g17(d.eps_p) << ',' << format_g17(d.log10_eps_p) << ','
            << format_g17(d.rho_dev_l2) << ',' << format_g17(d.div_j_l2) << ','
            << format_g17(r.dt) << ',' << format_g17(r.max_e) << "\n";
    }
}

void write_snapshot(std::ostream& out, const PhaseField& f, double t) {
    out << "apcsldg-snapshot 1\n";
    out << f.grid_x().n << ' ' << f.grid_v().n << ' ' << f.degree() << "\n";
    out << format_g17(f.grid_x().lo) << ' ' << format_g17(f.grid_x().hi) << ' '
        << format_g17(f.grid_v().lo) << ' ' << format_g17(f.grid_v().hi) << "\n";
    out << format_g17(t) << "\n";
    for (double v : f.values()) out << format_g17(v) << "\n";
}

PhaseField read_snapshot(std::istream& in, double* t_out) {
    std::string magic;
    int version = 0;
    in >> magic >> version;
    if (magic != "apcsldg-snapshot" || version != 1)
        throw InputError("read_snapshot: bad header");
    int nx, nv, degree;
    double xlo, xhi, vlo, vhi, t;
    in >> nx >> nv >> degree >> xlo >> xhi >> vlo >> vhi >> t;
    if (!in) throw InputError("read_snapshot: truncated header");
    PhaseField f({xlo, xhi, nx}, {vlo, vhi, nv}, degree);
    for (double& v : f.values()) {
        in >> v;
        if (!in) throw InputError("read_snapshot: truncated data");
    }
    if (t_out) *t_out = t;
    return f;
}

RunResult run_simulation(const ResolvedRun& run) {
    const auto wall0 = std::chrono::steady_clock::now();
    RunResult result;
    RunSummary& sum = result.summary;
    sum.min_recorded_nodal = std::numeric_limits<double>::infinity();

    SplittingDriver driver(run.grid_x, run.grid_v, run.scheme);
    PhaseField f = sample_ic(run.scenario.f0, run.grid_x, run.grid_v, run.scheme.degree);
    PotentialField pot = driver.initial_potential(f);

    const bool writing = !run.output.dir.empty();
    std::filesystem::path dir(run.output.dir);
    if (writing) std::filesystem::create_directories(dir);

    std::vector<double> snaps = run.output.snapshot_times;
    std::sort(snaps.begin(), snaps.end());
    std::size_t next_snap = 0;
    auto maybe_snapshot = [&](const PhaseField& field, double t) {
        while (next_snap < snaps.size() && t >= snaps[next_snap] - 1e-12) {
            if (writing) {
                std::ofstream snap(dir / ("snapshot_" + format_g17(snaps[next_snap]) + ".txt"));
                write_snapshot(snap, field, t);
            }
            ++next_snap;
        }
    };

    DiagRecord initial;
    auto add_record = [&](double t, double dt, double maxe) {
        DiagRecord d = record(f, pot, driver.workspace(), driver.basis(), run.scheme.lambda, t,
                              run.scheme.limiter_floor);
        if (result.rows.empty()) initial = d;
        fill_deviations(d, initial);
        RecordRow row;
        row.diag = d;
        row.dt = dt;
        row.max_e = maxe;
        row.min_nodal = min_nodal_value(f);
        sum.min_recorded_nodal = std::min(sum.min_recorded_nodal, row.min_nodal);
        sum.peak_eps_p = std::max(sum.peak_eps_p, d.eps_p);
        sum.max_mass_dev = std::max(sum.max_mass_dev, d.mass_dev);
        result.rows.push_back(std::move(row));
    };

    const double T = run.scheme.final_time;
    double t = 0.0;
    add_record(0.0, 0.0, pot.max_abs_e());
    maybe_snapshot(f, 0.0);

    double next_mark = run.output.every_time;
    long steps_since_record = 0;
    while (t < T * (1.0 - 1e-14) && T > 0.0) {
        double dt = std::min(driver.choose_dt(pot.max_abs_e()), T - t);
        StepReport rep = driver.advance(f, dt, pot);
        t += dt;
        ++sum.steps;
        ++steps_since_record;
        sum.max_l2_growth = std::max(sum.max_l2_growth, rep.l2_growth_max);
        sum.limiter_scaled += rep.limiter_scaled;
        sum.limiter_clamped += rep.limiter_clamped;

        if (rep.blow_up) {
            sum.blow_up = true;
            // the poisoned state is not recorded; the flag is the result
            break;
        }

        const bool final_step = t >= T * (1.0 - 1e-14);
        bool due = final_step;
        if (run.output.every_time > 0.0) {
            if (t >= next_mark - 1e-12) {
                due = true;
                while (next_mark <= t + 1e-12) next_mark += run.output.every_time;
            }
        } else if (steps_since_record >= run.output.every_steps) {
            due = true;
        }
        if (due) {
            add_record(t, dt, rep.max_e);
            steps_since_record = 0;
        }
        maybe_snapshot(f, t);
    }
    sum.final_time = t;
    sum.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();

    if (writing) {
        std::ofstream csv(dir / "diagnostics.csv");
        write_diagnostics_csv(csv, result.rows);

        nlohmann::json j;
        j["scenario"] = run.scenario.name;
        j["nx"] = run.grid_x.n;
        j["nv"] = run.grid_v.n;
        j["degree"] = run.scheme.degree;
        j["lambda"] = run.scheme.lambda;
        j["blow_up"] = sum.blow_up;
        j["steps"] = sum.steps;
        j["final_time"] = sum.final_time;
        j["wall_seconds"] = sum.wall_seconds;
        j["max_l2_growth"] = sum.max_l2_growth;
        j["min_recorded_nodal"] = sum.min_recorded_nodal;
        j["peak_eps_p"] = sum.peak_eps_p;
        j["max_mass_dev"] = sum.max_mass_dev;
        j["limiter_scaled_cells"] = sum.limiter_scaled;
        j["limiter_mean_clamped_cells"] = sum.limiter_clamped;
        std::ofstream js(dir / "summary.json");
        js << j.dump(2) << "\n";
    }
    return result;
}

std::vector<ConvergenceRow> convergence_reversal(const Scenario& scenario, int degree,
                                                 std::span<const int> meshes, double T,
                                                 double cfl) {
    if (std::abs(scenario.v_lo + scenario.v_hi) > 1e-12 * (scenario.v_hi - scenario.v_lo))
        throw ConfigError("convergence_reversal: v-domain must be symmetric for reversal");

    std::vector<ConvergenceRow> rows;
    for (int m : meshes) {
        Grid1D gx{scenario.x_lo, scenario.x_hi, m};
        Grid1D gv{scenario.v_lo, scenario.v_hi, m};

        SchemeConfig cfg;
        cfg.scheme = Scheme::ap_csldg_1;
        cfg.degree = degree;
        cfg.lambda = scenario.default_lambda;
        cfg.final_time = T;
        cfg.moments_source = scenario.default_moments_source;

        double err = 0.0;
        if (T > 0.0) {
            const double h = std::min(gx.width(), gv.width());
            const double dt_nominal = cfl * std::pow(h, degree + 1);
            const long n_half = static_cast<long>(std::ceil(T / dt_nominal));
            const double dt = T / n_half;
            cfg.fixed_dt = dt;

            SplittingDriver driver(gx, gv, cfg);
            PhaseField f0 = sample_ic(scenario.f0, gx, gv, degree);
            PhaseField f = f0;
            PotentialField pot;
            for (long s = 0; s < n_half; ++s) driver.advance(f, dt, pot);
            f = reflect_v(f);
            for (long s = 0; s < n_half; ++s) driver.advance(f, dt, pot);
            f = reflect_v(f);
            err = l2_distance(f, f0, driver.basis());
        }

        ConvergenceRow row;
        row.mesh = m;
        row.l2_error = err;
        row.order = rows.empty() || err == 0.0 || rows.back().l2_error == 0.0
                        ? 0.0
                        : std::log2(rows.back().l2_error / err) /
                              std::log2(static_cast<double>(m) / rows.back().mesh);
        rows.push_back(row);
    }
    return rows;
}

std::vector<SweepResult> sweep(const RunConfig& base, SweepAxis axis,
                               std::span<const double> values, const std::string& out_dir,
                               bool paper_scale) {
    std::vector<SweepResult> results;
    const bool writing = !out_dir.empty();
    std::filesystem::path dir(out_dir);
    if (writing) std::filesystem::create_directories(dir);

    std::ofstream combined;
    if (writing) {
        combined.open(dir / "sweep.csv");
        combined << "run," << diagnostics_csv_header() << "\n";
    }

    for (double v : values) {
        RunConfig cfg = base;
        std::string tag;
        switch (axis) {
            case SweepAxis::cfl:
                cfg.cfl = v;
                tag = "cfl_";
                break;
            case SweepAxis::lambda:
                cfg.lambda = v;
                tag = "lambda_";
                break;
            case SweepAxis::mesh: {
                const int n = static_cast<int>(v);
                cfg.nx = n;
                cfg.nv = n;
                tag = "mesh_";
                break;
            }
        }
        tag += format_g17(v);
        cfg.output.dir = writing ? (dir / tag).string() : std::string();

        SweepResult r;
        r.value = v;
        r.result = run_simulation(resolve_run(cfg, paper_scale));
        if (writing)
            for (const auto& row : r.result.rows) {
                const DiagRecord& d = row.diag;
                combined << format_g17(v) << ',' << format_g17(d.t) << ',' << format_g17(d.mass)
                         << ',' << format_g17(d.l1) << ',' << format_g17(d.l2) << ','
                         << format_g17(d.entropy) << ',' << format_g17(d.energy) << ','
                         << format_g17(d.eps_p) << ',' << format_g17(d.log10_eps_p) << ','
                         << format_g17(d.rho_dev_l2) << ',' << format_g17(d.div_j_l2) << ','
                         << format_g17(row.dt) << ',' << format_g17(row.max_e) << "\n";
            }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace apcsldg
