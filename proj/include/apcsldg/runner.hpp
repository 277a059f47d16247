#pragma once

#include "apcsldg/diagnostics.hpp"
#include "apcsldg/scenarios.hpp"
#include "apcsldg/splitting.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace apcsldg {

struct OutputConfig {
    std::string dir;        // empty: keep results in memory only
    long every_steps = 1;   // record cadence in steps
    double every_time = 0.0; // if > 0, record cadence in simulated time
    std::vector<double> snapshot_times;
};

// Parsed [scenario]/[scheme]/[output] sections; unset optionals fall back
// to the scenario defaults when the run is resolved.
struct RunConfig {
    std::string scenario_name;
    std::optional<double> alpha;
    std::optional<double> k_wave;
    std::optional<int> nx, nv;
    std::optional<double> v_lo, v_hi;

    std::optional<Scheme> scheme;
    std::optional<int> degree;
    std::optional<double> lambda;
    std::optional<double> cfl;
    std::optional<double> final_time;
    std::optional<double> fixed_dt;
    std::optional<MomentsSource> moments_source;
    std::optional<bool> limiter_on;

    OutputConfig output;
};

RunConfig parse_run_config(std::istream& in);
RunConfig parse_run_config_file(const std::string& path);

struct ResolvedRun {
    Scenario scenario;
    Grid1D grid_x, grid_v;
    SchemeConfig scheme;
    OutputConfig output;
};

// Applies scenario defaults; without paper_scale the *defaulted* mesh and
// final time are capped at 128 cells per direction and T = 10 (explicit
// config values are honored as given).
ResolvedRun resolve_run(const RunConfig& cfg, bool paper_scale = false);

struct RecordRow {
    DiagRecord diag;
    double dt = 0.0;
    double max_e = 0.0;
    double min_nodal = 0.0;
};

struct RunSummary {
    bool blow_up = false;
    long steps = 0;
    double final_time = 0.0;
    double wall_seconds = 0.0;
    double max_l2_growth = 0.0;   // worst sub-step ||f|| ratio
    double min_recorded_nodal = 0.0;
    double peak_eps_p = 0.0;
    double max_mass_dev = 0.0;
    std::int64_t limiter_scaled = 0;
    std::int64_t limiter_clamped = 0;
};

struct RunResult {
    RunSummary summary;
    std::vector<RecordRow> rows;
};

// Full time loop: sampling, adaptive or fixed stepping, diagnostics
// records, optional CSV/snapshot/summary output under output.dir.
RunResult run_simulation(const ResolvedRun& run);

inline const char* diagnostics_csv_header() {
    return "t,mass,l1,l2,entropy,energy,eps_p,log10_eps_p,rho_dev_l2,divJ_l2,dt,maxE";
}
void write_diagnostics_csv(std::ostream& out, std::span<const RecordRow> rows);

void write_snapshot(std::ostream& out, const PhaseField& f, double t);
PhaseField read_snapshot(std::istream& in, double* t_out = nullptr);

struct ConvergenceRow {
    int mesh = 0;
    double l2_error = 0.0;
    double order = 0.0; // vs the previous mesh; 0 for the first row
};

// Time-reversal convergence study: run to T, reverse v, run to 2T, reverse
// again, compare with the sampled initial data. dt = cfl * min(dx,dv)^{k+1}
// rounded so the reversal lands exactly on T.
std::vector<ConvergenceRow> convergence_reversal(const Scenario& scenario, int degree,
                                                 std::span<const int> meshes, double T,
                                                 double cfl = 0.1);

enum class SweepAxis { cfl, lambda, mesh };

struct SweepResult {
    double value = 0.0;
    RunResult result;
};

std::vector<SweepResult> sweep(const RunConfig& base, SweepAxis axis,
                               std::span<const double> values, const std::string& out_dir,
                               bool paper_scale = false);

} // namespace apcsldg
