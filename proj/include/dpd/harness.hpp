#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dpd/integrators.hpp"
#include "dpd/observables.hpp"
#include "dpd/params.hpp"

namespace dpd {

// One flat bag of knobs shared by every experiment entry point. Defaults are
// the benchmark fluid: a=18.75, gamma=4.5, kBT=1, r_c=1, m=1, N=500 in a
// cubic box of edge 5, run for 1000 reduced time units. Each field maps to a
// config-file key of the same name and a CLI flag.
struct ExperimentConfig {
    SchemeKind scheme = SchemeKind::shardlow;
    std::vector<SchemeKind> schemes; // multi-scheme ops; falls back to {scheme} when empty

    double a = 18.75;
    double gamma = 4.5;
    double kbt = 1.0;
    double rc = 1.0;
    double mass = 1.0;
    double box = 5.0;
    std::size_t n = 500;

    double dt = 0.01;
    std::vector<double> dt_list; // sweep/rdf stepsizes; geometric grid when empty
    double time = 1000.0;        // simulated span in reduced units
    std::uint64_t seed = 20250815;
    std::string out; // output directory for CSV files; empty = no files

    double skin = 0.3;            // neighbor-list skin, absolute
    double equil_fraction = 0.2;  // leading fraction of steps discarded
    std::size_t temp_stride = 10; // steps between temperature samples
    std::size_t rdf_stride = 100; // steps between rdf snapshots
    std::size_t rdf_min_snapshots = 0; // >0: shrink the stride until this many snapshots fit
    double rdf_bin = 0.01;
    double rdf_r_max = 0.0; // 0 = box/2
    bool collect_rdf = false;

    std::size_t replicas = 1; // independent repeats averaged per (scheme, dt)
    unsigned threads = 0;     // worker threads for sweeps; 0 = hardware count

    double dt_lo = 0.01; // critical-stepsize bracket, known good
    double dt_hi = 0.2;  // known bad
    double err_tol = 0.10;
    double resolution = 0.001; // bisection stops when the bracket is this tight

    std::size_t bench_steps = 10000;
    std::size_t bench_reps = 3;

    double fit_lo = 0.0;  // slope-fit window on dt
    double fit_hi = 1e30;

    int grid_per_decade = 12; // geometric grid density when dt_list is empty

    DpdParams params() const; // validated; throws ConfigError
};

struct RunReport {
    SchemeKind scheme = SchemeKind::shardlow;
    double a = 0.0;
    double gamma = 0.0;
    double dt = 0.0;
    std::size_t steps = 0;
    double t_c = 0.0;
    double t_k = 0.0;
    double rel_err_tc = 0.0;
    double rel_err_tk = 0.0;
    double ms_per_step = 0.0;
    StepCounters counters;
    std::uint64_t seed = 0;
    bool stable = true;
    std::uint64_t unstable_step = 0;
    std::vector<double> rdf_centers; // filled when collect_rdf
    std::vector<double> rdf_g;
};

// One trajectory: init, steps = floor(time/dt), observables sampled at the
// configured strides after the equilibration fraction. Non-finite momenta or
// a kinetic temperature beyond 20x the target mark the run unstable (step
// index recorded) and stop it early.
RunReport run_single(const ExperimentConfig& cfg);

// replicas trajectories with seeds seed, seed+1, ...; temperature estimates
// averaged, timing and counters from the first replica
RunReport run_averaged(const ExperimentConfig& cfg, SchemeKind scheme, double dt);

struct SweepSlope {
    SchemeKind scheme;
    double slope = 0.0;
    std::size_t points_used = 0;
};

struct SweepResult {
    std::vector<RunReport> runs;
    std::vector<SweepSlope> slopes;
};

// every scheme at every stepsize; slope of log rel_err_tc vs log dt fitted
// per scheme over [fit_lo, fit_hi], unstable points excluded and flagged
SweepResult sweep(const ExperimentConfig& cfg);

struct CriticalResult {
    SchemeKind scheme;
    bool found = false;
    double critical_dt = 0.0;
    double err_at_lo = 0.0; // diagnostic: errors at the initial bracket
    double err_at_hi = 0.0;
};

// largest stepsize whose relative configurational-temperature error stays
// within err_tol, located by bisection on [dt_lo, dt_hi] down to `resolution`
CriticalResult critical_stepsize(const ExperimentConfig& cfg, SchemeKind scheme);

// median wall-clock ms per step over bench_reps repetitions of bench_steps
// steps each, observables off, after a short equilibration
double bench_cpu_per_step(const ExperimentConfig& cfg, SchemeKind scheme);

struct EfficiencyRow {
    SchemeKind scheme;
    double critical_dt = 0.0;
    double ms_per_step = 0.0;
    double efficiency_pct = 0.0; // (critical_dt/ms) scaled so shardlow = 100
};

std::vector<EfficiencyRow> efficiency_table(const ExperimentConfig& cfg);

struct RdfCurve {
    SchemeKind scheme;
    double dt = 0.0;
    bool stable = true;
    double sup_dev = 0.0; // against the reference, bins with center > 0.1
    std::vector<double> g;
};

struct RdfStudyResult {
    std::vector<double> centers;
    RdfCurve reference; // shardlow at the reference stepsize
    std::vector<RdfCurve> curves;
};

// reference RDF from shardlow at ref_dt, then every scheme at every stepsize
// in dt_list, with sup-norm deviations from the reference
RdfStudyResult rdf_study(const ExperimentConfig& cfg, double ref_dt = 0.001);

// least-squares slope of log(y) vs log(x); ignores non-positive entries;
// throws EstimateError with fewer than two usable points
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// geometric grid from lo to hi inclusive at points_per_decade resolution
std::vector<double> geometric_grid(double lo, double hi, int points_per_decade);

// CSV output. Columns are fixed; identical config and seed reproduce every
// non-timing field byte for byte.
void write_runs_csv(const std::filesystem::path& path, const std::vector<RunReport>& runs);
void write_rdf_csv(const std::filesystem::path& path, const std::vector<double>& centers,
                   const std::vector<RdfCurve>& curves);
void write_rdf_csv(const std::filesystem::path& path, const RdfStudyResult& study);
void write_efficiency_csv(const std::filesystem::path& path,
                          const std::vector<EfficiencyRow>& rows);

// flat key = value text, '#' comments; unknown keys or malformed values throw
// ConfigError
void apply_config_text(ExperimentConfig& cfg, const std::string& text);
ExperimentConfig load_config_file(const std::filesystem::path& path);

} // namespace dpd
