// Command-line front end for the DPD integrator benchmark.
// Exit codes: 0 success, 2 bad configuration, 3 numerical instability.

#include <cstdio>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "dpd/errors.hpp"
#include "dpd/harness.hpp"

namespace {

struct CliState {
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> overrides; // config keys, CLI wins
    double ref_dt = 0.001;
};

// Every flag funnels through the same key=value channel the config file
// uses, so both paths accept identical spellings and validation.
void add_common_options(CLI::App* cmd, CliState& st) {
    auto add = [cmd, &st](const std::string& flag, const std::string& key, const std::string& desc) {
        cmd->add_option_function<std::string>(
            flag, [key, &st](const std::string& v) { st.overrides.emplace_back(key, v); }, desc);
    };
    cmd->add_option("--config", st.config_path, "config file of key = value lines");
    add("--scheme", "scheme", "integrator: shardlow, aboba, mshardlow1, mshardlow2");
    add("--schemes", "schemes", "comma list of integrators for multi-scheme commands");
    add("--a", "a", "conservative repulsion amplitude");
    add("--gamma", "gamma", "friction coefficient");
    add("--kbt", "kbt", "thermostat target kBT");
    add("--rc", "rc", "interaction cutoff");
    add("--mass", "mass", "particle mass");
    add("--n", "n", "particle count");
    add("--box", "box", "cubic box edge");
    add("--dt", "dt", "stepsize");
    add("--dt-list", "dt_list", "comma list of stepsizes");
    add("--time", "time", "simulated time span");
    add("--seed", "seed", "rng seed");
    add("--out", "out", "output directory for CSV files");
    add("--skin", "skin", "neighbor-list skin");
    add("--equil-fraction", "equil_fraction", "leading fraction of steps discarded");
    add("--temp-stride", "temp_stride", "steps between temperature samples");
    add("--rdf-stride", "rdf_stride", "steps between rdf snapshots");
    add("--rdf-min-snapshots", "rdf_min_snapshots", "shrink rdf stride to reach this many snapshots");
    add("--rdf-bin", "rdf_bin", "rdf bin width");
    add("--rdf-rmax", "rdf_r_max", "rdf max radius (0 = box/2)");
    add("--collect-rdf", "collect_rdf", "accumulate an rdf during simulate (true/false)");
    add("--replicas", "replicas", "independent repeats averaged per point");
    add("--threads", "threads", "worker threads (0 = hardware)");
    add("--dt-lo", "dt_lo", "sweep grid / critical bracket lower end");
    add("--dt-hi", "dt_hi", "sweep grid / critical bracket upper end");
    add("--err-tol", "err_tol", "relative T_c error defining the critical stepsize");
    add("--resolution", "resolution", "bisection resolution");
    add("--bench-steps", "bench_steps", "timed steps per benchmark repetition");
    add("--bench-reps", "bench_reps", "benchmark repetitions (median taken)");
    add("--fit-lo", "fit_lo", "slope-fit window lower dt");
    add("--fit-hi", "fit_hi", "slope-fit window upper dt");
    add("--grid-per-decade", "grid_per_decade", "geometric grid density");
}

dpd::ExperimentConfig build_config(const CliState& st) {
    dpd::ExperimentConfig cfg;
    if (!st.config_path.empty()) cfg = dpd::load_config_file(st.config_path);
    std::string text;
    for (const auto& [key, value] : st.overrides) text += key + " = " + value + "\n";
    dpd::apply_config_text(cfg, text);
    return cfg;
}

std::filesystem::path ensure_out_dir(const dpd::ExperimentConfig& cfg) {
    std::filesystem::path dir(cfg.out);
    std::filesystem::create_directories(dir);
    return dir;
}

int cmd_simulate(const dpd::ExperimentConfig& cfg) {
    dpd::RunReport r = dpd::run_single(cfg);
    std::printf("scheme=%s dt=%g steps=%zu t_c=%.6g t_k=%.6g rel_err_tc=%.3g stable=%d\n",
                dpd::scheme_name(r.scheme), r.dt, r.steps, r.t_c, r.t_k, r.rel_err_tc,
                r.stable ? 1 : 0);
    if (!cfg.out.empty()) {
        auto dir = ensure_out_dir(cfg);
        dpd::write_runs_csv(dir / "runs.csv", {r});
        if (!r.rdf_g.empty()) {
            dpd::RdfCurve c{r.scheme, r.dt, r.stable, 0.0, r.rdf_g};
            dpd::write_rdf_csv(dir / "rdf.csv", r.rdf_centers, {c});
        }
    }
    return r.stable ? 0 : 3;
}

int cmd_sweep(const dpd::ExperimentConfig& cfg) {
    dpd::SweepResult res = dpd::sweep(cfg);
    for (const dpd::SweepSlope& s : res.slopes)
        std::printf("scheme=%s slope=%.4g points=%zu\n", dpd::scheme_name(s.scheme), s.slope,
                    s.points_used);
    if (!cfg.out.empty()) {
        auto dir = ensure_out_dir(cfg);
        dpd::write_runs_csv(dir / "runs.csv", res.runs);
    }
    return 0;
}

int cmd_critical(const dpd::ExperimentConfig& cfg) {
    std::vector<dpd::SchemeKind> schemes =
        cfg.schemes.empty() ? std::vector<dpd::SchemeKind>{cfg.scheme} : cfg.schemes;
    bool all_found = true;
    for (dpd::SchemeKind k : schemes) {
        dpd::CriticalResult res = dpd::critical_stepsize(cfg, k);
        if (res.found)
            std::printf("scheme=%s critical_dt=%.4g\n", dpd::scheme_name(k), res.critical_dt);
        else {
            std::printf("scheme=%s critical_dt=none (err at dt_lo=%.3g exceeds tolerance %.3g)\n",
                        dpd::scheme_name(k), res.err_at_lo, cfg.err_tol);
            all_found = false;
        }
    }
    return all_found ? 0 : 3;
}

int cmd_bench(const dpd::ExperimentConfig& cfg) {
    std::vector<dpd::SchemeKind> schemes =
        cfg.schemes.empty() ? std::vector<dpd::SchemeKind>{cfg.scheme} : cfg.schemes;
    for (dpd::SchemeKind k : schemes) {
        double ms = dpd::bench_cpu_per_step(cfg, k);
        std::printf("scheme=%s ms_per_step=%.6g\n", dpd::scheme_name(k), ms);
    }
    return 0;
}

int cmd_efficiency(const dpd::ExperimentConfig& cfg) {
    std::vector<dpd::EfficiencyRow> rows = dpd::efficiency_table(cfg);
    bool ok = true;
    for (const dpd::EfficiencyRow& r : rows) {
        std::printf("scheme=%s critical_dt=%.4g ms_per_step=%.6g efficiency_pct=%.4g\n",
                    dpd::scheme_name(r.scheme), r.critical_dt, r.ms_per_step, r.efficiency_pct);
        if (r.critical_dt <= 0.0) ok = false;
    }
    if (!cfg.out.empty()) {
        auto dir = ensure_out_dir(cfg);
        dpd::write_efficiency_csv(dir / "efficiency.csv", rows);
    }
    return ok ? 0 : 3;
}

int cmd_rdf(const dpd::ExperimentConfig& cfg, double ref_dt) {
    dpd::RdfStudyResult study = dpd::rdf_study(cfg, ref_dt);
    std::printf("reference scheme=shardlow dt=%g stable=%d\n", study.reference.dt,
                study.reference.stable ? 1 : 0);
    for (const dpd::RdfCurve& c : study.curves)
        std::printf("scheme=%s dt=%g sup_dev=%.4g stable=%d\n", dpd::scheme_name(c.scheme), c.dt,
                    c.sup_dev, c.stable ? 1 : 0);
    if (!cfg.out.empty()) {
        auto dir = ensure_out_dir(cfg);
        dpd::write_rdf_csv(dir / "rdf.csv", study);
    }
    return study.reference.stable ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dissipative particle dynamics integrator benchmark"};
    app.require_subcommand(1);

    CliState st;
    CLI::App* simulate = app.add_subcommand("simulate", "single run, temperatures and optional rdf");
    CLI::App* sweep = app.add_subcommand("sweep", "stepsize sweep with convergence slopes");
    CLI::App* critical = app.add_subcommand("critical", "largest stepsize within the T_c error tolerance");
    CLI::App* bench = app.add_subcommand("bench", "wall-clock cost per step");
    CLI::App* efficiency = app.add_subcommand("efficiency", "critical stepsize per cpu cost, shardlow = 100");
    CLI::App* rdf = app.add_subcommand("rdf", "radial distribution functions against a fine-step reference");
    for (CLI::App* cmd : {simulate, sweep, critical, bench, efficiency, rdf})
        add_common_options(cmd, st);
    rdf->add_option("--ref-dt", st.ref_dt, "reference stepsize for the rdf study");

    try {
        app.parse(argc, argv);
        dpd::ExperimentConfig cfg = build_config(st);
        if (simulate->parsed()) return cmd_simulate(cfg);
        if (sweep->parsed()) return cmd_sweep(cfg);
        if (critical->parsed()) return cmd_critical(cfg);
        if (bench->parsed()) return cmd_bench(cfg);
        if (efficiency->parsed()) return cmd_efficiency(cfg);
        if (rdf->parsed()) return cmd_rdf(cfg, st.ref_dt);
        std::fprintf(stderr, "no subcommand selected\n");
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // help/version exit clean, parse failures are config errors
    } catch (const dpd::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
