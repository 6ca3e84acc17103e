#include "dpd/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "dpd/box.hpp"
#include "dpd/errors.hpp"
#include "dpd/forces.hpp"
#include "dpd/neighbors.hpp"

namespace dpd {

namespace {

constexpr double quiet_nan = std::numeric_limits<double>::quiet_NaN();

// run independent jobs on a small worker pool; rethrows the first failure
void run_jobs(std::vector<std::function<void()>>& jobs, unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
    if (threads <= 1) {
        for (auto& job : jobs) job();
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) {
            try {
                jobs[k]();
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<SchemeKind> scheme_list(const ExperimentConfig& cfg) {
    return cfg.schemes.empty() ? std::vector<SchemeKind>{cfg.scheme} : cfg.schemes;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// A run is dead when momenta stop being finite or the kinetic temperature
// runs away. The conservative force is bounded and the pair thermostats are
// contractive, so a diverging scheme never overflows to inf here; it heats
// to a garbage plateau instead. 20x the target temperature is ~270 sigma of
// the equilibrium fluctuation at N=125 and far beyond any transient.
bool momenta_sane(const SystemState& state, const DpdParams& params) {
    double acc = 0.0;
    for (const Vec3& pi : state.p) acc += norm2(pi);
    if (!std::isfinite(acc)) return false;
    const double n_dof = 3.0 * (static_cast<double>(state.p.size()) - 1.0);
    return acc / (params.mass * n_dof) <= 20.0 * params.kBT;
}

} // namespace

DpdParams ExperimentConfig::params() const {
    return DpdParams::standard(a, gamma, kbt, rc, box, n, mass);
}

RunReport run_single(const ExperimentConfig& cfg) {
    DpdParams params = cfg.params();
    if (!(cfg.dt > 0.0)) throw ConfigError("stepsize dt must be > 0");
    if (!(cfg.time > 0.0)) throw ConfigError("simulated time must be > 0");
    if (!(cfg.equil_fraction >= 0.0 && cfg.equil_fraction < 1.0))
        throw ConfigError("equil_fraction must lie in [0, 1)");
    if (cfg.temp_stride == 0 || cfg.rdf_stride == 0)
        throw ConfigError("sampling strides must be >= 1");

    const auto steps = static_cast<std::size_t>(std::floor(cfg.time / cfg.dt));
    if (steps == 0) throw ConfigError("time shorter than one step");
    const auto equil = static_cast<std::size_t>(std::floor(cfg.equil_fraction *
                                                           static_cast<double>(steps)));

    RunReport rep;
    rep.scheme = cfg.scheme;
    rep.a = params.a;
    rep.gamma = params.gamma;
    rep.dt = cfg.dt;
    rep.steps = steps;
    rep.seed = cfg.seed;

    RngStream rng(cfg.seed);
    SystemState state = init_state(params, rng);
    NeighborList list = NeighborList::build(state, params, cfg.skin);
    StepCounters counters;
    ObservableSeries series;

    std::optional<RdfHistogram> rdf;
    std::size_t rdf_stride = cfg.rdf_stride;
    if (cfg.collect_rdf) {
        double r_max = cfg.rdf_r_max > 0.0 ? cfg.rdf_r_max : 0.5 * params.L;
        rdf.emplace(cfg.rdf_bin, r_max);
        if (cfg.rdf_min_snapshots > 0 && steps > equil) {
            std::size_t widest = (steps - equil) / cfg.rdf_min_snapshots;
            rdf_stride = std::clamp<std::size_t>(widest, 1, cfg.rdf_stride);
        }
    }

    const auto wall_start = std::chrono::steady_clock::now();
    std::size_t done = 0;
    for (std::size_t s = 1; s <= steps; ++s) {
        try {
            step(cfg.scheme, state, params, cfg.dt, list, rng, counters);
        } catch (const DegeneratePairError&) {
            rep.stable = false;
            rep.unstable_step = s;
            break;
        }
        done = s;
        if (!momenta_sane(state, params)) {
            rep.stable = false;
            rep.unstable_step = s;
            break;
        }
        if (s > equil) {
            if (s % cfg.temp_stride == 0) {
                if (ensure_fresh(list, state, params)) ++counters.list_rebuilds;
                series.add_sample(kinetic_temperature(state, params),
                                  compute_forces(state, params, list));
            }
            if (rdf && s % rdf_stride == 0) {
                rdf->accumulate(state, params);
            }
        }
    }
    const auto wall_end = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(wall_end - wall_start).count();
    rep.ms_per_step = done > 0 ? ms / static_cast<double>(done) : quiet_nan;
    counters.gaussian_draws = rng.draw_count();
    rep.counters = counters;

    if (series.samples() > 0) {
        rep.t_k = series.mean_kinetic_temperature();
        rep.rel_err_tk = std::abs(rep.t_k - params.kBT) / params.kBT;
        try {
            rep.t_c = series.configurational_temperature();
            rep.rel_err_tc = std::abs(rep.t_c - params.kBT) / params.kBT;
        } catch (const EstimateError&) {
            rep.t_c = quiet_nan;
            rep.rel_err_tc = quiet_nan;
        }
    } else {
        rep.t_c = rep.t_k = rep.rel_err_tc = rep.rel_err_tk = quiet_nan;
    }

    if (rdf && rdf->snapshots() > 0) {
        rep.rdf_centers = rdf->bin_centers();
        rep.rdf_g = rdf->finalize(params);
    }
    return rep;
}

RunReport run_averaged(const ExperimentConfig& cfg, SchemeKind scheme, double dt) {
    ExperimentConfig local = cfg;
    local.scheme = scheme;
    local.dt = dt;
    if (cfg.replicas <= 1) return run_single(local);

    std::vector<RunReport> reps;
    reps.reserve(cfg.replicas);
    for (std::size_t r = 0; r < cfg.replicas; ++r) {
        local.seed = cfg.seed + r;
        reps.push_back(run_single(local));
    }
    RunReport out = reps.front();
    out.seed = cfg.seed;
    double tc = 0.0, tk = 0.0;
    for (const RunReport& r : reps) {
        if (!r.stable) {
            out.stable = false;
            out.unstable_step = r.unstable_step;
            return out;
        }
        tc += r.t_c;
        tk += r.t_k;
    }
    const auto n = static_cast<double>(reps.size());
    out.t_c = tc / n;
    out.t_k = tk / n;
    DpdParams params = cfg.params();
    out.rel_err_tc = std::abs(out.t_c - params.kBT) / params.kBT;
    out.rel_err_tk = std::abs(out.t_k - params.kBT) / params.kBT;
    return out;
}

std::vector<double> geometric_grid(double lo, double hi, int points_per_decade) {
    if (!(lo > 0.0) || !(hi > lo)) throw ConfigError("grid needs 0 < lo < hi");
    if (points_per_decade < 1) throw ConfigError("grid density must be >= 1 point per decade");
    const double decades = std::log10(hi / lo);
    const int intervals = std::max(1, static_cast<int>(std::ceil(decades * points_per_decade)));
    std::vector<double> grid;
    grid.reserve(intervals + 1);
    for (int k = 0; k <= intervals; ++k)
        grid.push_back(lo * std::pow(hi / lo, static_cast<double>(k) / intervals));
    grid.back() = hi;
    return grid;
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw EstimateError("slope fit needs matching vectors");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!(x[k] > 0.0) || !(y[k] > 0.0) || !std::isfinite(y[k])) continue;
        double lx = std::log(x[k]);
        double ly = std::log(y[k]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) throw EstimateError("slope fit needs at least two usable points");
    const double dn = static_cast<double>(n);
    const double denom = dn * sxx - sx * sx;
    if (denom == 0.0) throw EstimateError("slope fit degenerate: identical stepsizes");
    return (dn * sxy - sx * sy) / denom;
}

SweepResult sweep(const ExperimentConfig& cfg) {
    const std::vector<SchemeKind> schemes = scheme_list(cfg);
    const std::vector<double> dts = cfg.dt_list.empty()
                                        ? geometric_grid(cfg.dt_lo, cfg.dt_hi, cfg.grid_per_decade)
                                        : cfg.dt_list;

    SweepResult result;
    result.runs.resize(schemes.size() * dts.size());
    std::vector<std::function<void()>> jobs;
    jobs.reserve(result.runs.size());
    for (std::size_t si = 0; si < schemes.size(); ++si) {
        for (std::size_t di = 0; di < dts.size(); ++di) {
            jobs.push_back([&, si, di] {
                result.runs[si * dts.size() + di] = run_averaged(cfg, schemes[si], dts[di]);
            });
        }
    }
    run_jobs(jobs, cfg.threads);

    for (std::size_t si = 0; si < schemes.size(); ++si) {
        std::vector<double> xs, ys;
        for (std::size_t di = 0; di < dts.size(); ++di) {
            const RunReport& r = result.runs[si * dts.size() + di];
            if (!r.stable || !(r.dt >= cfg.fit_lo && r.dt <= cfg.fit_hi)) continue;
            if (!std::isfinite(r.rel_err_tc) || r.rel_err_tc <= 0.0) continue;
            xs.push_back(r.dt);
            ys.push_back(r.rel_err_tc);
        }
        SweepSlope s{schemes[si], quiet_nan, xs.size()};
        if (xs.size() >= 2) s.slope = fit_loglog_slope(xs, ys);
        result.slopes.push_back(s);
    }
    return result;
}

CriticalResult critical_stepsize(const ExperimentConfig& cfg, SchemeKind scheme) {
    if (!(cfg.dt_lo > 0.0) || !(cfg.dt_hi > cfg.dt_lo))
        throw ConfigError("critical search needs 0 < dt_lo < dt_hi");
    auto probe = [&](double dt) {
        RunReport r = run_averaged(cfg, scheme, dt);
        double err = r.stable && std::isfinite(r.rel_err_tc)
                         ? r.rel_err_tc
                         : std::numeric_limits<double>::infinity();
        return err;
    };

    CriticalResult res;
    res.scheme = scheme;
    res.err_at_lo = probe(cfg.dt_lo);
    if (!(res.err_at_lo <= cfg.err_tol)) return res; // no good end to bisect from

    res.err_at_hi = probe(cfg.dt_hi);
    if (res.err_at_hi <= cfg.err_tol) {
        res.found = true;
        res.critical_dt = cfg.dt_hi; // whole bracket within tolerance
        return res;
    }

    double lo = cfg.dt_lo, hi = cfg.dt_hi;
    while (hi - lo > cfg.resolution) {
        double mid = 0.5 * (lo + hi);
        if (probe(mid) <= cfg.err_tol)
            lo = mid;
        else
            hi = mid;
    }
    res.found = true;
    res.critical_dt = lo;
    return res;
}

double bench_cpu_per_step(const ExperimentConfig& cfg, SchemeKind scheme) {
    DpdParams params = cfg.params();
    if (!(cfg.dt > 0.0)) throw ConfigError("stepsize dt must be > 0");
    if (cfg.bench_steps == 0 || cfg.bench_reps == 0)
        throw ConfigError("bench needs at least one step and one repetition");

    RngStream rng(cfg.seed);
    SystemState state = init_state(params, rng);
    NeighborList list = NeighborList::build(state, params, cfg.skin);
    StepCounters counters;

    for (std::size_t s = 0; s < 200; ++s) // settle the fluid before timing
        step(scheme, state, params, cfg.dt, list, rng, counters);

    std::vector<double> per_step;
    per_step.reserve(cfg.bench_reps);
    for (std::size_t rep = 0; rep < cfg.bench_reps; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        for (std::size_t s = 0; s < cfg.bench_steps; ++s)
            step(scheme, state, params, cfg.dt, list, rng, counters);
        const auto t1 = std::chrono::steady_clock::now();
        per_step.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count() /
                           static_cast<double>(cfg.bench_steps));
    }
    std::sort(per_step.begin(), per_step.end());
    return per_step[per_step.size() / 2];
}

std::vector<EfficiencyRow> efficiency_table(const ExperimentConfig& cfg) {
    const std::vector<SchemeKind> schemes = scheme_list(cfg);
    std::vector<EfficiencyRow> rows(schemes.size());

    // criticals can run concurrently; timing loops must not, so bench serially
    std::vector<std::function<void()>> jobs;
    for (std::size_t k = 0; k < schemes.size(); ++k) {
        jobs.push_back([&, k] {
            CriticalResult crit = critical_stepsize(cfg, schemes[k]);
            rows[k].scheme = schemes[k];
            rows[k].critical_dt = crit.found ? crit.critical_dt : 0.0;
        });
    }
    run_jobs(jobs, cfg.threads);
    for (std::size_t k = 0; k < schemes.size(); ++k)
        rows[k].ms_per_step = bench_cpu_per_step(cfg, schemes[k]);

    double base = 0.0;
    for (const EfficiencyRow& row : rows)
        if (row.scheme == SchemeKind::shardlow && row.ms_per_step > 0.0)
            base = row.critical_dt / row.ms_per_step;
    if (base == 0.0 && !rows.empty() && rows.front().ms_per_step > 0.0)
        base = rows.front().critical_dt / rows.front().ms_per_step;
    for (EfficiencyRow& row : rows) {
        double raw = row.ms_per_step > 0.0 ? row.critical_dt / row.ms_per_step : 0.0;
        row.efficiency_pct = base > 0.0 ? 100.0 * raw / base : 0.0;
    }
    return rows;
}

RdfStudyResult rdf_study(const ExperimentConfig& cfg, double ref_dt) {
    const std::vector<SchemeKind> schemes = scheme_list(cfg);
    const std::vector<double> dts = cfg.dt_list.empty() ? std::vector<double>{0.01}
                                                        : cfg.dt_list;

    ExperimentConfig base = cfg;
    base.collect_rdf = true;
    if (base.rdf_min_snapshots == 0) base.rdf_min_snapshots = 2000;

    RdfStudyResult study;
    auto curve_run = [&](SchemeKind scheme, double dt) {
        ExperimentConfig local = base;
        local.scheme = scheme;
        local.dt = dt;
        RunReport r = run_single(local);
        RdfCurve c;
        c.scheme = scheme;
        c.dt = dt;
        c.stable = r.stable;
        c.g = r.rdf_g;
        if (study.centers.empty() && !r.rdf_centers.empty()) study.centers = r.rdf_centers;
        return c;
    };

    std::vector<RdfCurve> curves(schemes.size() * dts.size());
    std::vector<std::function<void()>> jobs;
    jobs.push_back([&] { study.reference = curve_run(SchemeKind::shardlow, ref_dt); });
    for (std::size_t si = 0; si < schemes.size(); ++si)
        for (std::size_t di = 0; di < dts.size(); ++di)
            jobs.push_back(
                [&, si, di] { curves[si * dts.size() + di] = curve_run(schemes[si], dts[di]); });
    run_jobs(jobs, cfg.threads);

    for (RdfCurve& c : curves) {
        c.sup_dev = c.g.size() == study.reference.g.size() && !c.g.empty()
                        ? rdf_sup_distance(study.centers, c.g, study.reference.g, 0.1)
                        : std::numeric_limits<double>::infinity();
    }
    study.reference.sup_dev = 0.0;
    study.curves = std::move(curves);
    return study;
}

void write_runs_csv(const std::filesystem::path& path, const std::vector<RunReport>& runs) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
    out << "scheme,a,gamma,dt,steps,t_c,t_k,rel_err_tc,rel_err_tk,ms_per_step,force_evals,stable\n";
    for (const RunReport& r : runs) {
        out << scheme_name(r.scheme) << ',' << fmt_double(r.a) << ',' << fmt_double(r.gamma)
            << ',' << fmt_double(r.dt) << ',' << r.steps << ',' << fmt_double(r.t_c) << ','
            << fmt_double(r.t_k) << ',' << fmt_double(r.rel_err_tc) << ','
            << fmt_double(r.rel_err_tk) << ',' << fmt_double(r.ms_per_step) << ','
            << r.counters.force_evaluations << ',' << (r.stable ? 1 : 0) << '\n';
    }
}

void write_rdf_csv(const std::filesystem::path& path, const std::vector<double>& centers,
                   const std::vector<RdfCurve>& curves) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
    out << "r_center,g,scheme,dt\n";
    for (const RdfCurve& c : curves) {
        for (std::size_t k = 0; k < c.g.size(); ++k) {
            out << fmt_double(centers[k]) << ',' << fmt_double(c.g[k]) << ','
                << scheme_name(c.scheme) << ',' << fmt_double(c.dt) << '\n';
        }
    }
}

void write_rdf_csv(const std::filesystem::path& path, const RdfStudyResult& study) {
    std::vector<RdfCurve> all;
    all.reserve(study.curves.size() + 1);
    all.push_back(study.reference);
    all.insert(all.end(), study.curves.begin(), study.curves.end());
    write_rdf_csv(path, study.centers, all);
}

void write_efficiency_csv(const std::filesystem::path& path,
                          const std::vector<EfficiencyRow>& rows) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
    out << "scheme,critical_dt,ms_per_step,efficiency_pct\n";
    for (const EfficiencyRow& r : rows) {
        out << scheme_name(r.scheme) << ',' << fmt_double(r.critical_dt) << ','
            << fmt_double(r.ms_per_step) << ',' << fmt_double(r.efficiency_pct) << '\n';
    }
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value for '" + key + "': " + v);
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        unsigned long long x = std::stoull(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("bad integer value for '" + key + "': " + v);
    }
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw ConfigError("bad boolean value for '" + key + "': " + v);
}

std::vector<std::string> split_commas(const std::string& v) {
    std::vector<std::string> parts;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

SchemeKind parse_scheme(const std::string& key, const std::string& v) {
    auto k = scheme_from_name(v);
    if (!k) throw ConfigError("unknown scheme for '" + key + "': " + v);
    return *k;
}

} // namespace

void apply_config_text(ExperimentConfig& cfg, const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + " is not 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError("config line " + std::to_string(lineno) + " is missing key or value");

        if (key == "scheme") cfg.scheme = parse_scheme(key, val);
        else if (key == "schemes") {
            cfg.schemes.clear();
            for (const std::string& s : split_commas(val)) cfg.schemes.push_back(parse_scheme(key, s));
        }
        else if (key == "a") cfg.a = parse_double(key, val);
        else if (key == "gamma") cfg.gamma = parse_double(key, val);
        else if (key == "kbt") cfg.kbt = parse_double(key, val);
        else if (key == "rc") cfg.rc = parse_double(key, val);
        else if (key == "mass") cfg.mass = parse_double(key, val);
        else if (key == "box") cfg.box = parse_double(key, val);
        else if (key == "n") cfg.n = static_cast<std::size_t>(parse_u64(key, val));
        else if (key == "dt") cfg.dt = parse_double(key, val);
        else if (key == "dt_list") {
            cfg.dt_list.clear();
            for (const std::string& s : split_commas(val)) cfg.dt_list.push_back(parse_double(key, s));
        }
        else if (key == "time") cfg.time = parse_double(key, val);
        else if (key == "seed") cfg.seed = parse_u64(key, val);
        else if (key == "out") cfg.out = val;
        else if (key == "skin") cfg.skin = parse_double(key, val);
        else if (key == "equil_fraction") cfg.equil_fraction = parse_double(key, val);
        else if (key == "temp_stride") cfg.temp_stride = static_cast<std::size_t>(parse_u64(key, val));
        else if (key == "rdf_stride") cfg.rdf_stride = static_cast<std::size_t>(parse_u64(key, val));
        else if (key == "rdf_min_snapshots")
            cfg.rdf_min_snapshots = static_cast<std::size_t>(parse_u64(key, val));
        else if (key == "rdf_bin") cfg.rdf_bin = parse_double(key, val);
        else if (key == "rdf_r_max") cfg.rdf_r_max = parse_double(key, val);
        else if (key == "collect_rdf") cfg.collect_rdf = parse_bool(key, val);
        else if (key == "replicas") cfg.replicas = static_cast<std::size_t>(parse_u64(key, val));
        else if (key == "threads") cfg.threads = static_cast<unsigned>(parse_u64(key, val));
        else if (key == "dt_lo") cfg.dt_lo = parse_double(key, val);
        else if (key == "dt_hi") cfg.dt_hi = parse_double(key, val);
        else if (key == "err_tol") cfg.err_tol = parse_double(key, val);
        else if (key == "resolution") cfg.resolution = parse_double(key, val);
        else if (key == "bench_steps") cfg.bench_steps = static_cast<std::size_t>(parse_u64(key, val));
        else if (key == "bench_reps") cfg.bench_reps = static_cast<std::size_t>(parse_u64(key, val));
        else if (key == "fit_lo") cfg.fit_lo = parse_double(key, val);
        else if (key == "fit_hi") cfg.fit_hi = parse_double(key, val);
        else if (key == "grid_per_decade") cfg.grid_per_decade = static_cast<int>(parse_u64(key, val));
        else throw ConfigError("unknown config key '" + key + "'");
    }
}

ExperimentConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    ExperimentConfig cfg;
    apply_config_text(cfg, buf.str());
    return cfg;
}

} // namespace dpd
