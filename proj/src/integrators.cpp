#include "dpd/integrators.hpp"

#include <cmath>

#include "dpd/box.hpp"
#include "dpd/errors.hpp"
#include "dpd/forces.hpp"

namespace dpd {

namespace {

// 2^(1/3) and the fourth-order composition denominators
const double cbrt2 = std::cbrt(2.0);
const double yosh_x1 = 1.0 / (2.0 - cbrt2);

// wrap positions, refresh the list if the skin guarantee lapsed, recompute
// forces; this is the refresh step every DPD drift is followed by
void refresh_dpd_forces(SystemState& s, const DpdParams& params, NeighborList& list,
                        StepCounters& counters) {
    for (Vec3& qi : s.q) qi = wrap_position(qi, params.L);
    if (ensure_fresh(list, s, params)) ++counters.list_rebuilds;
    ForceReport rep = compute_forces(s, params, list);
    s.f = std::move(rep.f);
    ++counters.force_evaluations;
}

void guard_fresh(const NeighborList& list, const SystemState& state, const DpdParams& params) {
    if (list.needs_rebuild(state, params))
        throw StaleListError("pair sweep requires a fresh neighbor list");
}

} // namespace

SchemeSpec scheme_spec(SchemeKind kind) {
    switch (kind) {
    case SchemeKind::shardlow:
        return {kind, 1, 0.0, 0.0};
    case SchemeKind::aboba:
        return {kind, 1, 0.0, 0.0};
    case SchemeKind::mshardlow1:
        // improper sign on the middle coefficient; kept for comparison runs
        return {kind, 3, cbrt2 / (2.0 - cbrt2), yosh_x1};
    case SchemeKind::mshardlow2:
        return {kind, 3, -cbrt2 / (2.0 - cbrt2), yosh_x1};
    }
    throw ConfigError("unknown scheme");
}

const char* scheme_name(SchemeKind kind) {
    switch (kind) {
    case SchemeKind::shardlow: return "shardlow";
    case SchemeKind::aboba: return "aboba";
    case SchemeKind::mshardlow1: return "mshardlow1";
    case SchemeKind::mshardlow2: return "mshardlow2";
    }
    return "?";
}

std::optional<SchemeKind> scheme_from_name(std::string_view name) {
    if (name == "shardlow") return SchemeKind::shardlow;
    if (name == "aboba") return SchemeKind::aboba;
    if (name == "mshardlow1" || name == "m-shardlow-1") return SchemeKind::mshardlow1;
    if (name == "mshardlow2" || name == "m-shardlow-2") return SchemeKind::mshardlow2;
    return std::nullopt;
}

void verlet_substep(SystemState& state, const DpdParams& params, NeighborList& list, double h,
                    StepCounters& counters) {
    verlet_substep_generic(state, params.mass, h,
                           [&](SystemState& s) { refresh_dpd_forces(s, params, list, counters); });
}

void yoshida4_substep(SystemState& state, const DpdParams& params, NeighborList& list, double h,
                      double x0, double x1, StepCounters& counters) {
    yoshida4_substep_generic(state, params.mass, h, x0, x1, [&](SystemState& s) {
        refresh_dpd_forces(s, params, list, counters);
    });
}

void bbk_pair_sweep(SystemState& state, const DpdParams& params, double h,
                    const NeighborList& list, RngStream& rng) {
    guard_fresh(list, state, params);
    const double inv_m = 1.0 / params.mass;
    const double half_gamma_h = 0.5 * params.gamma * h;
    const double half_sigma_sqrt_h = 0.5 * params.sigma * std::sqrt(h);

    for_each_interacting(list, state, params,
                         [&](std::uint32_t i, std::uint32_t j, const Vec3& d, double r) {
        Vec3 e = (1.0 / r) * d;
        double wr = 1.0 - r / params.r_c;
        double K = half_gamma_h * wr * wr;          // gamma * w_d * h/2
        double Js = half_sigma_sqrt_h * wr * rng.gaussian(); // one draw, both halves

        // explicit half update of the projected relative velocity
        double proj = dot(e, state.p[i] - state.p[j]) * inv_m;
        Vec3 d1 = (K * proj - Js) * e;
        state.p[i] -= d1;
        state.p[j] += d1;

        // implicit half, resolved in closed form
        double proj2 = dot(e, state.p[i] - state.p[j]) * inv_m;
        double g = K / (1.0 + 2.0 * K * inv_m);
        Vec3 d2 = (g * (proj2 + 2.0 * Js * inv_m) - Js) * e;
        state.p[i] -= d2;
        state.p[j] += d2;
    });
}

void exact_ou_pair_sweep(SystemState& state, const DpdParams& params, double h,
                         const NeighborList& list, RngStream& rng) {
    guard_fresh(list, state, params);
    const double inv_m = 1.0 / params.mass;
    const double m_ij = 0.5 * params.mass; // reduced mass, monodisperse

    for_each_interacting(list, state, params,
                         [&](std::uint32_t i, std::uint32_t j, const Vec3& d, double r) {
        Vec3 e = (1.0 / r) * d;
        double wr = 1.0 - r / params.r_c;
        double tau = params.gamma * wr * wr / m_ij;
        double th = tau * h;

        double proj = dot(e, state.p[i] - state.p[j]) * inv_m;
        // stationary-variance-exact OU update; (1 - exp(-2 tau h)) / (2 tau)
        // degrades to h as tau h -> 0
        double var_fac = th < 1e-12 ? h : (1.0 - std::exp(-2.0 * th)) / (2.0 * tau);
        double dv = proj * (std::exp(-th) - 1.0) +
                    (params.sigma * wr / m_ij) * std::sqrt(var_fac) * rng.gaussian();

        Vec3 dp = (m_ij * dv) * e;
        state.p[i] += dp;
        state.p[j] -= dp;
    });
}

void step(SchemeKind kind, SystemState& state, const DpdParams& params, double h,
          NeighborList& list, RngStream& rng, StepCounters& counters) {
    switch (kind) {
    case SchemeKind::shardlow:
        verlet_substep(state, params, list, h, counters);
        bbk_pair_sweep(state, params, h, list, rng);
        ++counters.pair_sweeps;
        break;

    case SchemeKind::aboba: {
        const double half_h = 0.5 * h;
        const double drift = half_h / params.mass;
        for (std::size_t i = 0; i < state.q.size(); ++i)
            state.q[i] = wrap_position(state.q[i] + drift * state.p[i], params.L);
        if (ensure_fresh(list, state, params)) ++counters.list_rebuilds;
        ForceReport rep = compute_forces(state, params, list);
        state.f = std::move(rep.f);
        ++counters.force_evaluations;

        for (std::size_t i = 0; i < state.p.size(); ++i) state.p[i] += half_h * state.f[i];
        exact_ou_pair_sweep(state, params, h, list, rng);
        ++counters.pair_sweeps;
        // second half kick reuses the midpoint force
        for (std::size_t i = 0; i < state.p.size(); ++i) state.p[i] += half_h * state.f[i];

        for (std::size_t i = 0; i < state.q.size(); ++i)
            state.q[i] = wrap_position(state.q[i] + drift * state.p[i], params.L);
        break;
    }

    case SchemeKind::mshardlow1:
    case SchemeKind::mshardlow2: {
        SchemeSpec spec = scheme_spec(kind);
        yoshida4_substep(state, params, list, h, spec.x0, spec.x1, counters);
        bbk_pair_sweep(state, params, h, list, rng);
        ++counters.pair_sweeps;
        break;
    }
    }

    state.t += h;
    ++state.step_count;
}

} // namespace dpd
