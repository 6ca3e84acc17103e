#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "dpd/neighbors.hpp"
#include "dpd/params.hpp"
#include "dpd/rng.hpp"
#include "dpd/state.hpp"

namespace dpd {

enum class SchemeKind { shardlow, aboba, mshardlow1, mshardlow2 };

// Composition coefficients and per-step force-evaluation budget. The
// mshardlow variants compose three velocity-Verlet substeps of sizes
// x1*h, x0*h, x1*h. mshardlow2 uses the fourth-order values
//   x1 = 1/(2 - 2^(1/3)),  x0 = -2^(1/3)/(2 - 2^(1/3)),
// which satisfy x0 + 2*x1 = 1 and x0^3 + 2*x1^3 = 0. mshardlow1 keeps the
// sign of x0 flipped to +2^(1/3)/(2 - 2^(1/3)); both identities then fail,
// the composition loses consistency and the fourth-order cancellation.
struct SchemeSpec {
    SchemeKind kind;
    int force_evals_per_step;
    double x0;
    double x1;
};

SchemeSpec scheme_spec(SchemeKind kind);
const char* scheme_name(SchemeKind kind);
std::optional<SchemeKind> scheme_from_name(std::string_view name);

struct StepCounters {
    std::uint64_t force_evaluations = 0;
    std::uint64_t pair_sweeps = 0;
    std::uint64_t gaussian_draws = 0;
    std::uint64_t list_rebuilds = 0;
};

// Generic kick-drift-kick with a pluggable force refresh, so the composition
// order can be exercised against surrogate forces in tests. refresh must
// recompute s.f from the current s.q (and may wrap positions first).
template <class Refresh>
inline void verlet_substep_generic(SystemState& s, double mass, double h, Refresh&& refresh) {
    const double half_h = 0.5 * h;
    const double inv_m = 1.0 / mass;
    const std::size_t n = s.q.size();
    for (std::size_t i = 0; i < n; ++i) s.p[i] += half_h * s.f[i];
    for (std::size_t i = 0; i < n; ++i) s.q[i] += (h * inv_m) * s.p[i];
    refresh(s);
    for (std::size_t i = 0; i < n; ++i) s.p[i] += half_h * s.f[i];
}

// triple composition x1*h, x0*h, x1*h of the substep above
template <class Refresh>
inline void yoshida4_substep_generic(SystemState& s, double mass, double h, double x0, double x1,
                                     Refresh&& refresh) {
    verlet_substep_generic(s, mass, x1 * h, refresh);
    verlet_substep_generic(s, mass, x0 * h, refresh);
    verlet_substep_generic(s, mass, x1 * h, refresh);
}

// DPD-bound substeps: positions are wrapped after every drift, the neighbor
// list is rebuilt when its skin guarantee lapses, and the closing force
// evaluation is left in state.f for the next consumer. Preconditions: state.f
// holds the forces for the entry positions (init_state and every substep
// maintain this).
void verlet_substep(SystemState& state, const DpdParams& params, NeighborList& list, double h,
                    StepCounters& counters);
void yoshida4_substep(SystemState& state, const DpdParams& params, NeighborList& list, double h,
                      double x0, double x1, StepCounters& counters);

// Shardlow's fluctuation-dissipation sweep: one BBK-discretized pairwise OU
// update per interacting pair, applied sequentially in ascending (i, j) order
// at the current positions. Each pair consumes one Gaussian, shared between
// the explicit and implicit half-updates. Momentum is conserved pair by pair.
void bbk_pair_sweep(SystemState& state, const DpdParams& params, double h,
                    const NeighborList& list, RngStream& rng);

// Exactly integrated pairwise OU update (the ABOBA O-block), sequential in
// ascending (i, j) order, one Gaussian per pair.
void exact_ou_pair_sweep(SystemState& state, const DpdParams& params, double h,
                         const NeighborList& list, RngStream& rng);

// One full step of the chosen scheme. Steady-state force evaluations per
// step: shardlow 1, aboba 1, mshardlow1/2 3 each.
void step(SchemeKind kind, SystemState& state, const DpdParams& params, double h,
          NeighborList& list, RngStream& rng, StepCounters& counters);

} // namespace dpd
