#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpd/box.hpp"
#include "dpd/errors.hpp"
#include "dpd/params.hpp"
#include "dpd/state.hpp"
#include "dpd/vec3.hpp"

namespace dpd {

// Verlet candidate list: all pairs (i<j) with minimum-image distance
// < r_c + skin at build time. The list covers every pair within r_c until the
// two largest displacements from the build-time anchors sum to the skin,
// which is what needs_rebuild reports. Pairs are kept sorted ascending by
// (i, j) so every consumer walks them in the same deterministic order.
class NeighborList {
public:
    struct Pair {
        std::uint32_t i, j;
    };

    NeighborList() = default;

    // throws ConfigError when L < 2*(r_c + skin)
    static NeighborList build(const SystemState& state, const DpdParams& params, double skin);

    bool needs_rebuild(const SystemState& state, const DpdParams& params) const;

    const std::vector<Pair>& candidates() const { return pairs_; }
    double skin() const { return skin_; }
    std::size_t size() const { return pairs_.size(); }

private:
    std::vector<Pair> pairs_;
    std::vector<Vec3> anchors_;
    double skin_ = 0.0;
};

struct InteractingPair {
    std::uint32_t i, j;
    Vec3 r_vec; // minimum-image q_i - q_j
    double r;
};

// rebuilds in place when the skin guarantee has lapsed; returns true if rebuilt
bool ensure_fresh(NeighborList& list, const SystemState& state, const DpdParams& params);

// pairs currently within r_c, ascending (i, j); throws StaleListError if the
// list no longer covers the current positions
std::vector<InteractingPair> interacting_pairs(const NeighborList& list, const SystemState& state,
                                               const DpdParams& params);

// Fast path shared by forces and the pair sweeps: walks candidates in list
// order and invokes fn(i, j, r_vec, r) for those within the cutoff. Caller is
// responsible for list freshness. Throws DegeneratePairError at r == 0.
template <class F>
inline void for_each_interacting(const NeighborList& list, const SystemState& state,
                                 const DpdParams& params, F&& fn) {
    const double rc2 = params.r_c * params.r_c;
    for (const auto& pr : list.candidates()) {
        Vec3 d = fold_image(state.q[pr.i] - state.q[pr.j], params.L);
        double r2 = norm2(d);
        if (r2 >= rc2) continue;
        if (r2 == 0.0)
            throw DegeneratePairError("particles " + std::to_string(pr.i) + " and " +
                                      std::to_string(pr.j) + " coincide; pair direction undefined");
        fn(pr.i, pr.j, d, std::sqrt(r2));
    }
}

} // namespace dpd
