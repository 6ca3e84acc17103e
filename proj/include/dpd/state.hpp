#pragma once

#include <cstdint>
#include <vector>

#include "dpd/params.hpp"
#include "dpd/rng.hpp"
#include "dpd/vec3.hpp"

namespace dpd {

// Positions live wrapped in [0, L)^3; pair geometry always goes through
// minimum_image. f caches the conservative forces from the most recent
// evaluation so a velocity-Verlet style step can reuse the previous step's
// closing force evaluation instead of recomputing it.
struct SystemState {
    std::vector<Vec3> q;
    std::vector<Vec3> p;
    std::vector<Vec3> f;
    double t = 0.0;
    std::uint64_t step_count = 0;
};

// Uniform random positions in the box, Gaussian momenta with per-component
// variance mass*kBT, total momentum shifted to exactly zero, forces cached
// via a fresh all-pairs evaluation. Draw order: all positions, then all
// momenta, so a seed fixes the initial condition.
SystemState init_state(const DpdParams& params, RngStream& rng);

} // namespace dpd
