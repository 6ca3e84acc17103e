#pragma once

#include <cstddef>
#include <vector>

#include "dpd/neighbors.hpp"
#include "dpd/params.hpp"
#include "dpd/state.hpp"
#include "dpd/vec3.hpp"

namespace dpd {

// random-force weight: 1 - r/r_c inside the cutoff, 0 outside
double weight_r(double r, double r_c);

// dissipative weight, the square of weight_r
double weight_d(double r, double r_c);

// soft-repulsion pair energy: (a*r_c/2)*(1 - r/r_c)^2 inside the cutoff
double pair_potential(double r, const DpdParams& params);

// conservative force on particle i from j; r_vec is the minimum-image q_i - q_j
Vec3 pair_force(const Vec3& r_vec, double r, const DpdParams& params);

struct ForceReport {
    std::vector<Vec3> f;
    double potential = 0.0;
    double grad_sq_sum = 0.0;   // sum_i |grad_i U|^2, numerator of the configurational temperature
    double laplacian_sum = 0.0; // sum_i laplacian_i U, its denominator
    std::size_t pair_count = 0; // pairs strictly inside the cutoff
};

// Forces plus the configurational-temperature sums in one pass over the
// candidate pairs. The list must be fresh for the current positions.
ForceReport compute_forces(const SystemState& state, const DpdParams& params,
                           const NeighborList& list);

// O(N^2) reference path, used for initialization and as test oracle
ForceReport compute_forces_all_pairs(const SystemState& state, const DpdParams& params);

} // namespace dpd
