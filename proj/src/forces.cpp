#include "dpd/forces.hpp"

#include <cmath>
#include <string>

#include "dpd/box.hpp"
#include "dpd/errors.hpp"

namespace dpd {

double weight_r(double r, double r_c) { return r < r_c ? 1.0 - r / r_c : 0.0; }

double weight_d(double r, double r_c) {
    double w = weight_r(r, r_c);
    return w * w;
}

double pair_potential(double r, const DpdParams& params) {
    if (r >= params.r_c) return 0.0;
    double w = 1.0 - r / params.r_c;
    return 0.5 * params.a * params.r_c * w * w;
}

Vec3 pair_force(const Vec3& r_vec, double r, const DpdParams& params) {
    if (r >= params.r_c) return {};
    if (r == 0.0) throw DegeneratePairError("pair at zero separation; direction undefined");
    double w = 1.0 - r / params.r_c;
    return (params.a * w / r) * r_vec;
}

namespace {

// shared pair accumulation; Pairs must yield (i, j, r_vec, r) for every pair
// inside the cutoff in a deterministic order
template <class PairDriver>
ForceReport accumulate_forces(const SystemState& state, const DpdParams& params,
                              PairDriver&& drive) {
    ForceReport rep;
    rep.f.assign(state.q.size(), Vec3{});
    const double a = params.a;
    const double r_c = params.r_c;

    drive([&](std::uint32_t i, std::uint32_t j, const Vec3& d, double r) {
        double w = 1.0 - r / r_c;
        Vec3 fij = (a * w / r) * d;
        rep.f[i] += fij;
        rep.f[j] -= fij;
        rep.potential += 0.5 * a * r_c * w * w;
        // radial Laplacian phi'' + 2 phi'/r per member particle,
        // with phi' = -a*w and phi'' = a/r_c
        rep.laplacian_sum += 2.0 * (a / r_c - 2.0 * a * w / r);
        ++rep.pair_count;
    });

    for (const Vec3& fi : rep.f) rep.grad_sq_sum += norm2(fi);
    return rep;
}

} // namespace

ForceReport compute_forces(const SystemState& state, const DpdParams& params,
                           const NeighborList& list) {
    if (list.needs_rebuild(state, params))
        throw StaleListError("neighbor list no longer covers the current positions");
    return accumulate_forces(state, params, [&](auto&& fn) {
        for_each_interacting(list, state, params, fn);
    });
}

ForceReport compute_forces_all_pairs(const SystemState& state, const DpdParams& params) {
    const double rc2 = params.r_c * params.r_c;
    const std::size_t n = state.q.size();
    return accumulate_forces(state, params, [&](auto&& fn) {
        for (std::uint32_t i = 0; i + 1 < n; ++i) {
            for (std::uint32_t j = i + 1; j < n; ++j) {
                Vec3 d = minimum_image(state.q[i] - state.q[j], params.L);
                double r2 = norm2(d);
                if (r2 >= rc2) continue;
                if (r2 == 0.0)
                    throw DegeneratePairError("particles " + std::to_string(i) + " and " +
                                              std::to_string(j) + " coincide");
                fn(i, j, d, std::sqrt(r2));
            }
        }
    });
}

} // namespace dpd
