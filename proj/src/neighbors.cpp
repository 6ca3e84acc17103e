#include "dpd/neighbors.hpp"

#include <algorithm>
#include <cmath>

namespace dpd {

namespace {

int cell_index_1d(double x, double inv_edge, int n_cells) {
    int c = static_cast<int>(x * inv_edge);
    // wrapped coordinates sit in [0, L) but x*inv_edge can round onto n_cells
    if (c >= n_cells) c = n_cells - 1;
    if (c < 0) c = 0;
    return c;
}

} // namespace

NeighborList NeighborList::build(const SystemState& state, const DpdParams& params, double skin) {
    if (!(skin >= 0.0)) throw ConfigError("neighbor skin must be >= 0");
    const double cut = params.r_c + skin;
    if (params.L < 2.0 * cut)
        throw ConfigError("box edge " + std::to_string(params.L) +
                          " too small for cutoff+skin " + std::to_string(cut) +
                          "; need L >= 2*(r_c + skin)");

    NeighborList nl;
    nl.skin_ = skin;
    nl.anchors_ = state.q;

    const double cut2 = cut * cut;
    const std::size_t n = state.q.size();
    const int nc = static_cast<int>(std::floor(params.L / cut));

    // expected pair count at uniform density, with headroom to avoid regrowth
    nl.pairs_.reserve(static_cast<std::size_t>(
        0.6 * static_cast<double>(n) * params.rho * 4.18879 * cut * cut * cut));

    if (nc < 4) {
        // with three cells per edge the wrap-around stencil already visits
        // every cell pair, so cells prune nothing; the direct scan is cheaper
        // and emits pairs in ascending order without a sort
        for (std::uint32_t i = 0; i + 1 < n; ++i) {
            const Vec3 qi = state.q[i];
            for (std::uint32_t j = i + 1; j < n; ++j) {
                double dx = fold_image_1d(qi.x - state.q[j].x, params.L);
                if (dx * dx >= cut2) continue;
                double dy = fold_image_1d(qi.y - state.q[j].y, params.L);
                double dz = fold_image_1d(qi.z - state.q[j].z, params.L);
                if (dx * dx + dy * dy + dz * dz < cut2) nl.pairs_.push_back({i, j});
            }
        }
        return nl;
    }

    const double inv_edge = nc / params.L;
    const int ncells = nc * nc * nc;
    std::vector<int> head(ncells, -1);
    std::vector<int> next(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        int cx = cell_index_1d(state.q[i].x, inv_edge, nc);
        int cy = cell_index_1d(state.q[i].y, inv_edge, nc);
        int cz = cell_index_1d(state.q[i].z, inv_edge, nc);
        int c = (cz * nc + cy) * nc + cx;
        next[i] = head[c];
        head[c] = static_cast<int>(i);
    }

    // half stencil: same cell handled separately, each neighbor cell pair once
    static const int offs[13][3] = {{1, 0, 0},  {-1, 1, 0},  {0, 1, 0},  {1, 1, 0},
                                    {-1, -1, 1}, {0, -1, 1}, {1, -1, 1}, {-1, 0, 1},
                                    {0, 0, 1},  {1, 0, 1},  {-1, 1, 1}, {0, 1, 1},
                                    {1, 1, 1}};

    auto consider = [&](int i, int j) {
        Vec3 d = fold_image(state.q[i] - state.q[j], params.L);
        if (norm2(d) < cut2) {
            auto a = static_cast<std::uint32_t>(i);
            auto b = static_cast<std::uint32_t>(j);
            if (a > b) std::swap(a, b);
            nl.pairs_.push_back({a, b});
        }
    };

    for (int cz = 0; cz < nc; ++cz) {
        for (int cy = 0; cy < nc; ++cy) {
            for (int cx = 0; cx < nc; ++cx) {
                int c = (cz * nc + cy) * nc + cx;
                for (int i = head[c]; i >= 0; i = next[i]) {
                    for (int j = next[i]; j >= 0; j = next[j]) consider(i, j);
                }
                for (const auto& off : offs) {
                    int ox = (cx + off[0] + nc) % nc;
                    int oy = (cy + off[1] + nc) % nc;
                    int oz = (cz + off[2] + nc) % nc;
                    int c2 = (oz * nc + oy) * nc + ox;
                    for (int i = head[c]; i >= 0; i = next[i]) {
                        for (int j = head[c2]; j >= 0; j = next[j]) consider(i, j);
                    }
                }
            }
        }
    }

    std::sort(nl.pairs_.begin(), nl.pairs_.end(), [](const Pair& a, const Pair& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    return nl;
}

bool NeighborList::needs_rebuild(const SystemState& state, const DpdParams& params) const {
    if (state.q.size() != anchors_.size()) return true;
    // An unlisted pair started at distance >= r_c + skin and has closed the
    // gap by at most the sum of the two displacements involved, so the list
    // is guaranteed complete while the two largest displacements anywhere
    // still sum below the skin. This fires about half as often as the usual
    // per-particle skin/2 test and the guarantee is exact either way.
    double top1 = 0.0, top2 = 0.0; // squared norms
    for (std::size_t i = 0; i < anchors_.size(); ++i) {
        Vec3 d = fold_image(state.q[i] - anchors_[i], params.L);
        double d2 = norm2(d);
        if (d2 > top1) {
            top2 = top1;
            top1 = d2;
        } else if (d2 > top2) {
            top2 = d2;
        }
    }
    return std::sqrt(top1) + std::sqrt(top2) >= skin_;
}

bool ensure_fresh(NeighborList& list, const SystemState& state, const DpdParams& params) {
    if (!list.needs_rebuild(state, params)) return false;
    list = NeighborList::build(state, params, list.skin());
    return true;
}

std::vector<InteractingPair> interacting_pairs(const NeighborList& list, const SystemState& state,
                                               const DpdParams& params) {
    if (list.needs_rebuild(state, params))
        throw StaleListError("neighbor list no longer covers the current positions");
    std::vector<InteractingPair> out;
    for_each_interacting(list, state, params,
                         [&](std::uint32_t i, std::uint32_t j, const Vec3& d, double r) {
                             out.push_back({i, j, d, r});
                         });
    return out;
}

} // namespace dpd
