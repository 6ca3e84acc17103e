#include "dpd/state.hpp"

#include <cmath>
#include <string>

#include "dpd/box.hpp"
#include "dpd/errors.hpp"
#include "dpd/forces.hpp"

namespace dpd {

DpdParams DpdParams::standard(double a, double gamma, double kBT, double r_c, double L,
                              std::size_t N, double mass) {
    DpdParams p;
    p.a = a;
    p.gamma = gamma;
    p.kBT = kBT;
    p.sigma = std::sqrt(2.0 * gamma * kBT); // fluctuation-dissipation balance
    p.r_c = r_c;
    p.L = L;
    p.N = N;
    p.mass = mass;
    p.rho = static_cast<double>(N) / (L * L * L);
    p.validate();
    return p;
}

void DpdParams::validate() const {
    if (!(a >= 0.0)) throw ConfigError("repulsion amplitude a must be >= 0");
    if (!(gamma >= 0.0)) throw ConfigError("friction gamma must be >= 0");
    if (!(kBT > 0.0)) throw ConfigError("kBT must be > 0");
    if (!(r_c > 0.0)) throw ConfigError("cutoff r_c must be > 0");
    if (!(mass > 0.0)) throw ConfigError("mass must be > 0");
    if (N < 2) throw ConfigError("need at least 2 particles");
    if (!(L >= 2.0 * r_c))
        throw ConfigError("box edge " + std::to_string(L) + " too small for cutoff " +
                          std::to_string(r_c) + "; need L >= 2*r_c");
}

SystemState init_state(const DpdParams& params, RngStream& rng) {
    SystemState s;
    const std::size_t n = params.N;
    s.q.resize(n);
    s.p.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        s.q[i] = {params.L * rng.uniform01(), params.L * rng.uniform01(),
                  params.L * rng.uniform01()};
    }

    const double p_scale = std::sqrt(params.mass * params.kBT);
    Vec3 total{};
    for (std::size_t i = 0; i < n; ++i) {
        s.p[i] = {p_scale * rng.gaussian(), p_scale * rng.gaussian(), p_scale * rng.gaussian()};
        total += s.p[i];
    }
    Vec3 shift = (1.0 / static_cast<double>(n)) * total;
    for (std::size_t i = 0; i < n; ++i) s.p[i] -= shift;

    s.f = compute_forces_all_pairs(s, params).f;
    return s;
}

} // namespace dpd
