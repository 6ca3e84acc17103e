#include "doctest.h"

#include <cmath>
#include <cstddef>
#include <vector>

#include "dpd/box.hpp"
#include "dpd/errors.hpp"
#include "dpd/forces.hpp"
#include "dpd/params.hpp"
#include "dpd/rng.hpp"
#include "dpd/state.hpp"

using namespace dpd;

namespace {

SystemState random_state(const DpdParams& params, std::uint64_t seed) {
    RngStream rng(seed);
    return init_state(params, rng);
}

// total potential by direct summation over minimum-image pairs
double potential_brute(const SystemState& s, const DpdParams& params) {
    double u = 0.0;
    for (std::size_t i = 0; i < s.q.size(); ++i)
        for (std::size_t j = i + 1; j < s.q.size(); ++j) {
            double r = norm(minimum_image(s.q[i] - s.q[j], params.L));
            if (r < params.r_c) u += pair_potential(r, params);
        }
    return u;
}

// potential as a function of one displaced coordinate, for finite differences
double potential_displaced(SystemState s, const DpdParams& params, std::size_t i, int axis,
                           double h) {
    if (axis == 0) s.q[i].x += h;
    if (axis == 1) s.q[i].y += h;
    if (axis == 2) s.q[i].z += h;
    return potential_brute(s, params);
}

} // namespace

TEST_SUITE("forces") {

TEST_CASE("weight functions taper linearly and vanish at the cutoff") {
    CHECK(weight_r(0.0, 1.0) == 1.0);
    CHECK(weight_r(0.25, 1.0) == doctest::Approx(0.75));
    CHECK(weight_r(1.0, 1.0) == 0.0);
    CHECK(weight_r(1.5, 1.0) == 0.0);
    CHECK(weight_r(0.7, 2.0) == doctest::Approx(0.65));
    for (double r : {0.1, 0.4, 0.77, 0.99}) {
        double wr = weight_r(r, 1.0);
        CHECK(weight_d(r, 1.0) == doctest::Approx(wr * wr).epsilon(1e-15));
    }
}

TEST_CASE("pair energy and force have the advertised closed forms") {
    DpdParams params = DpdParams::standard(25.0, 4.5, 1.0, 1.0, 5.0, 500);
    CHECK(pair_potential(0.0, params) == doctest::Approx(12.5)); // a*r_c/2
    CHECK(pair_potential(0.5, params) == doctest::Approx(25.0 * 0.5 * 0.25));
    CHECK(pair_potential(1.0, params) == 0.0);
    CHECK(pair_potential(2.0, params) == 0.0);

    Vec3 rv{0.3, 0.0, 0.4}; // r = 0.5
    Vec3 f = pair_force(rv, 0.5, params);
    double mag = norm(f);
    CHECK(mag == doctest::Approx(25.0 * 0.5).epsilon(1e-12)); // a*(1 - r/r_c)
    // repulsive: force on i points along q_i - q_j
    CHECK(dot(f, rv) > 0.0);
    CHECK(f.x == doctest::Approx(12.5 * 0.3 / 0.5).epsilon(1e-12));
    CHECK(f.y == 0.0);
}

TEST_CASE("pair force is the negative gradient of the pair energy") {
    DpdParams params = DpdParams::standard(25.0, 4.5, 1.0, 1.0, 5.0, 500);
    const double h = 1e-6;
    for (double r : {0.1, 0.3, 0.55, 0.9}) {
        double dudr = (pair_potential(r + h, params) - pair_potential(r - h, params)) / (2.0 * h);
        Vec3 rv{r, 0.0, 0.0};
        Vec3 f = pair_force(rv, r, params);
        CHECK(f.x == doctest::Approx(-dudr).epsilon(1e-6));
    }
}

TEST_CASE("force report matches finite differences of the total energy") {
    DpdParams params = DpdParams::standard(25.0, 4.5, 1.0, 1.0, 3.0, 40);
    SystemState s = random_state(params, 71);
    ForceReport rep = compute_forces_all_pairs(s, params);
    CHECK(rep.potential == doctest::Approx(potential_brute(s, params)).epsilon(1e-12));

    const double h = 1e-5;
    for (std::size_t i : {std::size_t{0}, std::size_t{7}, std::size_t{23}, std::size_t{39}}) {
        for (int axis = 0; axis < 3; ++axis) {
            double up = potential_displaced(s, params, i, axis, h);
            double dn = potential_displaced(s, params, i, axis, -h);
            double fd = -(up - dn) / (2.0 * h);
            double got = axis == 0 ? rep.f[i].x : axis == 1 ? rep.f[i].y : rep.f[i].z;
            CHECK(got == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
        }
    }
}

TEST_CASE("configurational-temperature sums have closed forms for a frozen pair") {
    DpdParams params = DpdParams::standard(25.0, 4.5, 1.0, 1.0, 5.0, 2);
    SystemState s;
    s.q = {{1.0, 1.0, 1.0}, {1.5, 1.0, 1.0}}; // r = 0.5
    s.p = {{0, 0, 0}, {0, 0, 0}};
    ForceReport rep = compute_forces_all_pairs(s, params);
    REQUIRE(rep.pair_count == 1);
    // |f| = a*(1 - r/r_c) = 12.5 on each particle
    CHECK(rep.grad_sq_sum == doctest::Approx(2.0 * 12.5 * 12.5).epsilon(1e-12));
    // laplacian of the pair energy at one particle: a/r_c - 2*a*(1 - r/r_c)/r
    CHECK(rep.laplacian_sum == doctest::Approx(2.0 * (25.0 - 2.0 * 25.0 * 0.5 / 0.5)).epsilon(1e-12));
    CHECK(rep.laplacian_sum == doctest::Approx(-50.0).epsilon(1e-12));
    CHECK(rep.potential == doctest::Approx(pair_potential(0.5, params)).epsilon(1e-12));
}

TEST_CASE("laplacian sum matches finite differences of the gradient") {
    DpdParams params = DpdParams::standard(25.0, 4.5, 1.0, 1.0, 3.0, 20);
    SystemState s = random_state(params, 72);
    ForceReport rep = compute_forces_all_pairs(s, params);

    const double h = 1e-4;
    double lap_fd = 0.0;
    double u0 = potential_brute(s, params);
    for (std::size_t i = 0; i < s.q.size(); ++i)
        for (int axis = 0; axis < 3; ++axis) {
            double up = potential_displaced(s, params, i, axis, h);
            double dn = potential_displaced(s, params, i, axis, -h);
            lap_fd += (up - 2.0 * u0 + dn) / (h * h);
        }
    CHECK(rep.laplacian_sum == doctest::Approx(lap_fd).epsilon(1e-4));

    double grad_sq = 0.0;
    for (const Vec3& f : rep.f) grad_sq += norm2(f);
    CHECK(rep.grad_sq_sum == doctest::Approx(grad_sq).epsilon(1e-12));
}

TEST_CASE("forces cancel pairwise") {
    DpdParams params = DpdParams::standard(25.0, 4.5, 1.0, 1.0, 5.0, 200);
    SystemState s = random_state(params, 73);
    ForceReport rep = compute_forces_all_pairs(s, params);
    Vec3 total{};
    for (const Vec3& f : rep.f) total += f;
    CHECK(std::abs(total.x) < 1e-11);
    CHECK(std::abs(total.y) < 1e-11);
    CHECK(std::abs(total.z) < 1e-11);
}

TEST_CASE("list-driven evaluation is bit-identical to the all-pairs oracle") {
    DpdParams params = DpdParams::standard(25.0, 4.5, 1.0, 1.0, 5.0, 125);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SystemState s = random_state(params, 400 + seed);
        NeighborList list = NeighborList::build(s, params, 0.3);
        ForceReport a = compute_forces(s, params, list);
        ForceReport b = compute_forces_all_pairs(s, params);
        REQUIRE(a.pair_count == b.pair_count);
        CHECK(a.potential == b.potential);
        CHECK(a.grad_sq_sum == b.grad_sq_sum);
        CHECK(a.laplacian_sum == b.laplacian_sum);
        for (std::size_t i = 0; i < s.q.size(); ++i) {
            CHECK(a.f[i].x == b.f[i].x);
            CHECK(a.f[i].y == b.f[i].y);
            CHECK(a.f[i].z == b.f[i].z);
        }
    }
}

TEST_CASE("coincident particles are reported, not silently folded") {
    DpdParams params = DpdParams::standard(25.0, 4.5, 1.0, 1.0, 5.0, 2);
    SystemState s;
    s.q = {{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}};
    s.p = {{0, 0, 0}, {0, 0, 0}};
    CHECK_THROWS_AS(compute_forces_all_pairs(s, params), DegeneratePairError);
}

} // TEST_SUITE
