#include "doctest.h"

#include <cmath>
#include <cstddef>
#include <vector>

#include "dpd/errors.hpp"
#include "dpd/forces.hpp"
#include "dpd/observables.hpp"
#include "dpd/params.hpp"
#include "dpd/rng.hpp"
#include "dpd/state.hpp"

using namespace dpd;

TEST_SUITE("observables") {

TEST_CASE("kinetic temperature has a closed form for a frozen configuration") {
    DpdParams params = DpdParams::standard(25.0, 4.5, 1.0, 1.0, 5.0, 3);
    SystemState s;
    s.q = {{1, 1, 1}, {3, 1, 1}, {1, 3, 1}};
    s.p = {{1, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    s.f.resize(3);
    // sum p^2/m = 1 + 4 + 4 = 9; divided by 3*(N-1) = 6
    CHECK(kinetic_temperature(s, params) == doctest::Approx(1.5).epsilon(1e-15));

    DpdParams heavy = params;
    heavy.mass = 2.0;
    CHECK(kinetic_temperature(s, heavy) == doctest::Approx(0.75).epsilon(1e-15));

    SystemState tiny;
    tiny.q = {{1, 1, 1}};
    tiny.p = {{1, 0, 0}};
    CHECK_THROWS_AS(kinetic_temperature(tiny, params), EstimateError);
}

TEST_CASE("total momentum sums the momenta") {
    SystemState s;
    s.p = {{1, 2, 3}, {-0.5, 1, 0}, {0, 0, -4}};
    Vec3 t = total_momentum(s);
    CHECK(t.x == doctest::Approx(0.5));
    CHECK(t.y == doctest::Approx(3.0));
    CHECK(t.z == doctest::Approx(-1.0));
}

TEST_CASE("configurational temperature is the ratio of averaged sums") {
    ObservableSeries series;
    CHECK_THROWS_AS(series.configurational_temperature(), EstimateError);
    CHECK_THROWS_AS(series.mean_kinetic_temperature(), EstimateError);

    ForceReport r1;
    r1.grad_sq_sum = 10.0;
    r1.laplacian_sum = 4.0;
    ForceReport r2;
    r2.grad_sq_sum = 20.0;
    r2.laplacian_sum = 8.0;
    series.add_sample(0.9, r1);
    series.add_sample(1.1, r2);
    CHECK(series.samples() == 2);
    // (10+20)/(4+8), not the mean of per-sample ratios
    CHECK(series.configurational_temperature() == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(series.mean_kinetic_temperature() == doctest::Approx(1.0).epsilon(1e-15));

    ObservableSeries cancel;
    ForceReport r3;
    r3.grad_sq_sum = 5.0;
    r3.laplacian_sum = -4.0;
    ForceReport r4;
    r4.grad_sq_sum = 5.0;
    r4.laplacian_sum = 4.0;
    cancel.add_sample(1.0, r3);
    cancel.add_sample(1.0, r4);
    CHECK_THROWS_AS(cancel.configurational_temperature(), EstimateError);
}

TEST_CASE("configurational temperature reads kBT for a sampled gaussian field") {
    // single particle in a harmonic well U = k|q|^2/2 at inverse temperature
    // 1/kBT: grad U = k q, lap U = 3k, and <|grad U|^2> = k^2 <|q|^2> =
    // 3 k kBT, so the ratio is exactly kBT. Sampling q from the Gibbs
    // distribution makes this a statistical identity check.
    const double k = 2.0, kBT = 1.3;
    RngStream rng(5150);
    ObservableSeries series;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        double scale = std::sqrt(kBT / k);
        Vec3 q{scale * rng.gaussian(), scale * rng.gaussian(), scale * rng.gaussian()};
        ForceReport rep;
        rep.grad_sq_sum = k * k * norm2(q);
        rep.laplacian_sum = 3.0 * k;
        series.add_sample(kBT, rep);
    }
    CHECK(series.configurational_temperature() == doctest::Approx(kBT).epsilon(0.01));
}

TEST_CASE("rdf histogram rejects unusable binning") {
    CHECK_THROWS_AS(RdfHistogram(0.0, 2.5), ConfigError);
    CHECK_THROWS_AS(RdfHistogram(-0.01, 2.5), ConfigError);
    CHECK_THROWS_AS(RdfHistogram(0.01, 0.0), ConfigError);
    RdfHistogram h(0.01, 2.5);
    CHECK(h.bins() == 250);
    CHECK(h.snapshots() == 0);

    DpdParams params = DpdParams::standard(25.0, 4.5, 1.0, 1.0, 5.0, 2);
    CHECK_THROWS_AS(h.finalize(params), EstimateError);
}

TEST_CASE("bin centers sit mid-bin") {
    RdfHistogram h(0.1, 1.0);
    std::vector<double> c = h.bin_centers();
    REQUIRE(c.size() == 10);
    CHECK(c[0] == doctest::Approx(0.05));
    CHECK(c[9] == doctest::Approx(0.95));
}

TEST_CASE("a known two-particle snapshot lands in the right bin") {
    DpdParams params = DpdParams::standard(25.0, 4.5, 1.0, 1.0, 5.0, 2);
    SystemState s;
    s.q = {{0.1, 0.1, 0.1}, {4.86, 0.1, 0.1}}; // separation 0.24 across the boundary
    s.p.resize(2);
    s.f.resize(2);
    RdfHistogram h(0.1, 2.5);
    h.accumulate(s, params);
    CHECK(h.snapshots() == 1);
    std::vector<double> g = h.finalize(params);
    // one pair in bin [0.2, 0.3): ideal count is (N(N-1)/2) * 4 pi r^2 dr / V
    double r_mid = 0.25;
    double ideal = 1.0 * 4.0 * M_PI * r_mid * r_mid * 0.1 / 125.0;
    CHECK(g[2] == doctest::Approx(1.0 / ideal).epsilon(1e-12));
    for (std::size_t k = 0; k < g.size(); ++k)
        if (k != 2) CHECK(g[k] == 0.0);
}

TEST_CASE("ideal gas snapshots flatten to g = 1") {
    // uncorrelated uniform positions must normalize to unity within noise
    DpdParams params = DpdParams::standard(0.0, 4.5, 1.0, 1.0, 5.0, 500);
    RngStream rng(31415);
    RdfHistogram h(0.05, 2.5);
    SystemState s;
    s.p.resize(params.N);
    s.f.resize(params.N);
    const int snapshots = 2000;
    for (int snap = 0; snap < snapshots; ++snap) {
        s.q.clear();
        for (std::size_t i = 0; i < params.N; ++i)
            s.q.push_back({params.L * rng.uniform01(), params.L * rng.uniform01(),
                           params.L * rng.uniform01()});
        h.accumulate(s, params);
    }
    std::vector<double> g = h.finalize(params);
    std::vector<double> c = h.bin_centers();
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (c[k] <= 0.3) continue; // innermost shells hold too few pairs to average
        CHECK(std::abs(g[k] - 1.0) < 0.05);
    }
    double sup = rdf_sup_distance(c, g, std::vector<double>(g.size(), 1.0), 0.3);
    CHECK(sup < 0.05);
}

TEST_CASE("sup distance ignores bins at or below r_min") {
    std::vector<double> centers{0.05, 0.15, 0.25, 0.35};
    std::vector<double> a{9.0, 1.0, 1.2, 1.0};
    std::vector<double> b{0.0, 1.0, 1.0, 1.3};
    CHECK(rdf_sup_distance(centers, a, b, 0.1) == doctest::Approx(0.3));
    CHECK(rdf_sup_distance(centers, a, b, 0.0) == doctest::Approx(9.0));
    CHECK_THROWS_AS(rdf_sup_distance(centers, a, std::vector<double>{1.0}, 0.0), EstimateError);
}

} // TEST_SUITE
