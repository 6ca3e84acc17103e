#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dpd/forces.hpp"
#include "dpd/params.hpp"
#include "dpd/state.hpp"
#include "dpd/vec3.hpp"

namespace dpd {

// instantaneous kinetic temperature, (1/(3(N-1))) * sum p.p/m; the (N-1)
// accounts for the frozen center-of-mass momentum
double kinetic_temperature(const SystemState& state, const DpdParams& params);

Vec3 total_momentum(const SystemState& state);

// Accumulates the configurational-temperature sums as a ratio of separately
// averaged numerator and denominator, <sum |grad U|^2> / <sum lap U>, plus a
// plain mean of the kinetic temperature over the same samples.
class ObservableSeries {
public:
    void add_sample(double t_kinetic, const ForceReport& report);

    double configurational_temperature() const; // throws EstimateError when undefined
    double mean_kinetic_temperature() const;    // throws EstimateError when empty
    std::size_t samples() const { return n_; }

private:
    double grad_sq_total_ = 0.0;
    double laplacian_total_ = 0.0;
    double t_kinetic_total_ = 0.0;
    std::size_t n_ = 0;
};

// Radial distribution function histogram. Bin k covers [k*dr, (k+1)*dr);
// distances at or past r_max are dropped. finalize() normalizes against the
// ideal-gas shell count so a structureless system gives g = 1.
class RdfHistogram {
public:
    RdfHistogram(double bin_width, double r_max);

    void accumulate(const SystemState& state, const DpdParams& params);

    std::vector<double> finalize(const DpdParams& params) const; // throws EstimateError when empty
    std::vector<double> bin_centers() const;
    std::size_t snapshots() const { return snapshots_; }
    std::size_t bins() const { return counts_.size(); }

private:
    double dr_;
    double r_max_;
    std::vector<std::uint64_t> counts_;
    std::size_t snapshots_ = 0;
};

// max |ga - gb| over bins with center > r_min; curves must share binning
double rdf_sup_distance(const std::vector<double>& centers, const std::vector<double>& ga,
                        const std::vector<double>& gb, double r_min);

} // namespace dpd
