#include "dpd/observables.hpp"

#include <cmath>

#include "dpd/box.hpp"
#include "dpd/errors.hpp"

namespace dpd {

double kinetic_temperature(const SystemState& state, const DpdParams& params) {
    const std::size_t n = state.p.size();
    if (n < 2) throw EstimateError("kinetic temperature needs at least 2 particles");
    double sum = 0.0;
    for (const Vec3& pi : state.p) sum += norm2(pi);
    return sum / (params.mass * 3.0 * static_cast<double>(n - 1));
}

Vec3 total_momentum(const SystemState& state) {
    Vec3 total{};
    for (const Vec3& pi : state.p) total += pi;
    return total;
}

void ObservableSeries::add_sample(double t_kinetic, const ForceReport& report) {
    grad_sq_total_ += report.grad_sq_sum;
    laplacian_total_ += report.laplacian_sum;
    t_kinetic_total_ += t_kinetic;
    ++n_;
}

double ObservableSeries::configurational_temperature() const {
    if (n_ == 0) throw EstimateError("configurational temperature undefined: no samples");
    if (laplacian_total_ == 0.0)
        throw EstimateError("configurational temperature undefined: zero mean Laplacian");
    // ratio of means; the sample counts cancel
    return grad_sq_total_ / laplacian_total_;
}

double ObservableSeries::mean_kinetic_temperature() const {
    if (n_ == 0) throw EstimateError("kinetic temperature mean undefined: no samples");
    return t_kinetic_total_ / static_cast<double>(n_);
}

RdfHistogram::RdfHistogram(double bin_width, double r_max) : dr_(bin_width), r_max_(r_max) {
    if (!(bin_width > 0.0)) throw ConfigError("rdf bin width must be > 0");
    if (!(r_max > bin_width)) throw ConfigError("rdf max radius must exceed the bin width");
    counts_.assign(static_cast<std::size_t>(std::floor(r_max / bin_width)), 0);
}

void RdfHistogram::accumulate(const SystemState& state, const DpdParams& params) {
    const std::size_t n = state.q.size();
    const double rmax2 = r_max_ * r_max_;
    const double inv_dr = 1.0 / dr_;
    const std::size_t nbins = counts_.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec3 d = fold_image(state.q[i] - state.q[j], params.L);
            double r2 = norm2(d);
            if (r2 >= rmax2) continue;
            auto k = static_cast<std::size_t>(std::sqrt(r2) * inv_dr);
            if (k < nbins) ++counts_[k];
        }
    }
    ++snapshots_;
}

std::vector<double> RdfHistogram::finalize(const DpdParams& params) const {
    if (snapshots_ == 0) throw EstimateError("rdf undefined: no snapshots accumulated");
    const double n = static_cast<double>(params.N);
    const double vol = params.L * params.L * params.L;
    const double pair_norm = 0.5 * n * (n - 1.0);
    std::vector<double> g(counts_.size());
    for (std::size_t k = 0; k < counts_.size(); ++k) {
        double r_mid = (static_cast<double>(k) + 0.5) * dr_;
        double shell = 4.0 * 3.14159265358979323846 * r_mid * r_mid * dr_ / vol;
        double ideal = pair_norm * shell * static_cast<double>(snapshots_);
        g[k] = static_cast<double>(counts_[k]) / ideal;
    }
    return g;
}

std::vector<double> RdfHistogram::bin_centers() const {
    std::vector<double> c(counts_.size());
    for (std::size_t k = 0; k < counts_.size(); ++k)
        c[k] = (static_cast<double>(k) + 0.5) * dr_;
    return c;
}

double rdf_sup_distance(const std::vector<double>& centers, const std::vector<double>& ga,
                        const std::vector<double>& gb, double r_min) {
    if (centers.size() != ga.size() || centers.size() != gb.size())
        throw EstimateError("rdf curves must share binning");
    double sup = 0.0;
    for (std::size_t k = 0; k < centers.size(); ++k) {
        if (centers[k] <= r_min) continue;
        sup = std::max(sup, std::abs(ga[k] - gb[k]));
    }
    return sup;
}

} // namespace dpd
