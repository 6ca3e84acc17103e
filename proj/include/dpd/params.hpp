#pragma once

#include <cstddef>

namespace dpd {

// Model parameters for a monodisperse DPD fluid in a cubic periodic box.
// sigma is tied to gamma and kBT by the fluctuation-dissipation condition
// sigma^2 = 2*gamma*kBT; standard() derives it, so use that unless a test
// deliberately needs an off-balance pair.
struct DpdParams {
    double a = 18.75;     // conservative repulsion amplitude
    double gamma = 4.5;   // dissipative (friction) coefficient
    double sigma = 3.0;   // random-force amplitude
    double kBT = 1.0;     // thermostat target
    double r_c = 1.0;     // interaction cutoff radius
    double L = 5.0;       // cubic box edge
    std::size_t N = 500;  // particle count
    double mass = 1.0;    // per-particle mass (monodisperse)
    double rho = 4.0;     // nominal number density, reporting only; N and L are authoritative

    static DpdParams standard(double a, double gamma, double kBT, double r_c,
                              double L, std::size_t N, double mass = 1.0);

    // throws ConfigError on out-of-range values
    void validate() const;
};

} // namespace dpd
