#pragma once

#include <cstdint>
#include <cmath>

namespace dpd {

// Deterministic Gaussian stream. One stream drives a whole run; draws happen
// in a fixed order (pair iteration order inside the sweeps), so a seed pins
// the entire trajectory bit for bit. Each gaussian() consumes exactly two
// 64-bit words from a splitmix64 sequence and bumps the draw counter by one.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed), seed_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform on [0, 1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // standard normal via Box-Muller, fixed two-word cost per call
    double gaussian() {
        double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; // (0, 1], log-safe
        double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        ++draws_;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t draw_count() const { return draws_; }

private:
    std::uint64_t state_;
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
};

} // namespace dpd
