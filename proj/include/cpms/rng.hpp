// rng.hpp — counter-based random streams.
//
// Every random draw in the library is a pure function of
// (master seed, stream, substream, counter).  Streams never share state, so
// particles, modes and Monte-Carlo replicas can be evaluated in any order —
// or concurrently — and still reproduce bit-for-bit.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace cpms::rng {

// 64-bit finalizer (splitmix64 increment + avalanche).
inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Key for an independent substream.
inline std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream,
                                std::uint64_t substream = 0) {
    return mix(mix(seed ^ 0x5851f42d4c957f2dull) ^ mix(stream) ^ mix(mix(substream) + 0x2545f4914f6cdd1dull));
}

inline std::uint64_t bits(std::uint64_t key, std::uint64_t counter) {
    return mix(key ^ mix(counter + 0x452821e638d01377ull));
}

// Uniform on (0, 1]: never returns 0, so log() below is safe.
inline double uniform01(std::uint64_t key, std::uint64_t counter) {
    return (static_cast<double>(bits(key, counter) >> 11) + 1.0) * 0x1.0p-53;
}

// Standard normal via Box–Muller; each counter value consumes two uniforms.
inline double normal(std::uint64_t key, std::uint64_t counter) {
    const double u1 = uniform01(key, 2 * counter);
    const double u2 = uniform01(key, 2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

// Complex sample with independent N(0,1) real and imaginary parts.
inline std::complex<double> normal_complex(std::uint64_t key,
                                           std::uint64_t counter) {
    const double u1 = uniform01(key, 2 * counter);
    const double u2 = uniform01(key, 2 * counter + 1);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

// Uniform in [lo, hi).
inline double uniform(std::uint64_t key, std::uint64_t counter, double lo,
                      double hi) {
    return lo + (hi - lo) * (uniform01(key, counter) - 0x1.0p-53);
}

} // namespace cpms::rng
