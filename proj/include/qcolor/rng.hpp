#pragma once

#include <cstdint>
#include <random>

namespace qcolor::rng {

// Sampling is backed by std::mt19937_64, whose output sequence is fixed by
// the C++ standard, combined with the explicit bit-to-double conversion
// below. Reports record this name for reproducibility.
inline constexpr const char* kPrngName = "mt19937_64";

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
// Spelled out (instead of std::uniform_real_distribution) because the
// standard leaves distribution output unspecified across implementations.
inline double canonical(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

// splitmix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Per-stream seed derivation: independent, order-free streams keyed by
// (seed, stream index). Used to give every pixel its own generator.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

} // namespace qcolor::rng
