#pragma once

#include <cstdint>
#include <random>

namespace trispace {

/// SplitMix64 finalizer. Used to derive independent per-trial seeds from a
/// master seed and grid indices; stable across platforms and versions.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stable 64-bit mix of (master seed, n index, c index, trial index).
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t n_index,
                                std::uint64_t c_index, std::uint64_t trial_index) {
    std::uint64_t s = mix64(master);
    s = mix64(s ^ n_index);
    s = mix64(s ^ c_index);
    s = mix64(s ^ trial_index);
    return s;
}

/// Seeded stream of uniform draws on [0,1).
///
/// Engine is std::mt19937_64 (bit-exact by the C++ standard); doubles are
/// formed as (x >> 11) * 2^-53 rather than through a distribution object,
/// so the whole stream is reproducible from the seed alone.
class UniformStream {
public:
    explicit UniformStream(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    double next_unit() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace trispace
