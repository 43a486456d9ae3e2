#pragma once

#include <cstdint>
#include <random>

namespace minors {

// (value, stream) pairs name independent substreams; identical pairs must
// reproduce identical draws bit-for-bit across runs and platforms.
struct Seed {
    std::uint64_t value = 0;
    std::uint64_t stream = 0;

    Seed with_stream(std::uint64_t s) const { return Seed{value, s}; }
    bool operator==(const Seed&) const = default;
};

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// mt19937_64 behind hand-rolled draw helpers. The standard pins the engine's
// output sequence but not the distributions, so distributions are avoided.
class Rng {
public:
    explicit Rng(Seed seed) : eng_(mix(seed)) {}

    std::uint64_t u64() { return eng_(); }

    // Unbiased integer in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t x, r;
        do {
            x = u64();
            r = x % bound;
        } while (x - r > std::uint64_t(-1) - (bound - 1));
        return r;
    }

    // 53-bit uniform in [0, 1).
    double unit() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    static std::uint64_t mix(Seed s) {
        std::uint64_t z = splitmix64(s.value);
        z = splitmix64(z ^ splitmix64(s.stream ^ 0x5851F42D4C957F2DULL));
        return z;
    }

private:
    std::mt19937_64 eng_;
};

// Substream id namespaces used by the pipeline; the trial namespace starts at
// zero so a configured stream offset moves trials without touching the rest.
namespace streams {
inline constexpr std::uint64_t trial_base = 0;
inline constexpr std::uint64_t g0_base = std::uint64_t{1} << 56;
inline constexpr std::uint64_t star_base = std::uint64_t{2} << 56;
inline constexpr std::uint64_t adversary_base = std::uint64_t{3} << 56;
} // namespace streams

} // namespace minors
