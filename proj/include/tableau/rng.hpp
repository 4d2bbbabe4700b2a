#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace tableau {

/// SplitMix64 finalizer, used to derive independent sub-seeds.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seeded generator with a portable bounded draw. std::uniform_int_distribution
// is implementation-defined, so it is not used where output must be bit-exact.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t x = engine_();
        while (x >= limit) {
            x = engine_();
        }
        return lo + static_cast<long>(x % span);
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace tableau
