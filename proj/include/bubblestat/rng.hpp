#pragma once

#include <cstdint>
#include <random>

namespace bubblestat {

/**
 * @brief Deterministic random source with replication subseeding.
 *
 * Wraps std::mt19937_64 (bit-exact across platforms by the standard) and
 * produces normals through the inverse-CDF transform, so identical seeds
 * give identical draws everywhere. Replication k of a simulation uses
 * `Rng::for_replication(seed, k)`, which makes parallel and sequential
 * schedules agree exactly.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

    /// Independent stream for one replication (attempt > 0 redraws it).
    static Rng for_replication(std::uint64_t seed, std::uint64_t replication,
                               std::uint64_t attempt = 0) {
        return Rng(mix64(mix64(seed) ^ mix64(replication + 0x632be59bd9b4e019ull) ^ attempt));
    }

    /// Uniform draw on the open interval (0, 1).
    double uniform() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal draw via Φ⁻¹(uniform()).
    double normal();

    /// Normal draw with mean 0 and the given standard deviation.
    double normal(double sigma) { return sigma * normal(); }

    std::uint64_t next_u64() { return engine_(); }

private:
    // splitmix64 finalizer; decorrelates nearby seeds.
    static constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
};

}  // namespace bubblestat
