#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace turan {

/// Counter-based generator: output i of a stream is mix(key + i·γ), the SplitMix64
/// finalizer over a Weyl sequence. Streams split by hashing a child id into the key,
/// so stream j of seed s is reproducible without replaying any other stream.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) noexcept : key_(mix(seed)) {}

    [[nodiscard]] CounterRng split(std::uint64_t child) const noexcept {
        CounterRng c(0);
        c.key_ = mix(key_ ^ mix(child + 0x632BE59BD9B4E019ULL));
        return c;
    }

    std::uint64_t next_u64() noexcept { return mix(key_ + (++counter_) * gamma); }

    /// Uniform on [0, 1).
    double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) noexcept {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

    double angle() noexcept { return uniform(0.0, 2.0 * std::numbers::pi); }

    [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

private:
    static constexpr std::uint64_t gamma = 0x9E3779B97F4A7C15ULL;

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace turan
