#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace shapeassoc {

/// Derives an independent 64-bit seed for (stream, index) from a base seed (splitmix64 mixing).
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) noexcept;

/// Seeded generator with platform-independent output: the engine sequence is
/// fixed by the standard and the conversions below do not rely on library
/// distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    std::size_t integer(std::size_t lo, std::size_t hi) noexcept {
        return lo + static_cast<std::size_t>(engine_() % (static_cast<std::uint64_t>(hi - lo) + 1));
    }
    bool bernoulli(double p) noexcept { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace shapeassoc
