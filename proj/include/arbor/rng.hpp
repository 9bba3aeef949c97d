#pragma once

#include <cstdint>
#include <random>

namespace arbor {

// Deterministic random source: a fixed engine whose bit stream is pinned by
// the standard, plus self-contained distribution transforms, so equal seeds
// give equal draws on every platform and toolchain.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01();

    // Uniform on {0, ..., bound-1}, bias-free by rejection.
    int uniform_int(int bound);

    // Standard normal (Box-Muller with a cached spare).
    double normal();

    // Gamma(shape, 1) for shape > 0 (Marsaglia-Tsang squeeze; the shape < 1
    // case boosts through shape + 1).
    double gamma(double shape);

    // Beta(a, b) for a, b > 0 via two gamma draws.
    double beta(double a, double b);

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace arbor
