#include "arbor/rng.hpp"

#include "arbor/error.hpp"

#include <cmath>

namespace arbor {

double RandomSource::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int RandomSource::uniform_int(int bound) {
    if (bound <= 0) throw Error("uniform_int needs a positive bound");
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t threshold = (0ull - b) % b;  // 2^64 mod bound
    while (true) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) return static_cast<int>(r % b);
    }
}

double RandomSource::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u = 0.0;
    do {
        u = uniform01();
    } while (u == 0.0);
    const double v = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u));
    const double angle = 6.283185307179586476925286766559 * v;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

double RandomSource::gamma(double shape) {
    if (!(shape > 0.0)) throw Error("gamma shape must be positive");
    if (shape < 1.0) {
        // Boost: if G ~ Gamma(shape+1) and U uniform, G * U^(1/shape) is
        // Gamma(shape).
        double u = 0.0;
        do {
            u = uniform01();
        } while (u == 0.0);
        return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
        double x = 0.0;
        double v = 0.0;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        double u = 0.0;
        do {
            u = uniform01();
        } while (u == 0.0);
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double RandomSource::beta(double a, double b) {
    const double x = gamma(a);
    const double y = gamma(b);
    return x / (x + y);
}

}  // namespace arbor
