#include "arbor/exact_prob.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace arbor {

ExactProb ExactProb::from_rational(const Rational& r) {
    ExactProb p;
    p.exact = true;
    p.value = r;
    p.approx = to_double(r);
    p.error_bound = 0.0;
    return p;
}

ExactProb ExactProb::from_double(double approx, double error_bound) {
    ExactProb p;
    p.exact = false;
    p.value = Rational(0);
    p.approx = approx;
    p.error_bound = error_bound;
    return p;
}

ExactProb ExactProb::times(const ExactProb& other) const {
    if (exact && other.exact) {
        return from_rational(value * other.value);
    }
    double prod = approx * other.approx;
    double err = error_bound * std::abs(other.approx) +
                 other.error_bound * std::abs(approx) +
                 error_bound * other.error_bound +
                 std::abs(prod) * 1e-16;
    return from_double(prod, err);
}

ExactProb ExactProb::plus(const ExactProb& other) const {
    if (exact && other.exact) {
        return from_rational(value + other.value);
    }
    double sum = approx + other.approx;
    double err = error_bound + other.error_bound + std::abs(sum) * 1e-16;
    return from_double(sum, err);
}

ExactProb ExactProb::scaled(const BigInt& factor) const {
    if (exact) {
        return from_rational(value * Rational(factor));
    }
    double f = factor.convert_to<double>();
    return from_double(approx * f, error_bound * std::abs(f) + std::abs(approx * f) * 1e-16);
}

std::string ExactProb::str() const {
    if (exact) {
        return fraction_string(value);
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g (error bound %.3g)", approx, error_bound);
    return buf;
}

bool consistent(const ExactProb& a, const ExactProb& b) {
    if (a.exact && b.exact) {
        return a.value == b.value;
    }
    double tolerance = a.error_bound + b.error_bound +
                       1e-12 * std::max({std::abs(a.approx), std::abs(b.approx), 1.0});
    return std::abs(a.approx - b.approx) <= tolerance;
}

}  // namespace arbor
