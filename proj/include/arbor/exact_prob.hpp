#pragma once

#include "arbor/numeric.hpp"

#include <string>

namespace arbor {

// A probability that is exact (a rational) whenever the inputs allow it,
// and otherwise a double with an explicit error bound.
struct ExactProb {
    bool exact = true;
    Rational value;          // meaningful only when exact
    double approx = 0.0;     // always maintained
    double error_bound = 0.0;  // 0 when exact

    static ExactProb from_rational(const Rational& r);
    static ExactProb from_double(double approx, double error_bound);

    ExactProb times(const ExactProb& other) const;
    ExactProb plus(const ExactProb& other) const;
    ExactProb scaled(const BigInt& factor) const;

    // "p/q" when exact, otherwise a decimal with its error bound.
    std::string str() const;
};

// Equality up to the recorded error bounds; exact values compare exactly.
bool consistent(const ExactProb& a, const ExactProb& b);

}  // namespace arbor
