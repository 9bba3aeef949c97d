#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace arbor {

// Exact arbitrary-precision integer and rational types used for every count
// and every probability that admits exact arithmetic.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);

// 2^k for k >= 0.
BigInt pow2(int k);

// True iff v is a (positive) power of two; *exponent receives log2(v).
bool is_power_of_two(const BigInt& v, int* exponent = nullptr);

// True iff r equals 2^e for some integer e (possibly negative); *exponent
// receives e.
bool dyadic_exponent(const Rational& r, int* exponent = nullptr);

// True iff r = p / 2^k in lowest terms (an endpoint of a dyadic partition).
bool is_dyadic_rational(const Rational& r);

double to_double(const Rational& r);

// "p/q", or just "p" when the denominator is 1.
std::string fraction_string(const Rational& r);
std::string decimal_string(const BigInt& n);

// Accepts "p/q", plain integers, and decimal literals such as "0.5" or
// "-1.25"; throws ParseError otherwise.
Rational parse_fraction(std::string_view text);

}  // namespace arbor
