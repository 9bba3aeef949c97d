#include "arbor/numeric.hpp"

#include "arbor/error.hpp"

#include <cctype>

namespace arbor {

BigInt factorial(int n) {
    if (n < 0) throw UndefinedInputError("factorial of a negative integer");
    BigInt result = 1;
    for (int k = 2; k <= n; ++k) result *= k;
    return result;
}

BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt pow2(int k) {
    if (k < 0) throw UndefinedInputError("pow2 of a negative exponent");
    return BigInt(1) << k;
}

bool is_power_of_two(const BigInt& v, int* exponent) {
    if (v <= 0) return false;
    if ((v & (v - 1)) != 0) return false;
    if (exponent != nullptr) *exponent = static_cast<int>(boost::multiprecision::msb(v));
    return true;
}

bool dyadic_exponent(const Rational& r, int* exponent) {
    if (r <= 0) return false;
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    int e = 0;
    if (num == 1) {
        if (!is_power_of_two(den, &e)) return false;
        if (exponent != nullptr) *exponent = -e;
        return true;
    }
    if (den == 1) {
        if (!is_power_of_two(num, &e)) return false;
        if (exponent != nullptr) *exponent = e;
        return true;
    }
    return false;
}

bool is_dyadic_rational(const Rational& r) {
    return is_power_of_two(boost::multiprecision::denominator(r)) ||
           boost::multiprecision::denominator(r) == 1;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string fraction_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string decimal_string(const BigInt& n) { return n.str(); }

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer literal");
    std::size_t start = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        start = 1;
    }
    if (start == text.size()) throw ParseError("sign without digits in integer literal");
    BigInt value = 0;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("invalid digit in integer literal: \"" + std::string(text) + "\"");
        value = value * 10 + (text[i] - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_fraction(std::string_view text) {
    if (text.empty()) throw ParseError("empty fraction literal");
    const std::size_t slash = text.find('/');
    if (slash != std::string_view::npos) {
        const BigInt num = parse_integer(text.substr(0, slash));
        const BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in fraction literal");
        return Rational(num, den);
    }
    const std::size_t dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty()) throw ParseError("missing digits after decimal point");
        bool negative = !whole.empty() && whole[0] == '-';
        BigInt whole_part = whole.empty() || whole == "-" || whole == "+"
                                ? BigInt(0)
                                : parse_integer(whole);
        if (whole_part < 0) whole_part = -whole_part;
        BigInt scale = 1;
        BigInt frac_part = 0;
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("invalid digit in decimal literal: \"" + std::string(text) + "\"");
            frac_part = frac_part * 10 + (c - '0');
            scale *= 10;
        }
        Rational value = Rational(whole_part) + Rational(frac_part, scale);
        return negative ? Rational(-value) : value;
    }
    return Rational(parse_integer(text));
}

}  // namespace arbor
