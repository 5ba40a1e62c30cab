#include "proglab/numeric.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace proglab {

double log2_big(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log2_big: operand must be positive");
    const unsigned bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 64) return std::log2(v.convert_to<double>());
    const std::uint64_t top = BigInt(v >> (bits - 64)).convert_to<std::uint64_t>();
    return std::log2(static_cast<double>(top)) + static_cast<double>(bits - 64);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite value");
    return Rational(x);
}

namespace {

// boost::cpp_int parses a leading '0' as octal; force decimal.
BigInt decimal_bigint(std::string s) {
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.erase(s.begin());
    }
    std::size_t first = s.find_first_not_of('0');
    if (first == std::string::npos) return 0;
    BigInt v(s.substr(first));
    return negative ? -v : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const BigInt num = decimal_bigint(text.substr(0, slash));
        const BigInt den = decimal_bigint(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(decimal_bigint(text));
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t frac_len = text.size() - dot - 1;
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(decimal_bigint(digits), den);
}

}  // namespace proglab
