#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace zg {

// Exact coefficient arithmetic. Everything symbolic runs on arbitrary
// precision; 64-bit fast paths live in the counting layer only.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational rational_pow(const Rational& base, std::uint32_t exp);

// Accepts "p", "-p", "p/q", "-p/q" with decimal digits; q > 0.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& r);

double rational_to_double(const Rational& r);

bool fits_int64(const Integer& v);

// Floor of sqrt(n) for n >= 0.
std::int64_t isqrt_floor(std::int64_t n);

}  // namespace zg
