#include "zerogrid/rational.hpp"

#include "zerogrid/error.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace zg {

Rational rational_pow(const Rational& base, std::uint32_t exp) {
    if (exp == 0) return Rational(1);
    Integer n = boost::multiprecision::numerator(base);
    Integer d = boost::multiprecision::denominator(base);
    return Rational(boost::multiprecision::pow(n, exp), boost::multiprecision::pow(d, exp));
}

Rational parse_rational(std::string_view text) {
    bool negative = false;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    auto read_digits = [&](Integer& out) {
        std::size_t start = i;
        out = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out = out * 10 + (text[i] - '0');
            ++i;
        }
        if (i == start) fail(ErrorCode::Parse, "expected digits in rational literal");
    };
    Integer num, den = 1;
    read_digits(num);
    if (i < text.size() && text[i] == '/') {
        ++i;
        read_digits(den);
        if (den == 0) fail(ErrorCode::Parse, "zero denominator in rational literal");
    }
    if (i != text.size()) fail(ErrorCode::Parse, "trailing characters in rational literal");
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

std::string rational_to_string(const Rational& r) {
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

bool fits_int64(const Integer& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t isqrt_floor(std::int64_t n) {
    if (n < 0) fail(ErrorCode::Domain, "isqrt of a negative number");
    if (n == 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

}  // namespace zg
