#include "zerogrid/compiled_poly.hpp"

#include "zerogrid/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace zg {

namespace {

inline bool mul_ok(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return !__builtin_mul_overflow(a, b, &out);
}

inline bool add_ok(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return !__builtin_add_overflow(a, b, &out);
}

}  // namespace

CompiledPoly::CompiledPoly(const Polynomial& p) : arity_(p.variables().size()) {
    // common denominator; scaling by a positive constant preserves zeros
    Integer lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        Integer den = boost::multiprecision::denominator(c);
        lcm = boost::multiprecision::lcm(lcm, den);
    }
    for (const auto& [m, c] : p.terms()) {
        Term t;
        t.coeff_big = boost::multiprecision::numerator(c) *
                      (lcm / boost::multiprecision::denominator(c));
        t.fits64 = fits_int64(t.coeff_big);
        if (t.fits64) t.coeff64 = t.coeff_big.convert_to<std::int64_t>();
        t.exps = m.exponents();
        if (arity_ > 0) deg_last_ = std::max(deg_last_, t.exps[arity_ - 1]);
        terms_.push_back(std::move(t));
    }
}

bool CompiledPoly::eval64(const std::int64_t* point, std::int64_t& out) const {
    std::int64_t acc = 0;
    for (const auto& t : terms_) {
        if (!t.fits64) return false;
        std::int64_t v = t.coeff64;
        for (std::size_t i = 0; i < arity_; ++i)
            for (std::uint32_t e = 0; e < t.exps[i]; ++e)
                if (!mul_ok(v, point[i], v)) return false;
        if (!add_ok(acc, v, acc)) return false;
    }
    out = acc;
    return true;
}

Integer CompiledPoly::eval_big(const std::int64_t* point) const {
    Integer acc = 0;
    for (const auto& t : terms_) {
        Integer v = t.coeff_big;
        for (std::size_t i = 0; i < arity_; ++i)
            for (std::uint32_t e = 0; e < t.exps[i]; ++e) v *= point[i];
        acc += v;
    }
    return acc;
}

bool CompiledPoly::is_zero_at(const std::int64_t* point) const {
    std::int64_t v;
    if (eval64(point, v)) return v == 0;
    return eval_big(point) == 0;
}

Integer CompiledPoly::value_at(const std::int64_t* point) const {
    std::int64_t v;
    if (eval64(point, v)) return Integer(v);
    return eval_big(point);
}

bool CompiledPoly::collapse_last64(const std::int64_t* prefix,
                                   std::vector<std::int64_t>& coeffs) const {
    coeffs.assign(deg_last_ + 1, 0);
    for (const auto& t : terms_) {
        if (!t.fits64) return false;
        std::int64_t v = t.coeff64;
        for (std::size_t i = 0; i + 1 < arity_; ++i)
            for (std::uint32_t e = 0; e < t.exps[i]; ++e)
                if (!mul_ok(v, prefix[i], v)) return false;
        auto& slot = coeffs[t.exps[arity_ - 1]];
        if (!add_ok(slot, v, slot)) return false;
    }
    return true;
}

void CompiledPoly::collapse_last_big(const std::int64_t* prefix,
                                     std::vector<Integer>& coeffs) const {
    coeffs.assign(deg_last_ + 1, Integer(0));
    for (const auto& t : terms_) {
        Integer v = t.coeff_big;
        for (std::size_t i = 0; i + 1 < arity_; ++i)
            for (std::uint32_t e = 0; e < t.exps[i]; ++e) v *= prefix[i];
        coeffs[t.exps[arity_ - 1]] += v;
    }
}

}  // namespace zg
