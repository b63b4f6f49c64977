#pragma once

#include "zerogrid/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace zg {

/// Integer-point evaluator compiled from a Polynomial. Denominators are
/// cleared up front (a positive rescale, so zero sets and value collisions
/// are unchanged); evaluation runs on checked 64-bit arithmetic and falls
/// back to arbitrary precision on overflow, never silently wrapping.
class CompiledPoly {
public:
    explicit CompiledPoly(const Polynomial& p);

    std::size_t arity() const { return arity_; }

    /// 64-bit path; false means overflow, use eval_big.
    bool eval64(const std::int64_t* point, std::int64_t& out) const;
    Integer eval_big(const std::int64_t* point) const;

    bool is_zero_at(const std::int64_t* point) const;

    /// Exact value as an Integer regardless of path.
    Integer value_at(const std::int64_t* point) const;

    /// Collapse to univariate coefficients in the last variable at a fixed
    /// prefix point (all variables but the last). Returns false on 64-bit
    /// overflow while collapsing; coeffs[d] is the coefficient of last^d.
    bool collapse_last64(const std::int64_t* prefix, std::vector<std::int64_t>& coeffs) const;
    void collapse_last_big(const std::int64_t* prefix, std::vector<Integer>& coeffs) const;

    std::uint32_t degree_in_last() const { return deg_last_; }

private:
    struct Term {
        std::int64_t coeff64 = 0;
        Integer coeff_big;
        bool fits64 = true;
        std::vector<std::uint32_t> exps;
    };
    std::size_t arity_ = 0;
    std::uint32_t deg_last_ = 0;
    std::vector<Term> terms_;
};

}  // namespace zg
