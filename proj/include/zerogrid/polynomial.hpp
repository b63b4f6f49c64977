#pragma once

#include "zerogrid/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zg {

/// Exponent vector over a fixed, ordered variable universe. Entry i is the
/// exponent of the i-th declared variable; absent variables are exponent 0.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0u) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t var) const { return exps_[var]; }
    std::uint32_t total_degree() const;
    bool is_constant() const { return total_degree() == 0; }

    Monomial times(const Monomial& other) const;

    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

private:
    std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic order by declared variable order, largest first, so
/// that map iteration is already the canonical printing order.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients over a
/// declared variable universe. Values are immutable; all operations are pure.
/// Two polynomials interoperate only when their universes match exactly.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, GrlexDesc>;

    Polynomial() = default;  // zero over the empty universe

    static Polynomial zero(std::vector<std::string> vars);
    static Polynomial constant(std::vector<std::string> vars, Rational value);
    static Polynomial variable(std::vector<std::string> vars, std::string_view name);

    /// Build directly from a term map; zero coefficients are dropped.
    static Polynomial from_terms(std::vector<std::string> vars, Terms terms);

    const std::vector<std::string>& variables() const { return vars_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// nullopt for the zero polynomial (the degree -inf sentinel).
    std::optional<int> degree() const;
    std::optional<int> degree_in(std::string_view var) const;
    bool depends_on(std::string_view var) const;
    std::size_t var_index(std::string_view var) const;  // throws Domain if undeclared

    Rational coefficient(const Monomial& m) const;
    /// Constant term (coefficient of the empty monomial).
    Rational constant_term() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(std::uint32_t e) const;

    Polynomial derivative(std::string_view var) const;

    /// Exact evaluation; the point must assign every declared variable.
    Rational eval(const std::map<std::string, Rational>& point) const;
    Rational eval(const std::vector<Rational>& point) const;  // by universe order
    double eval_double(const std::map<std::string, double>& point) const;

    /// Substitute an image polynomial for every declared variable. All images
    /// must share one universe, which becomes the result's universe.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    /// Reinterpret over a different universe. Every variable this polynomial
    /// actually uses must be present in the new universe.
    Polynomial with_universe(std::vector<std::string> vars) const;

    /// Canonical expression string: graded-lex term order, explicit '*',
    /// '^' only for exponents >= 2. Reparsing a canonical string under the
    /// documented grammar reproduces the polynomial exactly.
    std::string to_string() const;

    bool operator==(const Polynomial& other) const {
        return vars_ == other.vars_ && terms_ == other.terms_;
    }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

private:
    std::vector<std::string> vars_;
    Terms terms_;

    void check_same_universe(const Polynomial& other) const;
    void insert_term(Terms& into, const Monomial& m, const Rational& c) const;
};

/// Compose a univariate polynomial with an argument polynomial: g(arg).
Polynomial compose_univariate(const Polynomial& g, const Polynomial& arg);

/// Quotient of two polynomials over one universe. Never reduced by gcd:
/// zero-testing looks at the numerator only and equality cross-multiplies.
class RationalFunction {
public:
    RationalFunction(Polynomial numerator, Polynomial denominator);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool equals(const RationalFunction& other) const;

    RationalFunction operator+(const RationalFunction& other) const;
    RationalFunction operator-(const RationalFunction& other) const;
    RationalFunction operator*(const RationalFunction& other) const;

    RationalFunction derivative(std::string_view var) const;

    std::string to_string() const;

private:
    Polynomial num_;
    Polynomial den_;
};

}  // namespace zg
