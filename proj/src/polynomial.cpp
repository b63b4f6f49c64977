#include "zerogrid/polynomial.hpp"

#include "zerogrid/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zg {

std::uint32_t Monomial::total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::times(const Monomial& other) const {
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = exps_[i] + other.exps_[i];
    return Monomial(std::move(e));
}

bool GrlexDesc::operator()(const Monomial& a, const Monomial& b) const {
    const std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();  // lexicographically larger first
}

Polynomial Polynomial::zero(std::vector<std::string> vars) {
    Polynomial p;
    p.vars_ = std::move(vars);
    return p;
}

Polynomial Polynomial::constant(std::vector<std::string> vars, Rational value) {
    Polynomial p = zero(std::move(vars));
    if (value != 0) p.terms_.emplace(Monomial(p.vars_.size()), std::move(value));
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars, std::string_view name) {
    Polynomial p = zero(std::move(vars));
    std::vector<std::uint32_t> e(p.vars_.size(), 0u);
    e[p.var_index(name)] = 1;
    p.terms_.emplace(Monomial(std::move(e)), Rational(1));
    return p;
}

Polynomial Polynomial::from_terms(std::vector<std::string> vars, Terms terms) {
    Polynomial p = zero(std::move(vars));
    for (auto& [m, c] : terms) {
        if (m.nvars() != p.vars_.size())
            fail(ErrorCode::Domain, "monomial arity does not match the variable universe");
        if (c != 0) p.terms_.emplace(m, c);
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

std::optional<int> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    // grlex-descending: the first key has the maximal total degree
    return static_cast<int>(terms_.begin()->first.total_degree());
}

std::optional<int> Polynomial::degree_in(std::string_view var) const {
    if (terms_.empty()) return std::nullopt;
    const std::size_t idx = var_index(var);
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(idx));
    return static_cast<int>(d);
}

bool Polynomial::depends_on(std::string_view var) const {
    const std::size_t idx = var_index(var);
    for (const auto& [m, c] : terms_)
        if (m.exponent(idx) > 0) return true;
    return false;
}

std::size_t Polynomial::var_index(std::string_view var) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == var) return i;
    fail(ErrorCode::Domain, "variable '" + std::string(var) + "' is not in the declared universe");
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(vars_.size())); }

void Polynomial::check_same_universe(const Polynomial& other) const {
    if (vars_ != other.vars_)
        fail(ErrorCode::Domain, "polynomials live over different variable universes");
}

void Polynomial::insert_term(Terms& into, const Monomial& m, const Rational& c) const {
    auto [it, inserted] = into.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) into.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_same_universe(other);
    Polynomial r = *this;
    for (const auto& [m, c] : other.terms_) insert_term(r.terms_, m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    check_same_universe(other);
    Polynomial r = *this;
    for (const auto& [m, c] : other.terms_) insert_term(r.terms_, m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_universe(other);
    Polynomial r = zero(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) insert_term(r.terms_, ma.times(mb), ca * cb);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return zero(vars_);
    Polynomial r = *this;
    for (auto& [m, coeff] : r.terms_) coeff *= c;
    return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial r = constant(vars_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

Polynomial Polynomial::derivative(std::string_view var) const {
    const std::size_t idx = var_index(var);
    Polynomial r = zero(vars_);
    for (const auto& [m, c] : terms_) {
        const std::uint32_t e = m.exponent(idx);
        if (e == 0) continue;
        std::vector<std::uint32_t> exps = m.exponents();
        exps[idx] = e - 1;
        insert_term(r.terms_, Monomial(std::move(exps)), c * e);
    }
    return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size())
        fail(ErrorCode::Domain, "evaluation point arity does not match the variable universe");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const std::uint32_t e = m.exponent(i);
            if (e > 0) term *= rational_pow(point[i], e);
        }
        acc += term;
    }
    return acc;
}

Rational Polynomial::eval(const std::map<std::string, Rational>& point) const {
    std::vector<Rational> values;
    values.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = point.find(v);
        if (it == point.end()) fail(ErrorCode::Domain, "variable '" + v + "' is unassigned");
        values.push_back(it->second);
    }
    if (point.size() != vars_.size())
        fail(ErrorCode::Domain, "evaluation point assigns variables outside the universe");
    return eval(values);
}

double Polynomial::eval_double(const std::map<std::string, double>& point) const {
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double term = rational_to_double(c);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = point.find(vars_[i]);
            if (it == point.end()) fail(ErrorCode::Domain, "variable '" + vars_[i] + "' is unassigned");
            for (std::uint32_t e = 0; e < m.exponent(i); ++e) term *= it->second;
        }
        acc += term;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != vars_.size())
        fail(ErrorCode::Domain, "substitution must map every declared variable");
    for (const auto& img : images)
        if (img.variables() != images.front().variables())
            fail(ErrorCode::Domain, "substitution images live over different universes");
    Polynomial acc = Polynomial::zero(images.empty() ? std::vector<std::string>{}
                                                     : images.front().variables());
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(acc.variables(), c);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const std::uint32_t e = m.exponent(i);
            if (e > 0) term = term * images[i].pow(e);
        }
        acc = acc + term;
    }
    return acc;
}

Polynomial Polynomial::with_universe(std::vector<std::string> vars) const {
    Polynomial r = zero(std::move(vars));
    // map old indices to new ones
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(r.vars_.begin(), r.vars_.end(), vars_[i]);
        where[i] = static_cast<std::size_t>(it - r.vars_.begin());
    }
    for (const auto& [m, c] : terms_) {
        std::vector<std::uint32_t> e(r.vars_.size(), 0u);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (m.exponent(i) == 0) continue;
            if (where[i] >= r.vars_.size())
                fail(ErrorCode::Domain,
                     "variable '" + vars_[i] + "' is used but absent from the new universe");
            e[where[i]] = m.exponent(i);
        }
        r.terms_.emplace(Monomial(std::move(e)), c);
    }
    return r;
}

namespace {

// Renders |c| * monomial with explicit '*' and '^'; empty monomial renders
// the bare coefficient.
std::string unsigned_term(const Rational& c, const Monomial& m,
                          const std::vector<std::string>& vars) {
    Rational a = c < 0 ? Rational(-c) : c;
    std::string mono;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const std::uint32_t e = m.exponent(i);
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars[i];
        if (e >= 2) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) return rational_to_string(a);
    if (a == 1) return mono;
    return rational_to_string(a) + "*" + mono;
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            if (c < 0) {
                // A bare leading "-x^2" would reparse as (-x)^2 under the
                // grammar, so keep the sign on the coefficient.
                std::string mono = unsigned_term(1, m, vars_);
                if (m.is_constant())
                    out += rational_to_string(c);
                else
                    out += rational_to_string(c) + "*" + mono;
            } else {
                out += unsigned_term(c, m, vars_);
            }
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
            out += unsigned_term(c, m, vars_);
        }
    }
    return out;
}

Polynomial compose_univariate(const Polynomial& g, const Polynomial& arg) {
    if (g.variables().size() != 1)
        fail(ErrorCode::Domain, "composition requires a univariate outer polynomial");
    return g.substitute({arg});
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (num_.variables() != den_.variables())
        fail(ErrorCode::Domain, "numerator and denominator live over different universes");
    if (den_.is_zero()) fail(ErrorCode::Domain, "zero denominator");
}

bool RationalFunction::equals(const RationalFunction& other) const {
    return (num_ * other.den_) == (other.num_ * den_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& other) const {
    return {num_ * other.den_ + other.num_ * den_, den_ * other.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& other) const {
    return {num_ * other.den_ - other.num_ * den_, den_ * other.den_};
}

RationalFunction RationalFunction::operator*(const RationalFunction& other) const {
    return {num_ * other.num_, den_ * other.den_};
}

RationalFunction RationalFunction::derivative(std::string_view var) const {
    // (p/q)' = (p'q - pq') / q^2
    return {num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_};
}

std::string RationalFunction::to_string() const {
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace zg
