#include "zerogrid/degeneracy.hpp"

#include "zerogrid/error.hpp"

#include <json.hpp>

#include <array>

namespace zg {

namespace {

void require_bivariate(const Polynomial& f, const char* who) {
    if (f.variables().size() != 2)
        fail(ErrorCode::Domain, std::string(who) + " requires a polynomial over exactly two variables");
}

}  // namespace

DerivativeTestResult derivative_test(const Polynomial& f) {
    require_bivariate(f, "derivative_test");
    const std::string& x = f.variables()[0];
    const std::string& y = f.variables()[1];

    const Polynomial fx = f.derivative(x);
    const Polynomial fy = f.derivative(y);
    if (fx.is_zero())
        fail(ErrorCode::Domain, "hypothesis violated: f_" + x + " is identically zero");
    if (fy.is_zero())
        fail(ErrorCode::Domain, "hypothesis violated: f_" + y + " is identically zero");

    const Polynomial fxx = fx.derivative(x);
    const Polynomial fxy = fx.derivative(y);
    const Polynomial fyy = fy.derivative(y);
    const Polynomial fxxy = fxx.derivative(y);
    const Polynomial fxyy = fxy.derivative(y);

    // d/dy(f_xx/f_x - f_xy/f_y), cleared over f_x^2 * f_y^2
    const Polynomial numerator =
        (fxxy * fx - fxx * fxy) * fy * fy - (fxyy * fy - fxy * fyy) * fx * fx;
    const Polynomial denominator = fx * fx * fy * fy;

    DerivativeTestResult result{
        numerator.is_zero() ? DerivativeVerdict::IdenticallyZero
                            : DerivativeVerdict::NonzeroCertified,
        numerator, denominator, {}};

    if (result.verdict == DerivativeVerdict::NonzeroCertified) {
        // Fixed rational probe for zeros of the numerator, display aid only.
        static const std::array<Rational, 6> base_points = {
            Rational(0), Rational(1), Rational(-1), Rational(2), Rational(7, 3), Rational(1, 2)};
        static const std::array<Rational, 13> offsets = {
            Rational(0),     Rational(1, 4),  Rational(-1, 4), Rational(1, 2), Rational(-1, 2),
            Rational(1),     Rational(-1),    Rational(3, 4),  Rational(-3, 4), Rational(2),
            Rational(-2),    Rational(1, 3),  Rational(-1, 3)};
        for (const auto& x0 : base_points) {
            for (const auto& q : offsets) {
                const Rational y0 = x0 + q;
                const std::vector<Rational> at{x0, y0};
                if (numerator.eval(at) != 0) continue;
                if (denominator.eval(at) == 0) continue;  // test undefined there
                result.vanishing_samples.emplace_back(x0, y0);
                if (result.vanishing_samples.size() >= 8) return result;
            }
        }
    }
    return result;
}

std::string DerivativeTestResult::to_json() const {
    nlohmann::json j;
    j["verdict"] = verdict == DerivativeVerdict::NonzeroCertified ? "NonzeroCertified"
                                                                  : "IdenticallyZero";
    j["meaning"] = verdict == DerivativeVerdict::NonzeroCertified
                       ? "no form psi(phi1(x)+phi2(y)) exists on any open set with f_x*f_y != 0"
                       : "consistent with degenerate (necessary condition only, not a proof)";
    j["numerator"] = witness_numerator.to_string();
    j["denominator"] = witness_denominator.to_string();
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& [px, py] : vanishing_samples)
        samples.push_back({{"x", rational_to_string(px)}, {"y", rational_to_string(py)}});
    j["vanishing_samples"] = samples;
    return j.dump();
}

Polynomial solve_linear_variable(const Polynomial& F, std::string_view var) {
    const std::size_t idx = F.var_index(var);
    const auto deg_v = F.degree_in(var);
    if (!deg_v || *deg_v == 0)
        fail(ErrorCode::Domain, "polynomial does not depend on '" + std::string(var) + "'");
    if (*deg_v > 1)
        fail(ErrorCode::Domain, "polynomial is nonlinear in '" + std::string(var) + "'");

    // split F = c * var + rest; c must be a nonzero constant
    Rational c(0);
    std::vector<std::string> reduced;
    for (const auto& v : F.variables())
        if (v != var) reduced.push_back(v);

    Polynomial::Terms rest_terms;
    for (const auto& [m, coeff] : F.terms()) {
        std::vector<std::uint32_t> exps;
        exps.reserve(reduced.size());
        for (std::size_t i = 0; i < F.variables().size(); ++i)
            if (i != idx) exps.push_back(m.exponent(i));
        if (m.exponent(idx) == 1) {
            bool pure = true;
            for (auto e : exps) pure = pure && e == 0;
            if (!pure)
                fail(ErrorCode::Domain,
                     "coefficient of '" + std::string(var) + "' is not constant");
            c = coeff;
        } else {
            rest_terms.emplace(Monomial(std::move(exps)), coeff);
        }
    }
    if (c == 0) fail(ErrorCode::Internal, "linear coefficient vanished unexpectedly");

    // F = c*(var - f) = 0  =>  var = f = -rest/c
    Polynomial rest = Polynomial::from_terms(reduced, std::move(rest_terms));
    return rest.scaled(Rational(-1) / c);
}

namespace {

struct QuadCoeffs {
    // f = A x^2 + B xy + C y^2 + D x + E y + G
    Rational A, B, C, D, E, G;
};

QuadCoeffs quad_coeffs(const Polynomial& f) {
    auto mono = [](std::uint32_t ex, std::uint32_t ey) { return Monomial({ex, ey}); };
    return {f.coefficient(mono(2, 0)), f.coefficient(mono(1, 1)), f.coefficient(mono(0, 2)),
            f.coefficient(mono(1, 0)), f.coefficient(mono(0, 1)), f.coefficient(mono(0, 0))};
}

void require_decomposable_input(const Polynomial& f, const char* who) {
    require_bivariate(f, who);
    const auto deg = f.degree();
    if (deg && *deg > 2)
        fail(ErrorCode::UnsupportedDegree,
             std::string(who) + " covers total degree <= 2 only; a nullopt verdict beyond "
                                "that would be an unproved claim");
    if (!f.depends_on(f.variables()[0]) || !f.depends_on(f.variables()[1]))
        fail(ErrorCode::Domain, std::string(who) + " requires f to depend on both variables");
}

Polynomial univar(const std::string& v, const Rational& c2, const Rational& c1,
                  const Rational& c0) {
    Polynomial::Terms t;
    if (c2 != 0) t.emplace(Monomial({2}), c2);
    if (c1 != 0) t.emplace(Monomial({1}), c1);
    if (c0 != 0) t.emplace(Monomial({0}), c0);
    return Polynomial::from_terms({v}, std::move(t));
}

Decomposition checked(Decomposition d, const Polynomial& f) {
    if (!decomposition_valid(d, f))
        fail(ErrorCode::Internal, "constructed decomposition failed the recomposition identity");
    return d;
}

}  // namespace

bool decomposition_valid(const Decomposition& d, const Polynomial& f) {
    const Polynomial h = d.h.with_universe(f.variables());
    const Polynomial k = d.k.with_universe(f.variables());
    const Polynomial arg = d.kind == DecompositionKind::Additive ? h + k : h * k;
    return compose_univariate(d.g, arg) == f;
}

std::optional<Decomposition> decompose_additive(const Polynomial& f) {
    require_decomposable_input(f, "decompose_additive");
    const std::string& x = f.variables()[0];
    const std::string& y = f.variables()[1];
    const auto [A, B, C, D, E, G] = quad_coeffs(f);

    if (B == 0) {
        // No cross term: f splits as x-part + y-part + constant, so deg(g)=1
        // works. Normalize h monic by the x-part's leading coefficient.
        const Rational lead = A != 0 ? A : D;
        Decomposition d{DecompositionKind::Additive,
                        univar("t", 0, lead, G),
                        univar(x, A / lead, D / lead, 0),
                        univar(y, C / lead, E / lead, 0)};
        return checked(std::move(d), f);
    }

    // Cross term forces deg(g)=2 with linear h, k: the quadratic part must be
    // a perfect square (B^2 = 4AC) and the linear part must match it
    // (B*D = 2*A*E; equivalently B*E = 2*C*D).
    if (B * B != 4 * A * C || B * D != 2 * A * E) return std::nullopt;
    Decomposition d{DecompositionKind::Additive,
                    univar("t", A, D, G),
                    univar(x, 0, 1, 0),
                    univar(y, 0, B / (2 * A), 0)};
    return checked(std::move(d), f);
}

std::optional<Decomposition> decompose_multiplicative(const Polynomial& f) {
    require_decomposable_input(f, "decompose_multiplicative");
    const std::string& x = f.variables()[0];
    const std::string& y = f.variables()[1];
    const auto [A, B, C, D, E, G] = quad_coeffs(f);

    // deg(g)=2 would force h or k constant, contradicting dependence on both
    // variables; deg(g)=1 with linear h, k can produce no x^2 or y^2 term and
    // needs a cross term from h*k.
    if (A != 0 || C != 0 || B == 0) return std::nullopt;
    Decomposition d{DecompositionKind::Multiplicative,
                    univar("t", 0, B, G - D * E / B),
                    univar(x, 0, 1, E / B),
                    univar(y, 0, 1, D / B)};
    return checked(std::move(d), f);
}

std::string decomposition_to_json(DecompositionKind kind,
                                  const std::optional<Decomposition>& d) {
    nlohmann::json j;
    j["kind"] = kind == DecompositionKind::Additive ? "additive" : "multiplicative";
    j["found"] = d.has_value();
    if (d) {
        j["g"] = d->g.to_string();
        j["h"] = d->h.to_string();
        j["k"] = d->k.to_string();
    } else {
        j["meaning"] = "no polynomials g, h, k of any degree admit this form";
    }
    return j.dump();
}

}  // namespace zg
