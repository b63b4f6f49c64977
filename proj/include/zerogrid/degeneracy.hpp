#pragma once

#include "zerogrid/polynomial.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zg {

enum class DerivativeVerdict {
    NonzeroCertified,  // mixed partial of log|f_x/f_y| is not identically zero
    IdenticallyZero,   // consistent with a sum form; NOT a proof of one
};

/// Outcome of the mixed-partial test on a bivariate f. The test expression
/// d/dy(f_xx/f_x - f_xy/f_y) is carried as a cleared fraction:
///   N = (f_xxy*f_x - f_xx*f_xy)*f_y^2 - (f_xyy*f_y - f_xy*f_yy)*f_x^2
/// over denominator f_x^2 * f_y^2. NonzeroCertified (N != 0) proves f admits
/// no representation psi(phi1(x) + phi2(y)) on any open set where f_x*f_y is
/// nonvanishing. The test is one-directional: IdenticallyZero certifies
/// nothing beyond consistency.
struct DerivativeTestResult {
    DerivativeVerdict verdict;
    Polynomial witness_numerator;
    Polynomial witness_denominator;
    // Exact zeros of the numerator found by a fixed rational probe; display
    // aid only.
    std::vector<std::pair<Rational, Rational>> vanishing_samples;

    std::string to_json() const;
};

/// Requires f over exactly two variables with f_x and f_y both not
/// identically zero; a violated hypothesis is Error{Domain}, never a verdict.
DerivativeTestResult derivative_test(const Polynomial& f);

/// Rewrite F = 0 as var = f(remaining variables). F must have degree exactly
/// one in var with a constant nonzero coefficient; the result lives over the
/// reduced universe.
Polynomial solve_linear_variable(const Polynomial& F, std::string_view var);

enum class DecompositionKind { Additive, Multiplicative };

/// Witness for f = g(h(x) + k(y)) or f = g(h(x) * k(y)). g is univariate in
/// "t"; h and k are univariate in f's own variables. The recomposition
/// identity is verified exactly before a witness is returned.
struct Decomposition {
    DecompositionKind kind;
    Polynomial g, h, k;
};

/// Decide the sum form for bivariate f of total degree <= 2 that depends on
/// both variables. nullopt is a proof that no polynomial g, h, k of any
/// degree exist. Degree > 2 is Error{UnsupportedDegree}: the exhaustive case
/// analysis behind the nullopt claim only covers degree 2.
std::optional<Decomposition> decompose_additive(const Polynomial& f);

/// Same contract for the product form f = g(h(x) * k(y)).
std::optional<Decomposition> decompose_multiplicative(const Polynomial& f);

/// Exact check of the recomposition identity for a claimed witness.
bool decomposition_valid(const Decomposition& d, const Polynomial& f);

std::string decomposition_to_json(DecompositionKind kind,
                                  const std::optional<Decomposition>& d);

}  // namespace zg
