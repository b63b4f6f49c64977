#include "zerogrid/degeneracy.hpp"

#include "zerogrid/error.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <functional>

using namespace zg;
using zgtest::P;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Internal;
}

Polynomial embed(const Polynomial& p, const std::vector<std::string>& vars) {
    return p.with_universe(vars);
}
}  // namespace

TEST_CASE("derivative test certifies the quadratic construction polynomial") {
    const Polynomial f = P("(x-y)^2 + x", XY);
    const DerivativeTestResult r = derivative_test(f);
    CHECK(r.verdict == DerivativeVerdict::NonzeroCertified);

    // N = -4*(4(x-y)+1); its zero locus is exactly y - x = 1/4
    CHECK(r.witness_numerator == P("0 - 16*x + 16*y - 4", XY));
    const Polynomial fx = P("2*x-2*y+1", XY), fy = P("0-2*x+2*y", XY);
    CHECK(r.witness_denominator == fx * fx * fy * fy);

    for (const char* x0 : {"0", "1", "7/3"}) {
        const Rational xr = parse_rational(x0);
        CHECK(r.witness_numerator.eval({xr, xr + Rational(1, 4)}) == 0);
    }
    CHECK(r.witness_numerator.eval({Rational(0), Rational(1)}) == 12);

    // the probe should surface points on that line
    REQUIRE(!r.vanishing_samples.empty());
    for (const auto& [px, py] : r.vanishing_samples) CHECK(py - px == Rational(1, 4));
}

TEST_CASE("derivative test on the textbook degenerate shapes") {
    CHECK(derivative_test(P("x+y", XY)).verdict == DerivativeVerdict::IdenticallyZero);
    CHECK(derivative_test(P("x*y", XY)).verdict == DerivativeVerdict::IdenticallyZero);

    const DerivativeTestResult r = derivative_test(P("x^2+x*y+y^2", XY));
    CHECK(r.verdict == DerivativeVerdict::NonzeroCertified);
    CHECK(r.witness_numerator == P("6*x^2 - 6*y^2", XY));
}

TEST_CASE("derivative test hypothesis violations are errors, not verdicts") {
    CHECK(code_of([] { derivative_test(P("x", XY)); }) == ErrorCode::Domain);   // f_y == 0
    CHECK(code_of([] { derivative_test(P("y^2", XY)); }) == ErrorCode::Domain); // f_x == 0
    CHECK(code_of([] { derivative_test(P("x+y+z", XYZ)); }) == ErrorCode::Domain);
}

TEST_CASE("numerator matches the generic rational-function route") {
    // Independent algebraic route: d/dy(f_xx/f_x - f_xy/f_y) assembled with
    // plain quotient arithmetic must equal N over f_x^2 f_y^2.
    auto check_routes = [](const Polynomial& f) {
        const Polynomial fx = f.derivative("x"), fy = f.derivative("y");
        if (fx.is_zero() || fy.is_zero()) return;
        const RationalFunction direct(derivative_test(f).witness_numerator,
                                      fx * fx * fy * fy);
        const RationalFunction generic =
            (RationalFunction(fx.derivative("x"), fx) - RationalFunction(fx.derivative("y"), fy))
                .derivative("y");
        CHECK(direct.equals(generic));
    };
    check_routes(P("(x-y)^2 + x", XY));
    check_routes(P("x^2+x*y+y^2", XY));
    auto g = zgtest::rng(20240811);
    for (int i = 0; i < 50; ++i) check_routes(zgtest::random_poly(g, XY, 4, 5));
}

TEST_CASE("vanishing locus of the construction polynomial's numerator") {
    const Polynomial N = derivative_test(P("(x-y)^2 + x", XY)).witness_numerator;
    // exact divisibility: N == -4 * (4(x-y)+1)
    CHECK(N == P("4*x-4*y+1", XY).scaled(Rational(-4)));
    // rational sample sweep: zeros occur only on y - x = 1/4
    auto g = zgtest::rng(20240812);
    int zeros = 0;
    for (int i = 0; i < 100; ++i) {
        const Rational x0 = zgtest::random_point_coord(g);
        std::uniform_int_distribution<int> num(-8, 8);
        std::uniform_int_distribution<int> den(1, 8);
        const Rational q(num(g), den(g));
        const Rational y0 = x0 + q;
        if (N.eval({x0, y0}) == 0) {
            CHECK(y0 - x0 == Rational(1, 4));
            ++zeros;
        } else {
            CHECK(y0 - x0 != Rational(1, 4));
        }
    }
    // the sweep must actually have hit the line a few times
    CHECK(zeros > 0);
}

TEST_CASE("derivative test vanishes on every composite (soundness direction)") {
    auto g = zgtest::rng(20240813);
    int additive_checked = 0, multiplicative_checked = 0;
    while (additive_checked < 500 || multiplicative_checked < 500) {
        const Polynomial gp = zgtest::random_univariate(g, "t", 1, 3);
        const Polynomial hp = embed(zgtest::random_univariate(g, "x", 1, 3), XY);
        const Polynomial kp = embed(zgtest::random_univariate(g, "y", 1, 3), XY);
        if (additive_checked < 500) {
            const Polynomial f = compose_univariate(gp, hp + kp);
            if (!f.derivative("x").is_zero() && !f.derivative("y").is_zero()) {
                CHECK(derivative_test(f).verdict == DerivativeVerdict::IdenticallyZero);
                ++additive_checked;
            }
        }
        if (multiplicative_checked < 500) {
            const Polynomial f = compose_univariate(gp, hp * kp);
            if (!f.derivative("x").is_zero() && !f.derivative("y").is_zero()) {
                CHECK(derivative_test(f).verdict == DerivativeVerdict::IdenticallyZero);
                ++multiplicative_checked;
            }
        }
    }
}

TEST_CASE("verdict is symmetric in the two variables") {
    auto swap_vars = [](const Polynomial& f) {
        return f.substitute({Polynomial::variable(XY, "y"), Polynomial::variable(XY, "x")});
    };
    auto g = zgtest::rng(20240814);
    int checked = 0;
    while (checked < 60) {
        const Polynomial f = zgtest::random_poly(g, XY, 4, 5);
        if (f.derivative("x").is_zero() || f.derivative("y").is_zero()) continue;
        CHECK(derivative_test(f).verdict == derivative_test(swap_vars(f)).verdict);
        ++checked;
    }
}

TEST_CASE("solve_linear_variable") {
    CHECK(solve_linear_variable(P("(x-y)^2 + x - z", XYZ), "z") == P("(x-y)^2 + x", XY));
    CHECK(solve_linear_variable(P("(x-y)^2 + s - t", {"x", "y", "s", "t"}), "t") ==
          P("(x-y)^2 + s", {"x", "y", "s"}));
    CHECK(solve_linear_variable(P("x+y+z", XYZ), "z") == P("0-x-y", XY));
    // 2z - x: fractional solved form
    CHECK(solve_linear_variable(P("2*z - x", XYZ), "z") == P("1/2*x", XY));

    CHECK(code_of([] { solve_linear_variable(P("z^2 + x", XYZ), "z"); }) == ErrorCode::Domain);
    CHECK(code_of([] { solve_linear_variable(P("x*z + y", XYZ), "z"); }) == ErrorCode::Domain);
    CHECK(code_of([] { solve_linear_variable(P("x + y", XYZ), "z"); }) == ErrorCode::Domain);
}

TEST_CASE("additive decompositions: witnesses and refusals") {
    const auto square = decompose_additive(P("x^2+2*x*y+y^2", XY));
    REQUIRE(square.has_value());
    CHECK(square->g == P("t^2", {"t"}));
    CHECK(square->h == P("x", {"x"}));
    CHECK(square->k == P("y", {"y"}));
    CHECK(decomposition_valid(*square, P("x^2+2*x*y+y^2", XY)));

    CHECK_FALSE(decompose_additive(P("(x-y)^2 + x", XY)).has_value());

    const auto split = decompose_additive(P("x^2 + 3*y", XY));
    REQUIRE(split.has_value());
    CHECK(split->g == P("t", {"t"}));
    CHECK(split->h == P("x^2", {"x"}));
    CHECK(split->k == P("3*y", {"y"}));

    // scaled square with a consistent linear part; k picks up the 1/2 ratio
    const Polynomial f = P("4*x^2+4*x*y+y^2+2*x+y+7", XY);
    const auto scaled = decompose_additive(f);
    REQUIRE(scaled.has_value());
    CHECK(scaled->g == P("4*t^2+2*t+7", {"t"}));
    CHECK(scaled->h == P("x", {"x"}));
    CHECK(scaled->k == P("1/2*y", {"y"}));
    CHECK(decomposition_valid(*scaled, f));

    // same quadratic part, inconsistent linear part
    CHECK_FALSE(decompose_additive(P("4*x^2+4*x*y+y^2+2*x+2*y", XY)).has_value());
}

TEST_CASE("multiplicative decompositions: witnesses and refusals") {
    const auto prod = decompose_multiplicative(P("x*y", XY));
    REQUIRE(prod.has_value());
    CHECK(prod->g == P("t", {"t"}));
    CHECK(prod->h == P("x", {"x"}));
    CHECK(prod->k == P("y", {"y"}));

    CHECK_FALSE(decompose_multiplicative(P("(x-y)^2 + x", XY)).has_value());

    const auto affine = decompose_multiplicative(P("2*x*y+3", XY));
    REQUIRE(affine.has_value());
    CHECK(affine->g == P("2*t+3", {"t"}));
    CHECK(affine->h == P("x", {"x"}));
    CHECK(affine->k == P("y", {"y"}));

    const Polynomial shifted = P("4*x*y + 2*x + 2*y + 1", XY);  // (2x+1)(2y+1)
    const auto s = decompose_multiplicative(shifted);
    REQUIRE(s.has_value());
    CHECK(decomposition_valid(*s, shifted));
    CHECK(s->h == P("x + 1/2", {"x"}));
    CHECK(s->k == P("y + 1/2", {"y"}));

    CHECK_FALSE(decompose_multiplicative(P("x + y", XY)).has_value());
}

TEST_CASE("decomposition preconditions") {
    CHECK(code_of([] { decompose_additive(P("x^3 + y", XY)); }) == ErrorCode::UnsupportedDegree);
    CHECK(code_of([] { decompose_multiplicative(P("x^2*y", XY)); }) ==
          ErrorCode::UnsupportedDegree);
    CHECK(code_of([] { decompose_additive(P("x^2", XY)); }) == ErrorCode::Domain);
    CHECK(code_of([] { decompose_additive(P("5", XY)); }) == ErrorCode::Domain);
    CHECK(code_of([] { decompose_multiplicative(P("x+y+z", XYZ)); }) == ErrorCode::Domain);
}

TEST_CASE("random composites always decompose with valid witnesses") {
    auto g = zgtest::rng(20240815);
    std::uniform_int_distribution<int> small(-4, 4);
    int additive = 0, multiplicative = 0;
    while (additive < 500) {
        // f = a*(b1 x + b0 + c1 y + c0)^2 + d*(...) + e  or linear g over split parts
        const bool quadratic_outer = additive % 2 == 0;
        Polynomial f = Polynomial::zero(XY);
        if (quadratic_outer) {
            int a = small(g), b1 = small(g), c1 = small(g);
            if (a == 0 || b1 == 0 || c1 == 0) continue;
            const Polynomial inner =
                P("x", XY).scaled(b1) + P("y", XY).scaled(c1) + Polynomial::constant(XY, small(g));
            f = inner * inner;
            f = f.scaled(a) + inner.scaled(small(g)) + Polynomial::constant(XY, small(g));
        } else {
            int a = small(g);
            if (a == 0) continue;
            const Polynomial hx = zgtest::random_univariate(g, "x", 1, 2);
            const Polynomial ky = zgtest::random_univariate(g, "y", 1, 2);
            f = (embed(hx, XY) + embed(ky, XY)).scaled(a) + Polynomial::constant(XY, small(g));
        }
        if (!f.depends_on("x") || !f.depends_on("y")) continue;
        const auto d = decompose_additive(f);
        REQUIRE(d.has_value());
        CHECK(decomposition_valid(*d, f));
        if (!f.derivative("x").is_zero() && !f.derivative("y").is_zero())
            CHECK(derivative_test(f).verdict == DerivativeVerdict::IdenticallyZero);
        ++additive;
    }
    while (multiplicative < 500) {
        int a = small(g), b1 = small(g), c1 = small(g);
        if (a == 0 || b1 == 0 || c1 == 0) continue;
        const Polynomial h = P("x", XY).scaled(b1) + Polynomial::constant(XY, small(g));
        const Polynomial k = P("y", XY).scaled(c1) + Polynomial::constant(XY, small(g));
        const Polynomial f = (h * k).scaled(a) + Polynomial::constant(XY, small(g));
        const auto d = decompose_multiplicative(f);
        REQUIRE(d.has_value());
        CHECK(decomposition_valid(*d, f));
        ++multiplicative;
    }
}

TEST_CASE("additive witnesses imply a vanishing derivative test") {
    // decompose_additive != nullopt => IdenticallyZero whenever the test
    // hypothesis holds
    auto g = zgtest::rng(20240816);
    std::uniform_int_distribution<int> small(-3, 3);
    int checked = 0;
    while (checked < 200) {
        Polynomial::Terms terms;
        for (std::uint32_t ex = 0; ex <= 2; ++ex)
            for (std::uint32_t ey = 0; ey + ex <= 2; ++ey) {
                const int c = small(g);
                if (c != 0) terms.insert_or_assign(Monomial({ex, ey}), Rational(c));
            }
        const Polynomial f = Polynomial::from_terms(XY, std::move(terms));
        if (!f.depends_on("x") || !f.depends_on("y")) continue;
        if (f.derivative("x").is_zero() || f.derivative("y").is_zero()) continue;
        ++checked;
        if (decompose_additive(f).has_value())
            CHECK(derivative_test(f).verdict == DerivativeVerdict::IdenticallyZero);
    }
}

TEST_CASE("verdict serialization") {
    const std::string cert = derivative_test(P("(x-y)^2+x", XY)).to_json();
    CHECK(cert.find("NonzeroCertified") != std::string::npos);
    const std::string zero = derivative_test(P("x+y", XY)).to_json();
    CHECK(zero.find("IdenticallyZero") != std::string::npos);
    CHECK(zero.find("consistent with degenerate") != std::string::npos);
    const std::string none =
        decomposition_to_json(DecompositionKind::Additive, decompose_additive(P("(x-y)^2+x", XY)));
    CHECK(none.find("\"found\":false") != std::string::npos);
}
