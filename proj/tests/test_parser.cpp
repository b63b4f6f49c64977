#include "zerogrid/parser.hpp"

#include "zerogrid/error.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <functional>
#include <string>

using namespace zg;
using zgtest::P;

namespace {
const std::vector<std::string> XY{"x", "y"};

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Internal;
}
}  // namespace

TEST_CASE("grammar corners") {
    CHECK(P("2^3", XY) == Polynomial::constant(XY, 8));
    CHECK(P("-(x+y)", XY) == P("0-x-y", XY));
    CHECK(P("1/2*x", XY) == P("x", XY).scaled(Rational(1, 2)));
    CHECK(P("-3/2", XY) == Polynomial::constant(XY, Rational(-3, 2)));
    CHECK(P("1/2^3", XY) == Polynomial::constant(XY, Rational(1, 8)));
    // '^' binds to the base as written, including a leading minus
    CHECK(P("-x^2", XY) == P("x^2", XY));
    CHECK(P("-2^2", XY) == Polynomial::constant(XY, 4));
    CHECK(P("0 - x^2", XY) == -P("x^2", XY));
    CHECK(P("  ( x - y ) ^ 2 ", XY) == P("(x-y)^2", XY));
    CHECK(P("123456789012345678901234567890", XY) ==
          Polynomial::constant(XY, parse_rational("123456789012345678901234567890")));
}

TEST_CASE("parse errors carry positions and codes") {
    CHECK(code_of([] { P("", XY); }) == ErrorCode::Parse);
    CHECK(code_of([] { P("x +", XY); }) == ErrorCode::Parse);
    CHECK(code_of([] { P("(x", XY); }) == ErrorCode::Parse);
    CHECK(code_of([] { P("2x", XY); }) == ErrorCode::Parse);       // no implicit multiplication
    CHECK(code_of([] { P("x^2^3", XY); }) == ErrorCode::Parse);    // a single optional exponent
    CHECK(code_of([] { P("x^-2", XY); }) == ErrorCode::Parse);     // negative exponent
    CHECK(code_of([] { P("x^(2)", XY); }) == ErrorCode::Parse);    // exponent must be a literal
    CHECK(code_of([] { P("1/0", XY); }) == ErrorCode::Parse);
    CHECK(code_of([] { P("x/2", XY); }) == ErrorCode::Parse);      // '/' only inside literals
    CHECK(code_of([] { P("x+w", XY); }) == ErrorCode::Domain);     // undeclared variable
    CHECK(code_of([] { parse_polynomial("x", {"x", "x"}); }) == ErrorCode::Domain);

    try {
        P("x + + y", XY);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("position 5") != std::string::npos);
    }
}

TEST_CASE("printing is canonical and reparses exactly") {
    CHECK(P("(x-y)^2 + x - z", {"x", "y", "z"}).to_string() ==
          "x^2 - 2*x*y + y^2 + x - z");
    CHECK(Polynomial::zero(XY).to_string() == "0");
    CHECK(P("0-x^2+y", XY).to_string() == "-1*x^2 + y");  // leading sign stays on the coefficient
    CHECK(P("0-x", XY).to_string() == "-1*x");
    CHECK(P("y^2*x*3-7", XY).to_string() == "3*x*y^2 - 7");
    CHECK(P("1/2*x - 1/3", XY).to_string() == "1/2*x - 1/3");

    auto g = zgtest::rng(20240805);
    for (int i = 0; i < 500; ++i) {
        Polynomial p = zgtest::random_poly(g, {"x", "y", "z"}, 5, 7);
        if (i % 3 == 0) p = p.scaled(Rational(1, 2 + i % 5));
        if (i % 4 == 0) p = -p;
        const Polynomial back = P(p.to_string(), p.variables());
        CHECK(back == p);
    }
}

TEST_CASE("variable scan follows first appearance") {
    CHECK(scan_variables("(x-y)^2 + x - z") == std::vector<std::string>{"x", "y", "z"});
    CHECK(scan_variables("(x-y)^2 + s - t") == std::vector<std::string>{"x", "y", "s", "t"});
    CHECK(scan_variables("3 + 4") == std::vector<std::string>{});
}
