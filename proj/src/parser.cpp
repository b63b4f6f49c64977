#include "zerogrid/parser.hpp"

#include "zerogrid/error.hpp"

#include <cctype>

namespace zg {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    const std::vector<std::string>& vars;

    explicit Parser(std::string_view t, const std::vector<std::string>& v) : text(t), vars(v) {}

    [[noreturn]] void error(const std::string& what, std::size_t at) const {
        fail(ErrorCode::Parse, "syntax error at position " + std::to_string(at + 1) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    bool at_end() {
        skip_ws();
        return pos == text.size();
    }

    Integer read_uint() {
        skip_ws();
        if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            error("expected an unsigned integer", pos);
        Integer v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return v;
    }

    std::string read_ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }

    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        for (;;) {
            if (accept('+'))
                acc = acc + parse_term();
            else if (accept('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos;
            if (pos < text.size() && text[pos] == '-')
                fail(ErrorCode::Parse, "negative exponent at position " + std::to_string(at + 1));
            Integer e = read_uint();
            if (e > 4096)
                fail(ErrorCode::Parse, "exponent too large at position " + std::to_string(at + 1));
            return base.pow(e.convert_to<std::uint32_t>());
        }
        return base;
    }

    Polynomial parse_base() {
        skip_ws();
        if (pos == text.size()) error("unexpected end of input", pos);
        const char c = text[pos];
        if (c == '-') {
            ++pos;
            return -parse_base();
        }
        if (c == '(') {
            ++pos;
            Polynomial inner = parse_expr();
            if (!accept(')')) error("expected ')'", pos);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = read_uint();
            // rational literal extension: digits '/' digits
            if (pos < text.size() && text[pos] == '/') {
                std::size_t slash = pos;
                ++pos;
                if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    error("expected digits after '/'", slash);
                Integer den = read_uint();
                if (den == 0) error("zero denominator", slash);
                return Polynomial::constant(vars, Rational(num, den));
            }
            return Polynomial::constant(vars, Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos;
            std::string name = read_ident();
            for (const auto& v : vars)
                if (v == name) return Polynomial::variable(vars, name);
            fail(ErrorCode::Domain, "undeclared variable '" + name + "' at position " +
                                        std::to_string(at + 1));
        }
        error(std::string("unexpected character '") + c + "'", pos);
    }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::vector<std::string> variables) {
    for (std::size_t i = 0; i < variables.size(); ++i)
        for (std::size_t j = i + 1; j < variables.size(); ++j)
            if (variables[i] == variables[j])
                fail(ErrorCode::Domain, "duplicate variable '" + variables[i] + "' in universe");
    Parser p(text, variables);
    p.skip_ws();
    if (p.at_end()) p.error("empty expression", 0);
    Polynomial result = p.parse_expr();
    if (!p.at_end()) p.error("trailing input", p.pos);
    return result;
}

std::vector<std::string> scan_variables(std::string_view text) {
    std::vector<std::string> found;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            std::string name(text.substr(start, i - start));
            bool seen = false;
            for (const auto& v : found) seen = seen || v == name;
            if (!seen) found.push_back(std::move(name));
        } else {
            ++i;
        }
    }
    return found;
}

}  // namespace zg
