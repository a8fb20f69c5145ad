#include "lipsat/poly_parse.hpp"

#include <algorithm>
#include <cctype>

#include "lipsat/errors.hpp"

namespace lipsat {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (std::size_t k = 0; k < i && k < s.size(); ++k) {
            if (s[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(line, col, msg);
    }
};

struct PolyParser {
    Cursor& c;
    const Vars& vars;

    Polynomial expr() {
        Polynomial r = term();
        while (true) {
            char ch = c.peek();
            if (ch == '+') {
                ++c.i;
                r += term();
            } else if (ch == '-') {
                ++c.i;
                r -= term();
            } else {
                return r;
            }
        }
    }

    Polynomial term() {
        Polynomial r = factor();
        while (c.peek() == '*') {
            ++c.i;
            r = r * factor();
        }
        return r;
    }

    Polynomial factor() {
        Polynomial b = base();
        while (c.peek() == '^') {
            ++c.i;
            if (!std::isdigit((unsigned char)c.peek())) c.fail("expected exponent");
            b = b.pow((int)integer());
        }
        return b;
    }

    long integer() {
        c.skip_ws();
        std::size_t start = c.i;
        while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) ++c.i;
        if (start == c.i) c.fail("expected integer");
        return std::stol(c.s.substr(start, c.i - start));
    }

    Polynomial base() {
        char ch = c.peek();
        if (ch == '-') {
            ++c.i;
            return -factor();
        }
        if (ch == '(') {
            ++c.i;
            Polynomial r = expr();
            if (c.peek() != ')') c.fail("expected ')'");
            ++c.i;
            return r;
        }
        if (std::isdigit((unsigned char)ch)) {
            Rat v(integer());
            if (c.peek() == '/') {
                ++c.i;
                long d = integer();
                if (d == 0) c.fail("zero denominator");
                v /= d;
            }
            return Polynomial::constant(vars, v);
        }
        if (std::isalpha((unsigned char)ch) || ch == '_') {
            std::size_t start = c.i;
            while (c.i < c.s.size() &&
                   (std::isalnum((unsigned char)c.s[c.i]) || c.s[c.i] == '_' ||
                    c.s[c.i] == '\''))
                ++c.i;
            std::string name = c.s.substr(start, c.i - start);
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) {
                c.i = start;
                c.fail("unknown variable '" + name + "'");
            }
            return Polynomial::variable(vars, (std::size_t)(it - vars.begin()));
        }
        c.fail("unexpected character in polynomial");
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Vars& vars) {
    Cursor c{text};
    PolyParser p{c, vars};
    if (c.eof()) c.fail("empty polynomial");
    Polynomial r = p.expr();
    if (!c.eof()) c.fail("trailing input after polynomial");
    return r;
}

}  // namespace lipsat
