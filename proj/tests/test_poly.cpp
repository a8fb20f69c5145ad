#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lipsat/errors.hpp"
#include "lipsat/poly_parse.hpp"
#include "lipsat/polynomial.hpp"

using namespace lipsat;

namespace {

Polynomial P(const std::string& text, const Vars& vars) {
    return parse_polynomial(text, vars);
}

// deterministic sparse polynomial, <= 5 vars, degree <= 6
Polynomial random_poly(std::mt19937_64& rng, const Vars& vars) {
    Polynomial p = Polynomial::zero(vars);
    int nterms = 1 + (int)(rng() % 6);
    for (int t = 0; t < nterms; ++t) {
        Monomial m(vars.size());
        int left = 6;
        for (auto& e : m.exps) {
            e = (int)(rng() % (std::uint64_t)(left + 1));
            left -= e;
        }
        long num = (long)(rng() % 21) - 10;
        long den = 1 + (long)(rng() % 5);
        p.add_term(m, rat_of(num, den));
    }
    return p;
}

std::vector<Rat> random_point(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rat> pt;
    for (std::size_t i = 0; i < n; ++i)
        pt.push_back(rat_of((long)(rng() % 13) - 6, 1 + (long)(rng() % 4)));
    return pt;
}

}  // namespace

TEST_CASE("addition") {
    Vars xy{"x", "y"};
    CHECK(P("x + y", xy) + P("-y", xy) == P("x", xy));
    Polynomial p = P("3*x^2*y - 1/2", xy);
    CHECK(p + Polynomial::zero(xy) == p);

    Vars ys{"y1", "y2"};
    Polynomial sum = P("y1^4 - y2^4", ys) + P("y1^5 - y2^5", ys);
    CHECK(sum == P("y1^5 + y1^4 - y2^5 - y2^4", ys));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 3; ++i) {
        auto pt = random_point(rng, 2);
        CHECK(sum.evaluate(pt) ==
              P("y1^4 - y2^4", ys).evaluate(pt) + P("y1^5 - y2^5", ys).evaluate(pt));
    }
}

TEST_CASE("multiplication") {
    Vars x{"x"};
    CHECK(P("x", x) * P("x", x) == P("x^2", x));
    Vars xy{"x", "y"};
    Polynomial p = P("2*x*y - y^3 + 7", xy);
    CHECK(p * Polynomial::constant(xy, 1) == p);

    Vars ys{"y1", "y2"};
    CHECK(P("y1 + y2", ys) * P("y1^5 - y2^5", ys) ==
          P("y1^6 + y1^5*y2 - y1*y2^5 - y2^6", ys));
    // the factorization identity behind y1^6 - y2^6
    CHECK(P("(y1 + y2)*(y1^5 - y2^5) - y1*y2*(y1^4 - y2^4)", ys) ==
          P("y1^6 - y2^6", ys));
}

TEST_CASE("mixed ambients are rejected") {
    Vars x{"x"}, y{"y"};
    CHECK_THROWS_AS(P("x", x) + P("y", y), VariableMismatch);
    CHECK_THROWS_AS(P("x", x) * P("y", y), VariableMismatch);
}

TEST_CASE("substitute") {
    Vars xy{"x", "y"}, t{"t"};
    CHECK(P("y^2 - x^3", xy).substitute({P("t^2", t), P("t^3", t)}).is_zero());
    std::vector<Polynomial> node{P("x", xy), P("x*y", xy)};
    CHECK(P("x", xy).substitute(node) == P("x", xy));
    CHECK(P("y", xy).substitute(node) == P("x*y", xy));
    CHECK_THROWS_AS(P("x", xy).substitute({P("t", t)}), ArityMismatch);
}

TEST_CASE("evaluate") {
    Vars v{"x1", "y1", "x2", "y2"};
    std::vector<Rat> pt{0, 1, 0, -1};
    CHECK(P("y1 - y2", v).evaluate(pt) == 2);
    CHECK(Polynomial::zero(v).evaluate(pt) == 0);
    CHECK(P("y1^2 - x1 - 1", v).evaluate(pt) == 0);
    CHECK_THROWS_AS(P("x1", v).evaluate({Rat(1)}), ArityMismatch);
}

TEST_CASE("ring axioms on random inputs") {
    Vars v{"a", "b", "c", "d", "e"};
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        Polynomial p = random_poly(rng, v), q = random_poly(rng, v),
                   r = random_poly(rng, v);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("evaluate and substitute are ring morphisms") {
    Vars v{"a", "b", "c"};
    std::mt19937_64 rng(17);
    for (int i = 0; i < 25; ++i) {
        Polynomial p = random_poly(rng, v), q = random_poly(rng, v);
        auto pt = random_point(rng, 3);
        CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
        CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));

        Vars w{"s", "t"};
        std::vector<Polynomial> images{random_poly(rng, w), random_poly(rng, w),
                                       random_poly(rng, w)};
        CHECK((p * q).substitute(images) ==
              p.substitute(images) * q.substitute(images));
        CHECK((p + q).substitute(images) ==
              p.substitute(images) + q.substitute(images));
    }
}

TEST_CASE("printing round-trips through the parser") {
    Vars v{"x", "y", "z"};
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        Polynomial p = random_poly(rng, v);
        CHECK(parse_polynomial(p.to_string(), v) == p);
    }
}

TEST_CASE("parser reports positions and rejects junk") {
    Vars v{"x", "y"};
    CHECK(P("1/2", v) == Polynomial::constant(v, rat_of(1, 2)));
    CHECK(P("x^2*y - 3", v) == P("-3 + y*x^2", v));
    CHECK_THROWS_AS(P("x +", v), ParseError);
    CHECK_THROWS_AS(P("w", v), ParseError);
    CHECK_THROWS_AS(P("x ^ y", v), ParseError);
    try {
        P("x +\n* y", v);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 1);
    }
}

TEST_CASE("monomial orders") {
    MonomialOrder grevlex = MonomialOrder::grevlex();
    Monomial x2{{2, 0}}, xy{{1, 1}}, y2{{0, 2}}, x{{1, 0}};
    CHECK(grevlex.greater(x2, xy));
    CHECK(grevlex.greater(xy, y2));
    CHECK(grevlex.greater(y2, x));  // degree dominates

    // block order eliminating the first variable: anything involving it wins
    MonomialOrder elim = MonomialOrder::eliminating(1);
    Monomial w{{1, 0}}, y5{{0, 5}};
    CHECK(elim.greater(w, y5));

    Vars v{"x", "y"};
    CHECK(P("x^2 + x*y + y^2 + x", v).leading(grevlex).first == x2);
}
