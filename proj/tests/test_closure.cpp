#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lipsat/closure.hpp"
#include "lipsat/errors.hpp"
#include "lipsat/poly_parse.hpp"

using namespace lipsat;

namespace {

PresentedRing ring(const Vars& vars, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_polynomial(g, vars));
    return PresentedRing(vars, ps);
}

Ideal I(const std::vector<std::string>& gens, const Vars& vars) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_polynomial(g, vars));
    if (ps.empty()) ps.push_back(Polynomial::zero(vars));
    return Ideal(ps);
}

const SearchBounds kBounds{4, 6};

}  // namespace

TEST_CASE("degree-one relations are plain ideal membership") {
    Vars ys{"y1", "y2"};
    Ideal q = I({"y1^4 - y2^4", "y1^5 - y2^5"}, ys);
    Ideal none = I({}, ys);
    auto v = certificate_search(parse_polynomial("y1^6 - y2^6", ys), q, none, kBounds);
    REQUIRE(v.proved());
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->n == 1);
    CHECK(verify_certificate(parse_polynomial("y1^6 - y2^6", ys), q, none,
                             *v.certificate));

    Vars x{"x"};
    auto triv = certificate_search(parse_polynomial("x", x), I({"x"}, x),
                                   I({}, x), kBounds);
    REQUIRE(triv.proved());
    CHECK(triv.certificate->n == 1);
}

TEST_CASE("monomials integral over monomial ideals") {
    Vars xy{"x", "y"};
    Ideal none2 = I({}, xy);
    auto v = certificate_search(parse_polynomial("x^2*y", xy), I({"x^3", "y^3"}, xy),
                                none2, kBounds);
    REQUIRE(v.proved());
    CHECK(v.certificate->n == 3);  // z^3 = (x^3)^2 * y^3
    CHECK(verify_certificate(parse_polynomial("x^2*y", xy), I({"x^3", "y^3"}, xy),
                             none2, *v.certificate));
    // every combo of a_i multiplies exactly i generators
    for (std::size_t i = 0; i < v.certificate->combos.size(); ++i)
        for (const auto& cb : v.certificate->combos[i])
            CHECK(cb.gen_indices.size() == i + 1);

    Vars xyz{"x", "y", "z"};
    auto w = certificate_search(parse_polynomial("x*y*z^2", xyz),
                                I({"x^4", "y^4", "z^4"}, xyz), I({}, xyz), kBounds);
    REQUIRE(w.proved());
    CHECK(w.certificate->n == 4);
}

TEST_CASE("verification rejects tampered certificates") {
    Vars ys{"y1", "y2"};
    Ideal q = I({"y1^4 - y2^4", "y1^5 - y2^5"}, ys);
    Ideal none = I({}, ys);
    Polynomial z = parse_polynomial("y1^6 - y2^6", ys);
    auto v = certificate_search(z, q, none, kBounds);
    REQUIRE(v.proved());

    IntegralCertificate bad = *v.certificate;
    bad.combos[0][0].cofactor += Polynomial::constant(ys, 1);
    CHECK_FALSE(verify_certificate(z, q, none, bad));

    IntegralCertificate structural = *v.certificate;
    structural.combos[0][0].gen_indices.push_back(0);  // claims a_1 in I^2
    CHECK_THROWS_AS(verify_certificate(z, q, none, structural), MalformedCertificate);

    IntegralCertificate mismatched = *v.certificate;
    mismatched.combos[0][0].product += Polynomial::constant(ys, 1);
    CHECK_THROWS_AS(verify_certificate(z, q, none, mismatched), MalformedCertificate);
}

TEST_CASE("certificates survive a print/parse round trip") {
    Vars xy{"x", "y"};
    Ideal m = I({"x^3", "y^3"}, xy);
    Ideal none = I({}, xy);
    Polynomial z = parse_polynomial("x^2*y", xy);
    auto v = certificate_search(z, m, none, kBounds);
    REQUIRE(v.proved());
    IntegralCertificate copy = *v.certificate;
    for (auto& level : copy.combos)
        for (auto& cb : level) {
            cb.cofactor = parse_polynomial(cb.cofactor.to_string(), xy);
            cb.product = parse_polynomial(cb.product.to_string(), xy);
        }
    CHECK(verify_certificate(z, m, none, copy));
}

namespace {

// three coordinate lines crossing pairwise at the origin, normalized by the
// ring of functions on the disjoint components
struct TripleLine {
    PresentedRing A = ring({"x", "y"}, {"x*y*(y - x)"});
    PresentedRing B = ring({"t", "e1", "e2", "e3"},
                           {"e1 + e2 + e3 - 1", "e1*e2", "e1*e3", "e2*e3",
                            "e1^2 - e1", "e2^2 - e2", "e3^2 - e3"});
    RingMorphism nu{A, B, {B.parse("t*(e1 + e3)"), B.parse("t*(e2 + e3)")}};
    TensorSquare ts = tensor_square(nu);
    Polynomial z = ts.diff_element(B.parse("t*e3"));
};

}  // namespace

TEST_CASE("triple-line: a corrected quadratic relation verifies") {
    TripleLine tl;
    const auto& gens = tl.ts.phi_kernel.generators();
    REQUIRE(gens.size() == 2);
    const Polynomial& dx = gens[0];
    const Polynomial& dy = gens[1];

    IntegralCertificate cert;
    cert.n = 2;
    cert.combos.resize(2);
    Polynomial minus_one = Polynomial::constant(tl.ts.ring.vars, -1);
    cert.combos[0].push_back({minus_one, {0}, dx});
    cert.combos[0].push_back({minus_one, {1}, dy});
    Polynomial q = tl.ts.ring.parse("e31 + e32 - e31*e32");
    cert.combos[1].push_back({q, {0, 1}, dx * dy});
    CHECK(verify_certificate(tl.z, tl.ts.phi_kernel, tl.ts.ring.defining, cert));

    // the same shape with a one-sided idempotent coefficient fails: the
    // relation does not reduce to zero
    IntegralCertificate onesided;
    onesided.n = 2;
    onesided.combos.resize(2);
    Polynomial e31 = tl.ts.ring.parse("e31");
    Polynomial one = Polynomial::constant(tl.ts.ring.vars, 1);
    onesided.combos[0].push_back({e31, {1}, dy});
    onesided.combos[0].push_back({one, {0}, dx});
    onesided.combos[1].push_back({e31, {0, 1}, dx * dy});
    CHECK_FALSE(verify_certificate(tl.z, tl.ts.phi_kernel, tl.ts.ring.defining,
                                   onesided));

    auto found = certificate_search(tl.z, tl.ts.phi_kernel, tl.ts.ring.defining,
                                    SearchBounds{2, 4});
    REQUIRE(found.proved());
    CHECK(found.certificate->n <= 2);
    CHECK(verify_certificate(tl.z, tl.ts.phi_kernel, tl.ts.ring.defining,
                             *found.certificate));
}

namespace {

struct Quartic {
    PresentedRing A = ring({"x", "y"}, {"y^4 - x^5"});
    PresentedRing B = ring({"y"}, {});
    RingMorphism pi{A, B, {B.parse("y^4"), B.parse("y^5")}};
    TensorSquare ts = tensor_square(pi);
    Branch line = make_branch("line", B, {Series::parameter()});
};

}  // namespace

TEST_CASE("arc refutation") {
    Quartic q;
    Arc a = pair_arc(q.ts, q.line, q.line, Series::parameter(), Series::zero());
    auto v = arc_refute(q.ts.diff_element(q.B.parse("y")), q.ts.phi_kernel,
                        q.ts.ring.defining, {a});
    REQUIRE(v.refuted());
    REQUIRE(v.arc_witness.has_value());
    CHECK(v.arc_witness->target_order == ExtOrder::finite(1));
    CHECK(v.arc_witness->ideal_order == ExtOrder::finite(4));

    // a genuine member is never refuted, whatever the arcs
    auto mem = arc_refute(q.ts.diff_element(q.B.parse("y^6")), q.ts.phi_kernel,
                          q.ts.ring.defining, standard_arc_family(q.ts, {q.line}));
    CHECK(mem.status == Status::Unknown);

    // arcs must lie on the ambient variety
    PresentedRing cusp = ring({"x", "y"}, {"y^2 - x^3"});
    Arc bad;
    bad.components = {Series::parameter(), Series::parameter()};
    CHECK_THROWS_AS(arc_refute(parse_polynomial("y", cusp.vars),
                               I({"x"}, cusp.vars), cusp.defining, {bad}),
                    ArcOffVariety);
}

TEST_CASE("newton polyhedron membership") {
    Vars xy{"x", "y"};
    Ideal m = I({"x^3", "y^3"}, xy);
    CHECK(newton_member(Monomial{{2, 1}}, m));
    CHECK(newton_member(Monomial{{3, 0}}, m));
    CHECK(newton_member(Monomial{{4, 2}}, m));
    CHECK_FALSE(newton_member(Monomial{{1, 1}}, m));
    CHECK_FALSE(newton_member(Monomial{{2, 0}}, m));
    CHECK_THROWS_AS(newton_member(Monomial{{1, 1}}, I({"x + y"}, xy)),
                    NonMonomialIdeal);
}

TEST_CASE("integrality of fractions") {
    Vars xy{"x", "y"};
    Ideal node = I({"y^2 - x^2*(x + 1)"}, xy);
    auto v = element_integral(parse_polynomial("y", xy), parse_polynomial("x", xy),
                              node, kBounds);
    REQUIRE(v.proved());
    CHECK(v.certificate->n == 2);  // (y/x)^2 = x + 1
    CHECK(v.certificate->combos[0].empty());
    // a_2 = -(x + 1) * x^2
    Polynomial a2 = v.certificate->coefficient(2, xy);
    CHECK(a2 == parse_polynomial("-x^3 - x^2", xy));

    Vars x{"x"};
    auto whole = element_integral(parse_polynomial("x^2", x),
                                  parse_polynomial("x", x), I({}, x), kBounds);
    REQUIRE(whole.proved());
    CHECK(whole.certificate->n == 1);

    auto bad = element_integral(Polynomial::constant(x, 1),
                                parse_polynomial("x", x), I({}, x), kBounds);
    CHECK(bad.status == Status::Unknown);

    CHECK_THROWS_AS(element_integral(parse_polynomial("x", x),
                                     Polynomial::zero(x), I({}, x), kBounds),
                    ZeroGenerator);
}

TEST_CASE("blow-up charts") {
    PresentedRing plane = ring({"x", "y"}, {});
    Ideal origin = I({"x", "y"}, plane.vars);
    auto charts = blowup_charts(plane, origin);
    REQUIRE(charts.size() == 2);
    CHECK(charts[0].vars == Vars{"x", "y", "u2"});
    CHECK(ideal_equal(charts[0].defining,
                      Ideal({charts[0].parse("x*u2 - y")})));
    CHECK(charts[1].vars == Vars{"x", "y", "u1"});
    CHECK(ideal_equal(charts[1].defining,
                      Ideal({charts[1].parse("y*u1 - x")})));

    // the pulled-back ideal is principal on each chart
    CHECK(chart_member(parse_polynomial("x*y", plane.vars), origin, charts[0], 0));
    CHECK(chart_member(parse_polynomial("y", plane.vars), origin, charts[0], 0));
    CHECK_FALSE(chart_member(Polynomial::constant(plane.vars, 1), origin,
                             charts[0], 0));
    CHECK(chart_member(parse_polynomial("x", plane.vars), origin, charts[1], 1));

    // blowing up a principal ideal changes nothing
    auto triv = blowup_charts(plane, I({"x"}, plane.vars));
    REQUIRE(triv.size() == 1);
    CHECK(triv[0].defining.is_zero_ideal());
}

TEST_CASE("point witnesses") {
    Vars tv{"x1", "y1", "x2", "y2"};
    Ideal kernel = I({"x1 - x2", "x1*y1 - x2*y2"}, tv);
    Ideal defining = I({"y1^2 - x1 - 1", "y2^2 - x2 - 1"}, tv);
    auto w = check_point_witness(parse_polynomial("y1 - y2", tv), kernel, defining,
                                 {0, 1, 0, -1});
    REQUIRE(w.has_value());
    CHECK(w->target_value == 2);
    // wrong points are rejected: off the variety, or with vanishing target
    CHECK_FALSE(check_point_witness(parse_polynomial("y1 - y2", tv), kernel,
                                    defining, {1, 1, 1, 1}).has_value());
    CHECK_FALSE(check_point_witness(parse_polynomial("y1 - y2", tv), kernel,
                                    defining, {0, 1, 0, 1}).has_value());
}

TEST_CASE("search, refutation and the newton oracle agree on monomial data") {
    std::mt19937_64 rng(7);
    Vars xy{"x", "y"};
    int proved = 0, refuted = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Polynomial> gens;
        int ng = 1 + (int)(rng() % 3);
        for (int g = 0; g < ng; ++g) {
            Monomial m(2);
            m.exps[0] = (int)(rng() % 4);
            m.exps[1] = (int)(rng() % 4);
            if (m.exps[0] == 0 && m.exps[1] == 0) m.exps[0] = 1;
            Polynomial p = Polynomial::zero(xy);
            p.add_term(m, Rat(1));
            gens.push_back(p);
        }
        Ideal J(gens);
        Monomial tm(2);
        tm.exps[0] = (int)(rng() % 6);
        tm.exps[1] = (int)(rng() % 6);
        Polynomial target = Polynomial::zero(xy);
        target.add_term(tm, Rat(1));

        bool oracle = newton_member(tm, J);
        auto found = certificate_search(target, J, I({}, xy), kBounds);
        if (found.proved()) {
            ++proved;
            CHECK(oracle);
            CHECK(verify_certificate(target, J, I({}, xy), *found.certificate));
        }
        // weighted monomial arcs refute exactly outside the polyhedron
        std::vector<Arc> arcs;
        for (int w1 = 0; w1 <= 5; ++w1)
            for (int w2 = 0; w2 <= 5; ++w2) {
                if (w1 == 0 && w2 == 0) continue;
                Arc a;
                a.label = "weight";
                a.components = {Series::term(1, w1, 64), Series::term(1, w2, 64)};
                arcs.push_back(a);
            }
        auto ref = arc_refute(target, J, I({}, xy), arcs);
        if (ref.refuted()) {
            ++refuted;
            CHECK_FALSE(oracle);
        }
    }
    CHECK(proved > 0);
    CHECK(refuted > 0);
}
