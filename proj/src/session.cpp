#include "lipsat/session.hpp"

#include <cctype>
#include <chrono>
#include <set>
#include <sstream>

#include "lipsat/errors.hpp"
#include "lipsat/poly_parse.hpp"

namespace lipsat {

using nlohmann::json;

namespace {

const std::set<std::string> kKinds = {
    "lipschitz",     "saturation",       "seminormal",
    "lipschitz-seminormal", "integral",  "member",
    "radical-member", "dominant",        "fibers",
    "sample-lipschitz", "sample-ideal"};

struct Scanner {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else
                ++col;
        }
        throw ParseError(line, col, msg);
    }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos); }

    void skip_ws() {
        while (pos < text.size()) {
            char c = text[pos];
            if (std::isspace((unsigned char)c))
                ++pos;
            else if (c == '#') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else
                break;
        }
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    static bool name_start(char c) {
        return std::isalpha((unsigned char)c) || c == '_';
    }
    static bool name_char(char c) {
        return std::isalnum((unsigned char)c) || c == '_' || c == '\'';
    }
    std::string name(const char* what = "name", bool allow_dash = false) {
        skip_ws();
        if (pos >= text.size() || !name_start(text[pos]))
            fail(std::string("expected ") + what);
        std::size_t start = pos;
        while (pos < text.size() &&
               (name_char(text[pos]) ||
                (allow_dash && text[pos] == '-' && pos + 1 < text.size() &&
                 name_start(text[pos + 1]))))
            ++pos;
        return text.substr(start, pos - start);
    }
    void keyword(const std::string& kw) {
        std::size_t at = pos;
        skip_ws();
        at = pos;
        if (name("keyword") != kw) fail("expected '" + kw + "'", at);
    }
    /// Raw text up to an unparenthesized stop character (not consumed).
    std::string capture(const std::string& stops) {
        skip_ws();
        std::size_t start = pos;
        int depth = 0;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(')
                ++depth;
            else if (c == ')') {
                if (depth == 0 && stops.find(')') != std::string::npos) break;
                if (depth == 0) fail("unbalanced ')'");
                --depth;
            } else if (depth == 0 && stops.find(c) != std::string::npos)
                break;
            else if (c == ';' && depth > 0)
                fail("expected ')'");
            ++pos;
        }
        if (pos >= text.size()) fail("unexpected end of input", start);
        std::string s = text.substr(start, pos - start);
        while (!s.empty() && std::isspace((unsigned char)s.back())) s.pop_back();
        if (s.empty()) fail("expected a polynomial", start);
        return s;
    }
};

// splits "value as num / den" at top level; returns false when no as-clause
bool split_as_clause(const std::string& raw, std::string& value,
                     std::string& num, std::string& den) {
    int depth = 0;
    std::size_t as_at = std::string::npos;
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
        char c = raw[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && c == 'a' && raw[i + 1] == 's' &&
            (i == 0 || std::isspace((unsigned char)raw[i - 1])) &&
            (i + 2 >= raw.size() || std::isspace((unsigned char)raw[i + 2]))) {
            as_at = i;
            break;
        }
    }
    if (as_at == std::string::npos) return false;
    value = raw.substr(0, as_at);
    std::string rest = raw.substr(as_at + 2);
    depth = 0;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == '(') ++depth;
        if (rest[i] == ')') --depth;
        if (depth == 0 && rest[i] == '/' && i > 0 &&
            std::isspace((unsigned char)rest[i - 1]))
            slash = i;
    }
    if (slash == std::string::npos)
        throw Error("integrality representative needs 'num / den' with a "
                    "spaced slash");
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
    return true;
}

std::string trim(std::string s) {
    while (!s.empty() && std::isspace((unsigned char)s.front())) s.erase(s.begin());
    while (!s.empty() && std::isspace((unsigned char)s.back())) s.pop_back();
    return s;
}

}  // namespace

const RingDecl* Session::find_ring(const std::string& n) const {
    for (const auto& st : statements)
        if (auto* r = std::get_if<RingDecl>(&st))
            if (r->name == n) return r;
    return nullptr;
}

const MapDecl* Session::find_map(const std::string& n) const {
    for (const auto& st : statements)
        if (auto* m = std::get_if<MapDecl>(&st))
            if (m->name == n) return m;
    return nullptr;
}

const ElemDecl* Session::find_elem(const std::string& n) const {
    for (const auto& st : statements)
        if (auto* e = std::get_if<ElemDecl>(&st))
            if (e->name == n) return e;
    return nullptr;
}

std::vector<const BranchDecl*> Session::branches_on(const std::string& ring) const {
    std::vector<const BranchDecl*> out;
    for (const auto& st : statements)
        if (auto* b = std::get_if<BranchDecl>(&st))
            if (b->ring == ring) out.push_back(b);
    return out;
}

Session parse_session(const std::string& text) {
    Session s;
    Scanner sc{text};
    auto ring_of = [&](const std::string& n, std::size_t at) -> const RingDecl& {
        const RingDecl* r = s.find_ring(n);
        if (!r) sc.fail("undeclared ring '" + n + "'", at);
        return *r;
    };
    while (!sc.at_end()) {
        std::size_t stmt_at = sc.pos;
        std::string head = sc.name("statement keyword");
        if (head == "ring") {
            RingDecl d;
            d.name = sc.name();
            sc.expect('=');
            sc.keyword("Q");
            sc.expect('[');
            Vars vars;
            vars.push_back(sc.name("variable"));
            while (sc.accept(',')) vars.push_back(sc.name("variable"));
            sc.expect(']');
            std::vector<Polynomial> gens;
            if (sc.accept('/')) {
                sc.expect('(');
                do {
                    std::size_t at = sc.pos;
                    std::string raw = sc.capture(",)");
                    try {
                        gens.push_back(parse_polynomial(raw, vars));
                    } catch (const ParseError& e) {
                        sc.fail(e.what(), at);
                    }
                } while (sc.accept(','));
                sc.expect(')');
            }
            sc.expect(';');
            if (s.find_ring(d.name)) sc.fail("duplicate ring '" + d.name + "'", stmt_at);
            d.ring = PresentedRing(vars, gens);
            s.statements.emplace_back(std::move(d));
        } else if (head == "map") {
            MapDecl d;
            d.name = sc.name();
            sc.expect(':');
            std::size_t at = sc.pos;
            d.source = sc.name();
            const RingDecl& src = ring_of(d.source, at);
            sc.expect('-');
            sc.expect('>');
            at = sc.pos;
            d.target = sc.name();
            const RingDecl& tgt = ring_of(d.target, at);
            sc.expect('=');
            sc.expect('(');
            std::vector<Polynomial> images;
            do {
                std::size_t pat = sc.pos;
                std::string raw = sc.capture(",)");
                try {
                    images.push_back(parse_polynomial(raw, tgt.ring.vars));
                } catch (const ParseError& e) {
                    sc.fail(e.what(), pat);
                }
            } while (sc.accept(','));
            sc.expect(')');
            sc.expect(';');
            d.morphism = RingMorphism(src.ring, tgt.ring, images);
            s.statements.emplace_back(std::move(d));
        } else if (head == "branch") {
            BranchDecl d;
            d.name = sc.name();
            sc.keyword("on");
            std::size_t at = sc.pos;
            d.ring = sc.name();
            const RingDecl& ring = ring_of(d.ring, at);
            sc.expect('=');
            sc.expect('(');
            std::vector<Series> comps;
            Vars tvar{"t"};
            do {
                std::size_t pat = sc.pos;
                std::string raw = sc.capture(",)");
                try {
                    comps.push_back(
                        Series::of_polynomial(parse_polynomial(raw, tvar)));
                } catch (const ParseError& e) {
                    sc.fail(e.what(), pat);
                }
            } while (sc.accept(','));
            sc.expect(')');
            sc.expect(';');
            d.branch = make_branch(d.name, ring.ring, std::move(comps));
            s.statements.emplace_back(std::move(d));
        } else if (head == "elem") {
            ElemDecl d;
            d.name = sc.name();
            sc.keyword("in");
            std::size_t at = sc.pos;
            d.ring = sc.name();
            const RingDecl& ring = ring_of(d.ring, at);
            sc.expect('=');
            std::size_t pat = sc.pos;
            std::string raw = sc.capture(";");
            std::string value = raw, num, den;
            if (split_as_clause(raw, value, num, den)) {
                d.num_text = trim(num);
                d.den_text = trim(den);
            }
            try {
                d.value = parse_polynomial(trim(value), ring.ring.vars);
            } catch (const ParseError& e) {
                sc.fail(e.what(), pat);
            }
            sc.expect(';');
            s.statements.emplace_back(std::move(d));
        } else if (head == "check") {
            Command c;
            std::size_t at = sc.pos;
            c.kind = sc.name("check kind", /*allow_dash=*/true);
            if (!kKinds.count(c.kind)) sc.fail("unknown check kind '" + c.kind + "'", at);
            c.name = sc.name();
            while (sc.peek() != ';') {
                std::string flag = sc.name("flag", /*allow_dash=*/true);
                if (flag == "element") {
                    c.element = sc.name();
                    continue;
                }
                std::string value;
                if (sc.accept('=')) {
                    sc.skip_ws();
                    std::size_t start = sc.pos;
                    while (sc.pos < text.size() &&
                           (Scanner::name_char(text[sc.pos]) || text[sc.pos] == '-'))
                        ++sc.pos;
                    value = text.substr(start, sc.pos - start);
                    if (value.empty()) sc.fail("expected a flag value");
                }
                c.flags.emplace_back(flag, value);
            }
            sc.expect(';');
            s.statements.emplace_back(std::move(c));
        } else {
            sc.fail("unknown statement '" + head + "'", stmt_at);
        }
    }
    return s;
}

namespace {

std::string print_command(const Command& c) {
    std::ostringstream os;
    os << "check " << c.kind << " " << c.name;
    if (c.element) os << " element " << *c.element;
    for (const auto& [f, v] : c.flags) {
        os << " " << f;
        if (!v.empty()) os << "=" << v;
    }
    os << ";";
    return os.str();
}

}  // namespace

std::string print_session(const Session& s) {
    std::ostringstream os;
    for (const auto& st : s.statements) {
        if (auto* r = std::get_if<RingDecl>(&st)) {
            os << "ring " << r->name << " = Q[";
            for (std::size_t i = 0; i < r->ring.vars.size(); ++i)
                os << (i ? ", " : "") << r->ring.vars[i];
            os << "]";
            bool any = false;
            for (const auto& g : r->ring.defining.generators())
                if (!g.is_zero()) any = true;
            if (any) {
                os << " / (";
                bool first = true;
                for (const auto& g : r->ring.defining.generators()) {
                    if (g.is_zero()) continue;
                    os << (first ? "" : ", ") << g.to_string();
                    first = false;
                }
                os << ")";
            }
            os << ";\n";
        } else if (auto* m = std::get_if<MapDecl>(&st)) {
            os << "map " << m->name << " : " << m->source << " -> " << m->target
               << " = (";
            for (std::size_t i = 0; i < m->morphism.images().size(); ++i)
                os << (i ? ", " : "") << m->morphism.images()[i].to_string();
            os << ");\n";
        } else if (auto* b = std::get_if<BranchDecl>(&st)) {
            os << "branch " << b->name << " on " << b->ring << " = (";
            for (std::size_t i = 0; i < b->branch.components.size(); ++i)
                os << (i ? ", " : "") << b->branch.components[i].to_string();
            os << ");\n";
        } else if (auto* e = std::get_if<ElemDecl>(&st)) {
            os << "elem " << e->name << " in " << e->ring << " = "
               << e->value.to_string();
            if (e->num_text) os << " as " << *e->num_text << " / " << *e->den_text;
            os << ";\n";
        } else if (auto* c = std::get_if<Command>(&st)) {
            os << print_command(*c) << "\n";
        }
    }
    return os.str();
}

namespace {

json rat_json(const Rat& r) {
    return json{{"num", num_string(r)}, {"den", den_string(r)}};
}

json poly_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(json{{"exponents", m.exps}, {"coefficient", rat_json(c)}});
    return json{{"vars", p.vars()},
                {"terms", terms},
                {"text", p.to_string()}};
}

json cert_json(const IntegralCertificate& cert, const Vars& vars) {
    json coeffs = json::array();
    for (int i = 1; i <= cert.n; ++i) {
        json combos = json::array();
        for (const auto& cb : cert.combos[(std::size_t)i - 1])
            combos.push_back(json{{"cofactor", poly_json(cb.cofactor)},
                                  {"generators", cb.gen_indices}});
        coeffs.push_back(json{{"i", i},
                              {"value", poly_json(cert.coefficient(i, vars))},
                              {"combos", combos}});
    }
    return json{{"n", cert.n}, {"coefficients", coeffs}};
}

json witness_json(const MembershipVerdict& v) {
    if (v.arc_witness) {
        json comps = json::array();
        for (const auto& c : v.arc_witness->arc.components)
            comps.push_back(c.to_string());
        return json{{"type", "arc"},
                    {"arc", v.arc_witness->arc.label},
                    {"components", comps},
                    {"target_order", v.arc_witness->target_order.to_string()},
                    {"ideal_order", v.arc_witness->ideal_order.to_string()}};
    }
    if (v.point_witness) {
        json pt = json::array();
        for (const auto& c : v.point_witness->point) pt.push_back(rat_json(c));
        return json{{"type", "point"},
                    {"point", pt},
                    {"target_value", rat_json(v.point_witness->target_value)}};
    }
    return nullptr;
}

json bounds_json(const SearchBounds& b) {
    return json{{"max_relation_degree", b.max_relation_degree},
                {"max_cofactor_degree", b.max_cofactor_degree}};
}

const char* verdict_string(Status st) {
    switch (st) {
        case Status::Proved: return "proved";
        case Status::Refuted: return "refuted";
        case Status::Unknown: return "unknown";
    }
    return "?";
}

void fill_verdict(json& doc, const MembershipVerdict& v, const Vars& vars) {
    doc["verdict"] = verdict_string(v.status);
    if (v.proved() && v.certificate)
        doc["certificate"] = cert_json(*v.certificate, vars);
    if (v.refuted()) {
        json w = witness_json(v);
        if (!w.is_null()) doc["witness"] = w;
    }
}

json report_json(const RatioReport& r) {
    return json{{"scale_maxima", r.scale_maxima},
                {"growth_exponent_estimate", r.growth_exponent_estimate},
                {"degenerate_count", r.degenerate_count},
                {"hint", to_string(r.verdict_hint)}};
}

}  // namespace

RunResult run_session(const Session& s, const RunOptions& opts) {
    RunResult out;
    std::ostringstream text;
    auto require = [&](bool ok, const std::string& msg) {
        if (!ok) throw Error(msg);
    };
    for (const auto& st : s.statements) {
        auto* cmd = std::get_if<Command>(&st);
        if (!cmd) continue;
        json doc;
        doc["command"] = print_command(*cmd);
        doc["kind"] = cmd->kind;
        auto t0 = std::chrono::steady_clock::now();
        try {
            const MapDecl* md = s.find_map(cmd->name);
            require(md != nullptr, "undeclared map '" + cmd->name + "'");
            const RingMorphism& m = md->morphism;

            SaturationQuery q;
            q.morphism = m;
            q.bounds = opts.bounds;
            bool want_arcs = opts.standard_arcs;
            if (cmd->element) {
                const ElemDecl* ed = s.find_elem(*cmd->element);
                require(ed != nullptr, "undeclared elem '" + *cmd->element + "'");
                require(ed->ring == md->target,
                        "elem '" + ed->name + "' lives in '" + ed->ring +
                            "', not the target of '" + md->name + "'");
                q.element = ed->value;
                if (ed->num_text)
                    q.integral_num =
                        parse_polynomial(*ed->num_text, m.source().vars);
                if (ed->den_text)
                    q.integral_den =
                        parse_polynomial(*ed->den_text, m.source().vars);
            }
            for (const auto& [flag, value] : cmd->flags) {
                if (flag == "nmax")
                    q.bounds.max_relation_degree = std::stoi(value);
                else if (flag == "dmax")
                    q.bounds.max_cofactor_degree = std::stoi(value);
                else if (flag == "nonintegral")
                    q.declared_nonintegral = true;
                else if (flag == "arcs")
                    want_arcs = (value == "standard");
                else
                    throw Error("unknown flag '" + flag + "'");
            }
            if (want_arcs)
                for (const auto* bd : s.branches_on(md->target))
                    q.branches.push_back(bd->branch);
            doc["bounds"] = bounds_json(q.bounds);

            auto need_element = [&] {
                require(cmd->element.has_value(),
                        "'" + cmd->kind + "' needs an element");
            };
            if (cmd->kind == "dominant") {
                doc["verdict"] = m.is_dominant() ? "true" : "false";
            } else if (cmd->kind == "lipschitz") {
                need_element();
                fill_verdict(doc, lipschitz_member(q),
                             tensor_square(m).ring.vars);
            } else if (cmd->kind == "saturation") {
                need_element();
                doc["verdict"] = saturation_member(q) ? "true" : "false";
            } else if (cmd->kind == "seminormal") {
                need_element();
                fill_verdict(doc, seminormalization_member(q), m.source().vars);
            } else if (cmd->kind == "lipschitz-seminormal") {
                need_element();
                fill_verdict(doc, lipschitz_seminormalization_member(q),
                             m.source().vars);
            } else if (cmd->kind == "integral") {
                need_element();
                MembershipVerdict v;
                v.bounds = q.bounds;
                if (q.integral_num && q.integral_den)
                    v = element_integral(*q.integral_num, *q.integral_den,
                                         m.source().defining, q.bounds);
                else if (auto pre = in_image(m, q.element))
                    v = element_integral(*pre,
                                         Polynomial::constant(pre->vars(), 1),
                                         m.source().defining, q.bounds);
                fill_verdict(doc, v, m.source().vars);
            } else if (cmd->kind == "member" || cmd->kind == "radical-member") {
                need_element();
                TensorSquare ts = tensor_square(m);
                Polynomial z = ts.diff_element(q.element);
                bool ok = cmd->kind == "member"
                              ? ideal_member(z, ts.kernel_plus_defining()).member
                              : radical_member(z, ts.kernel_plus_defining());
                doc["verdict"] = ok ? "true" : "false";
            } else if (cmd->kind == "fibers") {
                need_element();
                doc["verdict"] = constant_on_fibers(m, q.element) ? "true" : "false";
            } else if (cmd->kind == "sample-lipschitz") {
                need_element();
                std::vector<Branch> branches;
                for (const auto* bd : s.branches_on(md->target))
                    branches.push_back(bd->branch);
                require(!branches.empty(), "no branches declared on '" +
                                               md->target + "'");
                RatioReport r = sample_lipschitz_ratio(q, branches, opts.ladder);
                doc["verdict"] = to_string(r.verdict_hint);
                doc["report"] = report_json(r);
            } else if (cmd->kind == "sample-ideal") {
                need_element();
                std::vector<Branch> branches;
                for (const auto* bd : s.branches_on(md->target))
                    branches.push_back(bd->branch);
                require(!branches.empty(), "no branches declared on '" +
                                               md->target + "'");
                TensorSquare ts = tensor_square(m);
                std::vector<Branch> tensor_branches;
                for (auto& arc : standard_arc_family(ts, branches, 3,
                                                     {Rat(1), Rat(-1), Rat(2)},
                                                     opts.trunc))
                    tensor_branches.push_back(
                        Branch{arc.label, ts.ring, std::move(arc.components)});
                RatioReport r = sample_ideal_ratio(
                    ts.diff_element(q.element), ts.phi_kernel.generators(),
                    tensor_branches, opts.ladder);
                doc["verdict"] = to_string(r.verdict_hint);
                doc["report"] = report_json(r);
            }
        } catch (const InconsistentChain& e) {
            doc["error"] = e.what();
            out.documents.push_back(doc);
            out.exit_code = 2;
            break;
        } catch (const Error& e) {
            doc["error"] = e.what();
            out.documents.push_back(doc);
            out.exit_code = 1;
            break;
        }
        auto t1 = std::chrono::steady_clock::now();
        doc["timing_ms"] =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        out.documents.push_back(doc);
        text << doc["command"].get<std::string>() << "  ->  "
             << doc["verdict"].get<std::string>() << "\n";
    }
    if (opts.format == "json") {
        json all = json::array();
        for (const auto& d : out.documents) all.push_back(d);
        out.text = all.dump(2) + "\n";
    } else {
        out.text = text.str();
    }
    return out;
}

}  // namespace lipsat
