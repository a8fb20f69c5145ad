#include "lipsat/variety.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "lipsat/errors.hpp"
#include "lipsat/poly_parse.hpp"

namespace lipsat {

PresentedRing::PresentedRing(Vars vars_in, std::vector<Polynomial> defining_gens,
                             bool check_proper)
    : vars(std::move(vars_in)) {
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size())
        throw Error("ring presentation with duplicate variable names");
    if (defining_gens.empty())
        defining_gens.push_back(Polynomial::zero(vars));
    for (const auto& g : defining_gens)
        if (g.vars() != vars)
            throw VariableMismatch("defining generator over wrong variable list");
    defining = Ideal(std::move(defining_gens));
    if (check_proper && defining.basis().is_unit())
        throw Error("ring presentation is the zero ring (1 lies in the defining ideal)");
}

Polynomial PresentedRing::parse(const std::string& text) const {
    return parse_polynomial(text, vars);
}

PresentedRing make_polynomial_ring(const Vars& vars) {
    return PresentedRing(vars, {});
}

RingMorphism::RingMorphism(PresentedRing source, PresentedRing target,
                           std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.vars.size())
        throw ArityMismatch("morphism needs one image per source variable");
    for (const auto& im : images_)
        if (im.vars() != target_.vars)
            throw VariableMismatch("morphism image over wrong variable list");
    for (const auto& g : source_.defining.generators()) {
        if (g.is_zero()) continue;
        Polynomial nf = normal_form(g.substitute(images_), target_.defining.basis());
        if (!nf.is_zero())
            throw IllDefinedMorphism(g.to_string(), nf.to_string());
    }
}

Polynomial RingMorphism::apply(const Polynomial& p) const {
    if (p.vars() != source_.vars)
        throw VariableMismatch("apply: element not over the source variables");
    return p.substitute(images_);
}

namespace {

// Combined ambient [target | source], with source names freshened against
// the target block. Returns the combined list plus the graph generators
// target-defining + (source_var_i - image_i).
struct Graph {
    Vars combined;
    std::vector<Polynomial> gens;
    std::size_t ntarget;
};

Graph graph_of(const PresentedRing& source, const PresentedRing& target,
               const std::vector<Polynomial>& images) {
    Graph g;
    g.ntarget = target.vars.size();
    g.combined = target.vars;
    for (const auto& v : source.vars) {
        std::string n = v;
        while (std::find(g.combined.begin(), g.combined.end(), n) != g.combined.end())
            n += "'";
        g.combined.push_back(n);
    }
    std::vector<int> tmap(target.vars.size());
    for (std::size_t i = 0; i < target.vars.size(); ++i) tmap[i] = (int)i;
    for (const auto& d : target.defining.generators())
        if (!d.is_zero()) g.gens.push_back(d.remap(g.combined, tmap));
    for (std::size_t i = 0; i < source.vars.size(); ++i) {
        Polynomial s = Polynomial::variable(g.combined, g.ntarget + i);
        g.gens.push_back(s - images[i].remap(g.combined, tmap));
    }
    return g;
}

}  // namespace

bool RingMorphism::is_dominant() const {
    std::call_once(cache_->flag, [this] {
        Graph g = graph_of(source_, target_, images_);
        Ideal ker = eliminate(Ideal(g.gens, MonomialOrder::eliminating(g.ntarget)),
                              g.ntarget);
        std::vector<int> back(source_.vars.size());
        for (std::size_t i = 0; i < back.size(); ++i) back[i] = (int)i;
        bool dom = true;
        for (const auto& k : ker.generators()) {
            if (k.is_zero()) continue;
            Polynomial over_src = k.remap(source_.vars, back);
            if (!normal_form(over_src, source_.defining.basis()).is_zero()) {
                dom = false;
                break;
            }
        }
        cache_->dominant = dom;
    });
    return cache_->dominant;
}

RingMorphism compose(const RingMorphism& f, const RingMorphism& g) {
    // (g o f)* = f* after g*: source of g, target of f
    if (g.target().vars != f.source().vars)
        throw VariableMismatch("compose: inner target does not match outer source");
    std::vector<Polynomial> images;
    for (const auto& im : g.images()) images.push_back(f.apply(im));
    return RingMorphism(g.source(), f.target(), images);
}

Polynomial TensorSquare::into_copy(const Polynomial& f, int which) const {
    if (f.vars() != target.vars)
        throw VariableMismatch("tensor square: element not over the target variables");
    const auto& slots = which == 1 ? copy1 : copy2;
    std::vector<int> map(target.vars.size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = (int)slots[i];
    return f.remap(ring.vars, map);
}

Polynomial TensorSquare::diff_element(const Polynomial& f) const {
    return into_copy(f, 1) - into_copy(f, 2);
}

Polynomial TensorSquare::swap(const Polynomial& p) const {
    std::vector<int> map(ring.vars.size());
    for (std::size_t i = 0; i < target.vars.size(); ++i) {
        map[copy1[i]] = (int)copy2[i];
        map[copy2[i]] = (int)copy1[i];
    }
    return p.remap(ring.vars, map);
}

Ideal TensorSquare::kernel_plus_defining() const {
    std::vector<Polynomial> gens = phi_kernel.generators();
    for (const auto& d : ring.defining.generators())
        if (!d.is_zero()) gens.push_back(d);
    return Ideal(std::move(gens));
}

TensorSquare tensor_square(const RingMorphism& m) {
    const PresentedRing& B = m.target();
    TensorSquare ts;
    ts.target = B;
    Vars vars;
    auto add_copy = [&](const char* suffix, std::vector<std::size_t>& slots) {
        for (const auto& v : B.vars) {
            std::string n = v + suffix;
            while (std::find(vars.begin(), vars.end(), n) != vars.end() ||
                   std::find(B.vars.begin(), B.vars.end(), n) != B.vars.end())
                n += "_";
            slots.push_back(vars.size());
            vars.push_back(n);
        }
    };
    add_copy("1", ts.copy1);
    add_copy("2", ts.copy2);

    auto into = [&](const Polynomial& f, const std::vector<std::size_t>& slots) {
        std::vector<int> map(B.vars.size());
        for (std::size_t i = 0; i < map.size(); ++i) map[i] = (int)slots[i];
        return f.remap(vars, map);
    };
    std::vector<Polynomial> defining;
    for (const auto& d : B.defining.generators()) {
        if (d.is_zero()) continue;
        defining.push_back(into(d, ts.copy1));
        defining.push_back(into(d, ts.copy2));
    }
    ts.ring = PresentedRing(vars, std::move(defining), /*check_proper=*/false);
    std::vector<Polynomial> phi;
    for (const auto& im : m.images())
        phi.push_back(into(im, ts.copy1) - into(im, ts.copy2));
    if (phi.empty()) phi.push_back(Polynomial::zero(vars));
    ts.phi_kernel = Ideal(std::move(phi));
    return ts;
}

std::optional<Polynomial> in_image(const RingMorphism& m, const Polynomial& f) {
    if (f.vars() != m.target().vars)
        throw VariableMismatch("in_image: element not over the target variables");
    Graph g = graph_of(m.source(), m.target(), m.images());
    GroebnerBasis gb = groebner(g.gens, MonomialOrder::eliminating(g.ntarget));
    std::vector<int> tmap(m.target().vars.size());
    for (std::size_t i = 0; i < tmap.size(); ++i) tmap[i] = (int)i;
    Polynomial nf = normal_form(f.remap(g.combined, tmap), gb);
    if (!nf.supported_within(g.ntarget, g.combined.size())) return std::nullopt;
    std::vector<int> back(g.combined.size(), -1);
    for (std::size_t i = g.ntarget; i < g.combined.size(); ++i)
        back[i] = (int)(i - g.ntarget);
    return nf.remap(m.source().vars, back);
}

RingMorphism extend_by_element(const RingMorphism& m, const Polynomial& elem,
                               const std::string& name) {
    if (elem.vars() != m.target().vars)
        throw VariableMismatch("extend_by_element: element not over the target");
    Vars new_src = m.source().vars;
    std::string n = name;
    while (std::find(new_src.begin(), new_src.end(), n) != new_src.end()) n += "_";
    new_src.push_back(n);

    std::vector<Polynomial> images = m.images();
    images.push_back(elem);

    PresentedRing pseudo_source(new_src, {}, false);
    Graph g = graph_of(pseudo_source, m.target(), images);
    Ideal ker = eliminate(Ideal(g.gens, MonomialOrder::eliminating(g.ntarget)),
                          g.ntarget);
    std::vector<int> back(new_src.size());
    for (std::size_t i = 0; i < back.size(); ++i) back[i] = (int)i;
    std::vector<Polynomial> defs;
    for (const auto& k : ker.generators())
        if (!k.is_zero()) defs.push_back(k.remap(new_src, back));
    PresentedRing extended(new_src, std::move(defs));
    return RingMorphism(extended, m.target(), images);
}

}  // namespace lipsat
