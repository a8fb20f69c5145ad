#include "lipsat/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "lipsat/errors.hpp"

namespace lipsat {

bool GroebnerBasis::is_unit() const {
    return elements.size() == 1 && elements[0].is_constant() &&
           !elements[0].is_zero();
}

Ideal::Ideal(std::vector<Polynomial> generators, MonomialOrder order)
    : order_(order) {
    if (generators.empty())
        throw Error("an ideal needs at least one generator (use [0] for the zero ideal)");
    vars_ = generators[0].vars();
    for (const auto& g : generators) {
        if (g.vars() != vars_)
            throw VariableMismatch("ideal generators over mixed variable lists");
        if (!g.is_zero()) gens_.push_back(g);
    }
    if (gens_.empty()) gens_.push_back(Polynomial::zero(vars_));
}

bool Ideal::is_zero_ideal() const {
    return gens_.size() == 1 && gens_[0].is_zero();
}

const GroebnerBasis& Ideal::basis() const {
    std::call_once(cache_->flag, [this] {
        cache_->gb = groebner(is_zero_ideal() ? std::vector<Polynomial>{} : gens_,
                              order_);
    });
    return *cache_->gb;
}

namespace {

struct Tracked {
    Polynomial poly;
    std::vector<Polynomial> rep;  // over the original generators
};

// Full division of t.poly by the current list; returns remainder in place.
void reduce_tracked(Tracked& t, const std::vector<Tracked>& basis,
                    const MonomialOrder& order) {
    Polynomial p = std::move(t.poly);
    Polynomial rem(p.vars());
    while (!p.is_zero()) {
        const auto& [lm, lc] = p.leading(order);
        bool reduced = false;
        for (const auto& g : basis) {
            const auto& [glm, glc] = g.poly.leading(order);
            if (!mono_divides(glm, lm)) continue;
            Monomial q = mono_div(lm, glm);
            Rat scale = lc / glc;
            p -= g.poly.times_term(q, scale);
            for (std::size_t j = 0; j < t.rep.size(); ++j)
                t.rep[j] -= g.rep[j].times_term(q, scale);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            p.add_term(lm, -lc);
        }
    }
    t.poly = std::move(rem);
}

struct Pair {
    int deg;
    std::size_t i, j;
    friend auto operator<=>(const Pair&, const Pair&) = default;
};

}  // namespace

GroebnerBasis groebner(const std::vector<Polynomial>& gens,
                       const MonomialOrder& order) {
    GroebnerBasis out;
    out.order = order;
    if (gens.empty()) return out;
    const Vars& vars = gens[0].vars();
    const std::size_t ngens = gens.size();

    std::vector<Tracked> G;
    for (std::size_t j = 0; j < ngens; ++j) {
        if (gens[j].is_zero()) continue;
        Tracked t{gens[j], std::vector<Polynomial>(ngens, Polynomial::zero(vars))};
        t.rep[j] = Polynomial::constant(vars, 1);
        G.push_back(std::move(t));
    }
    if (G.empty()) return out;

    std::set<Pair> pending;
    auto add_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            Monomial l = mono_lcm(G[i].poly.leading(order).first,
                                  G[k].poly.leading(order).first);
            pending.insert({l.degree(), i, k});
        }
    };
    for (std::size_t k = 1; k < G.size(); ++k) add_pairs(k);

    while (!pending.empty()) {
        Pair pr = *pending.begin();  // normal strategy: lowest lcm degree first
        pending.erase(pending.begin());
        const auto& [lmi, lci] = G[pr.i].poly.leading(order);
        const auto& [lmj, lcj] = G[pr.j].poly.leading(order);
        if (mono_coprime(lmi, lmj)) continue;  // product criterion
        Monomial l = mono_lcm(lmi, lmj);
        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!mono_divides(G[k].poly.leading(order).first, l)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                if (a > b) std::swap(a, b);
                Monomial m = mono_lcm(G[a].poly.leading(order).first,
                                      G[b].poly.leading(order).first);
                return Pair{m.degree(), a, b};
            };
            if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k)))
                skip = true;
        }
        if (skip) continue;

        Tracked s{Polynomial(vars), std::vector<Polynomial>(ngens, Polynomial::zero(vars))};
        Monomial ui = mono_div(l, lmi), uj = mono_div(l, lmj);
        s.poly = G[pr.i].poly.times_term(ui, Rat(1) / lci) -
                 G[pr.j].poly.times_term(uj, Rat(1) / lcj);
        for (std::size_t t = 0; t < ngens; ++t)
            s.rep[t] = G[pr.i].rep[t].times_term(ui, Rat(1) / lci) -
                       G[pr.j].rep[t].times_term(uj, Rat(1) / lcj);
        reduce_tracked(s, G, order);
        if (!s.poly.is_zero()) {
            G.push_back(std::move(s));
            add_pairs(G.size() - 1);
        }
    }

    // interreduce: drop elements whose lead is divisible by another lead,
    // then tail-reduce every survivor against the others.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            const Monomial lm = G[i].poly.leading(order).first;
            for (std::size_t j = 0; j < G.size(); ++j) {
                if (i == j) continue;
                if (mono_divides(G[j].poly.leading(order).first, lm)) {
                    Tracked t = std::move(G[i]);
                    G.erase(G.begin() + (long)i);
                    std::vector<Tracked> rest = G;
                    reduce_tracked(t, rest, order);
                    if (!t.poly.is_zero()) G.push_back(std::move(t));
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
    for (std::size_t i = 0; i < G.size(); ++i) {
        Tracked t = std::move(G[i]);
        std::vector<Tracked> others;
        for (std::size_t j = 0; j < G.size(); ++j)
            if (j != i) others.push_back(G[j]);
        // keep the leading term, reduce only the tail
        const auto [lm, lc] = t.poly.leading(order);
        Polynomial head = Polynomial::term(t.poly.vars(), lm, lc);
        t.poly -= head;
        reduce_tracked(t, others, order);
        t.poly += head;
        G[i] = std::move(t);
    }
    // monic, deterministic order (ascending leading monomial)
    for (auto& g : G) {
        Rat lc = g.poly.leading(order).second;
        g.poly = g.poly.scaled(Rat(1) / lc);
        for (auto& r : g.rep) r = r.scaled(Rat(1) / lc);
    }
    std::sort(G.begin(), G.end(), [&](const Tracked& a, const Tracked& b) {
        return order.greater(b.poly.leading(order).first,
                             a.poly.leading(order).first);
    });
    for (auto& g : G) {
        out.elements.push_back(std::move(g.poly));
        out.reps.push_back(std::move(g.rep));
    }
    return out;
}

ReductionTrace reduce(const Polynomial& f, const GroebnerBasis& gb) {
    ReductionTrace tr;
    tr.cofactors.assign(gb.elements.size(), Polynomial::zero(f.vars()));
    Polynomial p = f;
    Polynomial rem(f.vars());
    while (!p.is_zero()) {
        const auto& [lm, lc] = p.leading(gb.order);
        bool reduced = false;
        for (std::size_t i = 0; i < gb.elements.size(); ++i) {
            const auto& [glm, glc] = gb.elements[i].leading(gb.order);
            if (!mono_divides(glm, lm)) continue;
            Monomial q = mono_div(lm, glm);
            Rat scale = lc / glc;
            p -= gb.elements[i].times_term(q, scale);
            tr.cofactors[i].add_term(q, scale);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            p.add_term(lm, -lc);
        }
    }
    tr.normal_form = std::move(rem);
    return tr;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (gb.elements.empty()) return f;
    return reduce(f, gb).normal_form;
}

MembershipResult ideal_member(const Polynomial& f, const Ideal& I) {
    if (f.vars() != I.vars())
        throw VariableMismatch("ideal_member: ambient mismatch");
    const GroebnerBasis& gb = I.basis();
    MembershipResult res;
    if (gb.elements.empty()) {  // zero ideal
        res.member = f.is_zero();
        res.trace.normal_form = f;
        return res;
    }
    res.trace = reduce(f, gb);
    res.member = res.trace.normal_form.is_zero();
    if (res.member) {
        res.gen_cofactors.assign(I.generators().size(), Polynomial::zero(f.vars()));
        for (std::size_t i = 0; i < gb.elements.size(); ++i)
            for (std::size_t j = 0; j < I.generators().size(); ++j)
                res.gen_cofactors[j] += res.trace.cofactors[i] * gb.reps[i][j];
    }
    return res;
}

namespace {

std::string fresh_name(const Vars& vars, std::string base) {
    while (std::find(vars.begin(), vars.end(), base) != vars.end()) base += "_";
    return base;
}

}  // namespace

bool radical_member(const Polynomial& f, const Ideal& I) {
    if (f.vars() != I.vars())
        throw VariableMismatch("radical_member: ambient mismatch");
    Vars ext = I.vars();
    ext.push_back(fresh_name(ext, "w"));
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        if (!g.is_zero()) gens.push_back(lift(g, ext));
    Polynomial w = Polynomial::variable(ext, ext.size() - 1);
    gens.push_back(Polynomial::constant(ext, 1) - w * lift(f, ext));
    return groebner(gens, MonomialOrder::grevlex()).is_unit();
}

Ideal eliminate(const Ideal& I, std::size_t k) {
    if (k == 0) return Ideal(I.generators(), I.order());
    if (k > I.vars().size()) throw Error("eliminate: block larger than ambient");
    Vars rest(I.vars().begin() + (long)k, I.vars().end());
    std::vector<Polynomial> kept;
    if (!I.is_zero_ideal()) {
        GroebnerBasis gb = groebner(I.generators(), MonomialOrder::eliminating(k));
        std::vector<int> slot_map(I.vars().size(), -1);
        for (std::size_t i = k; i < I.vars().size(); ++i)
            slot_map[i] = (int)(i - k);
        for (const auto& e : gb.elements)
            if (e.supported_within(k, I.vars().size()))
                kept.push_back(e.remap(rest, slot_map));
    }
    if (kept.empty()) kept.push_back(Polynomial::zero(rest));
    return Ideal(std::move(kept));
}

Ideal saturate(const Ideal& I, const Polynomial& p) {
    if (p.is_zero()) throw ZeroGenerator("saturate: zero polynomial");
    if (p.vars() != I.vars())
        throw VariableMismatch("saturate: ambient mismatch");
    Vars ext;
    ext.push_back(fresh_name(I.vars(), "w"));
    ext.insert(ext.end(), I.vars().begin(), I.vars().end());
    std::vector<int> shift(I.vars().size());
    for (std::size_t i = 0; i < I.vars().size(); ++i) shift[i] = (int)(i + 1);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        if (!g.is_zero()) gens.push_back(g.remap(ext, shift));
    Polynomial w = Polynomial::variable(ext, 0);
    gens.push_back(Polynomial::constant(ext, 1) - w * p.remap(ext, shift));
    if (gens.empty()) gens.push_back(Polynomial::zero(ext));
    return eliminate(Ideal(std::move(gens)), 1);
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    if (I.vars() != J.vars()) return false;
    for (const auto& g : I.generators())
        if (!ideal_member(g, J).member) return false;
    for (const auto& g : J.generators())
        if (!ideal_member(g, I).member) return false;
    return true;
}

}  // namespace lipsat
