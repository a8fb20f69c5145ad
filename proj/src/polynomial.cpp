#include "lipsat/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "lipsat/errors.hpp"

namespace lipsat {

Polynomial::Polynomial(Vars vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Polynomial Polynomial::constant(const Vars& vars, const Rat& c) {
    Polynomial p(vars);
    if (c != 0) p.terms_.emplace(Monomial(vars.size()), c);
    return p;
}

Polynomial Polynomial::variable(const Vars& vars, std::size_t index) {
    assert(index < vars.size());
    Monomial m(vars.size());
    m.exps[index] = 1;
    return term(vars, m, 1);
}

Polynomial Polynomial::term(const Vars& vars, Monomial m, const Rat& c) {
    Polynomial p(vars);
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rat Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void require_same_vars(const Polynomial& a, const Polynomial& b) {
    if (a.vars() != b.vars())
        throw VariableMismatch("polynomials live over different variable lists");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_vars(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_vars(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_vars(*this, o);
    Polynomial r(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r(vars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rat& c) const {
    Polynomial r(vars_);
    if (c == 0) return r;
    for (const auto& [mm, k] : terms_) r.terms_.emplace(mono_mul(mm, m), k * c);
    return r;
}

Polynomial Polynomial::pow(int n) const {
    assert(n >= 0);
    Polynomial acc = constant(vars_, 1);
    for (int i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars())
        throw ArityMismatch("substitute: expected " + std::to_string(nvars()) +
                            " images, got " + std::to_string(images.size()));
    for (std::size_t i = 1; i < images.size(); ++i)
        require_same_vars(images[0], images[i]);
    Vars target = images.empty() ? vars_ : images[0].vars();
    // power cache per variable
    std::vector<std::vector<Polynomial>> pows(images.size());
    auto power = [&](std::size_t i, int e) -> const Polynomial& {
        auto& cache = pows[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while ((int)cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m.exps[i] > 0) t = t * power(i, m.exps[i]);
        r += t;
    }
    return r;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != nvars())
        throw ArityMismatch("evaluate: expected " + std::to_string(nvars()) +
                            " coordinates, got " + std::to_string(point.size()));
    Rat r = 0;
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < m.nvars(); ++i)
            for (int e = 0; e < m.exps[i]; ++e) t *= point[i];
        r += t;
    }
    return r;
}

const std::pair<const Monomial, Rat>& Polynomial::leading(
    const MonomialOrder& order) const {
    assert(!terms_.empty());
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return *best;
}

bool Polynomial::supported_within(std::size_t lo, std::size_t hi) const {
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m.exps[i] > 0 && (i < lo || i >= hi)) return false;
    return true;
}

Polynomial Polynomial::remap(const Vars& new_vars,
                             const std::vector<int>& slot_map) const {
    Polynomial r(new_vars);
    for (const auto& [m, c] : terms_) {
        Monomial nm(new_vars.size());
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m.exps[i] == 0) continue;
            assert(slot_map[i] >= 0 && (std::size_t)slot_map[i] < new_vars.size());
            nm.exps[slot_map[i]] += m.exps[i];
        }
        r.add_term(nm, c);
    }
    return r;
}

Polynomial lift(const Polynomial& p, const Vars& bigger) {
    std::vector<int> slot_map(p.nvars(), -1);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        auto it = std::find(bigger.begin(), bigger.end(), p.vars()[i]);
        if (it == bigger.end())
            throw VariableMismatch("lift: variable " + p.vars()[i] +
                                   " missing from target variable list");
        slot_map[i] = (int)(it - bigger.begin());
    }
    return p.remap(bigger, slot_map);
}

std::string mono_string(const Monomial& m, const Vars& vars) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!first) os << "*";
        os << vars[i];
        if (m.exps[i] > 1) os << "^" << m.exps[i];
        first = false;
    }
    return first ? "1" : os.str();
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // print grevlex-descending for stable, human-friendly output
    std::vector<const std::pair<const Monomial, Rat>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    MonomialOrder ord = MonomialOrder::grevlex();
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
        return ord.greater(a->first, b->first);
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        const auto& [m, c] = *t;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (m.is_constant()) {
            os << rat_string(a);
        } else {
            if (a != 1) os << rat_string(a) << "*";
            os << mono_string(m, vars_);
        }
        first = false;
    }
    return os.str();
}

}  // namespace lipsat
