#include "lipsat/series.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "lipsat/errors.hpp"

namespace lipsat {

Series Series::zero(int trunc) { return Series{{}, trunc, true}; }

Series Series::parameter(int trunc) { return term(Rat(1), 1, trunc); }

Series Series::constant(const Rat& c, int trunc) { return term(c, 0, trunc); }

Series Series::term(const Rat& c, int e, int trunc) {
    Series s;
    s.truncation = trunc;
    s.add_term(e, c);
    return s;
}

Series Series::of_polynomial(const Polynomial& p, int trunc) {
    if (p.nvars() != 1)
        throw ArityMismatch("series of_polynomial: expected a univariate polynomial");
    Series s = zero(trunc);
    for (const auto& [m, c] : p.terms()) s.add_term(m.exps[0], c);
    return s;
}

void Series::add_term(int e, const Rat& c) {
    if (c == 0) return;
    if (e >= truncation) {
        // exact series behave like polynomials: nothing beyond the horizon
        // is unknown, so the horizon may grow instead of losing the term
        if (exact)
            truncation = e + 1;
        else
            return;
    }
    auto [it, fresh] = coeffs.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

void Series::truncate(int order) {
    if (order >= truncation && exact) {
        truncation = order;
        return;
    }
    truncation = std::min(truncation, order);
    auto it = coeffs.lower_bound(truncation);
    if (it != coeffs.end()) {
        coeffs.erase(it, coeffs.end());
        exact = false;
    }
}

Series Series::operator+(const Series& o) const {
    Series r;
    r.truncation = std::min(truncation, o.truncation);
    if (exact && o.exact) r.truncation = std::max(truncation, o.truncation);
    r.exact = exact && o.exact;
    for (const auto& [e, c] : coeffs) r.add_term(e, c);
    for (const auto& [e, c] : o.coeffs) r.add_term(e, c);
    return r;
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& [e, c] : r.coeffs) c = -c;
    return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
    Series r;
    r.exact = exact && o.exact;
    if (r.exact) {
        r.truncation = std::max(truncation, o.truncation);
    } else {
        // product of series known mod t^a and t^b, with leading orders oa, ob
        auto lead = [](const Series& s) {
            return s.coeffs.empty() ? s.truncation : s.coeffs.begin()->first;
        };
        r.truncation = std::min(truncation + lead(o), o.truncation + lead(*this));
    }
    for (const auto& [ea, ca] : coeffs)
        for (const auto& [eb, cb] : o.coeffs) r.add_term(ea + eb, ca * cb);
    return r;
}

Series Series::compose_with(const Series& u) const {
    if (!u.coeffs.empty() && u.coeffs.begin()->first == 0)
        throw Error("series composition requires a zero constant term");
    Series r = Series::zero(std::min(truncation, u.truncation));
    r.exact = exact && u.exact;
    if (r.exact) r.truncation = std::max(truncation, u.truncation);
    Series upow = Series::constant(1, r.truncation);
    upow.exact = r.exact;
    int prev = -1;
    for (const auto& [e, c] : coeffs) {
        for (int k = prev < 0 ? 0 : prev; k < e; ++k) upow = upow * u;
        prev = e;
        Series t = upow;
        for (auto& [ee, cc] : t.coeffs) cc *= c;
        r = r + t;
    }
    return r;
}

std::string Series::to_string() const {
    if (coeffs.empty()) return exact ? "0" : "O(t^" + std::to_string(truncation) + ")";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs) {
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
        if (e == 0)
            os << rat_string(a);
        else {
            if (a != 1) os << rat_string(a) << "*";
            os << "t";
            if (e > 1) os << "^" << e;
        }
        first = false;
    }
    if (!exact) os << " + O(t^" << truncation << ")";
    return os.str();
}

std::string ExtOrder::to_string() const {
    switch (kind) {
        case Kind::Finite:
            return std::to_string(value);
        case Kind::AtLeastTruncation:
            return ">=" + std::to_string(value);
        case Kind::Infinite:
            return "inf";
    }
    return "?";
}

ExtOrder order(const Series& s) {
    if (!s.coeffs.empty()) return ExtOrder::finite(s.coeffs.begin()->first);
    return s.exact ? ExtOrder::infinite() : ExtOrder::at_least(s.truncation);
}

Series series_compose(const Polynomial& f, const std::vector<Series>& values) {
    if (values.size() != f.nvars())
        throw ArityMismatch("series_compose: expected " + std::to_string(f.nvars()) +
                            " series, got " + std::to_string(values.size()));
    int trunc = kDefaultTruncation;
    bool all_exact = true;
    for (const auto& v : values) {
        trunc = std::min(trunc, v.truncation);
        all_exact = all_exact && v.exact;
    }
    if (all_exact)
        for (const auto& v : values) trunc = std::max(trunc, v.truncation);
    Series r = Series::zero(trunc);
    r.exact = all_exact;
    // power cache per slot
    std::vector<std::vector<Series>> pows(values.size());
    auto power = [&](std::size_t i, int e) -> const Series& {
        auto& cache = pows[i];
        if (cache.empty()) {
            Series one = Series::constant(1, trunc);
            one.exact = all_exact;
            cache.push_back(one);
        }
        while ((int)cache.size() <= e) cache.push_back(cache.back() * values[i]);
        return cache[e];
    };
    for (const auto& [m, c] : f.terms()) {
        Series t = Series::constant(c, trunc);
        t.exact = all_exact;
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m.exps[i] > 0) t = t * power(i, m.exps[i]);
        r = r + t;
    }
    return r;
}

Branch make_branch(std::string name, const PresentedRing& ring,
                   std::vector<Series> components) {
    if (components.size() != ring.vars.size())
        throw ArityMismatch("branch needs one series per ring variable");
    for (const auto& g : ring.defining.generators()) {
        if (g.is_zero()) continue;
        Series s = series_compose(g, components);
        if (!s.is_zero())
            throw ArcOffVariety("branch '" + name + "' violates relation " +
                                g.to_string() + ": composes to " + s.to_string());
    }
    return Branch{std::move(name), ring, std::move(components)};
}

Arc pair_arc(const TensorSquare& ts, const Branch& b1, const Branch& b2,
             const Series& sub1, const Series& sub2) {
    if (b1.ring.vars != ts.target.vars || b2.ring.vars != ts.target.vars)
        throw VariableMismatch("pair_arc: branches not on the tensor square's target");
    Arc a;
    a.components.assign(ts.ring.vars.size(), Series::zero());
    for (std::size_t i = 0; i < ts.target.vars.size(); ++i) {
        a.components[ts.copy1[i]] = b1.components[i].compose_with(sub1);
        a.components[ts.copy2[i]] = b2.components[i].compose_with(sub2);
    }
    a.label = b1.name + "(" + sub1.to_string() + ") / " + b2.name + "(" +
              sub2.to_string() + ")";
    // validity on the tensor ring
    for (const auto& g : ts.ring.defining.generators()) {
        if (g.is_zero()) continue;
        Series s = series_compose(g, a.components);
        if (!s.is_zero())
            throw ArcOffVariety("arc " + a.label + " violates relation " +
                                g.to_string());
    }
    return a;
}

std::vector<Arc> standard_arc_family(const TensorSquare& ts,
                                     const std::vector<Branch>& branches,
                                     int max_exp, const std::vector<Rat>& coeffs,
                                     int trunc) {
    std::vector<Arc> arcs;
    Series t = Series::parameter(trunc);
    for (std::size_t i = 0; i < branches.size(); ++i) {
        for (std::size_t j = 0; j < branches.size(); ++j) {
            std::vector<std::pair<Series, bool>> subs;  // (sub2, is_diagonal)
            subs.emplace_back(Series::zero(trunc), false);
            subs.emplace_back(t, i == j);
            for (int m = 2; m <= max_exp; ++m)
                for (const auto& c : coeffs)
                    subs.emplace_back(Series::term(c, m, trunc), false);
            for (auto& [sub2, diagonal] : subs) {
                if (diagonal) continue;
                Arc a = pair_arc(ts, branches[i], branches[j], t, sub2);
                arcs.push_back(std::move(a));
            }
        }
    }
    return arcs;
}

}  // namespace lipsat
