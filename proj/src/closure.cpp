#include "lipsat/closure.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "lipsat/errors.hpp"
#include "lipsat/linsolve.hpp"

namespace lipsat {

Polynomial IntegralCertificate::coefficient(int i, const Vars& vars) const {
    Polynomial a = Polynomial::zero(vars);
    if (i >= 1 && i <= (int)combos.size())
        for (const auto& cb : combos[(std::size_t)i - 1])
            a += cb.cofactor * cb.product;
    return a;
}

namespace {

std::vector<Polynomial> nonzero_gens(const Ideal& I) {
    std::vector<Polynomial> r;
    for (const auto& g : I.generators())
        if (!g.is_zero()) r.push_back(g);
    return r;
}

// all exponent vectors of total degree <= d, in a fixed deterministic order
void enumerate_monomials(std::size_t nvars, int d, std::vector<Monomial>& out) {
    Monomial cur(nvars);
    auto rec = [&](auto&& self, std::size_t slot, int left) -> void {
        if (slot == nvars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur.exps[slot] = e;
            self(self, slot + 1, left - e);
            cur.exps[slot] = 0;
        }
    };
    rec(rec, 0, d);
}

// nondecreasing index sequences of length i over [0, ngens)
void enumerate_multisets(int ngens, int i, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int g = start; g < ngens; ++g) {
            cur.push_back(g);
            self(self, g, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, i);
}

}  // namespace

bool verify_certificate(const Polynomial& z, const Ideal& I,
                        const Ideal& ambient_defining,
                        const IntegralCertificate& cert) {
    if (cert.n < 1 || (int)cert.combos.size() != cert.n)
        throw MalformedCertificate("certificate has inconsistent relation degree");
    const auto& gens = I.generators();
    for (int i = 1; i <= cert.n; ++i) {
        for (const auto& cb : cert.combos[(std::size_t)i - 1]) {
            if ((int)cb.gen_indices.size() != i)
                throw MalformedCertificate(
                    "coefficient a_" + std::to_string(i) + " uses a product of " +
                    std::to_string(cb.gen_indices.size()) + " generators");
            Polynomial prod = Polynomial::constant(z.vars(), 1);
            for (int gi : cb.gen_indices) {
                if (gi < 0 || gi >= (int)gens.size())
                    throw MalformedCertificate("generator index out of range");
                prod = prod * gens[(std::size_t)gi];
            }
            if (!(prod == cb.product))
                throw MalformedCertificate(
                    "stated generator product does not match its indices");
        }
    }
    Polynomial relation = z.pow(cert.n);
    for (int i = 1; i <= cert.n; ++i)
        relation += cert.coefficient(i, z.vars()) * z.pow(cert.n - i);
    return normal_form(relation, ambient_defining.basis()).is_zero();
}

MembershipVerdict certificate_search(const Polynomial& z, const Ideal& I,
                                     const Ideal& ambient_defining,
                                     const SearchBounds& bounds) {
    if (z.vars() != I.vars() || z.vars() != ambient_defining.vars())
        throw VariableMismatch("certificate_search: mixed ambients");
    MembershipVerdict v;
    v.bounds = bounds;
    const Vars& vars = z.vars();
    std::vector<Polynomial> gens = nonzero_gens(I);

    // n = 1 is plain ideal membership modulo the defining ideal: decidable.
    {
        std::vector<Polynomial> joint = gens;
        for (const auto& d : nonzero_gens(ambient_defining)) joint.push_back(d);
        if (joint.empty()) joint.push_back(Polynomial::zero(vars));
        Ideal J(joint);
        MembershipResult mem = ideal_member(z, J);
        if (mem.member) {
            IntegralCertificate cert;
            cert.n = 1;
            cert.combos.resize(1);
            for (std::size_t j = 0; j < gens.size(); ++j) {
                if (mem.gen_cofactors[j].is_zero()) continue;
                cert.combos[0].push_back(
                    {-mem.gen_cofactors[j], {(int)j}, gens[j]});
            }
            if (verify_certificate(z, I, ambient_defining, cert)) {
                v.status = Status::Proved;
                v.certificate = std::move(cert);
                return v;
            }
        }
    }
    if (gens.empty()) return v;  // closure of the zero ideal is itself

    const GroebnerBasis& amb = ambient_defining.basis();
    // z powers reduced once
    std::vector<Polynomial> zpow{Polynomial::constant(vars, 1)};
    auto zpower = [&](int k) -> const Polynomial& {
        while ((int)zpow.size() <= k)
            zpow.push_back(normal_form(zpow.back() * z, amb));
        return zpow[(std::size_t)k];
    };

    for (int n = 2; n <= bounds.max_relation_degree; ++n) {
        // column templates: (i, generator multiset) pairs with base
        // polynomial NF(product * z^(n-i))
        struct Slot {
            int i;
            std::vector<int> multiset;
            Polynomial base;
        };
        std::vector<Slot> slots;
        for (int i = 1; i <= n; ++i) {
            std::vector<std::vector<int>> multisets;
            enumerate_multisets((int)gens.size(), i, multisets);
            for (auto& ms : multisets) {
                Polynomial prod = Polynomial::constant(vars, 1);
                for (int gi : ms) prod = prod * gens[(std::size_t)gi];
                slots.push_back(
                    {i, std::move(ms), normal_form(prod * zpower(n - i), amb)});
            }
        }
        const Polynomial rhs = zpower(n);
        std::map<std::pair<std::size_t, Monomial>, Polynomial> col_cache;

        for (int d = 0; d <= bounds.max_cofactor_degree; ++d) {
            std::vector<Monomial> monos;
            enumerate_monomials(vars.size(), d, monos);
            // columns in deterministic order: slot-major, then monomial
            struct Col {
                std::size_t slot;
                Monomial mono;
            };
            std::vector<Col> cols;
            std::map<Monomial, LinearRow> rows;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                for (const auto& m : monos) {
                    auto key = std::make_pair(s, m);
                    auto it = col_cache.find(key);
                    if (it == col_cache.end())
                        it = col_cache
                                 .emplace(key, normal_form(
                                                   slots[s].base.times_term(m, 1),
                                                   amb))
                                 .first;
                    const Polynomial& cp = it->second;
                    int col = (int)cols.size();
                    cols.push_back({s, m});
                    for (const auto& [mu, c] : cp.terms())
                        rows[mu].coeffs[col] = c;
                }
            }
            for (const auto& [mu, c] : rhs.terms()) rows[mu].rhs = -c;
            std::vector<LinearRow> sys;
            sys.reserve(rows.size());
            for (auto& [mu, row] : rows) sys.push_back(std::move(row));
            auto sol = solve_sparse(std::move(sys), cols.size());
            if (!sol) continue;

            IntegralCertificate cert;
            cert.n = n;
            cert.combos.resize((std::size_t)n);
            for (std::size_t s = 0; s < slots.size(); ++s) {
                Polynomial cof = Polynomial::zero(vars);
                for (std::size_t c = 0; c < cols.size(); ++c)
                    if (cols[c].slot == s && (*sol)[c] != 0)
                        cof.add_term(cols[c].mono, (*sol)[c]);
                if (cof.is_zero()) continue;
                Polynomial prod = Polynomial::constant(vars, 1);
                for (int gi : slots[s].multiset) prod = prod * gens[(std::size_t)gi];
                cert.combos[(std::size_t)slots[s].i - 1].push_back(
                    {std::move(cof), slots[s].multiset, std::move(prod)});
            }
            if (verify_certificate(z, I, ambient_defining, cert)) {
                v.status = Status::Proved;
                v.certificate = std::move(cert);
                return v;
            }
        }
    }
    return v;  // Unknown with the exhausted bounds
}

namespace {

// order of f along an arc; infinite only when provably so
ExtOrder arc_order(const Polynomial& f, const std::vector<Series>& comps,
                   const Ideal& ambient_defining) {
    Series s = series_compose(f, comps);
    ExtOrder o = order(s);
    if (o.kind == ExtOrder::Kind::AtLeastTruncation) {
        // a composition that is zero modulo the defining ideal is exactly zero
        if (normal_form(f, ambient_defining.basis()).is_zero())
            return ExtOrder::infinite();
    }
    return o;
}

}  // namespace

MembershipVerdict arc_refute(const Polynomial& z, const Ideal& I,
                             const Ideal& ambient_defining,
                             const std::vector<Arc>& arcs) {
    MembershipVerdict v;
    std::vector<Polynomial> gens = nonzero_gens(I);
    for (const auto& arc : arcs) {
        if (arc.components.size() != z.nvars())
            throw ArityMismatch("arc has the wrong number of components");
        for (const auto& d : ambient_defining.generators()) {
            if (d.is_zero()) continue;
            if (!series_compose(d, arc.components).is_zero())
                throw ArcOffVariety("arc " + arc.label +
                                    " violates a defining relation");
        }
        ExtOrder zt = arc_order(z, arc.components, ambient_defining);
        if (!zt.is_finite()) {
            if (zt.kind == ExtOrder::Kind::AtLeastTruncation)
                throw TruncationInsufficient(
                    "order of the target along arc " + arc.label +
                    " is hidden beyond the truncation horizon");
            continue;  // exactly zero pullback can never be refuted by this arc
        }
        ExtOrder io = ExtOrder::infinite();
        for (const auto& g : gens) {
            ExtOrder go = arc_order(g, arc.components, ambient_defining);
            if (go.kind == ExtOrder::Kind::Infinite) continue;
            if (io.kind == ExtOrder::Kind::Infinite ||
                (go.value < io.value))
                io = go;
        }
        bool refutes = false;
        switch (io.kind) {
            case ExtOrder::Kind::Infinite:
                refutes = true;  // z has finite order, ideal pulls back to 0
                break;
            case ExtOrder::Kind::Finite:
                refutes = io.value > zt.value;
                break;
            case ExtOrder::Kind::AtLeastTruncation:
                // sound lower bound on the ideal order
                refutes = io.value > zt.value;
                break;
        }
        if (refutes) {
            v.status = Status::Refuted;
            v.arc_witness = ArcWitness{arc, zt, io};
            return v;
        }
    }
    return v;  // inconclusive
}

namespace {

// Fourier-Motzkin feasibility of { sum c_i x_i <= rhs } rows.
bool fm_feasible(std::vector<std::vector<Rat>> rows, std::size_t nvars,
                 std::vector<Rat> rhs) {
    for (std::size_t var = 0; var < nvars; ++var) {
        std::vector<std::size_t> pos, neg, zero;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r][var] > 0)
                pos.push_back(r);
            else if (rows[r][var] < 0)
                neg.push_back(r);
            else
                zero.push_back(r);
        }
        std::vector<std::vector<Rat>> next;
        std::vector<Rat> next_rhs;
        for (auto r : zero) {
            next.push_back(rows[r]);
            next_rhs.push_back(rhs[r]);
        }
        for (auto p : pos) {
            for (auto n : neg) {
                std::vector<Rat> combo(nvars, Rat(0));
                Rat cp = rows[p][var], cn = -rows[n][var];
                for (std::size_t i = 0; i < nvars; ++i)
                    combo[i] = rows[p][i] / cp + rows[n][i] / cn;
                next.push_back(std::move(combo));
                next_rhs.push_back(rhs[p] / cp + rhs[n] / cn);
            }
        }
        rows = std::move(next);
        rhs = std::move(next_rhs);
    }
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (rhs[r] < 0) return false;
    return true;
}

}  // namespace

bool newton_member(const Monomial& m, const Ideal& I) {
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        if (g.is_zero() || !g.is_monomial())
            throw NonMonomialIdeal("newton_member needs a monomial ideal");
        gens.push_back(g.terms().begin()->first);
    }
    std::size_t nv = m.nvars();
    std::size_t k = gens.size();
    // variables: lambda_1..lambda_k; constraints:
    //   sum_j lambda_j v_j[d] <= a[d]        (target dominates a hull point)
    //   sum lambda = 1 (two inequalities), lambda_j >= 0
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
    for (std::size_t d = 0; d < nv; ++d) {
        std::vector<Rat> row(k, Rat(0));
        for (std::size_t j = 0; j < k; ++j) row[j] = gens[j].exps[d];
        rows.push_back(std::move(row));
        rhs.push_back(Rat(m.exps[d]));
    }
    std::vector<Rat> ones(k, Rat(1)), negones(k, Rat(-1));
    rows.push_back(ones);
    rhs.push_back(Rat(1));
    rows.push_back(negones);
    rhs.push_back(Rat(-1));
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<Rat> row(k, Rat(0));
        row[j] = -1;
        rows.push_back(std::move(row));
        rhs.push_back(Rat(0));
    }
    return fm_feasible(std::move(rows), k, std::move(rhs));
}

MembershipVerdict element_integral(const Polynomial& f_num,
                                   const Polynomial& f_den,
                                   const Ideal& A_defining,
                                   const SearchBounds& bounds) {
    if (f_den.is_zero()) throw ZeroGenerator("element_integral: zero denominator");
    // f = f_num/f_den is integral iff f_num satisfies a monic relation with
    // i-th coefficient divisible by f_den^i, i.e. f_num lies in the integral
    // closure of <f_den> modulo the defining ideal.
    return certificate_search(f_num, Ideal({f_den}), A_defining, bounds);
}

std::vector<PresentedRing> blowup_charts(const PresentedRing& A, const Ideal& I) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) {
        if (g.is_zero()) throw ZeroGenerator("blowup_charts: zero generator");
        gens.push_back(g);
    }
    std::vector<PresentedRing> charts;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Vars vars = A.vars;
        std::vector<std::size_t> uslot(gens.size(), 0);
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (j == i) continue;
            std::string n = "u" + std::to_string(j + 1);
            while (std::find(vars.begin(), vars.end(), n) != vars.end()) n += "_";
            uslot[j] = vars.size();
            vars.push_back(n);
        }
        std::vector<Polynomial> rels;
        for (const auto& d : A.defining.generators())
            if (!d.is_zero()) rels.push_back(lift(d, vars));
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (j == i) continue;
            rels.push_back(lift(gens[j], vars) -
                           Polynomial::variable(vars, uslot[j]) * lift(gens[i], vars));
        }
        if (rels.empty()) rels.push_back(Polynomial::zero(vars));
        Ideal sat = saturate(Ideal(rels), lift(gens[i], vars));
        charts.emplace_back(vars, sat.generators(), /*check_proper=*/false);
    }
    return charts;
}

bool chart_member(const Polynomial& p, const Ideal& I, const PresentedRing& chart,
                  std::size_t i) {
    const Polynomial& pi = I.generators().at(i);
    std::vector<Polynomial> gens{lift(pi, chart.vars)};
    for (const auto& d : chart.defining.generators())
        if (!d.is_zero()) gens.push_back(d);
    return ideal_member(lift(p, chart.vars), Ideal(gens)).member;
}

std::optional<PointWitness> check_point_witness(const Polynomial& z,
                                                const Ideal& I,
                                                const Ideal& ambient_defining,
                                                const std::vector<Rat>& point) {
    for (const auto& g : I.generators())
        if (g.evaluate(point) != 0) return std::nullopt;
    for (const auto& d : ambient_defining.generators())
        if (d.evaluate(point) != 0) return std::nullopt;
    Rat zv = z.evaluate(point);
    if (zv == 0) return std::nullopt;
    return PointWitness{point, zv};
}

}  // namespace lipsat
