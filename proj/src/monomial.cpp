#include "lipsat/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace lipsat {

int Monomial::degree() const {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

bool Monomial::is_constant() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps[i] = a.exps[i] + b.exps[i];
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    assert(mono_divides(a, b));
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.exps[i] = b.exps[i] - a.exps[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exps[i] > 0 && b.exps[i] > 0) return false;
    return true;
}

namespace {

// grevlex on the slot range [lo, hi): higher degree wins, ties broken by the
// last nonzero difference being negative.
int grevlex_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.exps[i];
        db += b.exps[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        int d = a.exps[i] - b.exps[i];
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        int d = a.exps[i] - b.exps[i];
        if (d != 0) return d < 0 ? -1 : 1;
    }
    return 0;
}

}  // namespace

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
    assert(a.nvars() == b.nvars());
    switch (kind) {
        case Kind::Lex:
            return lex_cmp(a, b) > 0;
        case Kind::GrevLex:
            return grevlex_cmp(a, b, 0, a.nvars()) > 0;
        case Kind::Block: {
            std::size_t k = std::min(block, a.nvars());
            int c = grevlex_cmp(a, b, 0, k);
            if (c != 0) return c > 0;
            return grevlex_cmp(a, b, k, a.nvars()) > 0;
        }
    }
    return false;
}

}  // namespace lipsat
