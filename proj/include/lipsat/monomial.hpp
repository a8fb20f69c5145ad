#pragma once

#include <cstddef>
#include <vector>

namespace lipsat {

/// Exponent vector over a fixed ambient variable list. The slot count always
/// equals the ambient variable count of the polynomial holding it.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    std::size_t nvars() const { return exps.size(); }
    int degree() const;
    bool is_constant() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Storage order only (std::map key); term order lives in MonomialOrder.
    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        return a.exps <=> b.exps;
    }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

/// Term orders: lex, graded reverse lex, and a block order eliminating the
/// first k variables (grevlex inside each block).
struct MonomialOrder {
    enum class Kind { Lex, GrevLex, Block };
    Kind kind = Kind::GrevLex;
    std::size_t block = 0;  // leading block size for Kind::Block

    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
    static MonomialOrder eliminating(std::size_t k) { return {Kind::Block, k}; }

    // true when a > b
    bool greater(const Monomial& a, const Monomial& b) const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

}  // namespace lipsat
