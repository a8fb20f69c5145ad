#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lipsat/monomial.hpp"
#include "lipsat/rational.hpp"

namespace lipsat {

using Vars = std::vector<std::string>;

/// Sparse exact polynomial over Q. Terms are kept in a fixed storage order
/// (exponent-vector lex), so the representation is canonical for a given
/// variable list regardless of the term order in use downstream.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat>;

    Polynomial() = default;
    explicit Polynomial(Vars vars) : vars_(std::move(vars)) {}
    Polynomial(Vars vars, TermMap terms);

    static Polynomial zero(const Vars& vars) { return Polynomial(vars); }
    static Polynomial constant(const Vars& vars, const Rat& c);
    static Polynomial variable(const Vars& vars, std::size_t index);
    static Polynomial term(const Vars& vars, Monomial m, const Rat& c);

    const Vars& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    int total_degree() const;  // -1 for the zero polynomial

    Rat coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rat& c);  // merges, drops zeros

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial scaled(const Rat& c) const;
    Polynomial times_term(const Monomial& m, const Rat& c) const;
    Polynomial pow(int n) const;

    bool operator==(const Polynomial& o) const = default;

    /// Replaces variable i by images[i]; images share one ambient list.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    Rat evaluate(const std::vector<Rat>& point) const;

    /// Leading data with respect to a term order; requires a nonzero value.
    const std::pair<const Monomial, Rat>& leading(const MonomialOrder& order) const;

    /// True when the support touches only variable slots in [lo, hi).
    bool supported_within(std::size_t lo, std::size_t hi) const;

    /// Reinterprets over a new variable list; `slot_map[i]` gives the new
    /// slot of old variable i (all used slots must be mapped).
    Polynomial remap(const Vars& new_vars, const std::vector<int>& slot_map) const;

    std::string to_string() const;

private:
    Vars vars_;
    TermMap terms_;
};

void require_same_vars(const Polynomial& a, const Polynomial& b);

/// Lifts a polynomial into a superset variable list by name lookup.
Polynomial lift(const Polynomial& p, const Vars& bigger);

std::string mono_string(const Monomial& m, const Vars& vars);

}  // namespace lipsat
