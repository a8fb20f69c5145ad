#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "lipsat/polynomial.hpp"

namespace lipsat {

/// Reduced Groebner basis. `reps` expresses each basis element as an exact
/// combination of the ideal's original generators (elements[i] = sum_j
/// reps[i][j] * gen[j]); it is what turns membership traces into
/// certificates over the generators the caller named.
struct GroebnerBasis {
    std::vector<Polynomial> elements;
    std::vector<std::vector<Polynomial>> reps;
    MonomialOrder order;

    bool is_unit() const;  // basis == {1}
};

struct ReductionTrace {
    Polynomial normal_form;
    std::vector<Polynomial> cofactors;  // aligned with basis elements
};

class Ideal {
public:
    Ideal() = default;
    Ideal(std::vector<Polynomial> generators, MonomialOrder order = MonomialOrder::grevlex());

    const Vars& vars() const { return vars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const MonomialOrder& order() const { return order_; }
    bool is_zero_ideal() const;

    /// Reduced basis, computed once and cached (write-once; safe to share).
    const GroebnerBasis& basis() const;

private:
    Vars vars_;
    std::vector<Polynomial> gens_;
    MonomialOrder order_ = MonomialOrder::grevlex();
    struct Cache {
        std::once_flag flag;
        std::optional<GroebnerBasis> gb;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

GroebnerBasis groebner(const std::vector<Polynomial>& gens, const MonomialOrder& order);

/// Full multivariate division; trace satisfies
/// f = sum_i cofactors[i]*basis[i] + normal_form exactly.
ReductionTrace reduce(const Polynomial& f, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

struct MembershipResult {
    bool member;
    ReductionTrace trace;                   // vs basis elements
    std::vector<Polynomial> gen_cofactors;  // vs original generators (when member)
};

MembershipResult ideal_member(const Polynomial& f, const Ideal& I);

/// f in sqrt(I), decided by adjoining w and testing 1 in I + <1 - w*f>.
bool radical_member(const Polynomial& f, const Ideal& I);

/// Generators of I intersected with the subring in the last n-k variables.
/// The result lives over vars()[k..].
Ideal eliminate(const Ideal& I, std::size_t k);

/// I : p^inf
Ideal saturate(const Ideal& I, const Polynomial& p);

bool ideal_equal(const Ideal& I, const Ideal& J);

}  // namespace lipsat
