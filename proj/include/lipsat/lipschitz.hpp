#pragma once

#include <optional>
#include <vector>

#include "lipsat/closure.hpp"
#include "lipsat/series.hpp"
#include "lipsat/variety.hpp"

namespace lipsat {

/// One membership question about an element of B relative to pi* : A -> B,
/// together with whatever refutation/certification data the caller has.
struct SaturationQuery {
    RingMorphism morphism;
    Polynomial element;  // over B's variables; any representative works
    SearchBounds bounds;
    std::vector<Arc> arcs;                        // optional falsifiers
    std::vector<Branch> branches;                 // used when arcs is empty
    std::vector<std::vector<Rat>> witnesses;      // candidate tensor points
    std::optional<Polynomial> integral_num;       // element = num/den over A
    std::optional<Polynomial> integral_den;
    bool declared_nonintegral = false;  // caller-supplied refutation; the
                                        // search itself can never prove this
};

struct ChainReport {
    bool in_A = false;
    MembershipVerdict in_lipschitz;
    bool in_saturation = false;
    MembershipVerdict integral_over_A;
};

/// diff(element) in the integral closure of the kernel ideal: point
/// witnesses first, then arcs, then the certificate search.
MembershipVerdict lipschitz_member(const SaturationQuery& q);

/// diff(element) in the radical of the kernel ideal. Decidable.
bool saturation_member(const SaturationQuery& q);

/// Integrality over A and saturation combined.
MembershipVerdict seminormalization_member(const SaturationQuery& q);

/// Integrality over A and Lipschitz membership combined.
MembershipVerdict lipschitz_seminormalization_member(const SaturationQuery& q);

/// Same computation as saturation_member, under its geometric name.
bool constant_on_fibers(const RingMorphism& m, const Polynomial& p);

/// All four predicates at once, with the inclusion chain enforced:
/// pulled-back elements are Lipschitz members and Lipschitz members are
/// saturation members. Violations throw InconsistentChain.
ChainReport chain_report(const SaturationQuery& q);

}  // namespace lipsat
