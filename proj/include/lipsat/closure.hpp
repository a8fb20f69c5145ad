#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lipsat/ideal.hpp"
#include "lipsat/series.hpp"
#include "lipsat/variety.hpp"

namespace lipsat {

/// Truncation of the certificate search: relation degree n and cofactor
/// degree bound. The integral-closure definition quantifies unboundedly;
/// these bounds make the search finite and every Unknown carries them.
struct SearchBounds {
    int max_relation_degree = 4;  // n_max >= 1
    int max_cofactor_degree = 6;  // d_max >= 0
};

/// One summand of a_i: cofactor * (product of exactly i generators of I).
struct CertCombo {
    Polynomial cofactor;
    std::vector<int> gen_indices;  // i indices into I's generator list
    Polynomial product;            // the corresponding generator product
};

/// Monic relation z^n + a_1 z^(n-1) + ... + a_n = 0 (mod ambient defining)
/// with a_i in I^i, given explicitly summand by summand.
struct IntegralCertificate {
    int n = 0;
    std::vector<std::vector<CertCombo>> combos;  // combos[i-1] builds a_i

    Polynomial coefficient(int i, const Vars& vars) const;  // a_i
};

struct ArcWitness {
    Arc arc;
    ExtOrder target_order;
    ExtOrder ideal_order;
};

struct PointWitness {
    std::vector<Rat> point;
    Rat target_value = 0;  // nonzero; all generators vanish at the point
};

enum class Status { Proved, Refuted, Unknown };

struct MembershipVerdict {
    Status status = Status::Unknown;
    std::optional<IntegralCertificate> certificate;
    std::optional<ArcWitness> arc_witness;
    std::optional<PointWitness> point_witness;
    SearchBounds bounds;

    bool proved() const { return status == Status::Proved; }
    bool refuted() const { return status == Status::Refuted; }
};

/// Bounded search for an integral-dependence relation of z over I, working
/// modulo ambient_defining. n = 1 is plain ideal membership and is decided
/// exactly; higher n solve an exact linear system over cofactor templates of
/// increasing degree. Semidecision: Unknown proves nothing.
MembershipVerdict certificate_search(const Polynomial& z, const Ideal& I,
                                     const Ideal& ambient_defining,
                                     const SearchBounds& bounds);

/// Independent re-check of a certificate: structural validity (each combo
/// uses exactly i generators, products match) and the relation reducing to
/// zero. Throws MalformedCertificate on structural defects.
bool verify_certificate(const Polynomial& z, const Ideal& I,
                        const Ideal& ambient_defining,
                        const IntegralCertificate& cert);

/// Valuative falsifier: refutes z in closure(I) when some arc gives
/// order(z o arc) < min_i order(g_i o arc). Sound, never complete.
MembershipVerdict arc_refute(const Polynomial& z, const Ideal& I,
                             const Ideal& ambient_defining,
                             const std::vector<Arc>& arcs);

/// Exact Newton-polyhedron membership for monomial ideals:
/// exponent(m) in conv(exponents of generators) + R^n_{>=0}.
bool newton_member(const Monomial& m, const Ideal& I);

/// Integrality of the fraction f_num/f_den over Q[vars]/A_defining, as a
/// bounded search for f_num^n + sum c_i f_den^i f_num^(n-i) in the ideal.
MembershipVerdict element_integral(const Polynomial& f_num,
                                   const Polynomial& f_den,
                                   const Ideal& A_defining,
                                   const SearchBounds& bounds);

/// Affine charts of the blow-up of A along I = <p_1..p_r>: chart i adds
/// u_j with relations p_j - u_j p_i, saturated by p_i.
std::vector<PresentedRing> blowup_charts(const PresentedRing& A, const Ideal& I);

/// In chart i the pulled-back ideal is principal on p_i; membership there.
bool chart_member(const Polynomial& p, const Ideal& I, const PresentedRing& chart,
                  std::size_t i);

/// Checks a candidate point witness: all generators of `defining` and `I`
/// vanish and z does not.
std::optional<PointWitness> check_point_witness(const Polynomial& z,
                                                const Ideal& I,
                                                const Ideal& ambient_defining,
                                                const std::vector<Rat>& point);

}  // namespace lipsat
