#include "lipsat/lipschitz.hpp"

#include "lipsat/errors.hpp"

namespace lipsat {

namespace {

void require_dominant(const RingMorphism& m) {
    if (!m.is_dominant())
        throw Error("the morphism is not dominant");
}

std::vector<Arc> effective_arcs(const SaturationQuery& q, const TensorSquare& ts) {
    if (!q.arcs.empty() || q.branches.empty()) return q.arcs;
    return standard_arc_family(ts, q.branches);
}

/// Integrality of the query element over A, from whatever evidence the
/// query carries: a declared refutation, an explicit fraction over A, or a
/// preimage under pi* (which makes integrality trivial).
MembershipVerdict integrality_verdict(const SaturationQuery& q) {
    MembershipVerdict v;
    v.bounds = q.bounds;
    if (q.declared_nonintegral) {
        v.status = Status::Refuted;
        return v;
    }
    const Ideal& adef = q.morphism.source().defining;
    if (q.integral_num && q.integral_den)
        return element_integral(*q.integral_num, *q.integral_den, adef, q.bounds);
    if (auto pre = in_image(q.morphism, q.element))
        return element_integral(*pre, Polynomial::constant(pre->vars(), 1), adef,
                                q.bounds);
    return v;
}

}  // namespace

MembershipVerdict lipschitz_member(const SaturationQuery& q) {
    require_dominant(q.morphism);
    TensorSquare ts = tensor_square(q.morphism);
    Polynomial z = ts.diff_element(q.element);
    for (const auto& pt : q.witnesses) {
        if (auto w = check_point_witness(z, ts.phi_kernel, ts.ring.defining, pt)) {
            MembershipVerdict v;
            v.bounds = q.bounds;
            v.status = Status::Refuted;
            v.point_witness = std::move(w);
            return v;
        }
    }
    std::vector<Arc> arcs = effective_arcs(q, ts);
    if (!arcs.empty()) {
        MembershipVerdict v = arc_refute(z, ts.phi_kernel, ts.ring.defining, arcs);
        if (v.refuted()) {
            v.bounds = q.bounds;
            return v;
        }
    }
    return certificate_search(z, ts.phi_kernel, ts.ring.defining, q.bounds);
}

bool saturation_member(const SaturationQuery& q) {
    require_dominant(q.morphism);
    TensorSquare ts = tensor_square(q.morphism);
    return radical_member(ts.diff_element(q.element), ts.kernel_plus_defining());
}

MembershipVerdict seminormalization_member(const SaturationQuery& q) {
    bool sat = saturation_member(q);
    MembershipVerdict integ = integrality_verdict(q);
    MembershipVerdict v;
    v.bounds = q.bounds;
    if (!sat || integ.refuted()) {
        v.status = Status::Refuted;
        if (!sat) {
            TensorSquare ts = tensor_square(q.morphism);
            Polynomial z = ts.diff_element(q.element);
            for (const auto& pt : q.witnesses)
                if (auto w = check_point_witness(z, ts.phi_kernel,
                                                 ts.ring.defining, pt)) {
                    v.point_witness = std::move(w);
                    break;
                }
        }
        return v;
    }
    if (integ.proved()) {
        v.status = Status::Proved;
        v.certificate = integ.certificate;
    }
    return v;
}

MembershipVerdict lipschitz_seminormalization_member(const SaturationQuery& q) {
    MembershipVerdict lip = lipschitz_member(q);
    MembershipVerdict integ = integrality_verdict(q);
    MembershipVerdict v;
    v.bounds = q.bounds;
    if (lip.refuted() || integ.refuted()) {
        v.status = Status::Refuted;
        v.arc_witness = lip.arc_witness;
        v.point_witness = lip.point_witness;
        return v;
    }
    if (lip.proved() && integ.proved()) {
        v.status = Status::Proved;
        v.certificate = integ.certificate;
    }
    return v;
}

bool constant_on_fibers(const RingMorphism& m, const Polynomial& p) {
    TensorSquare ts = tensor_square(m);
    return radical_member(ts.diff_element(p), ts.kernel_plus_defining());
}

ChainReport chain_report(const SaturationQuery& q) {
    ChainReport r;
    r.in_A = in_image(q.morphism, q.element).has_value();
    r.in_lipschitz = lipschitz_member(q);
    r.in_saturation = saturation_member(q);
    r.integral_over_A = integrality_verdict(q);
    if (r.in_A && !r.in_lipschitz.proved())
        throw InconsistentChain(
            "pulled-back element not proved a Lipschitz member");
    if (r.in_lipschitz.proved() && !r.in_saturation)
        throw InconsistentChain(
            "Lipschitz member outside the saturation");
    if (r.in_A && !r.in_saturation)
        throw InconsistentChain("pulled-back element outside the saturation");
    return r;
}

}  // namespace lipsat
