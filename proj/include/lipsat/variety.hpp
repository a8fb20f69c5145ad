#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lipsat/ideal.hpp"

namespace lipsat {

/// Coordinate ring of an affine variety: Q[vars]/defining. Radicality of the
/// presentation is the caller's responsibility and is never checked here.
struct PresentedRing {
    Vars vars;
    Ideal defining;

    PresentedRing() = default;
    /// Checks unique names and, when check_proper, that 1 is not in the ideal.
    PresentedRing(Vars vars, std::vector<Polynomial> defining_gens,
                  bool check_proper = true);

    Polynomial parse(const std::string& text) const;
    bool contains_zero_ideal() const { return defining.is_zero_ideal(); }
};

PresentedRing make_polynomial_ring(const Vars& vars);

/// pi* : source -> target given by one target image per source variable.
/// Construction verifies well-definedness: every source relation maps into
/// the target's defining ideal.
class RingMorphism {
public:
    RingMorphism() = default;
    RingMorphism(PresentedRing source, PresentedRing target,
                 std::vector<Polynomial> images);

    const PresentedRing& source() const { return source_; }
    const PresentedRing& target() const { return target_; }
    const std::vector<Polynomial>& images() const { return images_; }

    /// Applies pi* to a source element.
    Polynomial apply(const Polynomial& p) const;

    /// Kernel-triviality of pi*, computed once and cached.
    bool is_dominant() const;

private:
    PresentedRing source_, target_;
    std::vector<Polynomial> images_;
    struct Cache {
        std::once_flag flag;
        bool dominant = false;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

RingMorphism compose(const RingMorphism& f, const RingMorphism& g);  // g after f? see impl

/// B (x) B on duplicated target variables, with the kernel ideal of
/// B (x) B -> B (x)_A B generated by image_i(copy1) - image_i(copy2).
struct TensorSquare {
    PresentedRing ring;
    Ideal phi_kernel;
    PresentedRing target;
    std::vector<std::size_t> copy1;  // slot of target var i, first copy
    std::vector<std::size_t> copy2;

    /// f(copy1) - f(copy2) for a target element f.
    Polynomial diff_element(const Polynomial& f) const;
    /// Pushes a target element into one copy of the tensor ring.
    Polynomial into_copy(const Polynomial& f, int which) const;
    /// The copy swap, applied to a tensor-ring element.
    Polynomial swap(const Polynomial& p) const;
    /// Combined ideal phi_kernel + defining, used by radical tests.
    Ideal kernel_plus_defining() const;
};

TensorSquare tensor_square(const RingMorphism& m);

/// Membership of f in the image of pi*; returns a preimage over the source
/// variables when it exists.
std::optional<Polynomial> in_image(const RingMorphism& m, const Polynomial& f);

/// Adjoins a target element to the source: the new source presents the
/// subalgebra generated by the old images plus `elem`, with the new variable
/// mapping to `elem`. Used by the idempotence checks.
RingMorphism extend_by_element(const RingMorphism& m, const Polynomial& elem,
                               const std::string& name);

}  // namespace lipsat
