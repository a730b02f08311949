#pragma once

#include "p1146/grading.hpp"
#include "p1146/linsys.hpp"

#include <span>
#include <string>
#include <vector>

namespace p1146 {

/// A rational map from an ordinary projective space into a weighted projective space,
/// given by one component per target variable. Component i must be homogeneous of
/// degree multiplier * w_i so that weighted-homogeneous forms pull back to forms.
class GradedRationalMap {
public:
    GradedRationalMap(RingPtr source, WeightSystem target, std::vector<Polynomial> components,
                      std::uint32_t multiplier = 1);

    const RingPtr& source() const { return source_; }
    const RingPtr& target_ring() const { return target_ring_; }
    const WeightSystem& target_weights() const { return target_; }
    const std::vector<Polynomial>& components() const { return components_; }
    std::uint32_t multiplier() const { return multiplier_; }

private:
    RingPtr source_;
    WeightSystem target_;
    RingPtr target_ring_;
    std::vector<Polynomial> components_;
    std::uint32_t multiplier_;
};

/// [x1, x2, x3*xi, x1*x2*x4*xi] into P(1,1,4,6). Takes any form so that a wrong degree
/// surfaces as a GradingError.
GradedRationalMap make_eta(const Polynomial& xi);
GradedRationalMap make_eta(const PencilCubic& xi);

/// Substitutes the components into a weighted-homogeneous form on the target.
Polynomial pullback(const GradedRationalMap& map, const Polynomial& g);

/// Linear system spanned by the pullbacks of target monomials of one weighted degree.
LinearSystem pullback_system(const GradedRationalMap& map, std::span<const Monomial> basis);

struct TheoremReport {
    bool pass = false;
    std::size_t basis_size = 0;
    SpanComparison spans; // left: pulled-back anticanonical system, right: T
    std::string summary() const;
};

/// Pulls the anticanonical monomials of P(1,1,4,6) back along eta and compares the
/// resulting span with T. Passes when the spans coincide and both have full rank.
TheoremReport theorem_check(const PencilCubic& xi);

/// Same comparison against a caller-supplied system in place of T.
TheoremReport theorem_check(const PencilCubic& xi, const LinearSystem& candidate);

} // namespace p1146
