#pragma once

#include "p1146/grading.hpp"

namespace p1146 {

/// A well-formed weighted projective space: every sub-collection of weights that
/// omits one entry has gcd 1. Non-well-formed weights are rejected, not normalized.
class WeightedProjectiveSpace {
public:
    explicit WeightedProjectiveSpace(WeightSystem ws);

    const WeightSystem& weights() const { return ws_; }
    std::size_t dimension() const { return ws_.size() - 1; }

private:
    WeightSystem ws_;
};

bool is_well_formed(const WeightSystem& ws);

/// Degree of -K, i.e. the sum of the weights.
std::uint64_t anticanonical_weight(const WeightedProjectiveSpace& P);

/// (-K)^n = (sum w)^n / prod w, kept as an exact rational.
Scalar anticanonical_selfintersection(const WeightedProjectiveSpace& P);

/// Monomials spanning H^0(-K), in canonical order.
std::vector<Monomial> anticanonical_basis(const WeightedProjectiveSpace& P);

} // namespace p1146
