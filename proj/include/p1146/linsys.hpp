#pragma once

#include "p1146/linalg.hpp"
#include "p1146/polynomial.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace p1146 {

/// A binary cubic xi(x1, x2) = c * (x2 - r1*x1)(x2 - r2*x1)(x2 - r3*x1) with distinct,
/// nonzero rational roots. Its zero locus is three planes of the pencil through
/// r: x1 = x2 = 0, all different from x1 = 0 and x2 = 0.
class PencilCubic {
public:
    static PencilCubic from_roots(std::array<Scalar, 3> roots, const Scalar& leading = 1);
    /// Accepts a polynomial in x1..x4 that only involves x1, x2; recovers its roots.
    static PencilCubic from_polynomial(const Polynomial& xi);
    static PencilCubic parse(std::string_view text);
    /// (x2 - x1)(x2 - 2x1)(x2 - 3x1)
    static PencilCubic standard();

    const Polynomial& form() const { return form_; }
    const std::array<Scalar, 3>& roots() const { return roots_; }
    const Scalar& leading() const { return leading_; }

private:
    PencilCubic(Polynomial form, std::array<Scalar, 3> roots, Scalar leading);

    Polynomial form_;
    std::array<Scalar, 3> roots_;
    Scalar leading_;
};

/// A linear system of surfaces: the projective span of homogeneous generators of a
/// common degree. Generators are stored monic and deduplicated.
class LinearSystem {
public:
    LinearSystem(RingPtr ring, std::uint64_t degree, std::vector<Polynomial> generators);

    const RingPtr& ring() const { return ring_; }
    std::uint64_t degree() const { return degree_; }
    const std::vector<Polynomial>& generators() const { return generators_; }
    std::size_t size() const { return generators_.size(); }

private:
    RingPtr ring_;
    std::uint64_t degree_;
    std::vector<Polynomial> generators_;
};

/// Echelon form of a system's coefficient matrix, indexed by monomial, for repeated
/// membership queries.
class SpanIndex {
public:
    explicit SpanIndex(const LinearSystem& sys);

    std::size_t rank() const { return echelon_.rank(); }
    bool contains(const Polynomial& f) const;

private:
    std::map<Monomial, std::size_t, GrlexDescending> columns_;
    FractionFreeEchelon echelon_;
};

std::int64_t projective_dim(const LinearSystem& sys);

struct Membership {
    bool member = false;
    /// Set when the candidate was rejected without a rank test.
    std::string warning;
};

Membership check_membership(const Polynomial& f, const LinearSystem& sys);
bool member(const Polynomial& f, const LinearSystem& sys);

struct SpanComparison {
    bool equal = false;
    std::size_t rank_left = 0;
    std::size_t rank_right = 0;
    std::size_t rank_union = 0;
    std::vector<Polynomial> left_outside_right;
    std::vector<Polynomial> right_outside_left;
};

SpanComparison compare_spans(const LinearSystem& left, const LinearSystem& right);
bool spans_equal(const LinearSystem& left, const LinearSystem& right);

/// Order of vanishing along r: x1 = x2 = 0, the minimum of e1 + e2 over all terms.
std::uint32_t multiplicity_along_r(const Polynomial& f);

/// Substitutes x2 <- t*x1; the result lives in the pencil ring (t, x1, x3, x4).
Polynomial restrict_pencil(const Polynomial& f);

/// Divides by var^k exactly; throws DivisibilityError otherwise.
Polynomial factor_out(const Polynomial& f, std::string_view var, unsigned k);

/// Sets t to a fixed value in a pencil-ring polynomial.
Polynomial specialize_pencil(const Polynomial& g, const Scalar& tau);

/// Sets one variable to zero.
Polynomial restrict_to_plane(const Polynomial& f, std::string_view var);

/// The two coordinate planes of the pencil: x1 = 0 and x2 = 0.
enum class CoordinatePlane { x1_zero, x2_zero };

/// On the given coordinate plane, f restricts to (other variable)^(deg f - 1) * L with L
/// linear and free of x4, i.e. the residual curve is a line through q = [0,0,0,1].
bool meets_plane_in_lines_through_q(const Polynomial& f, CoordinatePlane plane);

/// On the plane x2 = tau*x1, f restricts to a scalar multiple of x1^(deg f): the
/// intersection is the line r counted deg f times.
bool meets_root_plane_only_in_r(const Polynomial& f, const Scalar& tau);

/// After x2 <- t*x1 and removing x1^m (m = multiplicity along r), the residual has
/// degree at most 1 in (x1, x3, x4): the moving part of the intersection is a line.
bool pencil_residual_is_linear(const Polynomial& f);

/// Binary forms basis x1^(d-k) x2^k, k = 0..d, in the x1..x4 ring.
std::vector<Polynomial> binary_monomials(unsigned d);

/// a*x1x2x4*xi + x3*xi*phi2(x1,x2) + phi6(x1,x2): 11 generators of degree 6.
LinearSystem build_system_S(const PencilCubic& xi);

/// The degree-12 system spanned by
///   x1^2x2^2x4^2 xi^2, x1x2x4 xi * x3 xi * f2, x1x2x4 xi * f6,
///   x3^3 xi^3, x3^2 xi^2 * f4, x3 xi * f8, f12
/// (1 + 3 + 7 + 1 + 5 + 9 + 13 = 39 generators).
LinearSystem build_system_T(const PencilCubic& xi);

/// A combination of the generators with pseudo-random nonzero rational weights.
Polynomial random_member(const LinearSystem& sys, std::uint64_t seed);

/// Which conditions cut the degree-6 sextics with multiplicity >= 5 along r.
struct SprimeConditions {
    bool alpha1 = true; // residual line on x1 = 0 passes through q
    bool alpha2 = true; // residual line on x2 = 0 passes through q
    bool root_planes = true; // only r (with full multiplicity) on each root plane of xi
};

struct SprimeSolution {
    /// Unknown coefficients: degree-6 monomials with (x1,x2)-degree >= 5.
    std::vector<Monomial> unknowns;
    /// One row per linear condition, columns indexed like `unknowns`.
    std::vector<RationalRow> constraints;
    std::vector<std::string> constraint_labels;
    std::size_t constraint_rank = 0;
    /// Basis of the solution space as polynomials.
    LinearSystem system;
};

SprimeSolution solve_constraints_sprime(const PencilCubic& xi, const SprimeConditions& conditions = {});

} // namespace p1146
