#pragma once

#include "p1146/errors.hpp"
#include "p1146/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace p1146 {

/// Exponent vector, one entry per ring variable.
using Monomial = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Monomial& m);

/// Graded lexicographic order, largest monomial first: higher total degree wins,
/// ties are broken by the first differing exponent in declared variable order.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// An ordered list of variable names. Rings compare equal when their names match.
class Ring {
public:
    explicit Ring(std::vector<std::string> names);

    std::size_t arity() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require_index(std::string_view name) const;

    bool operator==(const Ring& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

namespace rings {
/// x1, x2, x3, x4: homogeneous coordinates on ordinary projective 3-space.
const RingPtr& projective3();
/// t, x1, x3, x4: the pencil chart x2 = t*x1.
const RingPtr& pencil();
/// y1..yn: coordinates of a weighted projective target.
RingPtr weighted_target(std::size_t n);
} // namespace rings

/// Sparse polynomial with exact rational coefficients in canonical form:
/// no zero coefficients, terms kept in GrlexDescending order.
class Polynomial {
public:
    using Terms = std::map<Monomial, Scalar, GrlexDescending>;

    explicit Polynomial(RingPtr ring);

    static Polynomial constant(RingPtr ring, const Scalar& c);
    static Polynomial variable(RingPtr ring, std::string_view name);
    static Polynomial monomial(RingPtr ring, Monomial exponents, const Scalar& c = 1);
    /// Parses the textual grammar; variable names must belong to `ring`.
    static Polynomial parse(RingPtr ring, std::string_view text);

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Largest total degree of a term; nullopt for the zero polynomial.
    std::optional<std::uint64_t> degree() const;
    /// Largest exponent of one variable over all terms (0 for the zero polynomial).
    std::uint32_t degree_in(std::string_view var) const;
    bool is_constant() const;

    Scalar coefficient(const Monomial& m) const;
    /// Requires a nonzero polynomial.
    const Terms::value_type& leading_term() const;

    /// Multiplies by the inverse of the leading coefficient. Zero stays zero.
    Polynomial monic() const;

    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    Polynomial& operator*=(const Polynomial& g);
    Polynomial& operator*=(const Scalar& c);

    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(Polynomial f, const Scalar& c) { return f *= c; }
    friend Polynomial operator*(const Scalar& c, Polynomial f) { return f *= c; }
    Polynomial operator-() const;

    bool operator==(const Polynomial& g) const;

    /// Canonical text, bit-exact inverse of parse on canonical input.
    std::string to_string() const;

private:
    void check_same_ring(const Polynomial& g, const char* op) const;
    void add_term(const Monomial& m, const Scalar& c);

    RingPtr ring_;
    Terms terms_;
};

Polynomial pow(const Polynomial& f, unsigned k);

/// Replaces every variable of `f` by its image in `target` and expands.
/// Variables that do not occur in `f` need no image.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& images,
                      const RingPtr& target);

/// Same, with images given positionally for every variable of f's ring.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images,
                      const RingPtr& target);

/// Returns q with f == q * g; throws DivisibilityError when g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Evaluates at a point given positionally.
Scalar evaluate(const Polynomial& f, const std::vector<Scalar>& point);

} // namespace p1146
