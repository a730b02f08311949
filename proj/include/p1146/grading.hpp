#pragma once

#include "p1146/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace p1146 {

/// Strictly positive integer weights, one per variable.
class WeightSystem {
public:
    explicit WeightSystem(std::vector<std::uint32_t> weights);

    /// Parses a comma-separated list such as "1,1,4,6".
    static WeightSystem parse(std::string_view text);

    std::span<const std::uint32_t> weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    std::uint32_t operator[](std::size_t i) const { return weights_.at(i); }
    std::string to_string() const;

    bool operator==(const WeightSystem&) const = default;

private:
    std::vector<std::uint32_t> weights_;
};

std::uint64_t weighted_degree(const Monomial& m, const WeightSystem& ws);

/// Outcome of a homogeneity test. The zero polynomial is homogeneous of every degree.
class Homogeneity {
public:
    enum class Kind { mixed, any, exact };

    static Homogeneity mixed() { return Homogeneity(Kind::mixed, 0); }
    static Homogeneity any() { return Homogeneity(Kind::any, 0); }
    static Homogeneity exact(std::uint64_t d) { return Homogeneity(Kind::exact, d); }

    Kind kind() const { return kind_; }
    bool homogeneous() const { return kind_ != Kind::mixed; }
    /// Set only for Kind::exact.
    std::optional<std::uint64_t> degree() const
    {
        return kind_ == Kind::exact ? std::optional(degree_) : std::nullopt;
    }
    /// True when a polynomial with this homogeneity may be treated as degree d.
    bool admits(std::uint64_t d) const { return kind_ == Kind::any || (kind_ == Kind::exact && degree_ == d); }

    bool operator==(const Homogeneity&) const = default;

private:
    Homogeneity(Kind k, std::uint64_t d)
        : kind_(k)
        , degree_(d)
    {
    }

    Kind kind_;
    std::uint64_t degree_;
};

Homogeneity is_homogeneous(const Polynomial& f, const WeightSystem& ws);

/// All-ones weights matching the ring of f.
Homogeneity is_homogeneous(const Polynomial& f);

/// Every monomial of weighted degree exactly d, in GrlexDescending order.
std::vector<Monomial> enumerate_monomials(const WeightSystem& ws, std::uint64_t d);

/// Number of monomials of weighted degree d, counted through the recurrence
/// N(d; w1..wk) = sum_j N(d - j*wk; w1..w(k-1)) without enumerating them.
std::uint64_t hilbert_count(const WeightSystem& ws, std::uint64_t d);

} // namespace p1146
