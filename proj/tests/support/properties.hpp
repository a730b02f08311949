#pragma once

// Randomized property suites shared by the unit tests and the acceptance binary.

#include "p1146/linsys.hpp"
#include "p1146/ratmap.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

#include <string>

namespace testing_support {

struct PropertyResult {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0 && cases > 0; }

    void record(bool passed, const std::string& what)
    {
        ++cases;
        if (passed) return;
        if (failures++ == 0) first_failure = what;
    }
};

inline constexpr std::uint64_t kPropertySeed = 0x1146;
inline constexpr std::size_t kPropertyCases = 1000;

inline bool canonical(const Polynomial& p)
{
    for (const auto& [m, c] : p.terms())
        if (c == 0 || c.get_den() <= 0 || gcd(c.get_num(), c.get_den()) != 1) return false;
    return Polynomial::parse(p.ring(), p.to_string()) == p;
}

inline PropertyResult ring_axioms(std::size_t n = kPropertyCases, std::uint64_t seed = kPropertySeed)
{
    PolyGen gen(seed);
    const auto& ring = rings::projective3();
    PropertyResult res;
    for (std::size_t i = 0; i < n; ++i) {
        auto f = gen.poly(ring), g = gen.poly(ring), h = gen.poly(ring);
        bool ok = (f + g) + h == f + (g + h) && (f * g) * h == f * (g * h) && f + g == g + f && f * g == g * f
                  && f * (g + h) == f * g + f * h && f - f == Polynomial(ring) && canonical(f * g + h)
                  && canonical(f - g);
        res.record(ok, "f=" + f.to_string() + " g=" + g.to_string() + " h=" + h.to_string());
    }
    return res;
}

inline PropertyResult substitution_homomorphism(std::size_t n = kPropertyCases, std::uint64_t seed = kPropertySeed)
{
    PolyGen gen(seed + 1);
    const auto& src = rings::projective3();
    const auto& dst = rings::pencil();
    PropertyResult res;
    for (std::size_t i = 0; i < n; ++i) {
        auto f = gen.poly(src, 3, 2), g = gen.poly(src, 3, 2);
        std::vector<Polynomial> images;
        for (std::size_t k = 0; k < src->arity(); ++k) images.push_back(gen.poly(dst, 2, 2));
        auto sub = [&](const Polynomial& p) { return substitute(p, images, dst); };
        bool ok = sub(f * g) == sub(f) * sub(g) && sub(f + g) == sub(f) + sub(g);
        res.record(ok, "f=" + f.to_string() + " g=" + g.to_string());
    }
    return res;
}

inline PropertyResult pullback_multiplicative(std::size_t n = kPropertyCases, std::uint64_t seed = kPropertySeed)
{
    PolyGen gen(seed + 2);
    auto eta = make_eta(PencilCubic::standard());
    const auto& ws = eta.target_weights();
    PropertyResult res;
    for (std::size_t i = 0; i < n; ++i) {
        auto kg = gen.below(13), kh = gen.below(13);
        auto g = gen.weighted_form(eta.target_ring(), ws, kg);
        auto h = gen.weighted_form(eta.target_ring(), ws, kh);
        auto pg = pullback(eta, g), ph = pullback(eta, h);
        auto pgh = pullback(eta, g * h);
        bool ok = pgh == pg * ph && is_homogeneous(pgh).admits(kg + kh);
        res.record(ok, "g=" + g.to_string() + " h=" + h.to_string());
    }
    return res;
}

inline PropertyResult multiplicity_valuation(std::size_t n = kPropertyCases, std::uint64_t seed = kPropertySeed)
{
    PolyGen gen(seed + 3);
    const auto& ring = rings::projective3();
    PropertyResult res;
    for (std::size_t i = 0; i < n; ++i) {
        auto f = gen.nonzero_poly(ring), g = gen.nonzero_poly(ring);
        bool ok = multiplicity_along_r(f * g) == multiplicity_along_r(f) + multiplicity_along_r(g);
        res.record(ok, "f=" + f.to_string() + " g=" + g.to_string());
    }
    return res;
}

// hilbert_count vs enumeration vs truncated series product, including partial sums.
inline PropertyResult hilbert_agreement(std::size_t n = kPropertyCases, std::uint64_t seed = kPropertySeed)
{
    PolyGen gen(seed + 4);
    PropertyResult res;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> w(1 + gen.below(4));
        for (auto& x : w) x = static_cast<std::uint32_t>(1 + gen.below(6));
        auto d = gen.below(41);
        WeightSystem ws(w);
        auto series = oracle::hilbert_series(w, d);
        std::uint64_t partial_impl = 0, partial_series = 0;
        for (std::uint64_t k = 0; k <= d; ++k) {
            partial_impl += hilbert_count(ws, k);
            partial_series += series[k];
        }
        bool ok = hilbert_count(ws, d) == enumerate_monomials(ws, d).size() && hilbert_count(ws, d) == series[d]
                  && partial_impl == partial_series;
        res.record(ok, "weights " + ws.to_string() + " degree " + std::to_string(d));
    }
    return res;
}

} // namespace testing_support
