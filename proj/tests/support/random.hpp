#pragma once

#include "p1146/grading.hpp"
#include "p1146/polynomial.hpp"

#include <random>

namespace testing_support {

using namespace p1146;

// Small random polynomials. Uses raw engine output so sequences are reproducible.
class PolyGen {
public:
    explicit PolyGen(std::uint64_t seed)
        : rng_(seed)
    {
    }

    std::uint64_t below(std::uint64_t n) { return rng_() % n; }

    Scalar scalar(bool nonzero = false)
    {
        long num = static_cast<long>(below(21)) - 10;
        if (nonzero && num == 0) num = 1;
        long den = static_cast<long>(below(4)) + 1;
        return make_scalar(num, den);
    }

    Polynomial poly(const RingPtr& ring, unsigned max_terms = 4, unsigned max_exp = 3)
    {
        Polynomial p(ring);
        auto terms = below(max_terms + 1);
        for (std::uint64_t k = 0; k < terms; ++k) {
            Monomial m(ring->arity());
            for (auto& e : m) e = static_cast<std::uint32_t>(below(max_exp + 1));
            p += Polynomial::monomial(ring, std::move(m), scalar());
        }
        return p;
    }

    Polynomial nonzero_poly(const RingPtr& ring, unsigned max_terms = 4, unsigned max_exp = 3)
    {
        while (true) {
            auto p = poly(ring, max_terms, max_exp);
            if (!p.is_zero()) return p;
        }
    }

    // Weighted-homogeneous form of degree k on the target ring of ws.
    Polynomial weighted_form(const RingPtr& ring, const WeightSystem& ws, std::uint64_t k, unsigned max_terms = 3)
    {
        auto monos = enumerate_monomials(ws, k);
        Polynomial p(ring);
        auto terms = 1 + below(max_terms);
        for (std::uint64_t i = 0; i < terms; ++i)
            p += Polynomial::monomial(ring, monos[below(monos.size())], scalar(true));
        return p;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace testing_support
