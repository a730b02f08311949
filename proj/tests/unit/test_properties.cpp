#include "support/properties.hpp"

#include <doctest.h>

using namespace testing_support;

namespace {

void expect(const PropertyResult& r)
{
    INFO(r.first_failure);
    CHECK(r.cases == kPropertyCases);
    CHECK(r.failures == 0);
}

} // namespace

TEST_CASE("ring axioms and canonical form") { expect(ring_axioms()); }
TEST_CASE("substitution is a ring homomorphism") { expect(substitution_homomorphism()); }
TEST_CASE("pullback along eta is multiplicative") { expect(pullback_multiplicative()); }
TEST_CASE("multiplicity along r is a valuation") { expect(multiplicity_valuation()); }
TEST_CASE("hilbert count, enumeration and series agree") { expect(hilbert_agreement()); }

TEST_CASE("exact_divide inverts multiplication")
{
    PolyGen gen(kPropertySeed + 5);
    const auto& ring = rings::projective3();
    for (int i = 0; i < 300; ++i) {
        auto q = gen.poly(ring);
        auto g = gen.nonzero_poly(ring);
        CHECK(exact_divide(q * g, g) == q);
    }
}

TEST_CASE("text form round-trips")
{
    PolyGen gen(kPropertySeed + 6);
    for (const auto& ring : {rings::projective3(), rings::pencil(), rings::weighted_target(4)}) {
        for (int i = 0; i < 300; ++i) {
            auto f = gen.poly(ring, 5, 4);
            auto text = f.to_string();
            auto back = Polynomial::parse(ring, text);
            CHECK(back == f);
            CHECK(back.to_string() == text);
        }
    }
}
