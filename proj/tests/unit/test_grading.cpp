#include "p1146/grading.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <set>

using namespace p1146;

TEST_CASE("weighted_degree")
{
    WeightSystem ws({1, 1, 4, 6});
    CHECK(weighted_degree({0, 0, 0, 2}, ws) == 12);
    CHECK(weighted_degree({0, 0, 0, 0}, ws) == 0);
    CHECK(weighted_degree({0, 0, 1, 1}, ws) == 10);
    CHECK_THROWS_AS(weighted_degree({1, 1}, ws), ArityError);
}

TEST_CASE("weight systems reject zero and empty input")
{
    CHECK_THROWS_AS(WeightSystem({}), DomainError);
    CHECK_THROWS_AS(WeightSystem({1, 0, 2}), DomainError);
    CHECK(WeightSystem::parse("1, 1,4,6") == WeightSystem({1, 1, 4, 6}));
    CHECK_THROWS_AS(WeightSystem::parse("1,,2"), ParseError);
    CHECK_THROWS_AS(WeightSystem::parse("1,-2"), ParseError);
}

TEST_CASE("is_homogeneous")
{
    const auto& r = rings::projective3();
    // a x1x2x4 xi + x3 xi phi2 + phi6 with every parameter set to 1
    auto xi = Polynomial::parse(r, "x2^3-6*x1*x2^2+11*x1^2*x2-6*x1^3");
    auto phi2 = Polynomial::parse(r, "x1^2+x1*x2+x2^2");
    auto phi6 = Polynomial::parse(r, "x1^6+x1^5*x2+x1^4*x2^2+x1^3*x2^3+x1^2*x2^4+x1*x2^5+x2^6");
    auto eq1 = Polynomial::parse(r, "x1*x2*x4") * xi + Polynomial::parse(r, "x3") * xi * phi2 + phi6;
    CHECK(is_homogeneous(eq1, WeightSystem({1, 1, 1, 1})) == Homogeneity::exact(6));

    WeightSystem w1146({1, 1, 4, 6});
    auto h = is_homogeneous(Polynomial::parse(r, "x1+x3"), w1146);
    CHECK(h.kind() == Homogeneity::Kind::mixed);
    CHECK_FALSE(h.homogeneous());

    auto zero = is_homogeneous(Polynomial(r), w1146);
    CHECK(zero == Homogeneity::any());
    CHECK_FALSE(zero.degree().has_value());
    CHECK(zero.admits(0));
    CHECK(zero.admits(17));

    CHECK_THROWS_AS(is_homogeneous(Polynomial(r), WeightSystem({1, 1})), ArityError);
}

TEST_CASE("enumerate_monomials")
{
    WeightSystem w1146({1, 1, 4, 6});
    auto basis = enumerate_monomials(w1146, 12);
    CHECK(basis.size() == 39);
    CHECK(std::set<Monomial>(basis.begin(), basis.end()).size() == 39);
    CHECK(std::is_sorted(basis.begin(), basis.end(), GrlexDescending{}));
    for (const auto& m : basis) CHECK(weighted_degree(m, w1146) == 12);

    CHECK(enumerate_monomials(WeightSystem({1, 1, 1, 3}), 6).size() == 39);
    CHECK(enumerate_monomials(WeightSystem({2, 3}), 0) == std::vector<Monomial>{{0, 0}});
    CHECK(enumerate_monomials(WeightSystem({2, 4}), 7).empty());
}

TEST_CASE("hilbert_count")
{
    CHECK(hilbert_count(WeightSystem({1, 1, 4, 6}), 12) == 39);
    CHECK(hilbert_count(WeightSystem({1, 1}), 6) == 7);
    // x1^a x2^b with a + b = 3
    CHECK(oracle::brute_force_count({1, 1, 4, 6}, 3) == 4);
    CHECK(hilbert_count(WeightSystem({1, 1, 4, 6}), 3) == 4);
    CHECK(hilbert_count(WeightSystem({5}), 0) == 1);
    CHECK(hilbert_count(WeightSystem({5}), 3) == 0);
}

TEST_CASE("hilbert_count agrees with brute force and the series product for d <= 40")
{
    for (const auto& w : std::vector<std::vector<std::uint32_t>>{{1, 1, 4, 6}, {1, 1, 1, 3}, {2, 3, 5}, {1, 1, 1, 1}}) {
        auto series = oracle::hilbert_series(w, 40);
        WeightSystem ws(w);
        for (std::uint64_t d = 0; d <= 40; ++d) {
            CAPTURE(d);
            CHECK(hilbert_count(ws, d) == series[d]);
            CHECK(hilbert_count(ws, d) == oracle::brute_force_count(w, d));
            CHECK(enumerate_monomials(ws, d).size() == series[d]);
        }
    }
}

TEST_CASE("weighted_degree is additive")
{
    WeightSystem ws({1, 1, 4, 6});
    for (const auto& a : enumerate_monomials(ws, 10))
        for (const auto& b : enumerate_monomials(ws, 7)) {
            Monomial ab(4);
            for (int i = 0; i < 4; ++i) ab[i] = a[i] + b[i];
            CHECK(weighted_degree(ab, ws) == weighted_degree(a, ws) + weighted_degree(b, ws));
        }
}
