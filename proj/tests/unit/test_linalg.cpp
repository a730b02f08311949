#include "p1146/errors.hpp"
#include "p1146/linalg.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace p1146;

namespace {

std::vector<RationalRow> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int sparsity)
{
    std::vector<RationalRow> m(rows, RationalRow(cols, Scalar(0)));
    for (auto& r : m)
        for (auto& v : r)
            if (static_cast<int>(rng() % 10) >= sparsity)
                v = make_scalar(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
    return m;
}

} // namespace

TEST_CASE("rank on small fixed matrices")
{
    CHECK(rank({}, 3) == 0);
    CHECK(rank({{1, 2}, {2, 4}}, 2) == 1);
    CHECK(rank({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, 3) == 2);
    CHECK(rank({{make_scalar(1, 2), make_scalar(1, 3)}, {3, 2}}, 2) == 1);
    CHECK_THROWS_AS(rank({{1, 2, 3}}, 2), ArityError);
}

TEST_CASE("rank matches rational Gauss-Jordan on random matrices")
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        auto m = random_matrix(rng, r, c, static_cast<int>(rng() % 8));
        // duplicate a combination of rows to force dependencies now and then
        if (r > 2 && rng() % 2) {
            RationalRow comb(c);
            for (std::size_t j = 0; j < c; ++j) comb[j] = m[0][j] * 3 - m[1][j] / 2;
            m.push_back(comb);
        }
        CHECK(rank(m, c) == oracle::rational_rank(m));
    }
}

TEST_CASE("nullspace vectors are annihilated and have the right count")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 9;
        auto m = random_matrix(rng, r, c, static_cast<int>(rng() % 6));
        auto ns = nullspace(m, c);
        CHECK(ns.size() == c - oracle::rational_rank(m));
        for (const auto& v : ns) {
            for (const auto& row : m) {
                Scalar dot = 0;
                for (std::size_t j = 0; j < c; ++j) dot += row[j] * v[j];
                CHECK(dot == 0);
            }
        }
        CHECK(oracle::rational_rank(ns) == ns.size());
    }
}

TEST_CASE("incremental insertion and membership")
{
    FractionFreeEchelon ech(3);
    CHECK(ech.insert({1, 2, 3}));
    CHECK_FALSE(ech.insert({2, 4, 6}));
    CHECK(ech.contains({make_scalar(-1, 2), -1, make_scalar(-3, 2)}));
    CHECK_FALSE(ech.contains({0, 0, 1}));
    CHECK(ech.insert({0, 0, 1}));
    CHECK(ech.contains({1, 2, 0}));
    CHECK(ech.contains({0, 0, 0}));
    CHECK(ech.rank() == 2);
    CHECK(ech.pivots() == std::vector<std::size_t>{0, 2});
}
