#include "p1146/grading.hpp"
#include "p1146/linsys.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

#include <doctest.h>

using namespace p1146;

namespace {

Polynomial P(std::string_view text) { return Polynomial::parse(rings::projective3(), text); }

const PencilCubic& standard_xi()
{
    static const PencilCubic xi = PencilCubic::standard();
    return xi;
}

// Coefficient row of p over the given monomial columns; false if p has support outside them.
bool coefficient_row(const Polynomial& p, const std::vector<std::array<std::uint32_t, 4>>& cols, std::vector<Scalar>& row)
{
    row.assign(cols.size(), Scalar(0));
    for (const auto& [m, c] : p.terms()) {
        auto it = std::find(cols.begin(), cols.end(), std::array<std::uint32_t, 4>{m[0], m[1], m[2], m[3]});
        if (it == cols.end()) return false;
        row[static_cast<std::size_t>(it - cols.begin())] = c;
    }
    return true;
}

} // namespace

TEST_CASE("PencilCubic construction and validation")
{
    const auto& xi = standard_xi();
    CHECK(xi.form() == P("-6*x1^3+11*x1^2*x2-6*x1*x2^2+x2^3"));
    CHECK(xi.roots() == std::array<Scalar, 3>{1, 2, 3});

    auto parsed = PencilCubic::parse("x2^3-13*x1*x2^2+47*x1^2*x2-35*x1^3");
    CHECK(parsed.roots() == std::array<Scalar, 3>{1, 5, 7});

    auto fractional = PencilCubic::parse("6*x2^3 - 11*x1*x2^2 + 6*x1^2*x2 - x1^3");
    CHECK(fractional.roots() == std::array<Scalar, 3>{make_scalar(1, 3), make_scalar(1, 2), 1});
    CHECK(fractional.leading() == 6);

    auto negative = PencilCubic::from_roots({Scalar(-2), make_scalar(3, 4), Scalar(5)}, make_scalar(-2, 3));
    CHECK(PencilCubic::from_polynomial(negative.form()).form() == negative.form());

    CHECK_THROWS_AS(PencilCubic::parse("x2^3-3*x1*x2^2+3*x1^2*x2-x1^3"), DomainError); // (x2-x1)^3
    CHECK_THROWS_AS(PencilCubic::parse("x2^3-x1^2*x2"), DomainError);                   // root 0
    CHECK_THROWS_AS(PencilCubic::parse("x1*x2^2-x1^3"), DomainError);                   // contains x1
    CHECK_THROWS_AS(PencilCubic::parse("x2^3-2*x1^3"), DomainError);                    // irrational roots
    CHECK_THROWS_AS(PencilCubic::parse("x2^2-x1^2"), DomainError);                      // degree 2
    CHECK_THROWS_AS(PencilCubic::parse("x2^3-x1^3+x3^3"), DomainError);
    CHECK_THROWS_AS(PencilCubic::from_roots({Scalar(1), Scalar(1), Scalar(2)}), DomainError);
}

TEST_CASE("LinearSystem invariants")
{
    LinearSystem sys(rings::projective3(), 1, {P("x1"), P("2*x1"), P("-3*x2")});
    CHECK(sys.size() == 2);
    CHECK(sys.generators()[1] == P("x2"));
    CHECK(projective_dim(sys) == 1);
    CHECK(projective_dim(LinearSystem(rings::projective3(), 1, {P("x1"), P("2*x1")})) == 0);
    CHECK_THROWS_AS(LinearSystem(rings::projective3(), 2, {P("x1")}), DomainError);
    CHECK_THROWS_AS(LinearSystem(rings::projective3(), 2, {P("x1^2+x2")}), DomainError);
    CHECK_THROWS_AS(LinearSystem(rings::projective3(), 2, {P("0")}), DomainError);
}

TEST_CASE("projective_dim is invariant under a change of basis")
{
    testing_support::PolyGen gen(5);
    auto S = build_system_S(standard_xi());
    for (int trial = 0; trial < 10; ++trial) {
        // Upper triangular with nonzero diagonal: invertible.
        std::vector<Polynomial> mixed;
        const auto& g = S.generators();
        for (std::size_t i = 0; i < g.size(); ++i) {
            Polynomial p = g[i] * gen.scalar(true);
            for (std::size_t j = i + 1; j < g.size(); ++j) p += g[j] * gen.scalar();
            mixed.push_back(p);
        }
        LinearSystem changed(S.ring(), 6, mixed);
        CHECK(projective_dim(changed) == 10);
        CHECK(spans_equal(changed, S));
    }
}

TEST_CASE("system S")
{
    auto S = build_system_S(standard_xi());
    CHECK(S.size() == 11);
    CHECK(projective_dim(S) == 10);
    for (const auto& g : S.generators()) {
        CHECK(is_homogeneous(g) == Homogeneity::exact(6));
        CHECK(multiplicity_along_r(g) >= 5);
        CHECK(member(g, S));
        // On x1 = 0: divisible by x2^5 with an x4-free residual.
        auto on_alpha1 = restrict_to_plane(g, "x1");
        CHECK(factor_out(on_alpha1, "x2", 5).degree_in("x4") == 0);
        CHECK(meets_plane_in_lines_through_q(g, CoordinatePlane::x1_zero));
        CHECK(meets_plane_in_lines_through_q(g, CoordinatePlane::x2_zero));
        for (const auto& tau : standard_xi().roots()) CHECK(meets_root_plane_only_in_r(g, tau));
        CHECK(pencil_residual_is_linear(g));
    }
    auto generic = random_member(S, 72);
    CHECK(multiplicity_along_r(generic) == 5);
    CHECK(pencil_residual_is_linear(generic));
}

TEST_CASE("restrict_pencil")
{
    const auto& pr = rings::pencil();
    CHECK(restrict_pencil(P("x2")) == Polynomial::parse(pr, "t*x1"));

    // a x1x2x4 xi + x3 xi phi2 + phi6  ->  x1^5 (a x4 t xi(1,t) + x3 xi(1,t) phi2(1,t) + x1 phi6(1,t))
    const auto& xi = standard_xi().form();
    auto phi2 = P("x1^2 - 3*x1*x2 + 2*x2^2");
    auto phi6 = P("x1^6 + 4*x2^6 - x1^3*x2^3");
    auto f = P("5*x1*x2*x4") * xi + P("x3") * xi * phi2 + phi6;
    auto residual = factor_out(restrict_pencil(f), "x1", 5);

    auto at_one = [&](const Polynomial& g) { // g(1, t) as a pencil-ring polynomial
        return substitute(g, {{"x1", Polynomial::constant(pr, 1)}, {"x2", Polynomial::variable(pr, "t")}}, pr);
    };
    auto t = Polynomial::variable(pr, "t");
    auto expected = Polynomial::parse(pr, "5*x4") * t * at_one(xi) + Polynomial::variable(pr, "x3") * at_one(xi) * at_one(phi2)
                    + Polynomial::variable(pr, "x1") * at_one(phi6);
    CHECK(residual == expected);
    CHECK(pencil_residual_is_linear(f));

    // At a root of xi only x1^6 survives.
    for (const auto& tau : standard_xi().roots()) {
        auto h = specialize_pencil(restrict_pencil(f), tau);
        CHECK(h.size() == 1);
        CHECK(h.leading_term().first == Monomial{0, 6, 0, 0});
    }

    CHECK_THROWS_AS(factor_out(P("x1^2+x2"), "x1", 1), DivisibilityError);
    CHECK_FALSE(pencil_residual_is_linear(P("x3^2*x1^4")));
}

TEST_CASE("plane checks reject sextics outside S")
{
    // x1^5 x4 restricted to x2 = 0 gives x1^5 * x4: the line x1 = x4 = 0 misses q.
    CHECK_FALSE(meets_plane_in_lines_through_q(P("x1^5*x4"), CoordinatePlane::x2_zero));
    CHECK(meets_plane_in_lines_through_q(P("x1^5*x4"), CoordinatePlane::x1_zero));
    // x1^5 x3 does not vanish on the root planes beyond r.
    CHECK_FALSE(meets_root_plane_only_in_r(P("x1^5*x3"), 2));
    CHECK(meets_root_plane_only_in_r(P("x1^6"), 2));
}

TEST_CASE("multiplicity_along_r")
{
    CHECK(multiplicity_along_r(P("x3^6")) == 0);
    CHECK(multiplicity_along_r(P("x1^2*x3 + x2^5")) == 2);
    CHECK_THROWS_AS(multiplicity_along_r(P("0")), DomainError);
}

TEST_CASE("system T")
{
    const auto& xi = standard_xi();
    auto T = build_system_T(xi);
    CHECK(T.size() == 39);
    CHECK(projective_dim(T) == 38);
    for (const auto& g : T.generators()) {
        CHECK(is_homogeneous(g) == Homogeneity::exact(12));
        CHECK(multiplicity_along_r(g) >= 9);
    }
    auto u = P("x1*x2*x4") * xi.form();
    auto v = P("x3") * xi.form();
    CHECK(member(u * u, T));
    CHECK(member(pow(v, 3), T));
    CHECK(member(u * v * P("x1*x2 - 7*x2^2"), T));
    CHECK_FALSE(member(pow(P("x4"), 12), T));
    CHECK_FALSE(member(P("x1^9*x3^3"), T));

    auto m = check_membership(P("x1^11"), T);
    CHECK_FALSE(m.member);
    CHECK_FALSE(m.warning.empty());
    CHECK(member(P("0"), T));
}

TEST_CASE("x4^12 is outside T by the rank oracle")
{
    auto T = build_system_T(standard_xi());
    // Coefficient matrix of T plus the candidate, columns over the union of supports.
    std::map<Monomial, std::size_t, GrlexDescending> cols;
    auto candidate = pow(P("x4"), 12);
    for (const auto& g : T.generators())
        for (const auto& [m, c] : g.terms()) cols.try_emplace(m, 0);
    for (const auto& [m, c] : candidate.terms()) cols.try_emplace(m, 0);
    std::size_t i = 0;
    for (auto& [m, idx] : cols) idx = i++;
    auto row_of = [&](const Polynomial& p) {
        std::vector<Scalar> row(cols.size(), Scalar(0));
        for (const auto& [m, c] : p.terms()) row[cols.at(m)] = c;
        return row;
    };
    std::vector<std::vector<Scalar>> rows;
    for (const auto& g : T.generators()) rows.push_back(row_of(g));
    auto base = oracle::rational_rank(rows);
    rows.push_back(row_of(candidate));
    CHECK(base == 39);
    CHECK(oracle::rational_rank(rows) == 40);
}

TEST_CASE("S' by constraint solving")
{
    const auto& xi = standard_xi();
    auto hand = oracle::sprime_conditions(xi.roots());
    REQUIRE(hand.unknowns.size() == 19);
    CHECK(oracle::rational_rank(hand.rows) == 8);                                          // 19 - 8 = 11
    CHECK(oracle::rational_rank(oracle::sprime_conditions(xi.roots(), false).rows) == 7); // 19 - 7 = 12

    auto sol = solve_constraints_sprime(xi);
    CHECK(sol.unknowns.size() == 19);
    CHECK(sol.constraints.size() == 8);
    CHECK(sol.constraint_rank == 8);
    CHECK(oracle::rational_rank(sol.constraints) == 8);
    CHECK(sol.system.size() == 11);
    CHECK(projective_dim(sol.system) == 10);
    CHECK(spans_equal(sol.system, build_system_S(xi)));

    // The oracle nullspace and the generators of S span the same 11-dimensional space.
    auto null = oracle::rational_nullspace(hand.rows, hand.unknowns.size());
    CHECK(null.size() == 11);
    auto stacked = null;
    auto S = build_system_S(xi);
    for (const auto& g : S.generators()) {
        std::vector<Scalar> row;
        REQUIRE(coefficient_row(g, hand.unknowns, row));
        stacked.push_back(row);
    }
    CHECK(oracle::rational_rank(stacked) == 11);

    auto dropped = solve_constraints_sprime(xi, {false, true, true});
    CHECK(dropped.system.size() == 12);
    CHECK_FALSE(spans_equal(dropped.system, build_system_S(xi)));

    auto alt = PencilCubic::from_roots({Scalar(1), Scalar(5), Scalar(7)});
    CHECK(oracle::rational_rank(oracle::sprime_conditions(alt.roots()).rows) == 8);
    CHECK(spans_equal(solve_constraints_sprime(alt).system, build_system_S(alt)));
}
