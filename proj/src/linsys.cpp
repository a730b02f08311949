#include "p1146/linsys.hpp"

#include "p1146/grading.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace p1146 {

namespace {

const RingPtr& P3() { return rings::projective3(); }

Polynomial var(std::string_view name) { return Polynomial::variable(P3(), name); }

// Positive divisors of |n|, n != 0.
std::vector<Integer> divisors(const Integer& n)
{
    Integer a = abs(n);
    if (a > Integer("1000000000000"))
        throw DomainError("cubic coefficients too large for rational root search");
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        small.push_back(d);
        if (d * d != a) large.push_back(a / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

// ---------------------------------------------------------------------------
// PencilCubic

PencilCubic::PencilCubic(Polynomial form, std::array<Scalar, 3> roots, Scalar leading)
    : form_(std::move(form))
    , roots_(std::move(roots))
    , leading_(std::move(leading))
{
}

PencilCubic PencilCubic::from_roots(std::array<Scalar, 3> roots, const Scalar& leading)
{
    if (leading == 0) throw DomainError("pencil cubic needs a nonzero leading coefficient");
    for (std::size_t i = 0; i < 3; ++i) {
        if (roots[i] == 0) throw DomainError("pencil cubic root 0 would coincide with the plane x2 = 0");
        for (std::size_t j = 0; j < i; ++j)
            if (roots[i] == roots[j]) throw DomainError("pencil cubic has a repeated root " + roots[i].get_str());
    }
    std::sort(roots.begin(), roots.end());
    Polynomial form = Polynomial::constant(P3(), leading);
    for (const auto& r : roots) form *= var("x2") - var("x1") * r;
    return PencilCubic(std::move(form), roots, leading);
}

PencilCubic PencilCubic::from_polynomial(const Polynomial& xi)
{
    if (!(*xi.ring() == *P3())) throw ArityError("pencil cubic must be written in x1, x2, x3, x4");
    if (xi.is_zero()) throw DomainError("pencil cubic must be nonzero");
    if (is_homogeneous(xi) != Homogeneity::exact(3))
        throw DomainError("pencil cubic '" + xi.to_string() + "' is not a homogeneous cubic");
    if (xi.degree_in("x3") > 0 || xi.degree_in("x4") > 0)
        throw DomainError("pencil cubic may only involve x1 and x2");

    // xi(1, t) = sum a_k t^k where a_k is the coefficient of x1^(3-k) x2^k.
    std::array<Scalar, 4> a;
    for (std::uint32_t k = 0; k <= 3; ++k) a[k] = xi.coefficient(Monomial{3 - k, k, 0, 0});
    if (a[3] == 0) throw DomainError("pencil cubic vanishes on x1 = 0");
    if (a[0] == 0) throw DomainError("pencil cubic vanishes on x2 = 0");

    Integer lcm = 1;
    for (const auto& c : a) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::array<Integer, 4> ia;
    for (std::size_t k = 0; k < 4; ++k) ia[k] = a[k].get_num() * (lcm / a[k].get_den());

    // Rational roots p/q have p | a0 and q | a3.
    std::vector<Scalar> roots;
    auto ps = divisors(ia[0]);
    auto qs = divisors(ia[3]);
    for (const auto& p : ps) {
        for (const auto& q : qs) {
            for (int sign : {1, -1}) {
                Scalar t = make_scalar(sign * p, q);
                if (std::find(roots.begin(), roots.end(), t) != roots.end()) continue;
                Scalar v = ((a[3] * t + a[2]) * t + a[1]) * t + a[0];
                if (v == 0) roots.push_back(t);
            }
        }
    }
    if (roots.size() != 3)
        throw DomainError("pencil cubic '" + xi.to_string()
                          + "' must split into three distinct rational linear factors");
    auto cubic = from_roots({roots[0], roots[1], roots[2]}, a[3]);
    if (!(cubic.form() == xi)) throw DomainError("pencil cubic factorization check failed");
    return cubic;
}

PencilCubic PencilCubic::parse(std::string_view text)
{
    return from_polynomial(Polynomial::parse(P3(), text));
}

PencilCubic PencilCubic::standard()
{
    return from_roots({Scalar(1), Scalar(2), Scalar(3)});
}

// ---------------------------------------------------------------------------
// LinearSystem

LinearSystem::LinearSystem(RingPtr ring, std::uint64_t degree, std::vector<Polynomial> generators)
    : ring_(std::move(ring))
    , degree_(degree)
{
    for (auto& g : generators) {
        if (!(*g.ring() == *ring_)) throw ArityError("generator lives in a different ring");
        if (g.is_zero()) throw DomainError("linear system generators must be nonzero");
        if (is_homogeneous(g) != Homogeneity::exact(degree_))
            throw DomainError("generator '" + g.to_string() + "' is not homogeneous of degree "
                              + std::to_string(degree_));
        auto m = g.monic();
        if (std::find(generators_.begin(), generators_.end(), m) == generators_.end())
            generators_.push_back(std::move(m));
    }
}

SpanIndex::SpanIndex(const LinearSystem& sys)
    : echelon_(0)
{
    for (const auto& g : sys.generators())
        for (const auto& [m, c] : g.terms()) columns_.try_emplace(m, 0);
    std::size_t i = 0;
    for (auto& [m, idx] : columns_) idx = i++;
    echelon_ = FractionFreeEchelon(columns_.size());
    for (const auto& g : sys.generators()) {
        RationalRow row(columns_.size(), Scalar(0));
        for (const auto& [m, c] : g.terms()) row[columns_.at(m)] = c;
        echelon_.insert(row);
    }
}

bool SpanIndex::contains(const Polynomial& f) const
{
    RationalRow row(columns_.size(), Scalar(0));
    for (const auto& [m, c] : f.terms()) {
        auto it = columns_.find(m);
        if (it == columns_.end()) return false;
        row[it->second] = c;
    }
    return echelon_.contains(row);
}

std::int64_t projective_dim(const LinearSystem& sys)
{
    return static_cast<std::int64_t>(SpanIndex(sys).rank()) - 1;
}

Membership check_membership(const Polynomial& f, const LinearSystem& sys)
{
    if (!(*f.ring() == *sys.ring())) throw ArityError("candidate lives in a different ring");
    if (!is_homogeneous(f).admits(sys.degree()))
        return {false, "'" + f.to_string() + "' is not homogeneous of degree " + std::to_string(sys.degree())};
    return {SpanIndex(sys).contains(f), {}};
}

bool member(const Polynomial& f, const LinearSystem& sys)
{
    return check_membership(f, sys).member;
}

SpanComparison compare_spans(const LinearSystem& left, const LinearSystem& right)
{
    if (!(*left.ring() == *right.ring())) throw ArityError("systems live in different rings");
    SpanComparison out;
    SpanIndex li(left);
    SpanIndex ri(right);
    out.rank_left = li.rank();
    out.rank_right = ri.rank();
    for (const auto& g : left.generators())
        if (!ri.contains(g)) out.left_outside_right.push_back(g);
    for (const auto& g : right.generators())
        if (!li.contains(g)) out.right_outside_left.push_back(g);

    if (left.degree() == right.degree()) {
        std::vector<Polynomial> all = left.generators();
        all.insert(all.end(), right.generators().begin(), right.generators().end());
        out.rank_union = SpanIndex(LinearSystem(left.ring(), left.degree(), std::move(all))).rank();
    }
    else {
        out.rank_union = out.rank_left + out.rank_right;
    }
    out.equal = out.left_outside_right.empty() && out.right_outside_left.empty()
                && out.rank_left == out.rank_union && out.rank_right == out.rank_union;
    return out;
}

bool spans_equal(const LinearSystem& left, const LinearSystem& right)
{
    return compare_spans(left, right).equal;
}

// ---------------------------------------------------------------------------
// Multiplicities and restrictions

std::uint32_t multiplicity_along_r(const Polynomial& f)
{
    if (f.is_zero()) throw DomainError("multiplicity of the zero polynomial is undefined");
    auto i1 = f.ring()->require_index("x1");
    auto i2 = f.ring()->require_index("x2");
    std::uint32_t best = UINT32_MAX;
    for (const auto& [m, c] : f.terms()) best = std::min(best, m[i1] + m[i2]);
    return best;
}

Polynomial restrict_pencil(const Polynomial& f)
{
    const auto& pr = rings::pencil();
    auto x1 = Polynomial::variable(pr, "x1");
    auto t = Polynomial::variable(pr, "t");
    return substitute(f,
                      {{"x1", x1}, {"x2", t * x1}, {"x3", Polynomial::variable(pr, "x3")},
                       {"x4", Polynomial::variable(pr, "x4")}},
                      pr);
}

Polynomial factor_out(const Polynomial& f, std::string_view var_name, unsigned k)
{
    return exact_divide(f, pow(Polynomial::variable(f.ring(), var_name), k));
}

Polynomial specialize_pencil(const Polynomial& g, const Scalar& tau)
{
    const auto& pr = rings::pencil();
    if (!(*g.ring() == *pr)) throw ArityError("specialize_pencil expects a polynomial in t, x1, x3, x4");
    return substitute(g,
                      {Polynomial::constant(pr, tau), Polynomial::variable(pr, "x1"), Polynomial::variable(pr, "x3"),
                       Polynomial::variable(pr, "x4")},
                      pr);
}

Polynomial restrict_to_plane(const Polynomial& f, std::string_view var_name)
{
    const auto& ring = f.ring();
    auto zero_at = ring->require_index(var_name);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < ring->arity(); ++i)
        images.push_back(i == zero_at ? Polynomial(ring) : Polynomial::variable(ring, ring->name(i)));
    return substitute(f, images, ring);
}

bool meets_plane_in_lines_through_q(const Polynomial& f, CoordinatePlane plane)
{
    auto d = f.degree();
    if (!d || *d == 0) return false;
    const char* vanishing = plane == CoordinatePlane::x1_zero ? "x1" : "x2";
    const char* other = plane == CoordinatePlane::x1_zero ? "x2" : "x1";
    auto g = restrict_to_plane(f, vanishing);
    if (g.is_zero()) return true;
    try {
        auto residual = factor_out(g, other, static_cast<unsigned>(*d - 1));
        return is_homogeneous(residual) == Homogeneity::exact(1) && residual.degree_in("x4") == 0;
    }
    catch (const DivisibilityError&) {
        return false;
    }
}

bool meets_root_plane_only_in_r(const Polynomial& f, const Scalar& tau)
{
    auto d = f.degree();
    if (!d) return true;
    auto h = specialize_pencil(restrict_pencil(f), tau);
    if (h.is_zero()) return true;
    Monomial x1_power{0, static_cast<std::uint32_t>(*d), 0, 0};
    return h.size() == 1 && h.leading_term().first == x1_power;
}

bool pencil_residual_is_linear(const Polynomial& f)
{
    if (f.is_zero()) return true;
    auto m = multiplicity_along_r(f);
    Polynomial residual(rings::pencil());
    try {
        residual = factor_out(restrict_pencil(f), "x1", m);
    }
    catch (const DivisibilityError&) {
        return false;
    }
    // Degree in (x1, x3, x4); t is a parameter on the pencil.
    for (const auto& [mono, c] : residual.terms())
        if (mono[1] + mono[2] + mono[3] > 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// The systems

std::vector<Polynomial> binary_monomials(unsigned d)
{
    std::vector<Polynomial> out;
    for (std::uint32_t k = 0; k <= d; ++k) out.push_back(Polynomial::monomial(P3(), Monomial{d - k, k, 0, 0}));
    return out;
}

LinearSystem build_system_S(const PencilCubic& cubic)
{
    const auto& xi = cubic.form();
    auto x1 = var("x1"), x2 = var("x2"), x3 = var("x3"), x4 = var("x4");
    std::vector<Polynomial> gens;
    gens.push_back(x1 * x2 * x4 * xi);
    for (const auto& m : binary_monomials(2)) gens.push_back(x3 * xi * m);
    for (auto& m : binary_monomials(6)) gens.push_back(std::move(m));
    return LinearSystem(P3(), 6, std::move(gens));
}

LinearSystem build_system_T(const PencilCubic& cubic)
{
    const auto& xi = cubic.form();
    auto x1 = var("x1"), x2 = var("x2"), x3 = var("x3"), x4 = var("x4");
    auto u = x1 * x2 * x4 * xi; // pulls back from the weight-6 coordinate
    auto v = x3 * xi;           // pulls back from the weight-4 coordinate

    std::vector<Polynomial> gens;
    gens.push_back(u * u);
    for (const auto& m : binary_monomials(2)) gens.push_back(u * v * m);
    for (const auto& m : binary_monomials(6)) gens.push_back(u * m);
    gens.push_back(pow(v, 3));
    for (const auto& m : binary_monomials(4)) gens.push_back(v * v * m);
    for (const auto& m : binary_monomials(8)) gens.push_back(v * m);
    for (auto& m : binary_monomials(12)) gens.push_back(std::move(m));
    return LinearSystem(P3(), 12, std::move(gens));
}

Polynomial random_member(const LinearSystem& sys, std::uint64_t seed)
{
    // Raw engine output keeps the sequence identical across standard libraries.
    std::mt19937_64 rng(seed);
    Polynomial out(sys.ring());
    for (const auto& g : sys.generators()) {
        long num = static_cast<long>(rng() % 41) - 20;
        if (num == 0) num = 1;
        long den = static_cast<long>(rng() % 7) + 1;
        out += g * make_scalar(num, den);
    }
    return out;
}

SprimeSolution solve_constraints_sprime(const PencilCubic& cubic, const SprimeConditions& conditions)
{
    std::vector<Monomial> unknowns;
    for (const auto& m : enumerate_monomials(WeightSystem({1, 1, 1, 1}), 6))
        if (m[0] + m[1] >= 5) unknowns.push_back(m);

    // Each condition is "coefficient of monomial M in some restriction of the unknown
    // sextic vanishes"; the restriction is linear in the sextic, so evaluating it on each
    // unknown monomial gives one matrix row per M.
    std::vector<RationalRow> rows;
    std::vector<std::string> labels;
    auto add_conditions = [&](const std::string& label, auto restrict, auto unwanted) {
        std::vector<Polynomial> images;
        std::set<Monomial, GrlexDescending> targets;
        for (const auto& m : unknowns) {
            images.push_back(restrict(Polynomial::monomial(P3(), m)));
            for (const auto& [mono, c] : images.back().terms())
                if (unwanted(mono)) targets.insert(mono);
        }
        for (const auto& target : targets) {
            RationalRow row;
            for (const auto& img : images) row.push_back(img.coefficient(target));
            rows.push_back(std::move(row));
            labels.push_back(label + ": coefficient of " + Polynomial::monomial(images.front().ring(), target).to_string());
        }
    };

    auto x4_index = P3()->require_index("x4");
    auto mentions_x4 = [&](const Monomial& m) { return m[x4_index] > 0; };
    if (conditions.alpha1)
        add_conditions("x1=0", [](const Polynomial& p) { return restrict_to_plane(p, "x1"); }, mentions_x4);
    if (conditions.alpha2)
        add_conditions("x2=0", [](const Polynomial& p) { return restrict_to_plane(p, "x2"); }, mentions_x4);
    if (conditions.root_planes) {
        for (const auto& tau : cubic.roots()) {
            add_conditions(
                "x2=" + tau.get_str() + "*x1",
                [&tau](const Polynomial& p) { return specialize_pencil(restrict_pencil(p), tau); },
                [](const Monomial& m) { return !(m[0] == 0 && m[1] == 6 && m[2] == 0 && m[3] == 0); });
        }
    }

    FractionFreeEchelon ech(unknowns.size());
    for (const auto& r : rows) ech.insert(r);

    std::vector<Polynomial> basis;
    for (const auto& v : ech.nullspace()) {
        Polynomial p(P3());
        for (std::size_t j = 0; j < unknowns.size(); ++j)
            if (v[j] != 0) p += Polynomial::monomial(P3(), unknowns[j], v[j]);
        basis.push_back(std::move(p));
    }

    return SprimeSolution{std::move(unknowns), std::move(rows), std::move(labels), ech.rank(),
                          LinearSystem(P3(), 6, std::move(basis))};
}

} // namespace p1146
