#include "p1146/ratmap.hpp"

#include "p1146/wps.hpp"

namespace p1146 {

GradedRationalMap::GradedRationalMap(RingPtr source, WeightSystem target, std::vector<Polynomial> components,
                                     std::uint32_t multiplier)
    : source_(std::move(source))
    , target_(std::move(target))
    , target_ring_(rings::weighted_target(target_.size()))
    , components_(std::move(components))
    , multiplier_(multiplier)
{
    if (multiplier_ == 0) throw GradingError("degree multiplier must be positive");
    if (components_.size() != target_.size())
        throw ArityError(std::to_string(components_.size()) + " components for " + std::to_string(target_.size())
                         + " target weights");
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto& c = components_[i];
        if (!(*c.ring() == *source_)) throw ArityError("component lives outside the source ring");
        if (c.is_zero()) throw GradingError("component " + std::to_string(i + 1) + " is zero");
        std::uint64_t want = std::uint64_t{multiplier_} * target_[i];
        auto h = is_homogeneous(c);
        if (h != Homogeneity::exact(want)) {
            throw GradingError("component " + std::to_string(i + 1) + " '" + c.to_string()
                               + "' should be homogeneous of degree " + std::to_string(want));
        }
    }
}

GradedRationalMap make_eta(const Polynomial& xi)
{
    const auto& r = rings::projective3();
    if (!(*xi.ring() == *r)) throw ArityError("xi must be written in x1, x2, x3, x4");
    auto x1 = Polynomial::variable(r, "x1");
    auto x2 = Polynomial::variable(r, "x2");
    auto x3 = Polynomial::variable(r, "x3");
    auto x4 = Polynomial::variable(r, "x4");
    return GradedRationalMap(r, WeightSystem({1, 1, 4, 6}), {x1, x2, x3 * xi, x1 * x2 * x4 * xi});
}

GradedRationalMap make_eta(const PencilCubic& xi)
{
    return make_eta(xi.form());
}

Polynomial pullback(const GradedRationalMap& map, const Polynomial& g)
{
    if (!(*g.ring() == *map.target_ring())) throw ArityError("form does not live on the map's target");
    auto h = is_homogeneous(g, map.target_weights());
    if (!h.homogeneous()) throw GradingError("'" + g.to_string() + "' is not weighted-homogeneous");
    auto result = substitute(g, map.components(), map.source());
    if (auto k = h.degree()) {
        auto want = *k * map.multiplier();
        if (!is_homogeneous(result).admits(want))
            throw GradingError("pullback of '" + g.to_string() + "' is not homogeneous of degree "
                               + std::to_string(want));
    }
    return result;
}

LinearSystem pullback_system(const GradedRationalMap& map, std::span<const Monomial> basis)
{
    if (basis.empty()) throw DomainError("pullback_system needs at least one monomial");
    auto k = weighted_degree(basis.front(), map.target_weights());
    std::vector<Polynomial> pulled;
    for (const auto& m : basis) {
        if (weighted_degree(m, map.target_weights()) != k)
            throw DomainError("basis monomials have mixed weighted degrees");
        pulled.push_back(pullback(map, Polynomial::monomial(map.target_ring(), m)));
    }
    return LinearSystem(map.source(), k * map.multiplier(), std::move(pulled));
}

std::string TheoremReport::summary() const
{
    std::string out = pass ? "PASS" : "FAIL";
    out += ": rank(pullback) " + std::to_string(spans.rank_left) + ", rank(T) " + std::to_string(spans.rank_right)
           + ", rank(union) " + std::to_string(spans.rank_union) + ", basis " + std::to_string(basis_size);
    for (const auto& g : spans.left_outside_right) out += "; pullback outside T: " + g.to_string();
    for (const auto& g : spans.right_outside_left) out += "; T generator outside pullback: " + g.to_string();
    return out;
}

TheoremReport theorem_check(const PencilCubic& xi, const LinearSystem& candidate)
{
    auto eta = make_eta(xi);
    auto basis = anticanonical_basis(WeightedProjectiveSpace(eta.target_weights()));
    auto pulled = pullback_system(eta, basis);

    TheoremReport report;
    report.basis_size = basis.size();
    report.spans = compare_spans(pulled, candidate);
    report.pass = report.spans.equal && report.spans.rank_left == basis.size()
                  && report.spans.rank_right == basis.size();
    return report;
}

TheoremReport theorem_check(const PencilCubic& xi)
{
    return theorem_check(xi, build_system_T(xi));
}

} // namespace p1146
