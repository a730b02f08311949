#include "p1146/wps.hpp"

#include <numeric>

namespace p1146 {

bool is_well_formed(const WeightSystem& ws)
{
    if (ws.size() < 2) return false;
    for (std::size_t skip = 0; skip < ws.size(); ++skip) {
        std::uint32_t g = 0;
        for (std::size_t i = 0; i < ws.size(); ++i)
            if (i != skip) g = std::gcd(g, ws[i]);
        if (g != 1) return false;
    }
    return true;
}

WeightedProjectiveSpace::WeightedProjectiveSpace(WeightSystem ws)
    : ws_(std::move(ws))
{
    if (!is_well_formed(ws_)) throw DomainError("weights " + ws_.to_string() + " are not well-formed");
}

std::uint64_t anticanonical_weight(const WeightedProjectiveSpace& P)
{
    auto w = P.weights().weights();
    return std::accumulate(w.begin(), w.end(), std::uint64_t{0});
}

Scalar anticanonical_selfintersection(const WeightedProjectiveSpace& P)
{
    Integer num = 1;
    Integer sum = static_cast<unsigned long>(anticanonical_weight(P));
    for (std::size_t i = 0; i < P.dimension(); ++i) num *= sum;
    Integer den = 1;
    for (auto w : P.weights().weights()) den *= static_cast<unsigned long>(w);
    return make_scalar(num, den);
}

std::vector<Monomial> anticanonical_basis(const WeightedProjectiveSpace& P)
{
    return enumerate_monomials(P.weights(), anticanonical_weight(P));
}

} // namespace p1146
