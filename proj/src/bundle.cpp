#include "p1146/bundle.hpp"

#include "p1146/errors.hpp"

#include <algorithm>

namespace p1146 {

SplitBundle::SplitBundle(std::vector<std::int64_t> twists)
    : twists_(std::move(twists))
{
    if (twists_.empty()) throw DomainError("split bundle must have at least one summand");
    std::sort(twists_.begin(), twists_.end());
}

std::string SplitBundle::to_string() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < twists_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(twists_[i]);
    }
    return out + "}";
}

namespace {

void choose(const std::vector<std::int64_t>& t, std::size_t from, unsigned left, std::int64_t sum,
            std::vector<std::int64_t>& out)
{
    if (left == 0) {
        out.push_back(sum);
        return;
    }
    for (std::size_t i = from; i < t.size(); ++i) choose(t, i, left - 1, sum + t[i], out);
}

} // namespace

SplitBundle sym_power(const SplitBundle& E, unsigned m)
{
    std::vector<std::int64_t> out;
    choose(E.twists(), 0, m, 0, out);
    return SplitBundle(std::move(out));
}

SplitBundle twist(const SplitBundle& E, std::int64_t k)
{
    auto t = E.twists();
    for (auto& d : t) d += k;
    return SplitBundle(std::move(t));
}

std::uint64_t h0(const SplitBundle& E)
{
    std::uint64_t total = 0;
    for (auto d : E.twists())
        if (d >= 0) total += static_cast<std::uint64_t>(d) + 1;
    return total;
}

std::int64_t system_dim(const SplitBundle& E, const BundleSystemSpec& spec)
{
    return static_cast<std::int64_t>(h0(twist(sym_power(E, spec.a), spec.b))) - 1;
}

std::int64_t intersect(const RuledClass& c1, const RuledClass& c2)
{
    if (c1.e != c2.e) throw ArityError("classes live on different Hirzebruch surfaces");
    auto e = static_cast<std::int64_t>(c1.e);
    return -e * c1.a * c2.a + c1.a * c2.b + c1.b * c2.a;
}

} // namespace p1146
