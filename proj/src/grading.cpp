#include "p1146/grading.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace p1146 {

WeightSystem::WeightSystem(std::vector<std::uint32_t> weights)
    : weights_(std::move(weights))
{
    if (weights_.empty()) throw DomainError("weight system must be nonempty");
    for (auto w : weights_)
        if (w == 0) throw DomainError("weights must be positive integers");
}

WeightSystem WeightSystem::parse(std::string_view text)
{
    std::vector<std::uint32_t> ws;
    while (true) {
        auto comma = text.find(',');
        auto item = text.substr(0, comma);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        std::uint32_t w = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), w);
        if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
            throw ParseError("bad weight '" + std::string(item) + "'");
        ws.push_back(w);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return WeightSystem(std::move(ws));
}

std::string WeightSystem::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(weights_[i]);
    }
    return out + ")";
}

std::uint64_t weighted_degree(const Monomial& m, const WeightSystem& ws)
{
    if (m.size() != ws.size())
        throw ArityError("monomial of length " + std::to_string(m.size()) + " against " + std::to_string(ws.size())
                         + " weights");
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += std::uint64_t{m[i]} * ws[i];
    return d;
}

Homogeneity is_homogeneous(const Polynomial& f, const WeightSystem& ws)
{
    if (f.ring()->arity() != ws.size()) throw ArityError("weight system does not match the ring arity");
    if (f.is_zero()) return Homogeneity::any();
    std::optional<std::uint64_t> deg;
    for (const auto& [m, c] : f.terms()) {
        auto d = weighted_degree(m, ws);
        if (deg && *deg != d) return Homogeneity::mixed();
        deg = d;
    }
    return Homogeneity::exact(*deg);
}

Homogeneity is_homogeneous(const Polynomial& f)
{
    return is_homogeneous(f, WeightSystem(std::vector<std::uint32_t>(f.ring()->arity(), 1)));
}

namespace {

void descend(const WeightSystem& ws, std::size_t i, std::uint64_t remaining, Monomial& current,
             std::vector<Monomial>& out)
{
    if (i + 1 == ws.size()) {
        if (remaining % ws[i] == 0) {
            current[i] = static_cast<std::uint32_t>(remaining / ws[i]);
            out.push_back(current);
        }
        current[i] = 0;
        return;
    }
    for (std::uint64_t e = remaining / ws[i] + 1; e-- > 0;) {
        current[i] = static_cast<std::uint32_t>(e);
        descend(ws, i + 1, remaining - e * ws[i], current, out);
    }
    current[i] = 0;
}

} // namespace

std::vector<Monomial> enumerate_monomials(const WeightSystem& ws, std::uint64_t d)
{
    std::vector<Monomial> out;
    Monomial current(ws.size(), 0);
    descend(ws, 0, d, current, out);
    std::sort(out.begin(), out.end(), GrlexDescending{});
    return out;
}

namespace {

std::uint64_t count(std::span<const std::uint32_t> ws, std::uint64_t d,
                    std::map<std::pair<std::size_t, std::uint64_t>, std::uint64_t>& memo)
{
    if (ws.empty()) return d == 0 ? 1 : 0;
    auto key = std::pair(ws.size(), d);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    auto last = ws.back();
    auto head = ws.first(ws.size() - 1);
    std::uint64_t total = 0;
    for (std::uint64_t j = 0; j * last <= d; ++j) total += count(head, d - j * last, memo);
    memo.emplace(key, total);
    return total;
}

} // namespace

std::uint64_t hilbert_count(const WeightSystem& ws, std::uint64_t d)
{
    std::map<std::pair<std::size_t, std::uint64_t>, std::uint64_t> memo;
    return count(ws.weights(), d, memo);
}

} // namespace p1146
