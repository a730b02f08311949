#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace p1146 {

/// Direct sum of line bundles O(d_1) + ... + O(d_r) on the projective line,
/// stored as the sorted multiset of twists.
class SplitBundle {
public:
    explicit SplitBundle(std::vector<std::int64_t> twists);

    const std::vector<std::int64_t>& twists() const { return twists_; }
    std::size_t rank() const { return twists_.size(); }
    std::string to_string() const;

    bool operator==(const SplitBundle&) const = default;

private:
    std::vector<std::int64_t> twists_;
};

/// Sym^m: every sum of m twists chosen with repetition. Sym^0 is the trivial bundle.
SplitBundle sym_power(const SplitBundle& E, unsigned m);
SplitBundle twist(const SplitBundle& E, std::int64_t k);

/// Global sections on the projective line: sum of max(0, d + 1).
std::uint64_t h0(const SplitBundle& E);

/// The system |a*L + b*P| on P(E), with L tautological and P a fibre.
struct BundleSystemSpec {
    std::uint32_t a = 0;
    std::int64_t b = 0;
};

/// Projective dimension h0(Sym^a(E)(b)) - 1; -1 means the system is empty.
std::int64_t system_dim(const SplitBundle& E, const BundleSystemSpec& spec);

/// The class a*E + b*F on the Hirzebruch surface F_e.
struct RuledClass {
    std::uint32_t e = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
};

/// Intersection form with E^2 = -e, E.F = 1, F^2 = 0.
std::int64_t intersect(const RuledClass& c1, const RuledClass& c2);

} // namespace p1146
