#include "p1146/linalg.hpp"

#include "p1146/errors.hpp"

#include <algorithm>

namespace p1146 {

namespace {

void make_primitive(std::vector<Integer>& row)
{
    Integer g = 0;
    for (const auto& v : row) {
        if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (auto& v : row)
        if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

std::size_t leading_column(const std::vector<Integer>& row)
{
    for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c] != 0) return c;
    return row.size();
}

} // namespace

FractionFreeEchelon::FractionFreeEchelon(std::size_t columns)
    : columns_(columns)
{
}

FractionFreeEchelon::IntRow FractionFreeEchelon::to_integer_row(const RationalRow& row) const
{
    if (row.size() != columns_)
        throw ArityError("row of length " + std::to_string(row.size()) + " in a matrix with "
                         + std::to_string(columns_) + " columns");
    Integer lcm = 1;
    for (const auto& v : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    IntRow out(columns_);
    for (std::size_t c = 0; c < columns_; ++c) out[c] = row[c].get_num() * (lcm / row[c].get_den());
    make_primitive(out);
    return out;
}

void FractionFreeEchelon::reduce(IntRow& row) const
{
    // Stored rows vanish left of their pivot, so processing them in pivot order never
    // reintroduces a nonzero entry at an earlier pivot column.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        auto col = pivots_[k];
        if (row[col] == 0) continue;
        const auto& piv_row = rows_[k];
        Integer a = piv_row[col];
        Integer b = row[col];
        Integer g = gcd(a, b);
        a /= g;
        b /= g;
        for (std::size_t c = 0; c < columns_; ++c) {
            if (row[c] == 0 && piv_row[c] == 0) continue;
            row[c] = a * row[c] - b * piv_row[c];
        }
        make_primitive(row);
    }
}

bool FractionFreeEchelon::insert(const RationalRow& row)
{
    auto r = to_integer_row(row);
    reduce(r);
    auto lead = leading_column(r);
    if (lead == columns_) return false;
    if (r[lead] < 0)
        for (auto& v : r) v = -v;
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
}

bool FractionFreeEchelon::contains(const RationalRow& row) const
{
    auto r = to_integer_row(row);
    reduce(r);
    return leading_column(r) == columns_;
}

std::vector<RationalRow> FractionFreeEchelon::nullspace() const
{
    std::vector<bool> is_pivot(columns_, false);
    for (auto p : pivots_) is_pivot[p] = true;

    std::vector<RationalRow> basis;
    for (std::size_t free = 0; free < columns_; ++free) {
        if (is_pivot[free]) continue;
        RationalRow x(columns_, Scalar(0));
        x[free] = 1;
        // Back substitution from the last pivot row upwards.
        for (std::size_t k = rows_.size(); k-- > 0;) {
            const auto& r = rows_[k];
            auto col = pivots_[k];
            Scalar acc = 0;
            for (std::size_t c = col + 1; c < columns_; ++c)
                if (r[c] != 0 && x[c] != 0) acc += Scalar(r[c]) * x[c];
            x[col] = -acc / Scalar(r[col]);
        }
        Integer lcm = 1;
        for (const auto& v : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
        std::vector<Integer> ints(columns_);
        for (std::size_t c = 0; c < columns_; ++c) ints[c] = x[c].get_num() * (lcm / x[c].get_den());
        make_primitive(ints);
        for (std::size_t c = 0; c < columns_; ++c) x[c] = Scalar(ints[c]);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t rank(const std::vector<RationalRow>& rows, std::size_t columns)
{
    FractionFreeEchelon ech(columns);
    for (const auto& r : rows) ech.insert(r);
    return ech.rank();
}

std::vector<RationalRow> nullspace(const std::vector<RationalRow>& rows, std::size_t columns)
{
    FractionFreeEchelon ech(columns);
    for (const auto& r : rows) ech.insert(r);
    return ech.nullspace();
}

} // namespace p1146
