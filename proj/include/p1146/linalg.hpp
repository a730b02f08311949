#pragma once

#include "p1146/scalar.hpp"

#include <cstddef>
#include <vector>

namespace p1146 {

using RationalRow = std::vector<Scalar>;

/// Row echelon form over the integers built by fraction-free elimination.
///
/// Incoming rational rows are scaled to primitive integer rows. A row is reduced
/// against a stored row with pivot p by row <- p*row - row[col]*stored, followed by
/// division by the content, so no fractions ever appear and entries stay small.
/// Stored rows are kept sorted by pivot column.
class FractionFreeEchelon {
public:
    explicit FractionFreeEchelon(std::size_t columns);

    std::size_t columns() const { return columns_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Adds a row; returns true when the rank grew.
    bool insert(const RationalRow& row);

    /// True when the row lies in the span of the rows inserted so far.
    bool contains(const RationalRow& row) const;

    /// Basis of {x : A x = 0}; one primitive integer vector per free column.
    std::vector<RationalRow> nullspace() const;

private:
    using IntRow = std::vector<Integer>;

    IntRow to_integer_row(const RationalRow& row) const;
    void reduce(IntRow& row) const;

    std::size_t columns_;
    std::vector<IntRow> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const std::vector<RationalRow>& rows, std::size_t columns);

std::vector<RationalRow> nullspace(const std::vector<RationalRow>& rows, std::size_t columns);

} // namespace p1146
