#pragma once

#include <vector>

#include "krull/rational.hpp"

namespace krull {

using RationalVector = std::vector<Rational>;

/// Row echelon form by exact Gaussian elimination. Pivot order: leftmost
/// column holding a nonzero entry among the remaining rows, and within that
/// column the lowest row index. Zero rows are dropped.
std::vector<RationalVector> row_echelon(std::vector<RationalVector> rows);

/// Rank over Q of the span of `rows` (all of equal length).
std::size_t rank(const std::vector<RationalVector>& rows);

/// True iff the two families span the same Q-subspace.
bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b);

}  // namespace krull
