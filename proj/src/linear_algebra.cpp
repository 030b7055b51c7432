#include "krull/linear_algebra.hpp"

#include "krull/errors.hpp"

namespace krull {

std::vector<RationalVector> row_echelon(std::vector<RationalVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t width = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != width) throw DomainError("row_echelon: ragged rows");
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
    std::size_t found = rows.size();
    for (std::size_t r = pivot_row; r < rows.size(); ++r) {
      if (!rows[r][col].is_zero()) {
        found = r;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    const Rational inv = rows[pivot_row][col].inverse();
    for (std::size_t c = col; c < width; ++c) rows[pivot_row][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < width; ++c) rows[r][c] -= factor * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::size_t rank(const std::vector<RationalVector>& rows) { return row_echelon(rows).size(); }

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b) {
  const std::size_t ra = rank(a);
  if (ra != rank(b)) return false;
  std::vector<RationalVector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank(both) == ra;
}

}  // namespace krull
