#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace khdetect {

/// Sparse integer matrix stored column-major: cols[j] lists (row, value)
/// entries sorted by row. Produced by the cube differential, consumed by the
/// exact rank routines.
struct SparseIntMatrix {
  int rows = 0;
  std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>> cols;

  int col_count() const { return static_cast<int>(cols.size()); }
};

/// Exact rank over the rationals. Fraction-free row elimination with
/// gcd-reduced rows; 64-bit fast path, arbitrary-precision fallback when an
/// intermediate overflows.
int rank_exact(const SparseIntMatrix& m);

/// Rank over the two-element field (bitset elimination).
int rank_gf2(const SparseIntMatrix& m);

}  // namespace khdetect
