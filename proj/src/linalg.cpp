#include "khdetect/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace khdetect {

namespace {

struct Overflow {};

inline std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Overflow{};
  return static_cast<std::int64_t>(v);
}

// Coefficient adaptors so one elimination routine serves both the 64-bit
// fast path and the arbitrary-precision fallback.
struct I64 {
  using value = std::int64_t;
  static value neg(const value& a) { return checked(-__int128(a)); }
  static bool is_unit(const value& a) { return a == 1 || a == -1; }
  static value mul(const value& a, const value& b) {
    return checked(__int128(a) * b);
  }
  static value mulsub(const value& p, const value& a, const value& v,
                      const value& b) {
    // p*a - v*b
    return checked(__int128(p) * a - __int128(v) * b);
  }
  static bool divides(const value& d, const value& a) { return a % d == 0; }
  static value div(const value& a, const value& d) { return a / d; }
  static value gcd(const value& a, const value& b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
  }
};

struct Mpz {
  using value = mpz_class;
  static value neg(const value& a) { return -a; }
  static bool is_unit(const value& a) { return a == 1 || a == -1; }
  static value mul(const value& a, const value& b) { return a * b; }
  static value mulsub(const value& p, const value& a, const value& v,
                      const value& b) {
    return p * a - v * b;
  }
  static bool divides(const value& d, const value& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t());
  }
  static value div(const value& a, const value& d) { return a / d; }
  static value gcd(const value& a, const value& b) {
    value g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
};

template <typename F>
using Row = std::vector<std::pair<std::int32_t, typename F::value>>;

template <typename F>
void reduce_content(Row<F>& r) {
  if (r.empty()) return;
  typename F::value g = r[0].second < 0 ? F::neg(r[0].second) : r[0].second;
  for (std::size_t i = 1; i < r.size() && !F::is_unit(g); ++i)
    g = F::gcd(g, r[i].second);
  if (F::is_unit(g)) return;
  for (auto& e : r) e.second = F::div(e.second, g);
}

// out = (p * a - v * b), content-reduced; entries merged by column.
template <typename F>
Row<F> combine(const Row<F>& a, const Row<F>& b, const typename F::value& p,
               const typename F::value& v) {
  Row<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const bool unit_p = F::is_unit(p);
  const typename F::value zero{};
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.emplace_back(a[i].first, unit_p && p == 1 ? a[i].second
                                                    : F::mul(p, a[i].second));
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, F::neg(F::mul(v, b[j].second)));
      ++j;
    } else {
      typename F::value val = F::mulsub(p, a[i].second, v, b[j].second);
      if (!(val == zero)) out.emplace_back(a[i].first, std::move(val));
      ++i;
      ++j;
    }
  }
  reduce_content<F>(out);
  return out;
}

// Incremental echelon insertion: reduce each row against the recorded
// pivots; a surviving row contributes one to the rank and is kept as the
// pivot of its leading column.
template <typename F>
int rank_rows(std::vector<Row<F>> rows) {
  std::unordered_map<std::int32_t, Row<F>> pivot_of_col;
  pivot_of_col.reserve(rows.size() * 2);
  // Short rows first keeps the pivot set sparse.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row<F>& a, const Row<F>& b) {
                     return a.size() < b.size();
                   });
  int rank = 0;
  for (auto& row : rows) {
    Row<F> r = std::move(row);
    while (!r.empty()) {
      auto it = pivot_of_col.find(r[0].first);
      if (it == pivot_of_col.end()) {
        reduce_content<F>(r);
        pivot_of_col.emplace(r[0].first, std::move(r));
        ++rank;
        break;
      }
      const Row<F>& p = it->second;
      // leading entries: p has value pv at the shared column, r has rv
      const auto& pv = p[0].second;
      const auto& rv = r[0].second;
      if (F::divides(pv, rv))
        r = combine<F>(r, p, typename F::value{1}, F::div(rv, pv));
      else
        r = combine<F>(r, p, pv, rv);
    }
  }
  return rank;
}

template <typename F>
std::vector<Row<F>> to_rows(const SparseIntMatrix& m) {
  std::vector<std::size_t> count(m.rows, 0);
  for (const auto& col : m.cols)
    for (const auto& [r, v] : col) ++count[r];
  std::vector<Row<F>> rows(m.rows);
  for (int r = 0; r < m.rows; ++r) rows[r].reserve(count[r]);
  for (std::size_t j = 0; j < m.cols.size(); ++j)
    for (const auto& [r, v] : m.cols[j])
      rows[r].emplace_back(static_cast<std::int32_t>(j),
                           typename F::value(v));
  return rows;
}

}  // namespace

int rank_exact(const SparseIntMatrix& m) {
  try {
    return rank_rows<I64>(to_rows<I64>(m));
  } catch (const Overflow&) {
    return rank_rows<Mpz>(to_rows<Mpz>(m));
  }
}

int rank_gf2(const SparseIntMatrix& m) {
  const int words = (m.col_count() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(m.rows,
                                               std::vector<std::uint64_t>());
  for (int r = 0; r < m.rows; ++r) rows[r].assign(words, 0);
  for (std::size_t j = 0; j < m.cols.size(); ++j)
    for (const auto& [r, v] : m.cols[j])
      if (v % 2 != 0) rows[r][j / 64] ^= std::uint64_t(1) << (j % 64);

  std::vector<int> pivot_row_of_col(m.col_count(), -1);
  int rank = 0;
  for (int r = 0; r < m.rows; ++r) {
    int lead;
    while ((lead = [&] {
             for (int w = 0; w < words; ++w)
               if (rows[r][w])
                 return w * 64 + __builtin_ctzll(rows[r][w]);
             return -1;
           }()) >= 0) {
      int pr = pivot_row_of_col[lead];
      if (pr < 0) {
        pivot_row_of_col[lead] = r;
        ++rank;
        break;
      }
      for (int w = 0; w < words; ++w) rows[r][w] ^= rows[pr][w];
    }
  }
  return rank;
}

}  // namespace khdetect
