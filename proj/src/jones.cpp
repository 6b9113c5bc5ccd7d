#include "khdetect/jones.hpp"

#include <omp.h>

#include <cstdint>
#include <numeric>

#include "khdetect/errors.hpp"

namespace khdetect {

namespace {

constexpr int kMaxBracketCrossings = 28;

LaurentPoly loop_factor() {
  LaurentPoly p;
  p.add_term(1, 1);
  p.add_term(1, -1);
  return p;
}

// Arc pairs joined at each crossing for both smoothing choices, flattened
// for the state loop.
struct SmoothingTable {
  // [crossing][smoothing][pair][endpoint]
  std::vector<std::array<std::array<std::array<int, 2>, 2>, 2>> pairs;
};

SmoothingTable make_table(const Diagram& d) {
  SmoothingTable t;
  t.pairs.resize(d.crossings());
  for (int i = 0; i < d.crossings(); ++i) {
    t.pairs[i][0] = d.smoothing_pairs(i, false);
    t.pairs[i][1] = d.smoothing_pairs(i, true);
  }
  return t;
}

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

int circles_of_state(const SmoothingTable& t, int n, std::uint32_t s,
                     std::vector<int>& parent) {
  const int arcs = 2 * n;
  parent.resize(arcs);
  std::iota(parent.begin(), parent.end(), 0);
  int merges = 0;
  for (int i = 0; i < n; ++i) {
    const auto& pr = t.pairs[i][(s >> i) & 1u];
    for (int k = 0; k < 2; ++k) {
      int a = uf_find(parent, pr[k][0]);
      int b = uf_find(parent, pr[k][1]);
      if (a != b) {
        parent[a] = b;
        ++merges;
      }
    }
  }
  return arcs - merges;
}

// tally[w * (n+2) + c] = number of states with Hamming weight w and c circles
std::vector<std::uint64_t> tally_states(const Diagram& d) {
  const int n = d.crossings();
  const SmoothingTable table = make_table(d);
  const std::uint64_t total = std::uint64_t(1) << n;
  const int stride = n + 2;
  std::vector<std::uint64_t> tally((n + 1) * stride, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local((n + 1) * stride, 0);
    std::vector<int> parent;
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(total); ++s) {
      int w = __builtin_popcountll(s);
      int c = circles_of_state(table, n, static_cast<std::uint32_t>(s), parent);
      ++local[w * stride + c];
    }
#pragma omp critical
    for (std::size_t k = 0; k < tally.size(); ++k) tally[k] += local[k];
  }
  return tally;
}

LaurentPoly assemble_bracket(int n, const std::vector<std::uint64_t>& tally) {
  const int stride = n + 2;
  // powers of (q + q^-1)
  std::vector<LaurentPoly> pw(n + 2);
  pw[0] = LaurentPoly::one();
  for (int c = 1; c <= n + 1; ++c) pw[c] = pw[c - 1] * loop_factor();
  LaurentPoly out;
  for (int w = 0; w <= n; ++w) {
    for (int c = 1; c <= n + 1; ++c) {
      std::uint64_t cnt = tally[w * stride + c];
      if (!cnt) continue;
      Int factor = Int(static_cast<unsigned long>(cnt));
      if (w % 2 == 1) factor = -factor;
      for (const auto& [e, co] : pw[c].terms()) out.add_term(co * factor, e + w);
    }
  }
  return out;
}

}  // namespace

LaurentPoly bracket(const Diagram& d) {
  const int n = d.crossings();
  if (n == 0) return loop_factor();
  if (n > kMaxBracketCrossings)
    throw ResourceLimitExceeded("state sum over 2^" + std::to_string(n) +
                                " smoothings exceeds the bracket limit of 2^" +
                                std::to_string(kMaxBracketCrossings));
  return assemble_bracket(n, tally_states(d));
}

LaurentPoly bracket_serial(const Diagram& d) {
  const int n = d.crossings();
  if (n == 0) return loop_factor();
  if (n > kMaxBracketCrossings)
    throw ResourceLimitExceeded("state sum too large");
  const SmoothingTable table = make_table(d);
  std::vector<int> parent;
  LaurentPoly out;
  std::vector<LaurentPoly> pw(n + 2);
  pw[0] = LaurentPoly::one();
  for (int c = 1; c <= n + 1; ++c) pw[c] = pw[c - 1] * loop_factor();
  for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
    int w = __builtin_popcountll(s);
    int c = circles_of_state(table, n, static_cast<std::uint32_t>(s), parent);
    for (const auto& [e, co] : pw[c].terms())
      out.add_term(w % 2 == 1 ? -co : co, e + w);
  }
  return out;
}

LaurentPoly jones_unreduced(const Diagram& d) {
  WritheInfo wi = d.writhe();
  LaurentPoly br = bracket(d);
  LaurentPoly out;
  int shift = wi.n_plus - 2 * wi.n_minus;
  bool flip = wi.n_minus % 2 == 1;
  for (const auto& [e, c] : br.terms()) out.add_term(flip ? -c : c, e + shift);
  return out;
}

LaurentPoly jones_reduced(const Diagram& d) {
  return jones_unreduced(d).div_exact(loop_factor());
}

LaurentPoly jones_torus(int m, int n) {
  if (!(1 < m && m < n) || std::gcd(m, n) != 1)
    throw InvalidParameters("torus parameters must be coprime with 1 < m < n");
  LaurentPoly num;
  num.add_term(1, 0);
  num.add_term(-1, m + 1);
  num.add_term(-1, n + 1);
  num.add_term(1, m + n);
  LaurentPoly den;
  den.add_term(1, 0);
  den.add_term(-1, 2);
  LaurentPoly q = num.div_exact(den);
  LaurentPoly shifted;
  int pre = (m - 1) * (n - 1) / 2;
  for (const auto& [e, c] : q.terms()) shifted.add_term(c, e + pre);
  // exponent doubling moves the literal formula into the convention where
  // Kh(q, -1) recovers the Jones polynomial
  return shifted.substitute_power(2);
}

LaurentPoly jones_twist(int n) {
  if (n < 1) throw InvalidParameters("twist index must be >= 1");
  // In the variable t:
  //   n odd:  (1 + t^-2 + t^-n - t^{-n-3}) / (1 + t)
  //   n even: (t^3 + t - t^{3-n} + t^-n) / (1 + t)
  // Both numerators vanish at t = -1, so the division is exact; the tests
  // pin these values against the state-sum oracle on standard diagrams.
  LaurentPoly num;
  if (n % 2 == 1) {
    num.add_term(1, 0);
    num.add_term(1, -2);
    num.add_term(1, -n);
    num.add_term(-1, -n - 3);
  } else {
    num.add_term(1, 3);
    num.add_term(1, 1);
    num.add_term(-1, 3 - n);
    num.add_term(1, -n);
  }
  LaurentPoly den;
  den.add_term(1, 0);
  den.add_term(1, 1);
  // t = q^-2 lands in the same convention as the torus values
  return num.div_exact(den).substitute_power(-2);
}

int jones_degree_bound(int crossings) { return 5 * crossings; }

std::vector<std::pair<int, int>> enumerate_torus_candidates(int max_crossings) {
  if (max_crossings < 3)
    throw InvalidParameters("candidate enumeration needs max_crossings >= 3");
  const int bound = jones_degree_bound(max_crossings);
  // literal closed-form degree: (m-1)(n-1)/2 + (m+n) - 2
  auto degree = [](int m, int n) {
    return (m - 1) * (n - 1) / 2 + m + n - 2;
  };
  std::vector<std::pair<int, int>> out;
  for (int m = 2; degree(m, m + 1) < bound; ++m)
    for (int n = m + 1; degree(m, n) < bound; ++n)
      if (std::gcd(m, n) == 1) out.emplace_back(m, n);
  return out;
}

DTCode torus_2k_dt(int k) {
  if (k < 3 || k % 2 == 0)
    throw InvalidParameters("T(2,k) pattern needs odd k >= 3");
  DTCode d;
  for (int v = k + 1; v <= 2 * k; v += 2) d.entries.push_back(v);
  for (int v = 2; v <= k - 1; v += 2) d.entries.push_back(v);
  validate_dt(d);
  return d;
}

DTCode twist_dt(int n) {
  if (n < 1) throw InvalidParameters("twist index must be >= 1");
  const int cr = n + 2;
  const int k = (cr + 1) / 2;
  DTCode d;
  d.entries.push_back(4);
  d.entries.push_back(2 * k + 2);
  for (int v = 2 * cr; v >= 2 * k + 4; v -= 2) d.entries.push_back(v);
  d.entries.push_back(2);
  for (int v = 2 * k; v >= 6; v -= 2) d.entries.push_back(v);
  validate_dt(d);
  return d;
}

}  // namespace khdetect
