#include "khdetect/khovanov.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>

#include "khdetect/errors.hpp"
#include "khdetect/linalg.hpp"

namespace khdetect {

namespace {

// binomials up to 32 fit comfortably in 64 bits
struct Binomials {
  std::uint64_t c[33][33];
  Binomials() {
    for (int n = 0; n <= 32; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
      for (int k = n + 1; k <= 32; ++k) c[n][k] = 0;
    }
  }
};
const Binomials kBinom;

// rank of a k-subset mask among all k-subsets in ascending numeric order
// (combinatorial number system)
int comb_rank(std::uint32_t mask) {
  int rank = 0, j = 1;
  while (mask) {
    int p = __builtin_ctz(mask);
    rank += static_cast<int>(kBinom.c[p][j]);
    ++j;
    mask &= mask - 1;
  }
  return rank;
}

// Per-state smoothing data shared by every block of one computation.
struct StateTable {
  int n = 0;
  std::vector<std::vector<int>> partition;  // arc -> circle, per state
  std::vector<std::vector<int>> circle_rep; // circle -> smallest arc
  std::vector<int> circles;

  explicit StateTable(const Diagram& d) : n(d.crossings()) {
    const std::size_t total = std::size_t(1) << n;
    partition.resize(total);
    circle_rep.resize(total);
    circles.resize(total);
    for (std::size_t s = 0; s < total; ++s) {
      partition[s] = d.cycle_partition({static_cast<std::uint32_t>(s)});
      int c = 0;
      for (int v : partition[s]) c = std::max(c, v + 1);
      circles[s] = c;
      circle_rep[s].assign(c, -1);
      for (int a = 0; a < 2 * n; ++a)
        if (circle_rep[s][partition[s][a]] < 0) circle_rep[s][partition[s][a]] = a;
    }
  }
};

struct Transition {
  bool merge = false;
  int src_a = 0, src_b = 0;  // merge inputs, or src_a = the split circle
  int dst_a = 0, dst_b = 0;  // merge output dst_a, or the two split halves
  std::vector<int> src_to_dst;
};

Transition make_transition(const StateTable& t, std::uint32_t s, int i) {
  Transition tr;
  const std::uint32_t s2 = s | (std::uint32_t(1) << i);
  const auto& p1 = t.partition[s];
  const auto& p2 = t.partition[s2];
  const int c1 = t.circles[s], c2 = t.circles[s2];
  tr.src_to_dst.assign(c1, -1);
  for (int x = 0; x < c1; ++x) tr.src_to_dst[x] = p2[t.circle_rep[s][x]];
  if (c2 == c1 - 1) {
    tr.merge = true;
    std::vector<int> seen(c2, -1);
    for (int x = 0; x < c1; ++x) {
      int y = tr.src_to_dst[x];
      if (seen[y] >= 0) {
        tr.src_a = seen[y];
        tr.src_b = x;
        tr.dst_a = y;
      } else {
        seen[y] = x;
      }
    }
  } else if (c2 == c1 + 1) {
    tr.merge = false;
    std::vector<int> dst_to_src(c2);
    for (int y = 0; y < c2; ++y) dst_to_src[y] = p1[t.circle_rep[s2][y]];
    std::vector<int> hits(c1, -1);
    for (int y = 0; y < c2; ++y) {
      int x = dst_to_src[y];
      if (hits[x] >= 0) {
        tr.src_a = x;
        tr.dst_a = hits[x];
        tr.dst_b = y;
      } else {
        hits[x] = y;
      }
    }
  } else {
    throw InternalError("cube edge changes circle count by more than one");
  }
  return tr;
}

int edge_sign(std::uint32_t s, int i) {
  std::uint32_t below = s & ((std::uint32_t(1) << i) - 1);
  return __builtin_popcount(below) % 2 == 0 ? 1 : -1;
}

// Generators of one (weight, q-degree) block: states of the weight whose
// circle count admits the q-degree, with column offsets. Label convention:
// bit set = label x (degree -1), so q = (circles - 2k) + weight + shift_q.
struct BlockIndex {
  std::vector<std::uint32_t> states;
  std::vector<int> offset;
  std::vector<int> k_of_state;
  int total = 0;

  int locate(std::uint32_t state) const {
    auto it = std::lower_bound(states.begin(), states.end(), state);
    return static_cast<int>(it - states.begin());
  }
};

BlockIndex index_block(const StateTable& t,
                       const std::vector<std::uint32_t>& weight_states, int q,
                       int shift_q, int w) {
  BlockIndex b;
  for (std::uint32_t s : weight_states) {
    int c = t.circles[s];
    int num = c + w + shift_q - q;
    if (num % 2 != 0) continue;
    int k = num / 2;
    if (k < 0 || k > c) continue;
    b.states.push_back(s);
    b.offset.push_back(b.total);
    b.k_of_state.push_back(k);
    b.total += static_cast<int>(kBinom.c[c][k]);
  }
  return b;
}

// Columns of the differential leaving block (w, q). Rows are indexed by the
// (w+1, q) block.
SparseIntMatrix block_columns(const StateTable& t, const BlockIndex& src,
                              const BlockIndex& dst, int n) {
  SparseIntMatrix m;
  m.rows = dst.total;
  m.cols.resize(src.total);
  for (std::size_t si = 0; si < src.states.size(); ++si) {
    const std::uint32_t s = src.states[si];
    const int c = t.circles[s];
    const int k = src.k_of_state[si];
    // transitions for every 0-bit of s, shared by the state's generators
    std::vector<Transition> trans(n);
    std::vector<int> sign(n, 0);
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1u) continue;
      trans[i] = make_transition(t, s, i);
      sign[i] = edge_sign(s, i);
    }
    const std::uint64_t count = kBinom.c[c][k];
    std::uint32_t mask = k == 0 ? 0 : (std::uint32_t(1) << k) - 1;
    for (std::uint64_t g = 0; g < count; ++g) {
      const int col = src.offset[si] + static_cast<int>(g);
      for (int i = 0; i < n; ++i) {
        if ((s >> i) & 1u) continue;
        const Transition& tr = trans[i];
        if (tr.merge && ((mask >> tr.src_a) & 1u) && ((mask >> tr.src_b) & 1u))
          continue;  // x⊗x -> 0, and its target state may carry no generators
        const std::uint32_t s2 = s | (std::uint32_t(1) << i);
        const int dpos = dst.locate(s2);
        if (dpos == static_cast<int>(dst.states.size()) ||
            dst.states[dpos] != s2)
          throw InternalError("target block misses an image state");
        // carry untouched circle labels through the correspondence
        std::uint32_t carried = 0;
        for (int x = 0; x < c; ++x) {
          if (!((mask >> x) & 1u)) continue;
          if (tr.merge ? (x == tr.src_a || x == tr.src_b) : x == tr.src_a)
            continue;
          carried |= std::uint32_t(1) << tr.src_to_dst[x];
        }
        const int base = dst.offset[dpos];
        if (tr.merge) {
          bool xa = (mask >> tr.src_a) & 1u, xb = (mask >> tr.src_b) & 1u;
          std::uint32_t out = carried;
          if (xa || xb) out |= std::uint32_t(1) << tr.dst_a;
          m.cols[col].emplace_back(base + comb_rank(out), sign[i]);
        } else {
          bool xs = (mask >> tr.src_a) & 1u;
          if (xs) {  // x -> x⊗x
            std::uint32_t out = carried | (std::uint32_t(1) << tr.dst_a) |
                                (std::uint32_t(1) << tr.dst_b);
            m.cols[col].emplace_back(base + comb_rank(out), sign[i]);
          } else {  // 1 -> 1⊗x + x⊗1
            std::uint32_t o1 = carried | (std::uint32_t(1) << tr.dst_a);
            std::uint32_t o2 = carried | (std::uint32_t(1) << tr.dst_b);
            m.cols[col].emplace_back(base + comb_rank(o1), sign[i]);
            m.cols[col].emplace_back(base + comb_rank(o2), sign[i]);
          }
        }
      }
      // next k-subset in ascending numeric order (Gosper)
      if (mask) {
        std::uint32_t lo = mask & -mask;
        std::uint32_t up = mask + lo;
        mask = up | (((mask ^ up) >> 2) / lo);
      }
    }
  }
  for (auto& col : m.cols) std::sort(col.begin(), col.end());
  return m;
}

}  // namespace

Cube build_cube(const Diagram& d) {
  Cube cube;
  cube.crossings = d.crossings();
  const int n = cube.crossings;
  const StateTable table(d);
  const std::size_t total = std::size_t(1) << n;
  cube.vertices.resize(total);
  for (std::size_t s = 0; s < total; ++s) {
    cube.vertices[s].state = static_cast<std::uint32_t>(s);
    cube.vertices[s].circles = n == 0 ? 1 : table.circles[s];
    cube.vertices[s].arc_circle = table.partition[s];
  }
  for (std::size_t s = 0; s < total; ++s) {
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1u) continue;
      Transition tr = make_transition(table, static_cast<std::uint32_t>(s), i);
      CubeEdge e;
      e.from = static_cast<std::uint32_t>(s);
      e.to = e.from | (std::uint32_t(1) << i);
      e.crossing = i;
      e.sign = edge_sign(e.from, i);
      e.merge = tr.merge;
      e.src_a = tr.src_a;
      e.src_b = tr.src_b;
      e.dst_a = tr.dst_a;
      e.dst_b = tr.dst_b;
      cube.edges.push_back(std::move(e));
    }
  }
  return cube;
}

BigradedPoly kh_polynomial(const Diagram& d, const KhOptions& opts) {
  const int n = d.crossings();
  if (n == 0) {
    BigradedPoly unknot;
    unknot.add_term(1, -1, 0);
    unknot.add_term(1, 1, 0);
    return unknot;
  }
  constexpr int kHardCap = 24;  // state bits and partition cache both bound
  if (n > opts.max_crossings || n > kHardCap)
    throw ResourceLimitExceeded(
        "Khovanov computation needs 2^" + std::to_string(n) +
        " smoothings; the configured cap is " +
        std::to_string(std::min(opts.max_crossings, kHardCap)) +
        " crossings (set KNOT_MAX_CROSSINGS to raise it, up to " +
        std::to_string(kHardCap) + ")");

  const WritheInfo wi = d.writhe();
  const int shift_q = wi.n_plus - 2 * wi.n_minus;
  const StateTable table(d);

  std::vector<std::vector<std::uint32_t>> by_weight(n + 1);
  for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s)
    by_weight[__builtin_popcount(s)].push_back(s);

  // every nonzero (weight, q) chain block
  std::map<std::pair<int, int>, int> block_dim;
  for (int w = 0; w <= n; ++w)
    for (std::uint32_t s : by_weight[w]) {
      int c = table.circles[s];
      for (int k = 0; k <= c; ++k)
        block_dim[{w, c - 2 * k + w + shift_q}] +=
            static_cast<int>(kBinom.c[c][k]);
    }

  struct Job {
    int w, q;
    int rank = 0;
  };
  std::vector<Job> jobs;
  for (const auto& [key, dim] : block_dim) {
    if (key.first == n) continue;  // no differential leaves the top weight
    if (!block_dim.count({key.first + 1, key.second})) continue;
    jobs.push_back({key.first, key.second, 0});
  }

  const bool gf2 = opts.coeffs == CoeffField::GF2;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    BlockIndex src = index_block(table, by_weight[jobs[j].w], jobs[j].q,
                                 shift_q, jobs[j].w);
    BlockIndex dst = index_block(table, by_weight[jobs[j].w + 1], jobs[j].q,
                                 shift_q, jobs[j].w + 1);
    SparseIntMatrix m = block_columns(table, src, dst, n);
    jobs[j].rank = gf2 ? rank_gf2(m) : rank_exact(m);
  }

  std::map<std::pair<int, int>, int> rank_of;
  for (const Job& j : jobs) rank_of[{j.w, j.q}] = j.rank;

  BigradedPoly kh;
  for (const auto& [key, dim] : block_dim) {
    auto [w, q] = key;
    int out = 0, in = 0;
    if (auto it = rank_of.find({w, q}); it != rank_of.end()) out = it->second;
    if (auto it = rank_of.find({w - 1, q}); it != rank_of.end())
      in = it->second;
    int h = dim - out - in;
    if (h < 0) throw InternalError("negative homology dimension");
    if (h > 0) kh.add_term(h, q, w - wi.n_minus);
  }
  return kh;
}

bool equal_up_to_mirror(const BigradedPoly& a, const BigradedPoly& b) {
  return a == b || a == b.mirrored();
}

bool differential_squares_to_zero(const Diagram& d) {
  const int n = d.crossings();
  if (n == 0) return true;
  const WritheInfo wi = d.writhe();
  const int shift_q = wi.n_plus - 2 * wi.n_minus;
  const StateTable table(d);
  std::vector<std::vector<std::uint32_t>> by_weight(n + 1);
  for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s)
    by_weight[__builtin_popcount(s)].push_back(s);

  std::vector<int> qs;
  for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s) {
    int w = __builtin_popcount(s);
    int c = table.circles[s];
    for (int k = 0; k <= c; ++k) qs.push_back(c - 2 * k + w + shift_q);
  }
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

  for (int q : qs) {
    for (int w = 0; w + 2 <= n; ++w) {
      BlockIndex b0 = index_block(table, by_weight[w], q, shift_q, w);
      BlockIndex b1 = index_block(table, by_weight[w + 1], q, shift_q, w + 1);
      BlockIndex b2 = index_block(table, by_weight[w + 2], q, shift_q, w + 2);
      if (b0.total == 0 || b1.total == 0 || b2.total == 0) continue;
      SparseIntMatrix m1 = block_columns(table, b0, b1, n);
      SparseIntMatrix m2 = block_columns(table, b1, b2, n);
      for (int col = 0; col < m1.col_count(); ++col) {
        std::unordered_map<int, long long> acc;
        for (const auto& [mid, v1] : m1.cols[col])
          for (const auto& [row, v2] : m2.cols[mid]) acc[row] += v1 * v2;
        for (const auto& [row, v] : acc)
          if (v != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace khdetect
