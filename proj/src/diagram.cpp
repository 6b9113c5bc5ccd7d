#include "khdetect/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "khdetect/errors.hpp"

namespace khdetect {

namespace {

// Search-time planar map for the realization walk.
//
// Vertices: 0 is a basepoint placed on the curve ahead of the first visit,
// vertex i+1 is crossing i. Search arc 0 runs from the basepoint to visit 1,
// search arc t from visit t to visit t+1, and search arc 2N closes back to
// the basepoint; the basepoint keeps every second visit uniform (both darts
// of the first passage are present before the strand crosses it).
// Dart 2a is the tail of search arc a, dart 2a+1 its head.
struct MapState {
  std::vector<std::vector<int>> rot;  // per vertex, incident darts in CCW order
  std::vector<int> dart_vertex;
  int pen_vertex = 0;
  int pen_after = 0;  // the pen gap follows this dart in rot[pen_vertex]
};

int rot_index(const std::vector<int>& r, int dart) {
  return static_cast<int>(std::find(r.begin(), r.end(), dart) - r.begin());
}

void insert_after(std::vector<int>& r, int anchor, int dart) {
  r.insert(r.begin() + rot_index(r, anchor) + 1, dart);
}

// Walks the face containing the corner (v1, gap after a1) and reports
// whether the corner (v2, after a2) lies on it. Corner step: take the dart
// following the gap in CCW order, cross the edge, land in the gap after the
// twin dart.
bool same_face(const MapState& st, int v1, int a1, int v2, int a2) {
  if (v1 == v2 && a1 == a2) return true;
  int cv = v1, ca = a1;
  while (true) {
    const auto& r = st.rot[cv];
    int succ = r[(rot_index(r, ca) + 1) % r.size()];
    int tw = succ ^ 1;
    cv = st.dart_vertex[tw];
    ca = tw;
    if (cv == v1 && ca == a1) return false;
    if (cv == v2 && ca == a2) return true;
  }
}

class Realizer {
 public:
  explicit Realizer(const DTCode& d) : n_(d.crossings()) {
    visit_crossing_.assign(2 * n_ + 1, 0);
    for (int i = 0; i < n_; ++i) {
      visit_crossing_[2 * i + 1] = i + 1;
      visit_crossing_[std::abs(d.entries[i])] = i + 1;
    }
  }

  // Deterministic DFS over the embedding choices; the first complete planar
  // map wins, which also fixes the chirality of the result.
  bool run(MapState& out) {
    MapState st;
    st.rot.assign(n_ + 1, {});
    st.dart_vertex.assign(2 * (2 * n_ + 1), -1);
    st.rot[0] = {0};
    st.dart_vertex[0] = 0;
    int c1 = visit_crossing_[1];
    st.rot[c1] = {1};
    st.dart_vertex[1] = c1;
    st.pen_vertex = c1;
    st.pen_after = 1;
    return solve(st, 1, out);
  }

 private:
  bool solve(MapState st, int t, MapState& out) {
    for (; t <= 2 * n_; ++t) {
      const int tail = 2 * t, head = 2 * t + 1;
      const int v = st.pen_vertex;
      const int u = t < 2 * n_ ? visit_crossing_[t + 1] : 0;
      if (u != 0 && st.rot[u].empty()) {
        // first visit: a new crossing dropped inside the pen's face
        insert_after(st.rot[v], st.pen_after, tail);
        st.dart_vertex[tail] = v;
        st.rot[u] = {head};
        st.dart_vertex[head] = u;
        st.pen_vertex = u;
        st.pen_after = head;
        continue;
      }
      if (u == v) {
        // consecutive visits at one crossing: the strand immediately
        // crosses itself. Both loop chiralities stay in the pen's face.
        int in1 = st.rot[u][0];
        for (int variant = 0; variant < 2; ++variant) {
          MapState next = st;
          if (variant == 0) {
            insert_after(next.rot[u], in1, tail);
            insert_after(next.rot[u], tail, head);
            next.pen_after = in1;
          } else {
            insert_after(next.rot[u], in1, head);
            insert_after(next.rot[u], head, tail);
            next.pen_after = tail;
          }
          next.dart_vertex[tail] = u;
          next.dart_vertex[head] = u;
          next.pen_vertex = u;
          if (solve(std::move(next), t + 1, out)) return true;
        }
        return false;
      }
      // second visit (or the closing arc to the basepoint): the target gap
      // must border the pen's face; the reserved exit gap is the one
      // opposite, which keeps the four darts alternating between strands.
      const auto anchors = st.rot[u];
      for (std::size_t k = 0; k < anchors.size(); ++k) {
        if (!same_face(st, v, st.pen_after, u, anchors[k])) continue;
        MapState next = st;
        insert_after(next.rot[v], next.pen_after, tail);
        next.dart_vertex[tail] = v;
        insert_after(next.rot[u], anchors[k], head);
        next.dart_vertex[head] = u;
        next.pen_vertex = u;
        next.pen_after = anchors[(k + 1) % anchors.size()];
        if (solve(std::move(next), t + 1, out)) return true;
      }
      return false;
    }
    out = std::move(st);
    return true;
  }

  int n_;
  std::vector<int> visit_crossing_;  // 1-based visit -> vertex
};

// faces of a complete rotation system, for the post-construction check
int count_faces(const MapState& st) {
  std::vector<bool> seen(st.dart_vertex.size(), false);
  int faces = 0;
  for (std::size_t d = 0; d < st.dart_vertex.size(); ++d) {
    if (st.dart_vertex[d] < 0 || seen[d]) continue;
    ++faces;
    int cv = st.dart_vertex[d], ca = static_cast<int>(d);
    while (!seen[ca]) {
      seen[ca] = true;
      const auto& r = st.rot[cv];
      int succ = r[(rot_index(r, ca) + 1) % r.size()];
      int tw = succ ^ 1;
      cv = st.dart_vertex[tw];
      ca = tw;
    }
  }
  return faces;
}

}  // namespace

Diagram Diagram::realize(const DTCode& d) {
  validate_dt(d);
  Diagram dg;
  dg.n_ = d.crossings();
  const int n = dg.n_;
  if (n == 0) return dg;

  Realizer realizer(d);
  MapState st;
  if (!realizer.run(st))
    throw NonRealizable("DT code admits no planar diagram");
  if (count_faces(st) != n + 2)
    throw InternalError("realization produced a non-planar rotation system");

  // Translate search darts to diagram darts. Search arcs 1..2N-1 become
  // diagram arcs 0..2N-2; the basepoint subdivision (search arcs 2N and 0)
  // fuses into diagram arc 2N-1.
  auto map_dart = [n](int sd) {
    if (sd == 1) return 4 * n - 1;
    if (sd == 4 * n) return 4 * n - 2;
    return sd - 2;
  };

  dg.rot_.resize(n);
  dg.dart_crossing_.assign(4 * n, -1);
  for (int i = 0; i < n; ++i) {
    const auto& r = st.rot[i + 1];
    if (r.size() != 4)
      throw InternalError("crossing with wrong valence after realization");
    for (int k = 0; k < 4; ++k) {
      int dd = map_dart(r[k]);
      dg.rot_[i][k] = dd;
      dg.dart_crossing_[dd] = i;
    }
  }

  dg.odd_time_.resize(n);
  dg.even_time_.resize(n);
  dg.over_in_dart_.resize(n);
  for (int i = 0; i < n; ++i) {
    dg.odd_time_[i] = 2 * i + 1;
    dg.even_time_[i] = std::abs(d.entries[i]);
    int over_time = d.entries[i] < 0 ? dg.even_time_[i] : dg.odd_time_[i];
    dg.over_in_dart_[i] = dg.visit_in_dart(over_time);
  }
  return dg;
}

int Diagram::visit_in_dart(int visit) const {
  return 2 * ((visit - 2 + 2 * n_) % (2 * n_)) + 1;
}

int Diagram::visit_out_dart(int visit) const { return 2 * (visit - 1); }

bool Diagram::visit_is_over(int crossing, int visit) const {
  return visit_in_dart(visit) == over_in_dart_[crossing];
}

int Diagram::dart_index_at(int crossing, int dart) const {
  const auto& r = rot_[crossing];
  return static_cast<int>(std::find(r.begin(), r.end(), dart) - r.begin());
}

Diagram Diagram::mirrored() const {
  Diagram m = *this;
  for (int i = 0; i < n_; ++i) {
    int other =
        visit_is_over(i, odd_time_[i]) ? even_time_[i] : odd_time_[i];
    m.over_in_dart_[i] = visit_in_dart(other);
  }
  return m;
}

int Diagram::sign(int crossing) const {
  int t_over = visit_is_over(crossing, odd_time_[crossing])
                   ? odd_time_[crossing]
                   : even_time_[crossing];
  int t_under = t_over == odd_time_[crossing] ? even_time_[crossing]
                                              : odd_time_[crossing];
  int out_o = visit_out_dart(t_over);
  int out_u = visit_out_dart(t_under);
  int idx = dart_index_at(crossing, out_o);
  // positive when the under direction is a quarter turn CCW from the over
  return rot_[crossing][(idx + 1) % 4] == out_u ? 1 : -1;
}

WritheInfo Diagram::writhe() const {
  WritheInfo wi;
  for (int i = 0; i < n_; ++i) {
    if (sign(i) > 0)
      ++wi.n_plus;
    else
      ++wi.n_minus;
  }
  wi.w = wi.n_plus - wi.n_minus;
  return wi;
}

std::array<std::array<int, 2>, 2> Diagram::smoothing_pairs(
    int crossing, bool one_smoothing) const {
  int t_under = visit_is_over(crossing, odd_time_[crossing])
                    ? even_time_[crossing]
                    : odd_time_[crossing];
  int under_darts[2] = {visit_out_dart(t_under), visit_in_dart(t_under)};
  std::array<std::array<int, 2>, 2> pairs;
  for (int k = 0; k < 2; ++k) {
    int idx = dart_index_at(crossing, under_darts[k]);
    // 0-smoothing joins each under dart with its CCW successor (the under
    // strand sweeps onto the over strand); 1-smoothing uses the predecessor
    int partner = rot_[crossing][(idx + (one_smoothing ? 3 : 1)) % 4];
    pairs[k] = {arc_of_dart(under_darts[k]), arc_of_dart(partner)};
  }
  return pairs;
}

namespace {

struct ArcUnionFind {
  std::vector<int> parent;
  explicit ArcUnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

int Diagram::count_cycles(SmoothingState s) const {
  if (n_ == 0) return 1;
  ArcUnionFind uf(2 * n_);
  for (int i = 0; i < n_; ++i) {
    auto pairs = smoothing_pairs(i, s.bit(i));
    uf.unite(pairs[0][0], pairs[0][1]);
    uf.unite(pairs[1][0], pairs[1][1]);
  }
  int circles = 0;
  for (int a = 0; a < 2 * n_; ++a)
    if (uf.find(a) == a) ++circles;
  return circles;
}

std::vector<int> Diagram::cycle_partition(SmoothingState s) const {
  std::vector<int> arc_circle(2 * n_, -1);
  if (n_ == 0) return arc_circle;
  ArcUnionFind uf(2 * n_);
  for (int i = 0; i < n_; ++i) {
    auto pairs = smoothing_pairs(i, s.bit(i));
    uf.unite(pairs[0][0], pairs[0][1]);
    uf.unite(pairs[1][0], pairs[1][1]);
  }
  int next = 0;
  for (int a = 0; a < 2 * n_; ++a) {
    int root = uf.find(a);
    if (root == a)
      arc_circle[a] = next++;
    else
      arc_circle[a] = arc_circle[root];
  }
  return arc_circle;
}

DTCode Diagram::dt() const {
  DTCode d;
  d.entries.assign(n_, 0);
  if (n_ == 0) return d;
  // Walk the curve arc by arc: entering through a head dart, the strand
  // leaves through the opposite dart of the rotation.
  std::vector<int> first_label(n_, 0), second_label(n_, 0);
  for (int a = 0; a < 2 * n_; ++a) {
    int head = 2 * a + 1;
    int c = dart_crossing_[head];
    int t = a + 2 <= 2 * n_ ? a + 2 : 1;  // visit time at this arrival
    int exit = rot_[c][(dart_index_at(c, head) + 2) % 4];
    if (exit != visit_out_dart(t))
      throw InternalError("diagram traversal is inconsistent");
    if (first_label[c] == 0)
      first_label[c] = t;
    else
      second_label[c] = t;
  }
  for (int c = 0; c < n_; ++c) {
    int odd = first_label[c] % 2 == 1 ? first_label[c] : second_label[c];
    int even = first_label[c] % 2 == 0 ? first_label[c] : second_label[c];
    int idx = (odd - 1) / 2;
    d.entries[idx] = visit_is_over(c, even) ? -even : even;
  }
  validate_dt(d);
  return d;
}

std::string Diagram::pd() const {
  std::ostringstream os;
  for (int c = 0; c < n_; ++c) {
    int t_under = visit_is_over(c, odd_time_[c]) ? even_time_[c] : odd_time_[c];
    int start = dart_index_at(c, visit_in_dart(t_under));
    if (c > 0) os << ' ';
    os << 'X' << '(';
    for (int k = 0; k < 4; ++k) {
      if (k > 0) os << ',';
      os << arc_of_dart(rot_[c][(start + k) % 4]) + 1;
    }
    os << ')';
  }
  return os.str();
}

}  // namespace khdetect
