#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "khdetect/diagram.hpp"
#include "khdetect/dt_code.hpp"
#include "khdetect/errors.hpp"

using namespace khdetect;

namespace {

// ---------------------------------------------------------------------
// Independent planarity oracle. A DT shadow is realizable iff one of the
// 2^N transversal rotation assignments has Euler characteristic 2, i.e.
// exactly N + 2 faces. Shares nothing with Diagram::realize.
// ---------------------------------------------------------------------

struct Shadow {
  int n;
  // per crossing: the in/out diagram darts of its two passages
  std::vector<std::array<int, 4>> passage_darts;  // inA outA inB outB
  std::vector<int> dart_crossing;
};

Shadow make_shadow(const DTCode& d) {
  Shadow sh;
  sh.n = d.crossings();
  std::vector<int> visit_crossing(2 * sh.n + 1, 0);
  for (int i = 0; i < sh.n; ++i) {
    visit_crossing[2 * i + 1] = i;
    visit_crossing[std::abs(d.entries[i])] = i;
  }
  auto in_dart = [&](int t) { return 2 * ((t - 2 + 2 * sh.n) % (2 * sh.n)) + 1; };
  auto out_dart = [&](int t) { return 2 * (t - 1); };
  sh.passage_darts.resize(sh.n);
  sh.dart_crossing.assign(4 * sh.n, -1);
  for (int i = 0; i < sh.n; ++i) {
    int odd = 2 * i + 1, even = std::abs(d.entries[i]);
    sh.passage_darts[i] = {in_dart(odd), out_dart(odd), in_dart(even),
                           out_dart(even)};
    for (int dd : sh.passage_darts[i]) sh.dart_crossing[dd] = i;
  }
  return sh;
}

bool brute_realizable(const DTCode& d) {
  Shadow sh = make_shadow(d);
  const int n = sh.n;
  if (n == 0) return true;
  std::vector<std::array<int, 4>> rot(n);
  for (std::uint32_t assign = 0; assign < (std::uint32_t(1) << n); ++assign) {
    for (int i = 0; i < n; ++i) {
      auto [ia, oa, ib, ob] = sh.passage_darts[i];
      if ((assign >> i) & 1u)
        rot[i] = {ia, ib, oa, ob};
      else
        rot[i] = {ia, ob, oa, ib};
    }
    // count face orbits of dart -> rotation-successor of its twin
    std::vector<int> pos(4 * n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < 4; ++k) pos[rot[i][k]] = k;
    std::vector<bool> seen(4 * n, false);
    int faces = 0;
    for (int s = 0; s < 4 * n; ++s) {
      if (seen[s]) continue;
      ++faces;
      int dct = s;
      while (!seen[dct]) {
        seen[dct] = true;
        int tw = dct ^ 1;
        dct = rot[sh.dart_crossing[tw]][(pos[tw] + 1) % 4];
      }
    }
    if (faces == n + 2) return true;
  }
  return false;
}

// ---------------------------------------------------------------------
// Independent circle tracer, re-imported from the PD string. PD tuples
// list the four arcs counterclockwise from the incoming under arc, so the
// under strand occupies positions 0 and 2. The 0-smoothing joins each
// under position to its CCW successor: pairs (0,1) and (2,3); the
// 1-smoothing pairs (1,2) and (3,0). Circles are traced by walking dart
// slots, never union-find.
// ---------------------------------------------------------------------

struct PdDiagram {
  int n = 0;
  // slot id = 4 * crossing + position; arc_of[slot] = arc label
  std::vector<int> arc_of;
  std::vector<std::array<int, 2>> slots_of_arc;  // per arc label (1-based)
};

PdDiagram parse_pd(const std::string& pd, int n) {
  PdDiagram p;
  p.n = n;
  p.arc_of.assign(4 * n, 0);
  p.slots_of_arc.assign(2 * n + 1, {-1, -1});
  std::istringstream is(pd);
  std::string tuple;
  int crossing = 0;
  while (is >> tuple) {
    REQUIRE(tuple.substr(0, 2) == "X(");
    REQUIRE(tuple.back() == ')');
    std::istringstream ts(tuple.substr(2, tuple.size() - 3));
    std::string num;
    int pos = 0;
    while (std::getline(ts, num, ',')) {
      int arc = std::stoi(num);
      int slot = 4 * crossing + pos;
      p.arc_of[slot] = arc;
      if (p.slots_of_arc[arc][0] < 0)
        p.slots_of_arc[arc][0] = slot;
      else
        p.slots_of_arc[arc][1] = slot;
      ++pos;
    }
    REQUIRE(pos == 4);
    ++crossing;
  }
  REQUIRE(crossing == n);
  return p;
}

int traced_cycles(const PdDiagram& p, std::uint32_t state) {
  const int n = p.n;
  if (n == 0) return 1;
  auto partner = [&](int slot) {
    int c = slot / 4, pos = slot % 4;
    static const int pair0[4] = {1, 0, 3, 2};  // (0,1)(2,3)
    static const int pair1[4] = {3, 2, 1, 0};  // (1,2)(3,0)
    int q = ((state >> c) & 1u) ? pair1[pos] : pair0[pos];
    return 4 * c + q;
  };
  auto across = [&](int slot) {
    const auto& s = p.slots_of_arc[p.arc_of[slot]];
    return s[0] == slot ? s[1] : s[0];
  };
  std::vector<bool> seen(4 * n, false);
  int orbits = 0;
  for (int s0 = 0; s0 < 4 * n; ++s0) {
    if (seen[s0]) continue;
    ++orbits;
    int s = s0;
    while (!seen[s]) {
      seen[s] = true;
      s = partner(across(s));
    }
  }
  REQUIRE(orbits % 2 == 0);
  return orbits / 2;
}

}  // namespace

TEST_CASE("unknot diagram") {
  Diagram d = Diagram::realize(DTCode{});
  CHECK(d.crossings() == 0);
  WritheInfo wi = d.writhe();
  CHECK(wi.w == 0);
  CHECK(wi.n_plus == 0);
  CHECK(wi.n_minus == 0);
  CHECK(d.count_cycles({0}) == 1);
  CHECK(d.cycle_partition({0}).empty());
  CHECK(d.pd().empty());
  CHECK(d.dt() == DTCode{});
}

TEST_CASE("kink") {
  for (int e : {2, -2}) {
    Diagram d = Diagram::realize(DTCode{{e}});
    CAPTURE(e);
    CHECK(d.crossings() == 1);
    WritheInfo wi = d.writhe();
    CHECK(std::abs(wi.w) == 1);
    CHECK(wi.n_plus + wi.n_minus == 1);
    int c0 = d.count_cycles({0}), c1 = d.count_cycles({1});
    CHECK(std::abs(c0 - c1) == 1);
    CHECK(std::min(c0, c1) == 1);
    CHECK(std::max(c0, c1) == 2);
    CHECK(d.dt() == DTCode{{e}});
    Diagram m = d.mirrored();
    CHECK(m.writhe().w == -wi.w);
    CHECK(m.sign(0) == -d.sign(0));
  }
}

TEST_CASE("trefoil") {
  Diagram d = Diagram::realize(DTCode{{4, 6, 2}});
  WritheInfo wi = d.writhe();
  CHECK(std::abs(wi.w) == 3);
  CHECK((wi.n_plus == 3 || wi.n_minus == 3));
  CHECK(d.dt() == DTCode{{4, 6, 2}});
  Diagram m = d.mirrored();
  CHECK(m.writhe().n_plus == wi.n_minus);
  CHECK(m.writhe().n_minus == wi.n_plus);
  // double mirror restores every sign
  Diagram mm = m.mirrored();
  for (int i = 0; i < 3; ++i) CHECK(mm.sign(i) == d.sign(i));
  CHECK(mm.dt() == d.dt());
}

TEST_CASE("mirror relabels smoothings") {
  for (const char* code : {"bca", "dciaFHjEbg", "eikGbHJCaFd"}) {
    Diagram d = Diagram::realize(parse_dt_compressed(code));
    Diagram m = d.mirrored();
    std::mt19937 rng(31);
    const std::uint32_t all = (std::uint32_t(1) << d.crossings()) - 1;
    for (int i = 0; i < 50; ++i) {
      std::uint32_t s = rng() & all;
      CHECK(m.count_cycles({s}) == d.count_cycles({s ^ all}));
    }
  }
}

TEST_CASE("cycle counts match the PD-reimport tracer") {
  // trefoil: all 8 states
  {
    Diagram d = Diagram::realize(DTCode{{4, 6, 2}});
    PdDiagram p = parse_pd(d.pd(), 3);
    for (std::uint32_t s = 0; s < 8; ++s)
      CHECK(d.count_cycles({s}) == traced_cycles(p, s));
  }
  std::mt19937 rng(4242);
  for (const char* code : {"dciaFHjEbg", "eikGbHJCaFd", "hGJaMlCdEKBfI"}) {
    Diagram d = Diagram::realize(parse_dt_compressed(code));
    PdDiagram p = parse_pd(d.pd(), d.crossings());
    const std::uint32_t all = (std::uint32_t(1) << d.crossings()) - 1;
    for (int t = 0; t < 200; ++t) {
      std::uint32_t s = rng() & all;
      CHECK(d.count_cycles({s}) == traced_cycles(p, s));
    }
  }
}

TEST_CASE("cycle counts match the flip-by-one property") {
  std::mt19937 rng(77);
  for (const char* code : {"bca", "dciaFHjEbg", "cefIgbajkDh"}) {
    Diagram d = Diagram::realize(parse_dt_compressed(code));
    const int n = d.crossings();
    const std::uint32_t all = (std::uint32_t(1) << n) - 1;
    for (int t = 0; t < 40; ++t) {
      std::uint32_t s = rng() & all;
      int c = d.count_cycles({s});
      CHECK(c >= 1);
      CHECK(c <= n + 1);
      for (int i = 0; i < n; ++i) {
        int c2 = d.count_cycles({s ^ (std::uint32_t(1) << i)});
        CHECK(std::abs(c - c2) == 1);
      }
    }
  }
}

TEST_CASE("cycle partition refines the count") {
  std::mt19937 rng(13);
  Diagram d = Diagram::realize(parse_dt_compressed("dciaFHjEbg"));
  const std::uint32_t all = (std::uint32_t(1) << d.crossings()) - 1;
  for (int t = 0; t < 100; ++t) {
    SmoothingState s{static_cast<std::uint32_t>(rng() & all)};
    std::vector<int> part = d.cycle_partition(s);
    CHECK(static_cast<int>(part.size()) == d.arcs());
    int classes = *std::max_element(part.begin(), part.end()) + 1;
    CHECK(classes == d.count_cycles(s));
    // circles are numbered by smallest member arc
    std::vector<int> first_seen;
    for (int v : part)
      if (v == static_cast<int>(first_seen.size())) first_seen.push_back(v);
    CHECK(static_cast<int>(first_seen.size()) == classes);
  }
}

TEST_CASE("non-realizable sequences are rejected") {
  // valid permutations of {2,...,2N} with no planar diagram
  CHECK_THROWS_AS(Diagram::realize(DTCode{{4, 6, 8, 10, 2}}), NonRealizable);
  CHECK_THROWS_AS(Diagram::realize(DTCode{{4, 8, 2, 10, 6}}), NonRealizable);
  CHECK_THROWS_AS(Diagram::realize(DTCode{{2, 6, 8, 10, 12, 4}}),
                  NonRealizable);
  CHECK(!brute_realizable(DTCode{{4, 6, 8, 10, 2}}));
}

TEST_CASE("realization agrees with the brute-force planarity oracle") {
  // exhaustive at 4 and 5 crossings, sampled at 6
  std::vector<int> evens4 = {2, 4, 6, 8};
  int nonrealizable = 0, realizable = 0;
  std::vector<int> perm = evens4;
  std::sort(perm.begin(), perm.end());
  do {
    DTCode d;
    d.entries = perm;
    bool expected = brute_realizable(d);
    bool got = true;
    try {
      Diagram dg = Diagram::realize(d);
      CHECK(dg.dt() == d);
    } catch (const NonRealizable&) {
      got = false;
    }
    CAPTURE(perm);
    CHECK(got == expected);
    (expected ? realizable : nonrealizable)++;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(realizable > 0);

  std::vector<int> perm5 = {2, 4, 6, 8, 10};
  std::mt19937 rng(1);
  do {
    DTCode d;
    d.entries = perm5;
    // random signs exercise the over/under-blindness of realizability
    for (int& e : d.entries)
      if (rng() & 1u) e = -e;
    bool expected = brute_realizable(d);
    bool got = true;
    try {
      Diagram dg = Diagram::realize(d);
      CHECK(dg.dt() == d);
    } catch (const NonRealizable&) {
      got = false;
    }
    CAPTURE(perm5);
    CHECK(got == expected);
    (expected ? realizable : nonrealizable)++;
  } while (std::next_permutation(perm5.begin(), perm5.end()));

  std::vector<int> perm6 = {2, 4, 6, 8, 10, 12};
  for (int t = 0; t < 1500; ++t) {
    std::shuffle(perm6.begin(), perm6.end(), rng);
    DTCode d;
    d.entries = perm6;
    bool expected = brute_realizable(d);
    bool got = true;
    try {
      Diagram dg = Diagram::realize(d);
      CHECK(dg.dt() == d);
    } catch (const NonRealizable&) {
      got = false;
    }
    CHECK(got == expected);
    (expected ? realizable : nonrealizable)++;
  }
  // valid-but-unrealizable sequences exist in this range
  CHECK(nonrealizable > 0);
}

TEST_CASE("census codes realize and round-trip") {
  for (const char* code :
       {"bca", "dciaFHjEbg", "fJGkHlICEABd", "gHlImJnKBDFAce",
        "iNHlPJqCoKFmdABgE", "eikGbHJCaFd", "dgikFHaEjbc", "gfJKHlaIEBCD",
        "hGJaMlCdEKBfI", "bhDGijCkaef", "cefIgbajkDh", "femIbaJKLCGHd",
        "jpIFNMrClqOhkEDabg", "cgjFHIaDEkb", "knIHoBjCDQrMPaeLgF",
        "jopIFMrDlqNhkEabcg", "glfoJcbKMNDaHIe", "hknEGmDbJLaIfc",
        "gKHlmIdJCEABf", "ehkjmGIaFlcbd", "hgelkIbaJFcd", "gfkHlbjIDaec",
        "gnoqKDjIMrpEaHblfc", "lFKJIOAEnDCpBhmG", "eHPNqGJlBFoiaDCkM",
        "edjkaGIlFbch", "igDKHJaEbFC", "eoHKqGJnCFmPDibaL",
        "kNJIpHLFECoMGABd", "hOqrljsnMeipFAgkbcd"}) {
    CAPTURE(code);
    DTCode d = parse_dt_compressed(code);
    Diagram dg = Diagram::realize(d);
    CHECK(dg.dt() == d);
    WritheInfo wi = dg.writhe();
    CHECK(wi.n_plus + wi.n_minus == d.crossings());
    CHECK(wi.w == wi.n_plus - wi.n_minus);
  }
}

TEST_CASE("pd structure") {
  Diagram d = Diagram::realize(DTCode{{4, 6, 2}});
  std::string pd = d.pd();
  CAPTURE(pd);
  // every arc label 1..2N appears exactly twice
  std::map<int, int> seen;
  std::istringstream is(pd);
  std::string tuple;
  int tuples = 0;
  while (is >> tuple) {
    ++tuples;
    REQUIRE(tuple.substr(0, 2) == "X(");
    REQUIRE(tuple.back() == ')');
    std::istringstream ts(tuple.substr(2, tuple.size() - 3));
    std::string num;
    int fields = 0;
    while (std::getline(ts, num, ',')) {
      ++seen[std::stoi(num)];
      ++fields;
    }
    CHECK(fields == 4);
  }
  CHECK(tuples == 3);
  for (int a = 1; a <= 6; ++a) CHECK(seen[a] == 2);
}
