#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "khdetect/dt_code.hpp"

namespace khdetect {

/// Selects the 0- or 1-smoothing at each crossing; bit i belongs to
/// crossing i.
struct SmoothingState {
  std::uint32_t bits = 0;

  int weight() const { return __builtin_popcount(bits); }
  bool bit(int i) const { return (bits >> i) & 1u; }
};

struct WritheInfo {
  int w = 0;
  int n_plus = 0;
  int n_minus = 0;
};

/// A planar-realized knot diagram.
///
/// Combinatorics: 2N arcs indexed in traversal order; arc a runs from visit
/// a+1 to visit a+2 (mod 2N). Each arc has two darts (2a at its tail, 2a+1
/// at its head) and each crossing stores its four incident darts in
/// counterclockwise planar order, alternating between the two strands.
class Diagram {
 public:
  /// Planar realization of a validated DT code. Of the two mirror
  /// embeddings the first found by the deterministic search is returned.
  /// Throws NonRealizable when the sequence admits no planar diagram.
  static Diagram realize(const DTCode& d);

  int crossings() const { return n_; }
  int arcs() const { return 2 * n_; }

  /// Over/under swapped at every crossing.
  Diagram mirrored() const;

  int sign(int crossing) const;
  WritheInfo writhe() const;

  /// Number of disjoint circles in the complete smoothing `s`.
  int count_cycles(SmoothingState s) const;

  /// Arc -> circle index map for the complete smoothing `s`. Circles are
  /// numbered 0..c-1 by their smallest member arc. The 0-crossing unknot
  /// yields an empty map (one circle, no marked arcs).
  std::vector<int> cycle_partition(SmoothingState s) const;

  /// Recompute the DT code by walking the curve; realize round-trips.
  DTCode dt() const;

  /// PD notation, one X(a,b,c,d) per crossing, arcs numbered 1..2N in
  /// traversal order, starting from the incoming under-strand arc and
  /// proceeding counterclockwise.
  std::string pd() const;

  // Cube-of-resolutions plumbing: the two arc pairs joined at `crossing`
  // by the given smoothing choice.
  std::array<std::array<int, 2>, 2> smoothing_pairs(int crossing,
                                                    bool one_smoothing) const;

 private:
  Diagram() = default;

  int arc_of_dart(int dart) const { return dart / 2; }
  int dart_index_at(int crossing, int dart) const;
  int visit_in_dart(int visit) const;   // visit is 1-based
  int visit_out_dart(int visit) const;
  bool visit_is_over(int crossing, int visit) const;

  int n_ = 0;
  std::vector<std::array<int, 4>> rot_;   // CCW darts per crossing
  std::vector<int> dart_crossing_;        // dart -> crossing
  std::vector<int> odd_time_, even_time_; // 1-based visit times per crossing
  std::vector<int> over_in_dart_;         // in-dart of the over passage
};

}  // namespace khdetect
