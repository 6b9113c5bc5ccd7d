#pragma once

#include <cstdint>
#include <vector>

#include "khdetect/diagram.hpp"
#include "khdetect/laurent.hpp"

namespace khdetect {

inline constexpr int kKhDefaultMaxCrossings = 14;

enum class CoeffField { Rationals, GF2 };

struct KhOptions {
  CoeffField coeffs = CoeffField::Rationals;
  int max_crossings = kKhDefaultMaxCrossings;
};

/// Fully materialized cube of resolutions: 2^N vertices, N 2^{N-1} edges.
/// Exponential in the crossing number; intended for inspection and the
/// d∘d = 0 checks on small diagrams. kh_polynomial never builds this.
struct CubeVertex {
  std::uint32_t state = 0;
  int circles = 0;
  std::vector<int> arc_circle;
};

struct CubeEdge {
  std::uint32_t from = 0, to = 0;
  int crossing = 0;  // the flipped coordinate
  int sign = 1;      // (-1)^{number of 1-bits below the flipped coordinate}
  bool merge = false;
  // merge: source circles (src_a, src_b) -> dst_a
  // split: source circle src_a -> (dst_a, dst_b)
  int src_a = 0, src_b = 0;
  int dst_a = 0, dst_b = 0;
};

struct Cube {
  int crossings = 0;
  std::vector<CubeVertex> vertices;  // indexed by state bits
  std::vector<CubeEdge> edges;
};

Cube build_cube(const Diagram& d);

/// Bigraded Khovanov homology dimensions over the chosen field, as the
/// Khovanov polynomial: coefficient at (q-exp, t-exp) = dim KH^t_q.
/// Blocks of fixed (homological degree, q-degree) are ranked independently
/// and in parallel; throws ResourceLimitExceeded above the crossing cap.
BigradedPoly kh_polynomial(const Diagram& d, const KhOptions& opts = {});

bool equal_up_to_mirror(const BigradedPoly& a, const BigradedPoly& b);

/// Exact verification that consecutive differentials compose to zero.
bool differential_squares_to_zero(const Diagram& d);

}  // namespace khdetect
