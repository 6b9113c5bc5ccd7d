#pragma once

#include <utility>
#include <vector>

#include "khdetect/diagram.hpp"
#include "khdetect/laurent.hpp"

namespace khdetect {

/// Kauffman bracket <K> = sum over all 2^N smoothings of
/// (-q)^w(n) (q+q^-1)^c(n). OpenMP kernel: disjoint state ranges are tallied
/// per thread and combined exactly.
LaurentPoly bracket(const Diagram& d);

/// Straightforward per-state accumulation, kept as the reference
/// implementation for the parallel kernel.
LaurentPoly bracket_serial(const Diagram& d);

/// (-1)^{n-} q^{n+ - 2 n-} <K>; normalized so Kh(q, -1) reproduces it.
LaurentPoly jones_unreduced(const Diagram& d);

/// jones_unreduced divided by (q + q^-1); exact for knots.
LaurentPoly jones_reduced(const Diagram& d);

/// Closed-form reduced Jones polynomial of the torus knot T(m, n),
/// 1 < m < n coprime, in the table convention (all exponents doubled
/// relative to the literal formula so that Kh(q, -1) matches).
LaurentPoly jones_torus(int m, int n);

/// Closed-form reduced Jones polynomial of the twist knot m_n, n >= 1,
/// in the same convention.
LaurentPoly jones_twist(int n);

/// Degree cap 5*N used to prune torus candidates.
int jones_degree_bound(int crossings);

/// All coprime pairs (m, n), 1 < m < n, whose closed-form degree stays
/// below jones_degree_bound(max_crossings); ascending order.
std::vector<std::pair<int, int>> enumerate_torus_candidates(int max_crossings);

/// Standard diagram patterns for the scan targets and cross-checks.
DTCode torus_2k_dt(int k);  // T(2, k) for odd k >= 3
DTCode twist_dt(int n);     // twist knot m_n, n >= 1

}  // namespace khdetect
