#pragma once

#include <optional>
#include <string>
#include <vector>

#include "khdetect/dt_code.hpp"
#include "khdetect/jones.hpp"
#include "khdetect/khovanov.hpp"

namespace khdetect {

struct CensusRecord {
  std::string name;
  DTCode dt;
  int crossings = 0;
};

/// Census file: one record per line, `<name> <compressed-DT or [numeric]>`;
/// '#' starts a comment, blank lines are skipped, names must be unique.
std::vector<CensusRecord> load_census(const std::string& path);
std::vector<CensusRecord> parse_census(const std::string& text);

enum class WhichInvariants { Jones, JonesAndKh };

struct InvariantRecord {
  std::string name;
  std::string dt;     // compressed when it fits, bracketed numeric otherwise
  std::string jones;  // reduced Jones, canonical form; empty when unavailable
  std::string kh;     // Khovanov polynomial, canonical form; empty when absent

  bool has_jones() const { return !jones.empty(); }
  bool has_kh() const { return !kh.empty(); }
};

struct ComputeOptions {
  WhichInvariants which = WhichInvariants::Jones;
  int kh_max_crossings = kKhDefaultMaxCrossings;
};

/// Parallel map over the census; a record whose computation exceeds the
/// resource budget is flagged (field left empty) and the batch continues.
/// Entries of `cache` matching by name and DT code are reused.
std::vector<InvariantRecord> compute_invariants(
    const std::vector<CensusRecord>& records, const ComputeOptions& opts,
    const std::vector<InvariantRecord>& cache = {});

struct ScanTarget {
  enum class Kind { Torus, Twist, Explicit };
  Kind kind = Kind::Explicit;
  std::string name;
  LaurentPoly jones;  // reduced convention
  bool has_dt = false;
  DTCode standard_dt;  // used for the Khovanov table and the same-knot hint
};

std::vector<ScanTarget> torus_targets(int max_crossings);
std::vector<ScanTarget> twist_targets(int lo, int hi);
ScanTarget explicit_target(const std::string& name, const DTCode& dt);

struct MatchFlags {
  std::string record_name;
  bool jones_equal_up_to_mirror = true;
  std::optional<bool> kh_equal_up_to_mirror;  // set only within the budget
  bool is_same_knot_hint = false;
};

struct MatchReport {
  std::string target_name;
  std::vector<MatchFlags> matches;
};

struct ScanOptions {
  bool with_kh = false;
  int kh_max_crossings = kKhDefaultMaxCrossings;
};

std::vector<MatchReport> scan_targets(const std::vector<InvariantRecord>& inv,
                                      const std::vector<ScanTarget>& targets,
                                      const ScanOptions& opts);

struct StatsRow {
  int cr = 0;
  long long unique = 0;
  long long almost = 0;
  long long total = 0;
  long long knots = 0;
  std::string frac_u, frac_t, frac_k;  // exact rationals, 6 decimals
};

enum class StatsInvariant { Jones, Kh };

/// Cumulative polynomial statistics per crossing number. Polynomials are
/// mirror-canonicalized before grouping. Throws MissingInvariant when a
/// record within range lacks the requested polynomial.
std::vector<StatsRow> stats(const std::vector<InvariantRecord>& inv,
                            StatsInvariant invariant, int max_cr);

/// Invariant DB: header line `#khdetect-v1`, then tab-separated
/// name, DT, reduced-Jones canonical, Khovanov canonical or `-`.
void persist_invariants(const std::vector<InvariantRecord>& inv,
                        const std::string& path);
std::vector<InvariantRecord> load_invariants(const std::string& path);

/// Lexicographically smaller of the canonical forms of p and its mirror.
std::string mirror_canonical(const LaurentPoly& p);
std::string mirror_canonical(const BigradedPoly& p);

/// Compressed DT when possible, bracketed numeric DT otherwise.
std::string dt_string(const DTCode& d);

/// Traversal-invariant key of the diagram shadow (all basepoints, both
/// directions, both chiralities); equal keys back the same-knot hint.
std::string shadow_key(const DTCode& d);

}  // namespace khdetect
