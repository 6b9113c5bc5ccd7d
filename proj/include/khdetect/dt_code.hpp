#pragma once

#include <string>
#include <vector>

namespace khdetect {

/// Validated Dowker-Thistlethwaite sequence. Entry i pairs the odd label
/// 2i+1 with the signed even label entries[i]; a negative entry records that
/// the strand passes over at the even visit.
struct DTCode {
  std::vector<int> entries;

  int crossings() const { return static_cast<int>(entries.size()); }
  bool operator==(const DTCode& o) const { return entries == o.entries; }
};

/// Throws InvalidDT unless the sequence is a valid knot DT code: all entries
/// even, absolute values a permutation of {2, 4, ..., 2N}.
void validate_dt(const DTCode& d);

enum class Passage { Over, Under };

struct GaussToken {
  int crossing;  // 1..N
  Passage passage;
  bool operator==(const GaussToken& o) const {
    return crossing == o.crossing && passage == o.passage;
  }
};

/// Unsigned Gauss code: the traversal sequence of crossing visits.
struct GaussCode {
  std::vector<GaussToken> tokens;
  bool operator==(const GaussCode& o) const { return tokens == o.tokens; }
};

/// Compressed letter notation: k-th letter of the alphabet stands for the
/// even value 2k, upper case for negative. Limited to 26 crossings.
DTCode parse_dt_compressed(const std::string& s);
std::string encode_dt_compressed(const DTCode& d);

/// Comma- or whitespace-separated signed decimal integers.
DTCode parse_dt_numeric(const std::string& s);

/// Accepts either notation: pure letters parse as compressed, anything else
/// (optionally wrapped in [brackets]) as numeric.
DTCode parse_dt_any(const std::string& s);

GaussCode dt_to_gauss(const DTCode& d);
DTCode gauss_to_dt(const GaussCode& g);

/// Token syntax O<k> / U<k>, space separated.
std::string gauss_to_string(const GaussCode& g);
GaussCode gauss_from_string(const std::string& s);

}  // namespace khdetect
