#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace khdetect {

// Coefficients are arbitrary-precision integers throughout; machine words
// silently overflow on large state sums and elimination intermediates.
using Int = mpz_class;

/// Exact one-variable Laurent polynomial over the integers.
/// Stored sparsely as exponent -> coefficient; no zero coefficient is kept,
/// so the empty map is the zero polynomial. Immutable in spirit: all
/// operations return new values.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(Int coeff, int exp);
  /// The polynomial q^exp.
  static LaurentPoly q_power(int exp) { return monomial(1, exp); }
  static LaurentPoly one() { return monomial(1, 0); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Int>& terms() const { return terms_; }
  Int coeff(int exp) const;
  int min_exp() const;  // pre: nonzero
  int max_exp() const;  // pre: nonzero

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  /// q -> q^{-1}: every exponent negated.
  LaurentPoly mirrored() const;

  /// q -> q^k (exponent scaling). Used to move between variable conventions.
  LaurentPoly substitute_power(int k) const;

  /// Exact quotient; throws NotDivisible when none exists.
  LaurentPoly div_exact(const LaurentPoly& d) const;

  /// Canonical text form shared with BigradedPoly: terms sorted by
  /// (t-exp, q-exp) ascending, each rendered "c q^a t^b"; one-variable
  /// polynomials carry t^0. Zero renders as "0".
  std::string canonical() const;
  static LaurentPoly from_canonical(const std::string& s);

  /// Human-readable form, highest exponent first (the way tables print it).
  std::string pretty() const;

  void add_term(const Int& coeff, int exp);  // builder; prunes zeros

 private:
  std::map<int, Int> terms_;
};

/// Exact two-variable (q, t) Laurent polynomial with integer coefficients.
/// Khovanov dimension tables live here: coefficient at (q, t) = dim KH^t_q.
class BigradedPoly {
 public:
  BigradedPoly() = default;

  static BigradedPoly monomial(Int coeff, int q_exp, int t_exp);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, Int>& terms() const { return terms_; }
  Int coeff(int q_exp, int t_exp) const;

  BigradedPoly operator+(const BigradedPoly& o) const;
  bool operator==(const BigradedPoly& o) const { return terms_ == o.terms_; }

  /// (q, t) -> (q^{-1}, t^{-1}).
  BigradedPoly mirrored() const;

  /// Evaluate t = -1, collecting per q-exponent: the graded Euler
  /// characteristic Kh(q, -1).
  LaurentPoly eval_t_minus1() const;

  std::string canonical() const;
  static BigradedPoly from_canonical(const std::string& s);

  void add_term(const Int& coeff, int q_exp, int t_exp);

 private:
  // key = (t-exp, q-exp) so map order matches the canonical term order
  std::map<std::pair<int, int>, Int> terms_;
};

}  // namespace khdetect
