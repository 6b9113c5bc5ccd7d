#include "khdetect/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "khdetect/errors.hpp"

namespace khdetect {

namespace {

// Strict signed-decimal integer scanner used by the canonical parser.
// Advances `pos` past the integer, throws ParseError on malformed input.
Int scan_int(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  std::size_t digits_start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos == digits_start) throw ParseError("expected integer", start);
  return Int(s.substr(start, pos - start));
}

int scan_small_int(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  Int v = scan_int(s, pos);
  if (!v.fits_sint_p()) throw ParseError("exponent out of range", start);
  return static_cast<int>(v.get_si());
}

void expect(const std::string& s, std::size_t& pos, const std::string& lit) {
  if (s.compare(pos, lit.size(), lit) != 0)
    throw ParseError("expected '" + lit + "'", pos);
  pos += lit.size();
}

// One canonical term: "c q^a t^b".
void scan_term(const std::string& s, std::size_t& pos, Int& c, int& a, int& b) {
  c = scan_int(s, pos);
  expect(s, pos, " q^");
  a = scan_small_int(s, pos);
  expect(s, pos, " t^");
  b = scan_small_int(s, pos);
}

std::string render_term(const Int& c, int a, int b) {
  std::ostringstream os;
  os << c << " q^" << a << " t^" << b;
  return os.str();
}

}  // namespace

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
  LaurentPoly p;
  p.add_term(coeff, exp);
  return p;
}

void LaurentPoly::add_term(const Int& coeff, int exp) {
  if (coeff == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Int LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const { return terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(c, e);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(-c, e);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(c1 * c2, e1 + e2);
  return r;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(k * e, c);
  return r;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw NotDivisible("division by zero polynomial");
  if (is_zero()) return LaurentPoly();
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const int d_deg = d.max_exp();
  const Int& d_lead = d.terms_.rbegin()->second;
  // Long division on leading terms. Laurent shifts cancel, so the degree of
  // the remainder drops by at least one step each round.
  while (!rem.is_zero()) {
    if (rem.max_exp() - rem.min_exp() < d_deg - d.min_exp())
      throw NotDivisible("no exact quotient");
    const Int& r_lead = rem.terms_.rbegin()->second;
    if (!mpz_divisible_p(r_lead.get_mpz_t(), d_lead.get_mpz_t()))
      throw NotDivisible("no exact quotient");
    Int q = r_lead / d_lead;
    int shift = rem.max_exp() - d_deg;
    LaurentPoly term = monomial(q, shift);
    quot = quot + term;
    rem = rem - term * d;
    if (!rem.is_zero() && rem.max_exp() >= shift + d_deg)
      throw NotDivisible("no exact quotient");
  }
  return quot;
}

std::string LaurentPoly::canonical() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += ';';
    out += render_term(c, e, 0);
  }
  return out;
}

LaurentPoly LaurentPoly::from_canonical(const std::string& s) {
  std::size_t pos = 0;
  if (s.compare(pos, 1, "0") == 0 && s.size() == 1) return LaurentPoly();
  LaurentPoly p;
  while (true) {
    Int c;
    int a, b;
    std::size_t term_start = pos;
    scan_term(s, pos, c, a, b);
    if (b != 0)
      throw ParseError("one-variable polynomial has nonzero t-exponent",
                       term_start);
    if (c == 0) throw ParseError("zero coefficient term", term_start);
    if (p.terms_.count(a)) throw ParseError("duplicate exponent", term_start);
    p.terms_.emplace(a, c);
    if (pos == s.size()) break;
    expect(s, pos, ";");
  }
  return p;
}

std::string LaurentPoly::pretty() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int abs_c = abs(c);
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (abs_c != 1 || e == 0) os << abs_c;
    if (e != 0) {
      os << 'q';
      if (e != 1) os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

BigradedPoly BigradedPoly::monomial(Int coeff, int q_exp, int t_exp) {
  BigradedPoly p;
  p.add_term(coeff, q_exp, t_exp);
  return p;
}

void BigradedPoly::add_term(const Int& coeff, int q_exp, int t_exp) {
  if (coeff == 0) return;
  auto key = std::make_pair(t_exp, q_exp);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Int BigradedPoly::coeff(int q_exp, int t_exp) const {
  auto it = terms_.find({t_exp, q_exp});
  return it == terms_.end() ? Int(0) : it->second;
}

BigradedPoly BigradedPoly::operator+(const BigradedPoly& o) const {
  BigradedPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(c, k.second, k.first);
  return r;
}

BigradedPoly BigradedPoly::mirrored() const {
  BigradedPoly r;
  for (const auto& [k, c] : terms_)
    r.terms_.emplace(std::make_pair(-k.first, -k.second), c);
  return r;
}

LaurentPoly BigradedPoly::eval_t_minus1() const {
  LaurentPoly r;
  for (const auto& [k, c] : terms_)
    r.add_term((k.first % 2 == 0) ? c : -c, k.second);
  return r;
}

std::string BigradedPoly::canonical() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += ';';
    out += render_term(c, k.second, k.first);
  }
  return out;
}

BigradedPoly BigradedPoly::from_canonical(const std::string& s) {
  std::size_t pos = 0;
  if (s.compare(pos, 1, "0") == 0 && s.size() == 1) return BigradedPoly();
  BigradedPoly p;
  while (true) {
    Int c;
    int a, b;
    std::size_t term_start = pos;
    scan_term(s, pos, c, a, b);
    if (c == 0) throw ParseError("zero coefficient term", term_start);
    if (p.terms_.count({b, a}))
      throw ParseError("duplicate exponent pair", term_start);
    p.terms_.emplace(std::make_pair(b, a), c);
    if (pos == s.size()) break;
    expect(s, pos, ";");
  }
  return p;
}

}  // namespace khdetect
