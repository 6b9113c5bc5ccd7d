#include "khdetect/dt_code.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "khdetect/errors.hpp"

namespace khdetect {

void validate_dt(const DTCode& d) {
  const int n = d.crossings();
  std::vector<bool> seen(n + 1, false);
  for (int e : d.entries) {
    if (e == 0 || e % 2 != 0)
      throw InvalidDT("DT entry " + std::to_string(e) + " is not even");
    int a = std::abs(e);
    if (a > 2 * n)
      throw InvalidDT("DT entry " + std::to_string(e) + " out of range");
    if (seen[a / 2])
      throw InvalidDT("DT entry " + std::to_string(e) + " repeated");
    seen[a / 2] = true;
  }
  // all even labels hit exactly once => the odd/even pairing covers 1..2N
}

DTCode parse_dt_compressed(const std::string& s) {
  DTCode d;
  d.entries.reserve(s.size());
  for (char c : s) {
    if (c >= 'a' && c <= 'z')
      d.entries.push_back(2 * (c - 'a' + 1));
    else if (c >= 'A' && c <= 'Z')
      d.entries.push_back(-2 * (c - 'A' + 1));
    else
      throw InvalidCharacter(std::string("invalid character '") + c +
                             "' in compressed DT code");
  }
  validate_dt(d);
  return d;
}

std::string encode_dt_compressed(const DTCode& d) {
  if (d.crossings() > 26)
    throw TooManyCrossings("compressed notation supports at most 26 crossings");
  std::string s;
  for (int e : d.entries) {
    int k = std::abs(e) / 2;
    s += static_cast<char>((e > 0 ? 'a' : 'A') + k - 1);
  }
  return s;
}

DTCode parse_dt_numeric(const std::string& s) {
  DTCode d;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == ',') {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    if (s[pos] == '-' || s[pos] == '+') ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits) throw ParseError("expected integer in DT code", start);
    d.entries.push_back(std::atoi(s.substr(start, pos - start).c_str()));
  }
  validate_dt(d);
  return d;
}

DTCode parse_dt_any(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '[' && body.back() == ']')
    body = body.substr(1, body.size() - 2);
  // any letter marks the compressed notation; numeric codes are digits,
  // signs and separators only
  bool letters = body.empty();
  for (char c : body)
    if (std::isalpha(static_cast<unsigned char>(c))) letters = true;
  return letters ? parse_dt_compressed(body) : parse_dt_numeric(body);
}

GaussCode dt_to_gauss(const DTCode& d) {
  const int n = d.crossings();
  GaussCode g;
  g.tokens.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    int e = d.entries[i];
    // odd visit 2i+1; the even visit carries Over exactly when e < 0
    Passage even_passage = e < 0 ? Passage::Over : Passage::Under;
    Passage odd_passage = e < 0 ? Passage::Under : Passage::Over;
    g.tokens[2 * i] = {i + 1, odd_passage};
    g.tokens[std::abs(e) - 1] = {i + 1, even_passage};
  }
  return g;
}

DTCode gauss_to_dt(const GaussCode& g) {
  const int len = static_cast<int>(g.tokens.size());
  if (len % 2 != 0) throw InvalidGauss("odd number of Gauss tokens");
  const int n = len / 2;
  // first/second position of each crossing id, 1-based
  std::vector<int> first(n + 1, 0), second(n + 1, 0);
  for (int pos = 1; pos <= len; ++pos) {
    int id = g.tokens[pos - 1].crossing;
    if (id < 1 || id > n)
      throw InvalidGauss("crossing id " + std::to_string(id) + " out of range");
    if (first[id] == 0)
      first[id] = pos;
    else if (second[id] == 0)
      second[id] = pos;
    else
      throw InvalidGauss("crossing id " + std::to_string(id) +
                         " appears more than twice");
  }
  DTCode d;
  d.entries.assign(n, 0);
  for (int id = 1; id <= n; ++id) {
    if (second[id] == 0)
      throw InvalidGauss("crossing id " + std::to_string(id) +
                         " appears fewer than twice");
    if (g.tokens[first[id] - 1].passage == g.tokens[second[id] - 1].passage)
      throw InvalidGauss("crossing id " + std::to_string(id) +
                         " is not visited once over and once under");
    int odd = first[id] % 2 == 1 ? first[id] : second[id];
    int even = first[id] % 2 == 0 ? first[id] : second[id];
    if (odd % 2 != 1 || even % 2 != 0)
      throw InvalidGauss("crossing id " + std::to_string(id) +
                         " lacks an odd/even visit pair");
    bool even_over = g.tokens[even - 1].passage == Passage::Over;
    d.entries[(odd - 1) / 2] = even_over ? -even : even;
  }
  validate_dt(d);
  return d;
}

std::string gauss_to_string(const GaussCode& g) {
  std::string s;
  for (const auto& tok : g.tokens) {
    if (!s.empty()) s += ' ';
    s += tok.passage == Passage::Over ? 'O' : 'U';
    s += std::to_string(tok.crossing);
  }
  return s;
}

GaussCode gauss_from_string(const std::string& s) {
  GaussCode g;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || (tok[0] != 'O' && tok[0] != 'U'))
      throw InvalidGauss("malformed Gauss token '" + tok + "'");
    for (std::size_t i = 1; i < tok.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw InvalidGauss("malformed Gauss token '" + tok + "'");
    g.tokens.push_back({std::atoi(tok.c_str() + 1),
                        tok[0] == 'O' ? Passage::Over : Passage::Under});
  }
  return g;
}

}  // namespace khdetect
