#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "khdetect/errors.hpp"
#include "khdetect/laurent.hpp"

using namespace khdetect;

namespace {

LaurentPoly lp(std::initializer_list<std::pair<int, int>> coeff_exp) {
  LaurentPoly p;
  for (auto [c, e] : coeff_exp) p.add_term(c, e);
  return p;
}

LaurentPoly loop() { return lp({{1, 1}, {1, -1}}); }

LaurentPoly random_poly(std::mt19937& rng, int max_terms = 6) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(-8, 8);
  std::uniform_int_distribution<int> coeff(-5, 5);
  LaurentPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) p.add_term(coeff(rng), exp(rng));
  return p;
}

}  // namespace

TEST_CASE("addition prunes zeros and doubles") {
  CHECK((lp({{1, 1}}) + lp({{-1, 1}})).is_zero());
  CHECK(loop() + loop() == lp({{2, 1}, {2, -1}}));
  // the T(2,5) value assembles from its two halves
  LaurentPoly t25 = lp({{1, 4}, {1, 8}}) + lp({{-1, 10}, {1, 12}, {-1, 14}});
  CHECK(t25 == lp({{1, 4}, {1, 8}, {-1, 10}, {1, 12}, {-1, 14}}));
}

TEST_CASE("multiplication") {
  CHECK(loop() * loop() == lp({{1, 2}, {2, 0}, {1, -2}}));
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly p = random_poly(rng);
    CHECK(LaurentPoly::one() * p == p);
  }
  // reconciles the figure-eight reduced value with its Euler characteristic
  LaurentPoly fig8 = lp({{1, 4}, {-1, 2}, {1, 0}, {-1, -2}, {1, -4}});
  CHECK(loop() * fig8 == lp({{1, 5}, {1, -5}}));
}

TEST_CASE("mirror") {
  LaurentPoly t25 = lp({{1, 4}, {1, 8}, {-1, 10}, {1, 12}, {-1, 14}});
  CHECK(t25.mirrored() ==
        lp({{1, -4}, {1, -8}, {-1, -10}, {1, -12}, {-1, -14}}));
  CHECK(LaurentPoly().mirrored().is_zero());
  LaurentPoly sym = lp({{1, 5}, {1, -5}});
  CHECK(sym.mirrored() == sym);
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly p = random_poly(rng);
    CHECK(p.mirrored().mirrored() == p);
  }
}

TEST_CASE("exact division") {
  LaurentPoly fig8 = lp({{1, 4}, {-1, 2}, {1, 0}, {-1, -2}, {1, -4}});
  CHECK(lp({{1, 5}, {1, -5}}).div_exact(loop()) == fig8);
  LaurentPoly p = lp({{3, 2}, {-1, 0}, {2, -4}});
  CHECK(p.div_exact(LaurentPoly::one()) == p);
  CHECK(lp({{1, 2}, {1, 0}}).div_exact(loop()) == lp({{1, 1}}));
  CHECK_THROWS_AS(lp({{1, 2}}).div_exact(loop()), NotDivisible);
  CHECK_THROWS_AS(p.div_exact(LaurentPoly()), NotDivisible);
}

TEST_CASE("division inverts multiplication (random)") {
  std::mt19937 rng(23);
  int checked = 0;
  while (checked < 200) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK((a * b).div_exact(b) == a);
    ++checked;
  }
}

TEST_CASE("canonical string codec") {
  CHECK(loop().canonical() == "1 q^-1 t^0;1 q^1 t^0");
  CHECK(LaurentPoly().canonical() == "0");
  CHECK(LaurentPoly::from_canonical("0").is_zero());
  CHECK(LaurentPoly::from_canonical("1 q^-1 t^0;1 q^1 t^0") == loop());
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly p = random_poly(rng);
    CHECK(LaurentPoly::from_canonical(p.canonical()) == p);
  }
}

TEST_CASE("parse errors carry a position") {
  auto expect_pos = [](const std::string& s, std::size_t pos) {
    try {
      LaurentPoly::from_canonical(s);
      FAIL("expected ParseError for '", s, "'");
    } catch (const ParseError& e) {
      CHECK(e.position == pos);
    }
  };
  expect_pos("x", 0);
  expect_pos("1 q^a t^0", 4);
  expect_pos("1 q^1", 5);
  expect_pos("1 q^1 t^1", 0);   // nonzero t-exponent in a one-variable poly
  expect_pos("1 q^1 t^0;;", 10);
}

TEST_CASE("bigraded mirror and evaluation") {
  BigradedPoly unknot;
  unknot.add_term(1, -1, 0);
  unknot.add_term(1, 1, 0);
  CHECK(unknot.mirrored() == unknot);
  CHECK(unknot.eval_t_minus1() == loop());

  // figure-eight table
  BigradedPoly fig8;
  fig8.add_term(1, -5, -2);
  fig8.add_term(1, -1, -1);
  fig8.add_term(1, -1, 0);
  fig8.add_term(1, 1, 0);
  fig8.add_term(1, 1, 1);
  fig8.add_term(1, 5, 2);
  CHECK(fig8.eval_t_minus1() == lp({{1, -5}, {1, 5}}));
  CHECK(fig8.mirrored() == fig8);

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> exp(-6, 6), coeff(-3, 3), nt(0, 8);
  for (int i = 0; i < 200; ++i) {
    BigradedPoly p;
    int k = nt(rng);
    for (int j = 0; j < k; ++j) p.add_term(coeff(rng), exp(rng), exp(rng));
    CHECK(p.mirrored().mirrored() == p);
    CHECK(p.mirrored().eval_t_minus1() == p.eval_t_minus1().mirrored());
    CHECK(BigradedPoly::from_canonical(p.canonical()) == p);
  }
}

TEST_CASE("canonical term order is (t, then q) ascending") {
  BigradedPoly p;
  p.add_term(2, 3, -1);
  p.add_term(1, -4, 2);
  p.add_term(-5, 1, -1);
  CHECK(p.canonical() == "-5 q^1 t^-1;2 q^3 t^-1;1 q^-4 t^2");
}
