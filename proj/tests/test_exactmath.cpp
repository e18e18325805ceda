#include <doctest.h>

#include <random>

#include "hamfix/symmetric.hpp"
#include "support/oracles.hpp"

using namespace hamfix;

TEST_CASE("rational normal form and parsing") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("7").is_integer());
  CHECK(Rational::parse("0/5").is_zero());
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("2/-3"), std::invalid_argument);
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK(Rational(24, 25) < Rational(120, 121));
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(Rational(7).to_long() == 7L);
  CHECK_FALSE(Rational(7, 2).to_long().has_value());
}

TEST_CASE("rational arithmetic agrees with cross multiplication") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
  for (int trial = 0; trial < 2000; ++trial) {
    long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Rational x(a, b), y(c, d);
    CHECK(x + y == Rational(a * d + c * b, b * d));
    CHECK(x - y == Rational(a * d - c * b, b * d));
    CHECK(x * y == Rational(a * c, b * d));
    if (c != 0) CHECK(x / y == Rational(a * d, b * c));
    CHECK(Rational::parse(x.str()) == x);
  }
}

TEST_CASE("laurent polynomial basics") {
  LaurentPoly t = LaurentPoly::monomial(1, 1);
  LaurentPoly p = LaurentPoly(1) + Rational(6) * t + Rational(11) * t * t + Rational(6) * t * t * t;
  CHECK(p.str() == "1 + 6*t + 11*t^2 + 6*t^3");
  CHECK(p.degree() == 3);
  CHECK(p.valuation() == 0);
  CHECK(LaurentPoly::monomial(-1, -2).str() == "-t^-2");
  CHECK((p - p).is_zero());
  CHECK_THROWS(LaurentPoly().degree());
  CHECK_THROWS_AS(p.divide_by_monomial(p), std::domain_error);
  CHECK_THROWS_AS(p.divide_by_monomial(Rational(0), 1), std::domain_error);
  LaurentPoly q = p.divide_by_monomial(Rational(2), 3);
  CHECK(q.coefficient(-3) == Rational(1, 2));
  CHECK_FALSE(q.is_polynomial());
  CHECK_FALSE(q.has_integer_coefficients());
  CHECK(p.scale_variable(-1).str() == "1 - 6*t + 11*t^2 - 6*t^3");
  CHECK(LaurentPoly::monomial(0, 4).is_zero());
}

TEST_CASE("laurent ring operations agree with evaluation") {
  std::mt19937 rng(7);
  const Rational points[] = {Rational(2), Rational(-3, 2), Rational(5, 7)};
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly a = oracle::random_poly(rng, -4, 4, 5), b = oracle::random_poly(rng, -4, 4, 5);
    for (const auto& s : points) {
      CHECK(oracle::eval(a * b, s) == oracle::eval(a, s) * oracle::eval(b, s));
      CHECK(oracle::eval(a + b, s) == oracle::eval(a, s) + oracle::eval(b, s));
      CHECK(oracle::eval(a.scale_variable(s), Rational(3)) == oracle::eval(a, s * Rational(3)));
    }
    LaurentPoly m = LaurentPoly::monomial(Rational(trial % 7 + 1, 3), trial % 5 - 2);
    CHECK((a * m).divide_by_monomial(m) == a);
    CHECK(a - b + b == a);
  }
}

TEST_CASE("surface coefficient ring truncates u^2") {
  LaurentPoly t = LaurentPoly::monomial(1, 1);
  SurfaceClass x(t, LaurentPoly(2));
  SurfaceClass y(t * t, LaurentPoly(-1));
  SurfaceClass xy = x * y;
  CHECK(xy.p_part == t * t * t);
  CHECK(xy.q_part == Rational(2) * t * t - t);
  CHECK((x - x).is_zero());
}

TEST_CASE("elementary symmetric polynomials match subset sums") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> w(-9, 9), size(0, 6);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<long> v(static_cast<std::size_t>(size(rng)));
    for (auto& x : v) x = w(rng);
    auto all = elementary_symmetric_all(v);
    REQUIRE(all.size() == v.size() + 1);
    for (std::size_t k = 0; k <= v.size(); ++k) {
      CHECK(all[k] == Integer(oracle::subset_sigma(k, v)));
      CHECK(elementary_symmetric(k, v) == all[k]);
    }
  }
  std::vector<long> three{1, 2, 3};
  CHECK_THROWS_AS(elementary_symmetric(4, three), std::invalid_argument);
}

TEST_CASE("newton recurrence k e_k = sum (-1)^(i-1) e_(k-i) p_i") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> w(-12, 12), size(1, 7);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<long> v(static_cast<std::size_t>(size(rng)));
    for (auto& x : v) x = w(rng);
    auto e = elementary_symmetric_all(v);
    for (std::size_t k = 1; k <= v.size(); ++k) {
      Integer rhs = 0;
      for (std::size_t i = 1; i <= k; ++i) {
        Integer p = 0;
        for (long x : v) {
          Integer term = 1;
          for (std::size_t j = 0; j < i; ++j) term *= x;
          p += term;
        }
        rhs += (i % 2 == 1 ? 1 : -1) * e[k - i] * p;
      }
      CHECK(Integer(static_cast<long>(k)) * e[k] == rhs);
    }
  }
}

TEST_CASE("surface inverse euler class inverts the euler class") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> w(-6, 6), a(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<NormalPair> normal;
    for (int j = 0; j < 2; ++j) {
      long x = 0;
      while (x == 0) x = w(rng);
      normal.push_back({x, a(rng)});
    }
    CHECK(surface_euler(normal) * surface_inverse_euler(normal) == SurfaceClass(LaurentPoly(1)));
  }
  std::vector<NormalPair> one{{2, 3}};
  SurfaceClass inv = surface_inverse_euler(one);
  CHECK(inv.p_part == LaurentPoly::monomial(Rational(1, 2), -1));
  CHECK(inv.q_part == LaurentPoly::monomial(Rational(-3, 4), -2));
}
