#include "hamfix/consistency.hpp"

#include <stdexcept>

namespace hamfix {

namespace {

int mod2(const Rational& r) {
  Integer v = r.numerator() % 2;
  return v == 0 ? 0 : 1;
}

}  // namespace

std::string Mod2Class::str() const {
  const char* names[4] = {"1", "x", ring == Ring::kTruncatedPower ? "x^2" : "y",
                          ring == Ring::kTruncatedPower ? "x^3" : "xy"};
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (!coeffs[i]) continue;
    if (!s.empty()) s += "+";
    s += names[i];
  }
  return s.empty() ? "0" : s;
}

WuResult wu_check(const RingPresentation& ring, const ChernVector& chern) {
  if (ring.half_dim != 3) throw std::domain_error("Wu check is implemented for dimension 6");
  if (!ring.c.is_integer() || !chern.integral()) throw std::domain_error("Wu check needs integral ring and Chern data");
  WuResult r;
  bool square_zero = ring.kind == RingPresentation::Kind::kTwoGenerator && mod2(ring.c) == 0;
  r.w.ring = square_zero ? Mod2Class::Ring::kSquareZero : Mod2Class::Ring::kTruncatedPower;
  r.w.coeffs = {1, mod2(chern.c1), mod2(chern.c2), mod2(chern.c3)};
  if (square_zero) {
    r.passed = r.w.coeffs[2] == 0 && r.w.coeffs[3] == 0;
    r.detail = "ring mod 2 is Z2[x,y]/(x^2,y^2); w = " + r.w.str() + ", allowed 1 or 1+x";
  } else {
    r.passed = r.w.coeffs[1] == 0 && r.w.coeffs[2] == 0 && r.w.coeffs[3] == 0;
    r.detail = "ring mod 2 is Z2[x]/(x^4); w = " + r.w.str() + ", allowed 1";
  }
  return r;
}

Rational ellipsoid_volume_ratio(long l) {
  if (l < 1) throw std::invalid_argument("ellipsoid ratio needs l >= 1");
  Rational small = Rational(2) * Rational(2 * l);
  Rational big = Rational(Integer(6 + l), Integer(3)) * Rational(Integer(6 + l), Integer(2));
  return small / big;
}

std::pair<Rational, Rational> reduced_space_classes(long l, const Rational& kappa) {
  if (!(Rational(-l) < kappa && kappa < Rational(l))) throw std::out_of_range("kappa must lie in (-l, l)");
  return {Rational(6) + kappa, -(Rational(l) + kappa)};
}

}  // namespace hamfix
