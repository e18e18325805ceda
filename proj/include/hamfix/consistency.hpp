#pragma once

#include <array>
#include <string>
#include <utility>

#include "hamfix/cohomology.hpp"

namespace hamfix {

// A class in the mod-2 cohomology of a 6-manifold with one generator in each even degree.
struct Mod2Class {
  enum class Ring { kTruncatedPower, kSquareZero };  // Z2[x]/(x^4) or Z2[x,y]/(x^2, y^2)
  Ring ring = Ring::kTruncatedPower;
  std::array<int, 4> coeffs{1, 0, 0, 0};  // 1, x, y (= x^2 in the truncated ring), xy
  std::string str() const;
};

struct WuResult {
  bool passed = false;
  Mod2Class w;
  std::string detail;
};

// Total Stiefel-Whitney class as the mod-2 reduction of c(M), tested against the
// values Wu's formula allows. Throws std::domain_error on non-integral input.
WuResult wu_check(const RingPresentation& ring, const ChernVector& chern);

Rational ellipsoid_volume_ratio(long l);

// Coefficients (6 + kappa, -(l + kappa)); requires -l < kappa < l.
std::pair<Rational, Rational> reduced_space_classes(long l, const Rational& kappa);

}  // namespace hamfix
