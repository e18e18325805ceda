#include "hamfix/symmetric.hpp"

#include <stdexcept>

namespace hamfix {

std::vector<Integer> elementary_symmetric_all(std::span<const Weight> values) {
  std::vector<Integer> e(values.size() + 1, Integer(0));
  e[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    Integer v(values[i]);
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * v;
  }
  return e;
}

Integer elementary_symmetric(std::size_t k, std::span<const Weight> values) {
  if (k > values.size()) throw std::invalid_argument("elementary_symmetric: k exceeds multiset size");
  return elementary_symmetric_all(values)[k];
}

SurfaceClass surface_euler(std::span<const NormalPair> normal) {
  SurfaceClass e(LaurentPoly(Rational(1)));
  for (const auto& np : normal)
    e *= SurfaceClass(LaurentPoly::monomial(Rational(np.weight), 1), LaurentPoly(Rational(np.degree)));
  return e;
}

SurfaceClass surface_inverse_euler(std::span<const NormalPair> normal) {
  if (normal.empty()) throw std::invalid_argument("surface_inverse_euler: empty normal data");
  Integer prod(1);
  Rational s(0);
  for (const auto& np : normal) {
    if (np.weight == 0) throw std::invalid_argument("surface_inverse_euler: zero weight");
    prod *= np.weight;
    s += Rational(Integer(np.degree), Integer(np.weight));
  }
  int m = static_cast<int>(normal.size());
  Rational inv = Rational(1) / Rational(prod);
  return SurfaceClass(LaurentPoly::monomial(inv, -m), LaurentPoly::monomial(-s * inv, -m - 1));
}

}  // namespace hamfix
