#pragma once

#include <map>
#include <string>
#include <vector>

#include "hamfix/fixed_data.hpp"

namespace hamfix {

// A class in equivariant cohomology, recorded by its restrictions to the fixed
// components (same order as FixedPointData::components()). At a point only
// p_part is used.
struct EquivariantClass {
  int degree = 0;  // cohomological degree
  std::vector<SurfaceClass> restrictions;

  const SurfaceClass& at(const FixedPointData& data, const std::string& id) const {
    return restrictions.at(data.find(id));
  }
  friend bool operator==(const EquivariantClass&, const EquivariantClass&) = default;
};

EquivariantClass unit_class(const FixedPointData& data);
EquivariantClass operator*(const EquivariantClass& a, const EquivariantClass& b);
EquivariantClass operator+(const EquivariantClass& a, const EquivariantClass& b);
EquivariantClass operator-(const EquivariantClass& a, const EquivariantClass& b);
EquivariantClass operator*(const LaurentPoly& coeff, const EquivariantClass& a);

// Symplectic area coefficient of [omega] on each surface, keyed by component id.
using OmegaMap = std::map<std::string, Rational>;

EquivariantClass restrict_chern(const FixedPointData& data, int k);
EquivariantClass restrict_omega(const FixedPointData& data, const OmegaMap& omega);

// kind 0 is the extended symplectic class, kind k >= 1 is c_k.
struct ChernFactor {
  int kind = 1;
  unsigned exponent = 1;
  friend bool operator==(const ChernFactor&, const ChernFactor&) = default;
};

struct ChernWord {
  std::vector<ChernFactor> factors;

  ChernWord() = default;
  ChernWord(std::initializer_list<ChernFactor> f) : factors(f) {}
  int degree() const;
  bool uses_omega() const;
  std::string str() const;  // "1", "c1^2*c2", "w*c1"
  friend bool operator==(const ChernWord&, const ChernWord&) = default;
};

EquivariantClass evaluate_word(const FixedPointData& data, const ChernWord& word,
                               const OmegaMap* omega = nullptr);

// Sum over fixed components of restriction / equivariant Euler class.
LaurentPoly integrate(const FixedPointData& data, const EquivariantClass& cls);
LaurentPoly abbv_integrate(const FixedPointData& data, const ChernWord& word,
                           const OmegaMap* omega = nullptr);

// Monomials in c_1..c_n (and w when requested) of degree < 2n, by increasing degree.
std::vector<ChernWord> words_below_top_degree(int half_dim, bool include_omega = false);
// Monomials in c_1..c_n of degree exactly 2n.
std::vector<ChernWord> top_degree_words(int half_dim);

struct VanishingReport {
  std::vector<std::pair<ChernWord, LaurentPoly>> nonzero;
  std::size_t words_checked = 0;
  bool passed() const { return nonzero.empty(); }
};

VanishingReport vanishing_suite(const FixedPointData& data, const OmegaMap* omega = nullptr);

// Polynomials in y, stored as Laurent polynomials with nonnegative exponents.
LaurentPoly chi_y_fixed(const FixedPointData& data);
LaurentPoly chi_y_chern(const FixedPointData& data);

}  // namespace hamfix
