#pragma once

#include <map>
#include <string>

#include "hamfix/rational.hpp"

namespace hamfix {

// Finite sum of c_k t^k, k ranging over all integers. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(const Rational& c, int exponent);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // Highest and lowest exponent; both throw on the zero polynomial.
  int degree() const;
  int valuation() const;
  Rational coefficient(int exponent) const;
  const std::map<int, Rational>& terms() const { return terms_; }

  // True when every exponent is >= 0.
  bool is_polynomial() const { return terms_.empty() || valuation() >= 0; }
  bool has_integer_coefficients() const;

  void add_term(int exponent, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  // Divides by a nonzero monomial c t^k; throws std::domain_error otherwise.
  LaurentPoly divide_by_monomial(const LaurentPoly& divisor) const;
  LaurentPoly divide_by_monomial(const Rational& c, int exponent) const;
  // Substitutes t -> s t for a rational s.
  LaurentPoly scale_variable(const Rational& s) const;

  std::string str(const std::string& var = "t") const;

 private:
  std::map<int, Rational> terms_;
};

// P + Q u with u^2 = 0, the coefficient ring of equivariant classes on a surface.
struct SurfaceClass {
  LaurentPoly p_part;
  LaurentPoly q_part;

  SurfaceClass() = default;
  SurfaceClass(LaurentPoly p, LaurentPoly q = {}) : p_part(std::move(p)), q_part(std::move(q)) {}  // NOLINT

  SurfaceClass& operator+=(const SurfaceClass& o);
  SurfaceClass& operator-=(const SurfaceClass& o);
  SurfaceClass& operator*=(const SurfaceClass& o);
  friend SurfaceClass operator+(SurfaceClass a, const SurfaceClass& b) { return a += b; }
  friend SurfaceClass operator-(SurfaceClass a, const SurfaceClass& b) { return a -= b; }
  friend SurfaceClass operator*(SurfaceClass a, const SurfaceClass& b) { return a *= b; }
  friend bool operator==(const SurfaceClass& a, const SurfaceClass& b) {
    return a.p_part == b.p_part && a.q_part == b.q_part;
  }
  bool is_zero() const { return p_part.is_zero() && q_part.is_zero(); }
  std::string str() const;
};

}  // namespace hamfix
