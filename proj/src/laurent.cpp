#include "hamfix/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace hamfix {

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

int LaurentPoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

int LaurentPoly::valuation() const {
  if (terms_.empty()) throw std::domain_error("valuation of zero Laurent polynomial");
  return terms_.begin()->first;
}

Rational LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::has_integer_coefficients() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_integer()) return false;
  return true;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly r;
  for (const auto& [i, a] : terms_)
    for (const auto& [j, b] : o.terms_) r.add_term(i + j, a * b);
  *this = std::move(r);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::divide_by_monomial(const LaurentPoly& divisor) const {
  if (!divisor.is_monomial()) throw std::domain_error("divisor is not a nonzero monomial");
  const auto& [k, c] = *divisor.terms_.begin();
  return divide_by_monomial(c, k);
}

LaurentPoly LaurentPoly::divide_by_monomial(const Rational& c, int exponent) const {
  if (c.is_zero()) throw std::domain_error("division by zero monomial");
  LaurentPoly r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k - exponent, v / c);
  return r;
}

LaurentPoly LaurentPoly::scale_variable(const Rational& s) const {
  LaurentPoly r;
  for (const auto& [k, v] : terms_) {
    Rational f = k >= 0 ? pow(s, static_cast<unsigned>(k)) : Rational(1) / pow(s, static_cast<unsigned>(-k));
    r.add_term(k, v * f);
  }
  return r;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << var;
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

SurfaceClass& SurfaceClass::operator+=(const SurfaceClass& o) {
  p_part += o.p_part;
  q_part += o.q_part;
  return *this;
}

SurfaceClass& SurfaceClass::operator-=(const SurfaceClass& o) {
  p_part -= o.p_part;
  q_part -= o.q_part;
  return *this;
}

SurfaceClass& SurfaceClass::operator*=(const SurfaceClass& o) {
  LaurentPoly q = p_part * o.q_part + q_part * o.p_part;
  p_part *= o.p_part;
  q_part = std::move(q);
  return *this;
}

std::string SurfaceClass::str() const {
  if (q_part.is_zero()) return p_part.str();
  return "(" + p_part.str() + ") + (" + q_part.str() + ")*u";
}

}  // namespace hamfix
