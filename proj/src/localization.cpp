#include "hamfix/localization.hpp"

#include <functional>
#include <optional>
#include <sstream>

namespace hamfix {

namespace {

void require_same_shape(const EquivariantClass& a, const EquivariantClass& b) {
  if (a.restrictions.size() != b.restrictions.size())
    throw std::invalid_argument("equivariant classes over different fixed sets");
}

LaurentPoly t_power(const Rational& c, int k) { return LaurentPoly::monomial(c, k); }

}  // namespace

EquivariantClass unit_class(const FixedPointData& data) {
  return {0, std::vector<SurfaceClass>(data.size(), SurfaceClass(LaurentPoly(Rational(1))))};
}

EquivariantClass operator*(const EquivariantClass& a, const EquivariantClass& b) {
  require_same_shape(a, b);
  EquivariantClass r{a.degree + b.degree, a.restrictions};
  for (std::size_t i = 0; i < r.restrictions.size(); ++i) r.restrictions[i] *= b.restrictions[i];
  return r;
}

EquivariantClass operator+(const EquivariantClass& a, const EquivariantClass& b) {
  require_same_shape(a, b);
  EquivariantClass r = a;
  for (std::size_t i = 0; i < r.restrictions.size(); ++i) r.restrictions[i] += b.restrictions[i];
  return r;
}

EquivariantClass operator-(const EquivariantClass& a, const EquivariantClass& b) {
  require_same_shape(a, b);
  EquivariantClass r = a;
  for (std::size_t i = 0; i < r.restrictions.size(); ++i) r.restrictions[i] -= b.restrictions[i];
  return r;
}

EquivariantClass operator*(const LaurentPoly& coeff, const EquivariantClass& a) {
  EquivariantClass r = a;
  SurfaceClass c(coeff);
  for (auto& s : r.restrictions) s *= c;
  if (!coeff.is_zero()) r.degree += 2 * coeff.degree();
  return r;
}

EquivariantClass restrict_chern(const FixedPointData& data, int k) {
  int n = data.half_dim();
  if (k < 1 || k > n) throw std::out_of_range("chern class index out of range");
  EquivariantClass r{2 * k, {}};
  for (const auto& c : data.components()) {
    if (const auto* p = std::get_if<IsolatedFixedPoint>(&c)) {
      r.restrictions.emplace_back(t_power(Rational(elementary_symmetric(k, p->weights)), k));
      continue;
    }
    const auto& s = std::get<SurfaceFixedComponent>(c);
    std::vector<Weight> xi;
    for (const auto& np : s.normal) xi.push_back(np.weight);
    LaurentPoly p_part;
    if (static_cast<std::size_t>(k) <= xi.size()) p_part = t_power(Rational(elementary_symmetric(k, xi)), k);
    Integer q = Integer(2 * (1 - s.genus)) * elementary_symmetric(k - 1, xi);
    for (std::size_t j = 0; j < xi.size(); ++j) {
      std::vector<Weight> rest = xi;
      rest.erase(rest.begin() + static_cast<long>(j));
      if (static_cast<std::size_t>(k - 1) <= rest.size())
        q += Integer(s.normal[j].degree) * elementary_symmetric(k - 1, rest);
    }
    r.restrictions.emplace_back(std::move(p_part), t_power(Rational(q), k - 1));
  }
  return r;
}

EquivariantClass restrict_omega(const FixedPointData& data, const OmegaMap& omega) {
  EquivariantClass r{2, {}};
  for (const auto& c : data.components()) {
    LaurentPoly p = t_power(-component_phi(c), 1);
    if (std::holds_alternative<IsolatedFixedPoint>(c)) {
      r.restrictions.emplace_back(std::move(p));
      continue;
    }
    auto it = omega.find(component_id(c));
    if (it == omega.end()) throw DataError("missing symplectic area", component_id(c));
    r.restrictions.emplace_back(std::move(p), LaurentPoly(it->second));
  }
  return r;
}

int ChernWord::degree() const {
  int d = 0;
  for (const auto& f : factors) d += 2 * (f.kind == 0 ? 1 : f.kind) * static_cast<int>(f.exponent);
  return d;
}

bool ChernWord::uses_omega() const {
  for (const auto& f : factors)
    if (f.kind == 0) return true;
  return false;
}

std::string ChernWord::str() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << "*";
    os << (factors[i].kind == 0 ? std::string("w") : "c" + std::to_string(factors[i].kind));
    if (factors[i].exponent != 1) os << "^" << factors[i].exponent;
  }
  return os.str();
}

EquivariantClass evaluate_word(const FixedPointData& data, const ChernWord& word, const OmegaMap* omega) {
  EquivariantClass r = unit_class(data);
  for (const auto& f : word.factors) {
    EquivariantClass base;
    if (f.kind == 0) {
      base = restrict_omega(data, omega ? *omega : OmegaMap{});
    } else {
      base = restrict_chern(data, f.kind);
    }
    for (unsigned e = 0; e < f.exponent; ++e) r = r * base;
  }
  return r;
}

LaurentPoly integrate(const FixedPointData& data, const EquivariantClass& cls) {
  if (cls.restrictions.size() != data.size()) throw std::invalid_argument("class does not match fixed set");
  int n = data.half_dim();
  LaurentPoly total;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& c = data[i];
    const auto& r = cls.restrictions[i];
    if (const auto* p = std::get_if<IsolatedFixedPoint>(&c)) {
      total += r.p_part.divide_by_monomial(Rational(derive_invariants(*p).product()), n);
    } else {
      const auto& s = std::get<SurfaceFixedComponent>(c);
      total += (r * surface_inverse_euler(s.normal)).q_part;
    }
  }
  return total;
}

LaurentPoly abbv_integrate(const FixedPointData& data, const ChernWord& word, const OmegaMap* omega) {
  return integrate(data, evaluate_word(data, word, omega));
}

namespace {

// All exponent vectors (e_0 for w, e_1..e_n for c_k) with weighted degree == target.
void collect_words(int half_dim, bool include_omega, int target, std::vector<ChernWord>& out) {
  std::vector<unsigned> exps(half_dim + 1, 0);
  std::function<void(int, int)> rec = [&](int kind, int remaining) {
    if (kind > half_dim) {
      if (remaining != 0) return;
      ChernWord w;
      if (exps[0]) w.factors.push_back({0, exps[0]});
      for (int k = 1; k <= half_dim; ++k)
        if (exps[k]) w.factors.push_back({k, exps[k]});
      out.push_back(std::move(w));
      return;
    }
    int unit = kind == 0 ? 1 : kind;
    int max_e = (kind == 0 && !include_omega) ? 0 : remaining / unit;
    for (int e = max_e; e >= 0; --e) {
      exps[kind] = static_cast<unsigned>(e);
      rec(kind + 1, remaining - e * unit);
    }
    exps[kind] = 0;
  };
  rec(0, target);
}

}  // namespace

std::vector<ChernWord> words_below_top_degree(int half_dim, bool include_omega) {
  std::vector<ChernWord> out;
  for (int d = 0; d < half_dim; ++d) collect_words(half_dim, include_omega, d, out);
  return out;
}

std::vector<ChernWord> top_degree_words(int half_dim) {
  std::vector<ChernWord> out;
  collect_words(half_dim, false, half_dim, out);
  return out;
}

VanishingReport vanishing_suite(const FixedPointData& data, const OmegaMap* omega) {
  VanishingReport rep;
  int n = data.half_dim();
  std::vector<EquivariantClass> chern;
  for (int k = 1; k <= n; ++k) chern.push_back(restrict_chern(data, k));
  std::optional<EquivariantClass> w;
  if (omega) w = restrict_omega(data, *omega);
  for (const auto& word : words_below_top_degree(n, omega != nullptr)) {
    EquivariantClass cls = unit_class(data);
    for (const auto& f : word.factors)
      for (unsigned e = 0; e < f.exponent; ++e) cls = cls * (f.kind == 0 ? *w : chern[f.kind - 1]);
    LaurentPoly v = integrate(data, cls);
    ++rep.words_checked;
    if (!v.is_zero()) rep.nonzero.emplace_back(word, std::move(v));
  }
  return rep;
}

LaurentPoly chi_y_fixed(const FixedPointData& data) {
  LaurentPoly total;
  for (const auto& c : data.components()) {
    long lambda = component_index(c);
    Rational sign = lambda % 2 ? Rational(-1) : Rational(1);
    LaurentPoly term = LaurentPoly::monomial(sign, static_cast<int>(lambda));
    if (const auto* s = std::get_if<SurfaceFixedComponent>(&c)) {
      LaurentPoly chi;  // (1 - g)(1 - y)
      chi.add_term(0, Rational(1 - s->genus));
      chi.add_term(1, Rational(s->genus - 1));
      term *= chi;
    }
    total += term;
  }
  return total;
}

LaurentPoly chi_y_chern(const FixedPointData& data) {
  if (data.half_dim() != 3) throw std::invalid_argument("chi_y_chern is implemented for dimension 6 only");
  auto constant = [&](const ChernWord& w) {
    LaurentPoly v = abbv_integrate(data, w);
    if (!v.is_zero() && !(v.is_monomial() && v.degree() == 0))
      throw std::domain_error("top-degree integral " + w.str() + " is not constant: " + v.str());
    return v.coefficient(0);
  };
  Rational c1c2 = constant({{1, 1}, {2, 1}});
  Rational c3 = constant({{3, 1}});
  LaurentPoly a;  // 1 + y - y^2 - y^3
  a.add_term(0, 1);
  a.add_term(1, 1);
  a.add_term(2, -1);
  a.add_term(3, -1);
  LaurentPoly b;  // -y + y^2
  b.add_term(1, -1);
  b.add_term(2, 1);
  return a * (c1c2 / Rational(24)) + b * (c3 / Rational(2));
}

}  // namespace hamfix
