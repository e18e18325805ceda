#include "hamfix/cohomology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hamfix {

namespace {

struct PointTable {
  std::vector<const IsolatedFixedPoint*> points;
  std::vector<PointInvariants> inv;
  std::vector<Rational> gamma;
};

PointTable point_table(const FixedPointData& data) {
  PointTable t;
  t.points = points_by_index(data);
  std::set<Integer> seen;
  for (const auto* p : t.points) {
    t.inv.push_back(derive_invariants(*p));
    if (!seen.insert(t.inv.back().weight_sum).second) throw DataError("repeated Gamma value", p->id);
    t.gamma.emplace_back(t.inv.back().weight_sum);
  }
  return t;
}

}  // namespace

CanonicalBasis canonical_basis(const FixedPointData& data, BasisSign sign) {
  PointTable t = point_table(data);
  std::size_t n = t.points.size() - 1;
  CanonicalBasis b;
  for (const auto* p : t.points) b.point_ids.push_back(p->id);
  for (std::size_t i = 0; i <= n; ++i) {
    Rational lead(t.inv[i].neg_product);
    if (sign == BasisSign::kPositiveLeading && lead.sign() < 0) lead = -lead;
    BasisClass cls{i, {}};
    for (std::size_t k = 0; k <= n; ++k) {
      Rational v = lead;
      for (std::size_t j = 0; j < i; ++j) v *= (t.gamma[k] - t.gamma[j]) / (t.gamma[i] - t.gamma[j]);
      cls.restrictions.push_back(LaurentPoly::monomial(v, static_cast<int>(i)));
    }
    b.classes.push_back(std::move(cls));
  }
  return b;
}

CanonicalBasis dual_basis(const FixedPointData& data) {
  PointTable t = point_table(data);
  std::size_t n = t.points.size() - 1;
  CanonicalBasis b;
  for (const auto* p : t.points) b.point_ids.push_back(p->id);
  for (std::size_t i = 0; i <= n; ++i) {
    BasisClass cls{n - i, {}};
    for (std::size_t k = 0; k <= n; ++k) {
      Rational v(t.inv[i].pos_product);
      for (std::size_t j = i + 1; j <= n; ++j) v *= (t.gamma[k] - t.gamma[j]) / (t.gamma[i] - t.gamma[j]);
      cls.restrictions.push_back(LaurentPoly::monomial(v, static_cast<int>(n - i)));
    }
    b.classes.push_back(std::move(cls));
  }
  return b;
}

EquivariantClass as_class(const FixedPointData& data, const CanonicalBasis& basis, std::size_t i) {
  const BasisClass& bc = basis.classes.at(i);
  EquivariantClass cls{static_cast<int>(2 * bc.index), std::vector<SurfaceClass>(data.size())};
  for (std::size_t k = 0; k < basis.point_ids.size(); ++k)
    cls.restrictions[data.find(basis.point_ids[k])] = SurfaceClass(bc.restrictions[k]);
  return cls;
}

std::vector<NonIntegralEntry> integrality_check(const CanonicalBasis& basis) {
  std::vector<NonIntegralEntry> out;
  for (const auto& cls : basis.classes)
    for (std::size_t k = 0; k < cls.restrictions.size(); ++k)
      if (!cls.restrictions[k].has_integer_coefficients())
        out.push_back({cls.index, basis.point_ids[k], cls.restrictions[k]});
  return out;
}

std::vector<LaurentPoly> express_in_basis(const FixedPointData& data, const EquivariantClass& cls,
                                          const CanonicalBasis& basis) {
  if (cls.restrictions.size() != data.size() || data.size() != basis.point_ids.size())
    throw std::invalid_argument("class and basis live on different fixed sets");
  std::vector<LaurentPoly> x;
  for (std::size_t i = 0; i < basis.point_ids.size(); ++i) {
    const SurfaceClass& r = cls.restrictions[data.find(basis.point_ids[i])];
    if (!r.q_part.is_zero()) throw std::invalid_argument("restriction to a point has a surface part");
    LaurentPoly rest = r.p_part;
    for (std::size_t j = 0; j < i; ++j) rest -= x[j] * basis.classes[j].restrictions[i];
    x.push_back(rest.divide_by_monomial(basis.classes[i].restrictions[i]));
  }
  return x;
}

EquivariantClass sphere_pushforward(const FixedPointData& data, const std::string& p, const std::string& q, long l) {
  int n = data.half_dim();
  EquivariantClass cls{2 * (n - 1), std::vector<SurfaceClass>(data.size())};
  auto end_value = [&](const std::string& id, Weight w) {
    const auto* pt = std::get_if<IsolatedFixedPoint>(&data[data.find(id)]);
    if (pt == nullptr) throw DataError("sphere endpoint is not an isolated point", id);
    std::vector<Weight> rest = pt->weights;
    auto it = std::find(rest.begin(), rest.end(), w);
    if (it == rest.end()) throw DataError("no weight " + std::to_string(w) + " for the sphere", id);
    rest.erase(it);
    Integer prod(1);
    for (Weight v : rest) prod *= v;
    return LaurentPoly::monomial(Rational(prod), n - 1);
  };
  cls.restrictions[data.find(p)] = SurfaceClass(end_value(p, l));
  cls.restrictions[data.find(q)] = SurfaceClass(end_value(q, -l));
  return cls;
}

std::vector<GraphEdge> isotropy_sphere_edges(const FixedPointData& data, const LabeledMultigraph& g) {
  std::vector<GraphEdge> out;
  auto divisible = [&](std::size_t v, long l) {
    const auto& pt = std::get<IsolatedFixedPoint>(data[data.find(g.vertices[v].id)]);
    return std::count_if(pt.weights.begin(), pt.weights.end(), [&](Weight w) { return w % l == 0; });
  };
  for (const auto& e : g.edges)
    if (e.length > 1 && divisible(e.min_vertex, e.length) == 1 && divisible(e.max_vertex, e.length) == 1)
      out.push_back(e);
  return out;
}

namespace {

std::vector<Rational> generator_ratios(const PointTable& t) {
  std::size_t n = t.points.size() - 1;
  std::vector<Rational> r{Rational(1)};
  if (n == 0) return r;
  Rational l1(t.inv[1].neg_product);
  Rational d10 = t.gamma[1] - t.gamma[0];
  for (std::size_t i = 1; i <= n; ++i) {
    Rational v = Rational(t.inv[i].neg_product) / pow(l1, static_cast<unsigned>(i)) *
                 pow(d10, static_cast<unsigned>(i));
    for (std::size_t j = 0; j < i; ++j) v /= t.gamma[i] - t.gamma[j];
    r.push_back(v);
  }
  return r;
}

// Signed "1+2x+12y+4xy" style sum; zero terms dropped, unit coefficients implicit.
std::string term_sum(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (c.sign() < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    first = false;
    bool show = mono.empty() || !(mag == Rational(1));
    if (show) os << (mag.is_integer() || mono.empty() ? mag.str() : "(" + mag.str() + ")");
    os << mono;
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string RingPresentation::str() const {
  if (kind == Kind::kTruncatedPower) return "Z[x]/(x^" + std::to_string(half_dim + 1) + ")";
  return "Z[x,y]/(" + term_sum({{Rational(1), "x^2"}, {-c, "y"}}) + ", y^2)";
}

std::string RingPresentation::relation() const {
  if (kind == Kind::kTruncatedPower) return "x^" + std::to_string(half_dim + 1) + "=0";
  return "x^2=" + term_sum({{c, "y"}});
}

RingPresentation ring_presentation(const FixedPointData& data) {
  PointTable t = point_table(data);
  RingPresentation r;
  r.half_dim = data.half_dim();
  r.ratios = generator_ratios(t);
  bool all_unit = std::all_of(r.ratios.begin(), r.ratios.end(), [](const Rational& v) { return v == Rational(1); });
  if (r.half_dim >= 2) r.c = Rational(1) / r.ratios[2];
  if (all_unit) {
    r.kind = RingPresentation::Kind::kTruncatedPower;
    r.c = Rational(1);
    return r;
  }
  if (r.half_dim != 3) throw DataError("two-generator presentation requires dimension 6");
  r.kind = RingPresentation::Kind::kTwoGenerator;
  return r;
}

std::string ChernVector::str(const RingPresentation& ring) const {
  if (ring.kind == RingPresentation::Kind::kTruncatedPower)
    return term_sum({{Rational(1), ""}, {c1, "x"}, {c2, "x^2"}, {c3, "x^3"}});
  return term_sum({{Rational(1), ""}, {c1, "x"}, {c2, "y"}, {c3, "xy"}});
}

std::string ChernVector::vector_str() const { return "[" + c1.str() + "," + c2.str() + "," + c3.str() + "]"; }

ChernVector total_chern(const FixedPointData& data) {
  if (data.half_dim() != 3) throw DataError("total Chern class is computed in dimension 6");
  PointTable t = point_table(data);
  const auto& g = t.gamma;
  std::vector<Rational> s2;
  for (const auto* p : t.points) s2.emplace_back(elementary_symmetric(2, p->weights));
  ChernVector v;
  v.c1 = (g[1] - g[0]) / Rational(t.inv[1].neg_product);
  v.c2 = (s2[0] * (g[2] - g[1]) - s2[1] * (g[2] - g[0]) + s2[2] * (g[1] - g[0])) /
         ((g[1] - g[0]) * Rational(t.inv[2].neg_product));
  v.c3 = Rational(4);
  return v;
}

std::vector<Rational> chern_coefficients(const FixedPointData& data) {
  PointTable t = point_table(data);
  std::size_t n = t.points.size() - 1;
  std::vector<Rational> out{Rational(1)};
  for (std::size_t i = 1; i <= n; ++i) {
    Rational sum(0);
    for (std::size_t k = 0; k <= i; ++k) {
      Rational term(elementary_symmetric(i, t.points[k]->weights));
      for (std::size_t j = 0; j <= i; ++j)
        if (j != k) term /= t.gamma[k] - t.gamma[j];
      sum += term;
    }
    for (std::size_t j = 0; j < i; ++j) sum *= t.gamma[i] - t.gamma[j];
    out.push_back(sum / Rational(t.inv[i].neg_product));
  }
  return out;
}

std::vector<Rational> gamma_ratio_constants(const FixedPointData& data) {
  PointTable t = point_table(data);
  std::vector<Rational> out;
  for (std::size_t k = 0; k < t.points.size(); ++k) {
    Rational v(1);
    for (std::size_t j = 0; j < t.points.size(); ++j)
      if (j != k) v *= t.gamma[k] - t.gamma[j];
    out.push_back(v / Rational(t.inv[k].product()));
  }
  return out;
}

}  // namespace hamfix
