#include "hamfix/fixed_data.hpp"

#include <algorithm>
#include <set>

namespace hamfix {

FixedPointData::FixedPointData(int half_dim, std::vector<FixedComponent> components)
    : half_dim_(half_dim), components_(std::move(components)) {
  if (half_dim_ < 0) throw DataError("half_dim must be nonnegative");
  if (components_.empty()) throw DataError("no fixed components");
  std::set<std::string> ids;
  bool has_min = false;
  bool has_max = false;
  for (auto& c : components_) {
    const std::string& id = component_id(c);
    if (id.empty()) throw DataError("empty component id");
    if (!ids.insert(id).second) throw DataError("duplicate component id", id);
    if (auto* p = std::get_if<IsolatedFixedPoint>(&c)) {
      if (static_cast<int>(p->weights.size()) != half_dim_)
        throw DataError("expected " + std::to_string(half_dim_) + " weights, got " +
                            std::to_string(p->weights.size()),
                        id);
      if (std::find(p->weights.begin(), p->weights.end(), 0) != p->weights.end())
        throw DataError("zero weight", id);
      std::sort(p->weights.begin(), p->weights.end());
    } else {
      auto& s = std::get<SurfaceFixedComponent>(c);
      if (half_dim_ < 1) throw DataError("surface in a manifold of dimension 0", id);
      if (static_cast<int>(s.normal.size()) != half_dim_ - 1)
        throw DataError("expected " + std::to_string(half_dim_ - 1) + " normal pairs, got " +
                            std::to_string(s.normal.size()),
                        id);
      if (s.genus < 0) throw DataError("negative genus", id);
      for (const auto& np : s.normal)
        if (np.weight == 0) throw DataError("zero normal weight", id);
    }
    long lambda = component_index(c);
    if (lambda == 0) has_min = true;
    if (lambda + component_half_dim(c) == half_dim_) has_max = true;
  }
  if (!has_min) throw DataError("no minimum (component with no negative weights)");
  if (!has_max) throw DataError("no maximum (component with no positive weights)");
}

std::size_t FixedPointData::find(const std::string& id) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (component_id(components_[i]) == id) return i;
  throw DataError("unknown component id", id);
}

bool FixedPointData::all_isolated() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const FixedComponent& c) { return std::holds_alternative<IsolatedFixedPoint>(c); });
}

PointInvariants derive_invariants(const IsolatedFixedPoint& p) {
  PointInvariants inv;
  inv.neg_product = 1;
  inv.pos_product = 1;
  inv.weight_sum = 0;
  for (Weight w : p.weights) {
    if (w < 0) {
      ++inv.index;
      inv.neg_product *= w;
    } else {
      inv.pos_product *= w;
    }
    inv.weight_sum += w;
  }
  return inv;
}

const std::string& component_id(const FixedComponent& c) {
  return std::visit([](const auto& x) -> const std::string& { return x.id; }, c);
}

const Rational& component_phi(const FixedComponent& c) {
  return std::visit([](const auto& x) -> const Rational& { return x.phi; }, c);
}

std::vector<Weight> component_weights(const FixedComponent& c) {
  if (auto* p = std::get_if<IsolatedFixedPoint>(&c)) return p->weights;
  std::vector<Weight> w;
  for (const auto& np : std::get<SurfaceFixedComponent>(c).normal) w.push_back(np.weight);
  return w;
}

long component_index(const FixedComponent& c) {
  auto w = component_weights(c);
  return std::count_if(w.begin(), w.end(), [](Weight x) { return x < 0; });
}

long component_half_dim(const FixedComponent& c) {
  return std::holds_alternative<IsolatedFixedPoint>(c) ? 0 : 1;
}

Integer component_gamma(const FixedComponent& c) {
  Integer s(0);
  for (Weight w : component_weights(c)) s += w;
  return s;
}

CheckReport check_index_order(const FixedPointData& data) {
  CheckReport r;
  const auto& cs = data.components();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (i == j) continue;
      bool phi_less = component_phi(cs[i]) < component_phi(cs[j]);
      bool index_less = component_index(cs[i]) < component_index(cs[j]);
      if (phi_less != index_less) {
        r.violations.push_back({"index_order",
                                "phi(" + component_id(cs[i]) + ") < phi(" + component_id(cs[j]) + ") is " +
                                    (phi_less ? "true" : "false") + " but lambda comparison is " +
                                    (index_less ? "true" : "false"),
                                {component_id(cs[i]), component_id(cs[j])}});
      }
    }
  }
  return r;
}

CheckReport check_index_bound(const FixedPointData& data) {
  CheckReport r;
  const auto& cs = data.components();
  for (const auto& f : cs) {
    long bound = 0;
    for (const auto& g : cs)
      if (component_phi(g) < component_phi(f)) bound += component_half_dim(g) + 1;
    long lambda = component_index(f);
    if (lambda > bound)
      r.violations.push_back({"index_bound",
                              "lambda = " + std::to_string(lambda) + " exceeds " + std::to_string(bound),
                              {component_id(f)}});
  }
  return r;
}

CheckReport check_gamma_order(const FixedPointData& data) {
  CheckReport r;
  const auto& cs = data.components();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (i == j) continue;
      bool gamma_greater = component_gamma(cs[i]) > component_gamma(cs[j]);
      bool phi_less = component_phi(cs[i]) < component_phi(cs[j]);
      if (gamma_greater != phi_less) {
        r.violations.push_back({"gamma_order",
                                "Gamma(" + component_id(cs[i]) + ") = " + component_gamma(cs[i]).get_str() +
                                    ", Gamma(" + component_id(cs[j]) + ") = " + component_gamma(cs[j]).get_str() +
                                    ", phi order " + (phi_less ? "<" : ">="),
                                {component_id(cs[i]), component_id(cs[j])}});
      }
    }
  }
  return r;
}

std::vector<long> betti_numbers(const FixedPointData& data) {
  std::vector<long> b(2 * data.half_dim() + 1, 0);
  for (const auto& c : data.components()) {
    std::size_t base = 2 * component_index(c);
    if (const auto* s = std::get_if<SurfaceFixedComponent>(&c)) {
      b.at(base) += 1;
      b.at(base + 1) += 2 * s->genus;
      b.at(base + 2) += 1;
    } else {
      b.at(base) += 1;
    }
  }
  return b;
}

FixedPointData reversed(const FixedPointData& data) {
  std::vector<FixedComponent> out;
  for (const auto& c : data.components()) {
    if (const auto* p = std::get_if<IsolatedFixedPoint>(&c)) {
      IsolatedFixedPoint q = *p;
      q.phi = -q.phi;
      for (auto& w : q.weights) w = -w;
      out.emplace_back(std::move(q));
    } else {
      SurfaceFixedComponent s = std::get<SurfaceFixedComponent>(c);
      s.phi = -s.phi;
      for (auto& np : s.normal) np.weight = -np.weight;
      out.emplace_back(std::move(s));
    }
  }
  return FixedPointData(data.half_dim(), std::move(out));
}

std::vector<const IsolatedFixedPoint*> points_by_index(const FixedPointData& data) {
  int n = data.half_dim();
  std::vector<const IsolatedFixedPoint*> out(n + 1, nullptr);
  if (data.size() != static_cast<std::size_t>(n + 1))
    throw DataError("expected exactly one isolated fixed point per index");
  for (const auto& c : data.components()) {
    const auto* p = std::get_if<IsolatedFixedPoint>(&c);
    if (p == nullptr) throw DataError("fixed surface where isolated points are required", component_id(c));
    long lambda = component_index(c);
    if (out[lambda] != nullptr) throw DataError("repeated index " + std::to_string(lambda), p->id);
    out[lambda] = p;
  }
  return out;
}

FixedPointData make_point_data(const std::vector<std::vector<Weight>>& weights,
                               const std::vector<Rational>& phis) {
  if (weights.empty()) throw DataError("no fixed points");
  std::vector<FixedComponent> cs;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    IsolatedFixedPoint p{"p" + std::to_string(i), Rational(0), weights[i]};
    p.phi = i < phis.size() ? phis[i] : Rational(static_cast<long>(i));
    cs.emplace_back(std::move(p));
  }
  return FixedPointData(static_cast<int>(weights.front().size()), std::move(cs));
}

}  // namespace hamfix
