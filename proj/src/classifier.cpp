#include "hamfix/classifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "hamfix/parallel.hpp"

namespace hamfix {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kA: return "A";
    case Outcome::kB: return "B";
    case Outcome::kC: return "C";
    case Outcome::kD: return "D";
    case Outcome::kInconsistent: return "inconsistent";
  }
  return "?";
}

std::string Verdict::failed_check() const {
  for (const auto& e : evidence)
    if (!e.passed) return e.check;
  return {};
}

FixedPointData cp3_circle_data(long m, long n, long k) {
  if (m < 1 || n < 1 || k < 1) throw std::invalid_argument("CP^3 exponents need m, n, k >= 1");
  std::array<long, 4> e{0, m, m + n, m + n + k};
  std::vector<FixedComponent> cs;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Weight> w;
    for (std::size_t j = 0; j < 4; ++j)
      if (j != i) w.push_back(e[j] - e[i]);
    cs.emplace_back(IsolatedFixedPoint{"p" + std::to_string(i), Rational(e[i]), w});
  }
  return FixedPointData(3, std::move(cs));
}

FixedPointData grassmannian_circle_data(long a, long b) {
  if (!(0 < a && a < b)) throw std::invalid_argument("Grassmannian weights need 0 < a < b");
  std::vector<FixedComponent> cs;
  cs.emplace_back(IsolatedFixedPoint{"p0", Rational(-b), {b, b + a, b - a}});
  cs.emplace_back(IsolatedFixedPoint{"p1", Rational(-a), {a, a + b, a - b}});
  cs.emplace_back(IsolatedFixedPoint{"p2", Rational(a), {-a, b - a, -a - b}});
  cs.emplace_back(IsolatedFixedPoint{"p3", Rational(b), {-b, a - b, -a - b}});
  return FixedPointData(3, std::move(cs));
}

FixedPointData x_family_data(long l) {
  return make_point_data({{1, 2, 3}, {1, -1, l}, {1, -1, -l}, {-1, -2, -3}});
}

namespace {

using WeightTable = std::vector<std::vector<Weight>>;

WeightTable weight_table(const std::vector<const IsolatedFixedPoint*>& pts) {
  WeightTable t;
  for (const auto* p : pts) t.push_back(p->weights);
  return t;
}

WeightTable table_of(const FixedPointData& d) { return weight_table(points_by_index(d)); }

std::optional<std::array<long, 3>> match_cp3(const WeightTable& w) {
  const auto& p0 = w[0];
  if (p0[0] < 1) return std::nullopt;
  long m = p0[0], n = p0[1] - p0[0], k = p0[2] - p0[1];
  if (n < 1 || k < 1) return std::nullopt;
  if (table_of(cp3_circle_data(m, n, k)) != w) return std::nullopt;
  return std::array<long, 3>{m, n, k};
}

std::optional<std::array<long, 2>> match_gras(const WeightTable& w) {
  const auto& p0 = w[0];
  long b = p0[1], a = p0[1] - p0[0];
  if (!(0 < a && a < b) || p0[2] != a + b) return std::nullopt;
  if (table_of(grassmannian_circle_data(a, b)) != w) return std::nullopt;
  return std::array<long, 2>{a, b};
}

std::string report_str(const CheckReport& r) {
  return r.passed() ? "ok" : r.violations.front().detail;
}

}  // namespace

Verdict classify(const FixedPointData& data, const LabeledMultigraph* graph) {
  if (data.half_dim() != 3) throw DataError("classification is defined in dimension 6");
  auto pts = points_by_index(data);
  Verdict v;
  auto record = [&](const std::string& id, bool ok, const std::string& detail) {
    v.evidence.push_back({id, ok, detail});
    return ok;
  };

  CheckReport order = check_index_order(data);
  if (!record("index_order", order.passed(), report_str(order))) return v;
  CheckReport bound = check_index_bound(data);
  if (!record("index_bound", bound.passed(), report_str(bound))) return v;
  CheckReport gamma = check_gamma_order(data);
  if (!record("gamma_order", gamma.passed(), report_str(gamma))) return v;

  std::optional<LabeledMultigraph> chosen;
  std::string compat_detail = "no pairing of weights +k/-k into edges";
  std::vector<LabeledMultigraph> candidates;
  if (graph) {
    candidates.push_back(*graph);
  } else {
    candidates = induced_multigraphs(data);
  }
  for (const auto& g : candidates) {
    GraphVerdict s = check_structure(g, 3);
    GraphVerdict c = s.valid() ? check_compatibility(g, 3) : s;
    if (c.valid()) {
      chosen = g;
      break;
    }
    compat_detail = c.details.front().check + ": " + c.details.front().detail + " on " +
                    c.details.front().components.front();
  }
  if (!record("compatibility", chosen.has_value(), chosen ? "ok" : compat_detail)) return v;

  VanishingReport van = vanishing_suite(data);
  std::string van_detail = "all " + std::to_string(van.words_checked) + " lower-degree integrals vanish";
  if (!van.passed()) van_detail = "integral of " + van.nonzero.front().first.str() + " = " + van.nonzero.front().second.str();
  if (!record("vanishing", van.passed(), van_detail)) return v;

  CanonicalBasis basis = canonical_basis(data);
  auto bad = integrality_check(basis);
  std::string basis_detail = "all restrictions integral";
  if (!bad.empty())
    basis_detail = "alpha_" + std::to_string(bad.front().index) + " at " + bad.front().point + " = " +
                   bad.front().value.str();
  if (!record("basis_integrality", bad.empty(), basis_detail)) return v;

  bool spheres_ok = true;
  std::string sphere_detail;
  for (const auto& e : isotropy_sphere_edges(data, *chosen)) {
    const std::string& p = chosen->vertices[e.min_vertex].id;
    const std::string& q = chosen->vertices[e.max_vertex].id;
    auto x = express_in_basis(data, sphere_pushforward(data, p, q, e.length), basis);
    for (std::size_t i = 0; i < x.size() && spheres_ok; ++i) {
      if (!x[i].is_polynomial() || !x[i].has_integer_coefficients()) {
        spheres_ok = false;
        sphere_detail = "sphere " + p + "-" + q + " (length " + std::to_string(e.length) + "): coefficient of alpha_" +
                        std::to_string(i) + " is " + x[i].str();
      }
    }
    if (!spheres_ok) break;
    if (!sphere_detail.empty()) sphere_detail += "; ";
    sphere_detail += "sphere " + p + "-" + q + " (length " + std::to_string(e.length) + ") integral";
  }
  if (sphere_detail.empty()) sphere_detail = "no isotropy spheres";
  if (!record("sphere_integrality", spheres_ok, sphere_detail)) return v;

  RingPresentation ring = ring_presentation(data);
  ChernVector chern = total_chern(data);
  bool ring_ok = ring.c.is_integer() && ring.c.sign() > 0 && chern.integral();
  if (!record("ring_integrality", ring_ok, ring.relation() + ", c = " + chern.str(ring))) return v;
  v.ring = ring;
  v.chern = chern;

  LaurentPoly chi_f = chi_y_fixed(data);
  LaurentPoly chi_c = chi_y_chern(data);
  if (!record("chi_y", chi_f == chi_c, chi_f.str("y") + " vs " + chi_c.str("y"))) return v;

  WuResult wu = wu_check(ring, chern);
  if (!record("wu", wu.passed, wu.detail)) return v;

  WeightTable w = weight_table(pts);
  if (auto a = match_cp3(w)) {
    v.outcome = Outcome::kA;
    v.cp3_params = a;
    record("template", true, "CP^3 exponents (0," + std::to_string((*a)[0]) + "," + std::to_string((*a)[0] + (*a)[1]) +
                                 "," + std::to_string((*a)[0] + (*a)[1] + (*a)[2]) + ")");
  } else if (auto b = match_gras(w)) {
    v.outcome = Outcome::kB;
    v.gras_params = b;
    record("template", true, "Grassmannian weights (" + std::to_string((*b)[0]) + "," + std::to_string((*b)[1]) + ")");
  } else if (w == table_of(x_family_data(4))) {
    v.outcome = Outcome::kC;
    record("template", true, "weights {1,2,3},{1,-1,4},{1,-1,-4},{-1,-2,-3}");
  } else if (w == table_of(x_family_data(5))) {
    v.outcome = Outcome::kD;
    record("template", true, "weights {1,2,3},{1,-1,5},{1,-1,-5},{-1,-2,-3}");
  } else {
    record("template", false, "passes every filter but matches no standard weight system");
    v.ring.reset();
    v.chern.reset();
  }
  return v;
}

std::vector<const EnumerationEntry*> EnumerationResult::survivors() const {
  std::vector<const EnumerationEntry*> out;
  for (const auto& e : entries)
    if (e.verdict.outcome != Outcome::kInconsistent) out.push_back(&e);
  return out;
}

namespace {

using Key = std::array<long, 12>;

struct Witness {
  bool compatible = false;
  std::vector<GraphEdge> edges;
};

bool better(const Witness& a, const Witness& b) {
  if (a.compatible != b.compatible) return a.compatible;
  return a.edges < b.edges;
}

Key key_of(const WeightTable& w) {
  Key k{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 3; ++j) k[3 * i + j] = w[i][j];
  return k;
}

}  // namespace

EnumerationResult enumerate_and_classify(long max_weight, GraphMode mode, unsigned threads) {
  const unsigned parts = 64;
  std::vector<std::map<Key, Witness>> found(parts);
  std::vector<std::size_t> counts(parts, 0);
  parallel_for(parts, threads, [&](unsigned part) {
    auto& local = found[part];
    enumerate_graphs(
        max_weight, mode,
        [&](const LabeledMultigraph& g) {
          ++counts[part];
          Witness w{check_compatibility(g, 3).valid(), g.edges};
          Key k = key_of(weights_from_graph(g, 3));
          auto [it, inserted] = local.try_emplace(k, w);
          if (!inserted && better(w, it->second)) it->second = std::move(w);
        },
        parts, part);
  });
  std::map<Key, Witness> merged;
  EnumerationResult result{mode, max_weight, 0, {}};
  for (unsigned p = 0; p < parts; ++p) {
    result.graphs += counts[p];
    for (auto& [k, w] : found[p]) {
      auto [it, inserted] = merged.try_emplace(k, w);
      if (!inserted && better(w, it->second)) it->second = w;
    }
  }
  std::vector<std::pair<Key, Witness>> items(merged.begin(), merged.end());
  result.entries.resize(items.size());
  parallel_for(static_cast<unsigned>(items.size()), threads, [&](unsigned i) {
    const auto& [k, w] = items[i];
    LabeledMultigraph g = LabeledMultigraph::chain(3, w.edges);
    FixedPointData data = data_from_graph(g, 3);
    EnumerationEntry& e = result.entries[i];
    e.weights = table_of(data);
    e.verdict = classify(data, &g);
    const auto& p1 = e.weights[1];
    if (e.weights[0] == std::vector<Weight>{1, 2, 3} && e.weights[3] == std::vector<Weight>{-3, -2, -1} &&
        p1[0] == -1 && p1[1] == 1 && e.weights[2][0] == -p1[2] && e.weights[2][1] == -1 && e.weights[2][2] == 1)
      e.x_family_l = p1[2];
  });
  return result;
}

}  // namespace hamfix
