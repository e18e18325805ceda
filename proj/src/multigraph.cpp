#include "hamfix/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hamfix {

LabeledMultigraph LabeledMultigraph::chain(int n, std::vector<GraphEdge> edges) {
  LabeledMultigraph g;
  for (int i = 0; i <= n; ++i) g.vertices.push_back({"p" + std::to_string(i), Rational(i), i});
  g.edges = std::move(edges);
  return g;
}

bool LabeledMultigraph::is_simple() const {
  std::vector<GraphEdge> e = edges;
  std::sort(e.begin(), e.end());
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i].min_vertex == e[i - 1].min_vertex && e[i].max_vertex == e[i - 1].max_vertex) return false;
  return true;
}

namespace {

std::string edge_name(const LabeledMultigraph& g, const GraphEdge& e) {
  return g.vertices[e.min_vertex].id + "-" + g.vertices[e.max_vertex].id + ":" + std::to_string(e.length);
}

long positive_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

GraphVerdict check_structure(const LabeledMultigraph& g, int n) {
  GraphVerdict v;
  std::vector<long> as_max(g.vertices.size(), 0);
  std::vector<long> as_min(g.vertices.size(), 0);
  for (const auto& e : g.edges) {
    if (e.min_vertex >= g.vertices.size() || e.max_vertex >= g.vertices.size())
      throw std::invalid_argument("edge refers to a missing vertex");
    if (e.length < 1) v.details.push_back({"edge_length", "nonpositive length", {edge_name(g, e)}});
    if (!(g.vertices[e.min_vertex].phi < g.vertices[e.max_vertex].phi))
      v.details.push_back({"edge_order", "minimum does not have smaller moment value", {edge_name(g, e)}});
    ++as_min[e.min_vertex];
    ++as_max[e.max_vertex];
  }
  for (std::size_t p = 0; p < g.vertices.size(); ++p) {
    const auto& vx = g.vertices[p];
    if (as_max[p] > vx.lambda)
      v.details.push_back({"edge_count", std::to_string(as_max[p]) + " edges end here, lambda = " +
                                             std::to_string(vx.lambda), {vx.id}});
    if (as_min[p] > n - vx.lambda)
      v.details.push_back({"edge_count", std::to_string(as_min[p]) + " edges start here, n - lambda = " +
                                             std::to_string(n - vx.lambda), {vx.id}});
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      const auto& a = g.edges[i];
      const auto& b = g.edges[j];
      if (a.min_vertex == b.min_vertex && a.max_vertex == b.max_vertex && std::gcd(a.length, b.length) != 1)
        v.details.push_back({"pairprime", "parallel edges with common factor", {edge_name(g, a), edge_name(g, b)}});
    }
  return v;
}

std::vector<std::vector<Weight>> weights_from_graph(const LabeledMultigraph& g, int n) {
  std::vector<std::vector<Weight>> w(g.vertices.size());
  for (const auto& e : g.edges) {
    w.at(e.min_vertex).push_back(e.length);
    w.at(e.max_vertex).push_back(-e.length);
  }
  for (std::size_t p = 0; p < w.size(); ++p) {
    long lambda = g.vertices[p].lambda;
    long pos = std::count_if(w[p].begin(), w[p].end(), [](Weight x) { return x > 0; });
    long neg = static_cast<long>(w[p].size()) - pos;
    if (pos > n - lambda || neg > lambda)
      throw std::invalid_argument("edge count exceeds index bound at " + g.vertices[p].id);
    w[p].insert(w[p].end(), n - lambda - pos, 1);
    w[p].insert(w[p].end(), lambda - neg, -1);
    std::sort(w[p].begin(), w[p].end());
  }
  return w;
}

std::vector<long> residues(const std::vector<Weight>& weights, long m) {
  std::vector<long> r;
  r.reserve(weights.size());
  for (Weight x : weights) r.push_back(positive_mod(x, m));
  std::sort(r.begin(), r.end());
  return r;
}

GraphVerdict check_compatibility(const LabeledMultigraph& g, int n) {
  GraphVerdict v;
  auto w = weights_from_graph(g, n);
  for (const auto& e : g.edges) {
    if (e.length == 1) continue;
    if (residues(w[e.min_vertex], e.length) != residues(w[e.max_vertex], e.length))
      v.details.push_back({"compatibility", "weights differ modulo " + std::to_string(e.length), {edge_name(g, e)}});
  }
  return v;
}

FixedPointData data_from_graph(const LabeledMultigraph& g, int n) {
  auto w = weights_from_graph(g, n);
  std::vector<FixedComponent> cs;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    cs.emplace_back(IsolatedFixedPoint{g.vertices[i].id, g.vertices[i].phi, w[i]});
  return FixedPointData(n, std::move(cs));
}

std::vector<LabeledMultigraph> induced_multigraphs(const FixedPointData& data) {
  LabeledMultigraph base;
  for (const auto& c : data.components()) {
    const auto* p = std::get_if<IsolatedFixedPoint>(&c);
    if (p == nullptr) throw DataError("multigraphs are defined for isolated fixed points", component_id(c));
    base.vertices.push_back({p->id, p->phi, component_index(c)});
  }
  // For each length k > 1: the points carrying +k and -k, with multiplicity.
  std::map<long, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> ends;
  for (std::size_t i = 0; i < data.size(); ++i)
    for (Weight w : std::get<IsolatedFixedPoint>(data[i]).weights) {
      if (w > 1) ends[w].first.push_back(i);
      if (w < -1) ends[-w].second.push_back(i);
    }
  std::vector<std::vector<std::vector<GraphEdge>>> options;
  for (auto& [k, lu] : ends) {
    auto& [lower, upper] = lu;
    if (lower.size() != upper.size()) return {};
    std::vector<std::vector<GraphEdge>> choices;
    std::sort(upper.begin(), upper.end());
    do {
      std::vector<GraphEdge> es;
      bool ok = true;
      for (std::size_t i = 0; i < lower.size() && ok; ++i) {
        ok = lower[i] != upper[i] && component_phi(data[lower[i]]) < component_phi(data[upper[i]]);
        es.push_back({lower[i], upper[i], k});
      }
      if (!ok) continue;
      std::sort(es.begin(), es.end());
      if (std::find(choices.begin(), choices.end(), es) == choices.end()) choices.push_back(std::move(es));
    } while (std::next_permutation(upper.begin(), upper.end()));
    if (choices.empty()) return {};
    options.push_back(std::move(choices));
  }
  std::vector<LabeledMultigraph> out;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    LabeledMultigraph g = base;
    for (std::size_t i = 0; i < options.size(); ++i)
      g.edges.insert(g.edges.end(), options[i][pick[i]].begin(), options[i][pick[i]].end());
    out.push_back(std::move(g));
    std::size_t i = 0;
    while (i < options.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == options.size()) break;
  }
  return out;
}

std::vector<GraphEdge> swap_image(const std::vector<GraphEdge>& edges) {
  std::vector<GraphEdge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back({3 - e.max_vertex, 3 - e.min_vertex, e.length});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

constexpr std::array<std::pair<std::size_t, std::size_t>, 6> kPairs{
    {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {0, 3}}};

std::size_t pair_slot(std::size_t i, std::size_t j) {
  for (std::size_t s = 0; s < kPairs.size(); ++s)
    if (kPairs[s].first == i && kPairs[s].second == j) return s;
  throw std::logic_error("bad pair");
}

// Non-increasing, pairwise coprime length tuples of size k within [2, max_length].
std::vector<std::vector<long>> coprime_tuples(std::size_t k, long max_length) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void(long)> rec = [&](long hi) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (long v = hi; v >= 2; --v) {
      bool ok = std::all_of(cur.begin(), cur.end(), [&](long u) { return std::gcd(u, v) == 1; });
      if (!ok) continue;
      cur.push_back(v);
      rec(v - 1);  // parallel edges of equal length share a factor
      cur.pop_back();
    }
  };
  rec(max_length);
  return out;
}

}  // namespace

void enumerate_graphs(long max_length, GraphMode mode, const std::function<void(const LabeledMultigraph&)>& visit,
                      unsigned parts, unsigned part) {
  if (parts == 0 || part >= parts) throw std::invalid_argument("bad enumeration slice");
  if (mode == GraphMode::kSimple) {
    for (long a = 1; a <= max_length; ++a) {
      if (static_cast<unsigned>(a - 1) % parts != part) continue;
      SimpleLengths l{a, 1, 1, 1, 1, 1};
      for (l[1] = 1; l[1] <= max_length; ++l[1])
        for (l[2] = 1; l[2] <= max_length; ++l[2])
          for (l[3] = 1; l[3] <= max_length; ++l[3])
            for (l[4] = 1; l[4] <= max_length; ++l[4])
              for (l[5] = 1; l[5] <= max_length; ++l[5]) {
                SimpleLengths img{l[2], l[1], l[0], l[4], l[3], l[5]};
                if (img < l) continue;
                visit(complete_graph(l));
              }
    }
    return;
  }

  std::array<std::vector<std::vector<long>>, 4> tuples;
  for (std::size_t k = 0; k < 4; ++k) tuples[k] = coprime_tuples(k, max_length);
  LabeledMultigraph g = LabeledMultigraph::chain(3);
  unsigned shape_id = 0;
  std::array<int, 6> c{};
  for (c[0] = 0; c[0] <= 3; ++c[0])
    for (c[1] = 0; c[1] <= 3; ++c[1])
      for (c[2] = 0; c[2] <= 3; ++c[2])
        for (c[3] = 0; c[3] <= 3; ++c[3])
          for (c[4] = 0; c[4] <= 3; ++c[4])
            for (c[5] = 0; c[5] <= 3; ++c[5]) {
              std::array<int, 4> out{}, in{};
              bool multi = false;
              for (std::size_t s = 0; s < 6; ++s) {
                out[kPairs[s].first] += c[s];
                in[kPairs[s].second] += c[s];
                multi = multi || c[s] > 1;
              }
              bool fits = multi;
              for (int v = 0; v < 4; ++v) fits = fits && out[v] <= 3 - v && in[v] <= v;
              for (std::size_t s = 0; s < 6; ++s) fits = fits && !tuples[c[s]].empty();
              if (!fits) continue;
              if (shape_id++ % parts != part) continue;
              std::array<std::size_t, 6> pick{};
              while (true) {
                g.edges.clear();
                for (std::size_t s = 0; s < 6; ++s)
                  for (long len : tuples[c[s]][pick[s]])
                    g.edges.push_back({kPairs[s].first, kPairs[s].second, len});
                std::sort(g.edges.begin(), g.edges.end());
                if (!(swap_image(g.edges) < g.edges)) visit(g);
                std::size_t s = 0;
                while (s < 6 && ++pick[s] == tuples[c[s]].size()) pick[s++] = 0;
                if (s == 6) break;
              }
            }
}

std::string to_string(SimpleCase c) {
  switch (c) {
    case SimpleCase::kA: return "a";
    case SimpleCase::kB: return "b";
    case SimpleCase::kC: return "c";
    case SimpleCase::kHypothesisViolation: return "hypothesis-violation";
    case SimpleCase::kNone: return "none";
  }
  return "?";
}

std::string to_string(MultiCase c) {
  switch (c) {
    case MultiCase::kX: return "x";
    case MultiCase::kY: return "y";
    case MultiCase::kZ: return "z";
    case MultiCase::kHypothesisViolation: return "hypothesis-violation";
    case MultiCase::kNone: return "none";
  }
  return "?";
}

LabeledMultigraph complete_graph(const SimpleLengths& l) {
  std::vector<GraphEdge> es;
  for (std::size_t s = 0; s < 6; ++s) es.push_back({kPairs[s].first, kPairs[s].second, l[s]});
  return LabeledMultigraph::chain(3, std::move(es));
}

bool simple_hypothesis(const SimpleLengths& l) {
  auto len = [&](std::size_t i, std::size_t j) { return l[pair_slot(std::min(i, j), std::max(i, j))]; };
  std::array<std::vector<Weight>, 4> w;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k)
      if (k != i) w[i].push_back(k > i ? len(i, k) : -len(i, k));
  for (const auto& [i, j] : kPairs) {
    long m = len(i, j);
    if (m > 1 && residues(w[i], m) != residues(w[j], m)) return false;
  }
  return true;
}

SimpleCase classify_simple(const SimpleLengths& l) {
  if (!simple_hypothesis(l)) return SimpleCase::kHypothesisViolation;
  auto [l01, l12, l23, l02, l13, l03] = l;
  if (l02 <= l01 + l12 && l13 <= l12 + l23 && l03 <= l01 + l13 && l03 <= l02 + l23) return SimpleCase::kA;
  if (l01 == l23 && l02 <= l12 + l03 && l13 <= l12 + l03 && l03 <= l01 + l12) return SimpleCase::kB;
  if (l02 == l13 && l03 <= l12) return SimpleCase::kC;
  return SimpleCase::kNone;
}

std::vector<std::string> multigraph_assumption_failures(const LabeledMultigraph& g) {
  std::vector<std::string> f;
  bool chain_ok = g.vertices.size() == 4;
  for (std::size_t i = 0; chain_ok && i < 4; ++i) chain_ok = g.vertices[i].lambda == static_cast<long>(i);
  if (!chain_ok) {
    f.push_back("vertices are not p0..p3 with indices 0,2,4,6");
    return f;
  }
  if (g.is_simple()) f.push_back("(1) graph is simple");
  for (const auto& e : g.edges)
    if (e.length == 1) {
      f.push_back("(1) edge of length 1");
      break;
    }
  GraphVerdict s = check_structure(g, 3);
  for (const auto& d : s.details) {
    if (d.check == "edge_count" || d.check == "edge_order") f.push_back("(2) " + d.detail);
    if (d.check == "pairprime") f.push_back("(4) parallel edges not coprime");
  }
  bool counts_ok = std::none_of(s.details.begin(), s.details.end(), [](const Violation& d) {
    return d.check == "edge_count";
  });
  if (counts_ok && !check_compatibility(g, 3).valid()) f.push_back("(3) weights incompatible");
  return f;
}

namespace {

// Template edge with length 0 matches any length on that pair.
bool matches_template(std::vector<GraphEdge> edges, const std::vector<GraphEdge>& tmpl) {
  if (edges.size() != tmpl.size()) return false;
  std::vector<GraphEdge> wild;
  for (const auto& t : tmpl) {
    if (t.length == 0) {
      wild.push_back(t);
      continue;
    }
    auto it = std::find(edges.begin(), edges.end(), t);
    if (it == edges.end()) return false;
    edges.erase(it);
  }
  for (const auto& t : wild) {
    auto it = std::find_if(edges.begin(), edges.end(), [&](const GraphEdge& e) {
      return e.min_vertex == t.min_vertex && e.max_vertex == t.max_vertex;
    });
    if (it == edges.end()) return false;
    edges.erase(it);
  }
  return edges.empty();
}

}  // namespace

MultiCase classify_multigraph(const LabeledMultigraph& g) {
  if (!multigraph_assumption_failures(g).empty()) return MultiCase::kHypothesisViolation;
  std::vector<GraphEdge> e = g.edges;
  std::sort(e.begin(), e.end());
  std::vector<GraphEdge> img = swap_image(e);
  auto either = [&](const std::vector<GraphEdge>& t) { return matches_template(e, t) || matches_template(img, t); };
  if (either({{0, 3, 3}, {0, 3, 2}}) || either({{0, 3, 3}, {0, 3, 2}, {1, 2, 0}})) return MultiCase::kX;
  if (either({{1, 2, 0}, {1, 2, 2}, {0, 1, 2}, {2, 3, 2}, {0, 3, 2}})) return MultiCase::kY;
  if (either({{0, 3, 4}, {0, 2, 3}, {0, 2, 2}, {2, 3, 2}})) return MultiCase::kZ;
  return MultiCase::kNone;
}

TwoEdgesResult twoedges_facts(long l, long lp, long x, long y) {
  if (lp < 1 || l < lp || std::gcd(l, lp) != 1)
    throw std::invalid_argument("twoedges requires coprime l >= l' >= 1");
  TwoEdgesResult r;
  std::vector<Weight> a{l, lp, x};
  std::vector<Weight> b{-l, -lp, y};
  r.hypothesis = residues(a, l) == residues(b, l) && residues(a, lp) == residues(b, lp);
  if (!r.hypothesis) return r;
  auto fail = [&](const std::string& s) { r.violated.push_back(s); };
  auto odd = [](long v) { return v % 2 != 0; };
  auto congruent = [&](long u, long v) { return positive_mod(u - v, l) == 0; };
  if (lp != 1) {
    if (congruent(2 * lp, 0)) fail("(i) 2l' = 0 mod l");
    if (congruent(x, y)) fail("(i) x = y mod l");
    if (!congruent(x + lp, 0)) fail("(i) x + l' != 0 mod l");
    if (!congruent(y, lp)) fail("(i) y != l' mod l");
  }
  // (ii) and its mirror image under (x, y) -> (-y, -x).
  auto fact_ii = [&](long u, long v, const char* tag) {
    if (!(l >= u && u > 0)) return;
    bool ok = (lp == 2 && l - u == 2 && odd(u) && odd(v)) || (lp == 1 && l - u == 1) || (lp == 1 && u == l);
    if (!ok) fail(tag);
  };
  fact_ii(x, y, "(ii) l >= x > 0");
  fact_ii(-y, -x, "(ii) l >= -y > 0");
  // (iii) and its mirror image.
  auto fact_iii = [&](long v, const char* tag) {
    if (!(l >= v && v > 0)) return;
    bool ok = (lp == 2 && v == 2 && odd(l)) || (lp == 1 && v == 1) || (lp == 1 && l == 2 && v == 2);
    if (!ok) fail(tag);
  };
  fact_iii(y, "(iii) l >= y > 0");
  fact_iii(-x, "(iii) l >= -x > 0");
  return r;
}

}  // namespace hamfix
