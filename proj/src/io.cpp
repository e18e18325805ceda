#include "hamfix/io.hpp"

#include <set>
#include <sstream>

namespace hamfix {

namespace {

using Plain = nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

void reject_unknown(const Plain& obj, const std::set<std::string>& allowed, const std::string& where,
                    const std::string& component, bool strict) {
  if (!strict) return;
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw DataError("unknown field \"" + key + "\" in " + where, component);
}

const Plain& field(const Plain& obj, const std::string& key, const std::string& component) {
  auto it = obj.find(key);
  if (it == obj.end()) throw DataError("missing field \"" + key + "\"", component);
  return *it;
}

std::string string_field(const Plain& obj, const std::string& key, const std::string& component) {
  const Plain& v = field(obj, key, component);
  if (!v.is_string()) throw DataError("field \"" + key + "\" must be a string", component);
  return v.get<std::string>();
}

long integer_value(const Plain& v, const std::string& what, const std::string& component) {
  if (!v.is_number_integer()) throw DataError(what + " must be an integer", component);
  return v.get<long>();
}

Rational rational_field(const Plain& obj, const std::string& key, const std::string& component) {
  std::string s = string_field(obj, key, component);
  try {
    return Rational::parse(s);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what(), component);
  }
}

}  // namespace

InputDocument parse_input(std::string_view text, bool strict) {
  Plain root;
  try {
    root = Plain::parse(text.begin(), text.end());
  } catch (const Plain::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    std::string msg = e.what();
    auto pos = msg.find("syntax error");
    throw ParseError(pos == std::string::npos ? msg : msg.substr(pos), line, column);
  }
  if (!root.is_object()) throw DataError("document must be a JSON object");
  reject_unknown(root, {"version", "half_dim", "components", "edges", "omega"}, "document", "", strict);
  std::string version = root.contains("version") ? string_field(root, "version", "") : "1";
  if (version != "1") throw DataError("unsupported version \"" + version + "\"");
  long half_dim = integer_value(field(root, "half_dim", ""), "half_dim", "");
  const Plain& comps = field(root, "components", "");
  if (!comps.is_array()) throw DataError("components must be an array");

  std::vector<FixedComponent> cs;
  for (const auto& c : comps) {
    if (!c.is_object()) throw DataError("component must be an object");
    std::string id = c.contains("id") && c["id"].is_string() ? c["id"].get<std::string>() : "";
    if (id.empty()) throw DataError("component without a string id");
    std::string kind = string_field(c, "kind", id);
    Rational phi = rational_field(c, "phi", id);
    if (kind == "point") {
      reject_unknown(c, {"kind", "id", "phi", "weights"}, "point", id, strict);
      const Plain& ws = field(c, "weights", id);
      if (!ws.is_array()) throw DataError("weights must be an array", id);
      std::vector<Weight> weights;
      for (const auto& w : ws) weights.push_back(integer_value(w, "weight", id));
      cs.emplace_back(IsolatedFixedPoint{id, phi, std::move(weights)});
    } else if (kind == "surface") {
      reject_unknown(c, {"kind", "id", "phi", "genus", "normal"}, "surface", id, strict);
      long genus = integer_value(field(c, "genus", id), "genus", id);
      const Plain& ns = field(c, "normal", id);
      if (!ns.is_array()) throw DataError("normal must be an array", id);
      std::vector<NormalPair> normal;
      for (const auto& np : ns) {
        if (!np.is_object()) throw DataError("normal entry must be an object", id);
        reject_unknown(np, {"weight", "degree"}, "normal entry", id, strict);
        normal.push_back({integer_value(field(np, "weight", id), "normal weight", id),
                          integer_value(field(np, "degree", id), "normal degree", id)});
      }
      cs.emplace_back(SurfaceFixedComponent{id, phi, genus, std::move(normal)});
    } else {
      throw DataError("unknown kind \"" + kind + "\"", id);
    }
  }
  InputDocument doc{version, FixedPointData(static_cast<int>(half_dim), std::move(cs)), std::nullopt, {}};

  if (root.contains("edges")) {
    const Plain& es = root["edges"];
    if (!es.is_array()) throw DataError("edges must be an array");
    LabeledMultigraph g;
    for (const auto& c : doc.data.components()) {
      if (!std::holds_alternative<IsolatedFixedPoint>(c))
        throw DataError("edges are only supported for isolated fixed points", component_id(c));
      g.vertices.push_back({component_id(c), component_phi(c), component_index(c)});
    }
    for (const auto& e : es) {
      if (!e.is_object()) throw DataError("edge must be an object");
      reject_unknown(e, {"min", "max", "length"}, "edge", "", strict);
      std::string lo = string_field(e, "min", ""), hi = string_field(e, "max", "");
      long len = integer_value(field(e, "length", ""), "edge length", "");
      if (len < 1) throw DataError("edge length must be positive", lo);
      g.edges.push_back({doc.data.find(lo), doc.data.find(hi), len});
    }
    doc.graph = std::move(g);
  }
  if (root.contains("omega")) {
    const Plain& om = root["omega"];
    if (!om.is_object()) throw DataError("omega must be an object");
    for (const auto& [id, value] : om.items()) {
      doc.data.find(id);
      if (!value.is_string()) throw DataError("area must be a rational string", id);
      try {
        doc.omega[id] = Rational::parse(value.get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw DataError(e.what(), id);
      }
    }
  }
  return doc;
}

Json to_json(const InputDocument& doc) {
  Json j;
  j["version"] = doc.version;
  j["half_dim"] = doc.data.half_dim();
  j["components"] = Json::array();
  for (const auto& c : doc.data.components()) {
    Json o;
    if (const auto* p = std::get_if<IsolatedFixedPoint>(&c)) {
      o["kind"] = "point";
      o["id"] = p->id;
      o["phi"] = p->phi.str();
      o["weights"] = p->weights;
    } else {
      const auto& s = std::get<SurfaceFixedComponent>(c);
      o["kind"] = "surface";
      o["id"] = s.id;
      o["phi"] = s.phi.str();
      o["genus"] = s.genus;
      o["normal"] = Json::array();
      for (const auto& np : s.normal) o["normal"].push_back({{"weight", np.weight}, {"degree", np.degree}});
    }
    j["components"].push_back(std::move(o));
  }
  if (doc.graph) {
    j["edges"] = Json::array();
    for (const auto& e : doc.graph->edges)
      j["edges"].push_back({{"min", doc.graph->vertices[e.min_vertex].id},
                            {"max", doc.graph->vertices[e.max_vertex].id},
                            {"length", e.length}});
  }
  if (!doc.omega.empty()) {
    j["omega"] = Json::object();
    for (const auto& [id, area] : doc.omega) j["omega"][id] = area.str();
  }
  return j;
}

std::string serialize_input(const InputDocument& doc) { return to_json(doc).dump(2) + "\n"; }

InputDocument document_for(const FixedPointData& data) { return InputDocument{"1", data, std::nullopt, {}}; }

std::string Report::json() const { return body.dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Arrays of scalars, or of arrays of scalars, print on one line.
bool is_flat_array(const Json& v, int depth = 0) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_object() || (x.is_array() && (depth > 0 || !is_flat_array(x, depth + 1)))) return false;
  return true;
}

void render(const Json& v, int indent, std::ostringstream& os) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (value.is_structured() && !is_flat_array(value)) {
        os << pad << key << ":\n";
        render(value, indent + 2, os);
      } else if (value.is_array()) {
        os << pad << key << ": " << value.dump() << "\n";
      } else {
        os << pad << key << ": " << scalar_text(value) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_object() && x.contains("check")) {
        os << pad << (x.value("passed", false) ? "[pass] " : "[FAIL] ") << x["check"].get<std::string>() << ": "
           << scalar_text(x["detail"]) << "\n";
      } else if (is_flat_array(x)) {
        os << pad << "- " << x.dump() << "\n";
      } else if (x.is_structured()) {
        os << pad << "-\n";
        render(x, indent + 2, os);
      } else {
        os << pad << "- " << scalar_text(x) << "\n";
      }
    }
  } else {
    os << pad << scalar_text(v) << "\n";
  }
}

LaurentPoly total_chern_restriction(const IsolatedFixedPoint& p) {
  LaurentPoly c;
  auto sigma = elementary_symmetric_all(p.weights);
  for (std::size_t k = 0; k < sigma.size(); ++k) c.add_term(static_cast<int>(k), Rational(sigma[k]));
  return c;
}

}  // namespace

std::string Report::text() const {
  std::ostringstream os;
  render(body, 0, os);
  return os.str();
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["verdict"] = to_string(v.outcome);
  if (v.cp3_params) j["cp3_params"] = *v.cp3_params;
  if (v.gras_params) j["grassmannian_params"] = *v.gras_params;
  if (v.ring) {
    j["ring"] = v.ring->str();
    j["relation"] = v.ring->relation();
  }
  if (v.chern) {
    j["chern"] = v.chern->vector_str();
    j["total_chern"] = v.chern->str(*v.ring);
  }
  j["evidence"] = Json::array();
  for (const auto& e : v.evidence) j["evidence"].push_back({{"check", e.check}, {"passed", e.passed}, {"detail", e.detail}});
  return j;
}

Report classification_report(const FixedPointData& data, const Verdict& v) {
  Report r;
  r.body = verdict_json(v);
  r.body["betti"] = betti_numbers(data);
  r.body["chi_y"] = chi_y_fixed(data).str("y");
  Json integrals = Json::object();
  for (const auto& w : top_degree_words(data.half_dim())) integrals[w.str()] = abbv_integrate(data, w).str();
  r.body["integrals"] = integrals;
  if (v.outcome != Outcome::kInconsistent) {
    CanonicalBasis basis = canonical_basis(data, BasisSign::kPositiveLeading);
    Json gens = Json::object();
    for (const auto& cls : basis.classes) {
      Json row = Json::object();
      for (std::size_t k = 0; k < basis.point_ids.size(); ++k) row[basis.point_ids[k]] = cls.restrictions[k].str();
      gens["alpha_" + std::to_string(cls.index)] = row;
    }
    r.body["generators"] = gens;
    Json cr = Json::object();
    for (const auto* p : points_by_index(data)) cr[p->id] = total_chern_restriction(*p).str();
    r.body["chern_restrictions"] = cr;
  }
  return r;
}

Report enumeration_report(const EnumerationResult& res) {
  Report r;
  r.body["mode"] = res.mode == GraphMode::kSimple ? "simple" : "multi";
  r.body["max_weight"] = res.max_weight;
  r.body["graphs"] = res.graphs;
  r.body["weight_systems"] = res.entries.size();
  std::map<std::string, std::size_t> by_check;
  Json survivors = Json::array();
  Json xfam = Json::array();
  for (const auto& e : res.entries) {
    std::string failed = e.verdict.failed_check();
    if (failed.empty()) {
      Json s;
      s["outcome"] = to_string(e.verdict.outcome);
      s["weights"] = e.weights;
      if (e.verdict.ring) s["relation"] = e.verdict.ring->relation();
      if (e.verdict.chern) s["chern"] = e.verdict.chern->vector_str();
      survivors.push_back(std::move(s));
    } else {
      ++by_check[failed];
    }
    if (e.x_family_l) {
      const Evidence* ev = nullptr;
      for (const auto& x : e.verdict.evidence)
        if (!x.passed) ev = &x;
      xfam.push_back({{"l", *e.x_family_l},
                      {"outcome", to_string(e.verdict.outcome)},
                      {"failed_check", failed.empty() ? "none" : failed},
                      {"detail", ev ? ev->detail : "survives"}});
    }
  }
  r.body["survivors"] = survivors;
  Json excl = Json::object();
  for (const auto& [check, n] : by_check) excl[check] = n;
  r.body["excluded_by"] = excl;
  r.body["x_family"] = xfam;
  return r;
}

Report lemma_report(const LemmaRun& run) {
  Report r;
  r.body["lemma"] = run.lemma;
  r.body["bound"] = run.bound;
  r.body["examined"] = run.examined;
  r.body["hypothesis_satisfying"] = run.hypothesis_count;
  r.body["counterexamples"] = run.counterexamples.size();
  r.body["summary"] = std::to_string(run.counterexamples.size()) + " counterexamples / " +
                      std::to_string(run.hypothesis_count) + " hypothesis-satisfying " +
                      (run.lemma == "techmult" ? "multigraphs" : "tuples");
  if (!run.counterexamples.empty()) r.body["witnesses"] = run.counterexamples;
  return r;
}

}  // namespace hamfix
