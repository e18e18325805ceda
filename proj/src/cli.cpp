#include "hamfix/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hamfix/io.hpp"
#include "hamfix/parallel.hpp"

namespace hamfix {

namespace {

struct Options {
  std::string format = "text";
  std::string out_file;
  bool strict = false;
};

struct Outcome_ {
  int code = 0;
  Report report;
};

// "-" reads standard input.
std::string read_file(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  os << in.rdbuf();
  return os.str();
}

Json check_json(const std::string& check, const CheckReport& r) {
  std::string detail = "ok";
  if (!r.passed()) detail = r.violations.front().detail;
  return {{"check", check}, {"passed", r.passed()}, {"detail", detail}};
}

Outcome_ run_verify(const InputDocument& doc) {
  const FixedPointData& data = doc.data;
  Json evidence = Json::array();
  evidence.push_back(check_json("index_order", check_index_order(data)));
  evidence.push_back(check_json("index_bound", check_index_bound(data)));
  evidence.push_back(check_json("gamma_order", check_gamma_order(data)));
  if (doc.graph) {
    GraphVerdict s = check_structure(*doc.graph, data.half_dim());
    GraphVerdict c = s.valid() ? check_compatibility(*doc.graph, data.half_dim()) : s;
    std::string detail = c.valid() ? "ok" : c.details.front().check + ": " + c.details.front().detail;
    evidence.push_back({{"check", "compatibility"}, {"passed", c.valid()}, {"detail", detail}});
  }
  const OmegaMap* omega = doc.omega.empty() ? nullptr : &doc.omega;
  VanishingReport van = vanishing_suite(data, omega);
  std::string van_detail = std::to_string(van.words_checked) + " integrals vanish";
  if (!van.passed()) van_detail = "integral of " + van.nonzero.front().first.str() + " = " + van.nonzero.front().second.str();
  evidence.push_back({{"check", "vanishing"}, {"passed", van.passed()}, {"detail", van_detail}});

  bool six_points = data.half_dim() == 3 && data.all_isolated() && data.size() == 4;
  Json invariants = Json::object();
  invariants["betti"] = betti_numbers(data);
  invariants["chi_y"] = chi_y_fixed(data).str("y");
  if (six_points) {
    try {
      LaurentPoly f = chi_y_fixed(data), c = chi_y_chern(data);
      evidence.push_back({{"check", "chi_y"}, {"passed", f == c}, {"detail", f.str("y") + " vs " + c.str("y")}});
    } catch (const std::exception& e) {
      evidence.push_back({{"check", "chi_y"}, {"passed", false}, {"detail", e.what()}});
    }
    try {
      RingPresentation ring = ring_presentation(data);
      ChernVector chern = total_chern(data);
      WuResult wu = wu_check(ring, chern);
      evidence.push_back({{"check", "wu"}, {"passed", wu.passed}, {"detail", wu.detail}});
      invariants["ring"] = ring.str();
      invariants["chern"] = chern.vector_str();
    } catch (const std::exception& e) {
      evidence.push_back({{"check", "wu"}, {"passed", false}, {"detail", e.what()}});
    }
  }
  bool all = true;
  for (const auto& e : evidence) all = all && e["passed"].get<bool>();
  Outcome_ o;
  o.report.body["result"] = all ? "pass" : "fail";
  o.report.body["evidence"] = evidence;
  o.report.body["invariants"] = invariants;
  o.code = all ? 0 : 1;
  return o;
}

void emit(const Report& r, const Options& opt, std::ostream& out) {
  std::string text = opt.format == "json" ? r.json() : r.text();
  if (opt.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.out_file, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + opt.out_file);
  f << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed-point data of Hamiltonian circle actions: checks, classification and lemma verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", opt.out_file, "Write the report to a file");
  app.add_flag("--strict", opt.strict, "Reject unknown fields in input documents");

  std::string file;
  auto* verify = app.add_subcommand("verify", "Validate a document and run vanishing, chi_y and Wu checks");
  verify->add_option("file", file, "Input document")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Classify six-dimensional fixed-point data");
  classify_cmd->add_option("file", file, "Input document")->required();

  long max_weight = 12;
  std::string mode = "multi";
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate multigraphs and classify every weight system");
  enumerate->add_option("--max-weight", max_weight, "Largest edge length")->check(CLI::Range(1L, 64L));
  enumerate->add_option("--mode", mode, "Graph family")->check(CLI::IsMember({"simple", "multi"}));

  long m = 0, n = 0, k = 0;
  auto* builtin = app.add_subcommand("builtin", "Emit circle-subgroup data of a standard action");
  builtin->require_subcommand(1);
  auto* cp3 = builtin->add_subcommand("cp3", "Circle in CP^3 with exponents (0, m, m+n, m+n+k)");
  cp3->add_option("--m", m)->required();
  cp3->add_option("--n", n)->required();
  cp3->add_option("--k", k)->required();
  auto* gras = builtin->add_subcommand("gras", "Circle in the Grassmannian with weights m < n");
  gras->add_option("--m", m)->required();
  gras->add_option("--n", n)->required();

  long tech_graph = 0, techmult = 0, twoedges = 0;
  auto* lemmas = app.add_subcommand("lemmas", "Brute-force verification of the graph lemmas");
  auto* o1 = lemmas->add_option("--tech-graph", tech_graph, "Length bound for complete graphs");
  auto* o2 = lemmas->add_option("--techmult", techmult, "Length bound for multigraphs");
  auto* o3 = lemmas->add_option("--twoedges", twoedges, "Bound for the two-edge residues");
  o1->excludes(o2)->excludes(o3);
  o2->excludes(o3);
  lemmas->require_option(1);

  long l = 0;
  auto* ellipsoid = app.add_subcommand("ellipsoid", "Volume ratio of the reduced-space ellipsoid");
  ellipsoid->add_option("--l", l)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    Outcome_ o;
    unsigned threads = default_thread_count();
    if (verify->parsed() || classify_cmd->parsed()) {
      InputDocument doc = parse_input(read_file(file), opt.strict);
      if (verify->parsed()) {
        o = run_verify(doc);
      } else {
        if (doc.data.half_dim() != 3) throw DataError("classification is defined in dimension 6");
        Verdict v = classify(doc.data, doc.graph ? &*doc.graph : nullptr);
        o.report = classification_report(doc.data, v);
        o.code = v.outcome == Outcome::kInconsistent ? 1 : 0;
      }
    } else if (enumerate->parsed()) {
      auto res = enumerate_and_classify(max_weight, mode == "simple" ? GraphMode::kSimple : GraphMode::kMulti, threads);
      o.report = enumeration_report(res);
    } else if (builtin->parsed()) {
      FixedPointData data = cp3->parsed() ? cp3_circle_data(m, n, k) : grassmannian_circle_data(m, n);
      std::string text = serialize_input(document_for(data));
      if (opt.out_file.empty()) {
        out << text;
      } else {
        std::ofstream f(opt.out_file, std::ios::binary);
        f << text;
      }
      return 0;
    } else if (lemmas->parsed()) {
      LemmaRun run = o1->count() ? verify_tech_graph(tech_graph, threads)
                     : o2->count() ? verify_techmult(techmult, threads)
                                   : verify_twoedges(twoedges, threads);
      o.report = lemma_report(run);
      o.code = run.counterexamples.empty() ? 0 : 1;
    } else if (ellipsoid->parsed()) {
      o.report.body["l"] = l;
      o.report.body["volume_ratio"] = ellipsoid_volume_ratio(l).str();
    }
    emit(o.report, opt, out);
    return o.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DataError& e) {
    err << "error: " << e.what();
    if (!e.component().empty()) err << " (component " << e.component() << ")";
    err << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hamfix"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hamfix
