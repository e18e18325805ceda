#include <numeric>
#include <sstream>

#include "hamfix/multigraph.hpp"
#include "hamfix/parallel.hpp"

namespace hamfix {

namespace {

std::string describe(const LabeledMultigraph& g) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    os << (i ? ", " : "") << "e" << e.min_vertex << e.max_vertex << ":" << e.length;
  }
  os << "}";
  return os.str();
}

struct Slot {
  std::size_t examined = 0;
  std::size_t hypothesis = 0;
  std::vector<std::string> counterexamples;
};

LemmaRun merge(std::string name, long bound, const std::vector<Slot>& slots) {
  LemmaRun run{std::move(name), bound, 0, 0, {}};
  for (const auto& s : slots) {
    run.examined += s.examined;
    run.hypothesis_count += s.hypothesis;
    run.counterexamples.insert(run.counterexamples.end(), s.counterexamples.begin(), s.counterexamples.end());
  }
  return run;
}

}  // namespace

LemmaRun verify_tech_graph(long bound, unsigned threads) {
  std::vector<Slot> slots(static_cast<std::size_t>(bound));
  parallel_for(static_cast<unsigned>(bound), threads, [&](unsigned task) {
    Slot& slot = slots[task];
    SimpleLengths l{static_cast<long>(task) + 1, 1, 1, 1, 1, 1};
    for (l[1] = 1; l[1] <= bound; ++l[1])
      for (l[2] = 1; l[2] <= bound; ++l[2])
        for (l[3] = 1; l[3] <= bound; ++l[3])
          for (l[4] = 1; l[4] <= bound; ++l[4])
            for (l[5] = 1; l[5] <= bound; ++l[5]) {
              ++slot.examined;
              SimpleCase c = classify_simple(l);
              if (c == SimpleCase::kHypothesisViolation) continue;
              ++slot.hypothesis;
              if (c == SimpleCase::kNone) {
                std::ostringstream os;
                os << "(" << l[0] << "," << l[1] << "," << l[2] << "," << l[3] << "," << l[4] << "," << l[5] << ")";
                slot.counterexamples.push_back(os.str());
              }
            }
  });
  return merge("tech-graph", bound, slots);
}

LemmaRun verify_techmult(long bound, unsigned threads) {
  const unsigned parts = 64;
  std::vector<Slot> slots(parts);
  parallel_for(parts, threads, [&](unsigned part) {
    Slot& slot = slots[part];
    enumerate_graphs(
        bound, GraphMode::kMulti,
        [&](const LabeledMultigraph& g) {
          ++slot.examined;
          MultiCase c = classify_multigraph(g);
          if (c == MultiCase::kHypothesisViolation) return;
          ++slot.hypothesis;
          if (c == MultiCase::kNone) slot.counterexamples.push_back(describe(g));
        },
        parts, part);
  });
  return merge("techmult", bound, slots);
}

LemmaRun verify_twoedges(long bound, unsigned threads) {
  std::vector<Slot> slots(static_cast<std::size_t>(bound));
  parallel_for(static_cast<unsigned>(bound), threads, [&](unsigned task) {
    Slot& slot = slots[task];
    long l = static_cast<long>(task) + 1;
    for (long lp = 1; lp <= l; ++lp) {
      if (std::gcd(l, lp) != 1) continue;
      for (long x = -bound; x <= bound; ++x)
        for (long y = -bound; y <= bound; ++y) {
          if (x == 0 || y == 0) continue;
          ++slot.examined;
          TwoEdgesResult r = twoedges_facts(l, lp, x, y);
          if (!r.hypothesis) continue;
          ++slot.hypothesis;
          if (!r.violated.empty()) {
            std::ostringstream os;
            os << "(l,l',x,y)=(" << l << "," << lp << "," << x << "," << y << ") violates " << r.violated.front();
            slot.counterexamples.push_back(os.str());
          }
        }
    }
  });
  return merge("twoedges", bound, slots);
}

}  // namespace hamfix
