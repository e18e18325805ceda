#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "hamfix/fixed_data.hpp"

namespace hamfix {

struct GraphVertex {
  std::string id;
  Rational phi;
  long lambda = 0;  // half the Morse index
  long index() const { return 2 * lambda; }
};

struct GraphEdge {
  std::size_t min_vertex = 0;
  std::size_t max_vertex = 0;
  long length = 1;
  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

struct LabeledMultigraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;

  // Vertices p0..p{n} with lambda = phi = position.
  static LabeledMultigraph chain(int n, std::vector<GraphEdge> edges = {});
  bool is_simple() const;
};

struct GraphVerdict {
  std::vector<Violation> details;
  bool valid() const { return details.empty(); }
};

// Phi order along edges, edge counts against indices, coprime parallel edges.
GraphVerdict check_structure(const LabeledMultigraph& g, int n);

// Weight multiset at every vertex (sorted), in vertex order. Throws
// std::invalid_argument when an edge count exceeds the index bounds.
std::vector<std::vector<Weight>> weights_from_graph(const LabeledMultigraph& g, int n);

// Weights at the two ends of every edge agree modulo its length.
GraphVerdict check_compatibility(const LabeledMultigraph& g, int n);

// Sorted residues of a weight multiset modulo m.
std::vector<long> residues(const std::vector<Weight>& weights, long m);

// Data with the graph's vertices as isolated fixed points.
FixedPointData data_from_graph(const LabeledMultigraph& g, int n);

// All multigraphs whose weights equal the given isolated-point data, obtained
// by pairing each weight k > 1 at a lower point with a weight -k at a higher one.
std::vector<LabeledMultigraph> induced_multigraphs(const FixedPointData& data);

// ---- Enumeration on four index-ordered vertices (dimension 6). ----

enum class GraphMode { kSimple, kMulti };

// Image under p0 <-> p3, p1 <-> p2, edges sorted.
std::vector<GraphEdge> swap_image(const std::vector<GraphEdge>& edges);

// Calls visit for every graph of the requested kind with lengths <= max_length,
// once per orbit of the vertex swap. Simple mode yields complete graphs with
// lengths in [1, max_length]; multi mode yields non-simple graphs with lengths in
// [2, max_length] satisfying the edge-count bounds and coprimality. Work is split
// into `parts` disjoint slices; only slice `part` is produced.
void enumerate_graphs(long max_length, GraphMode mode, const std::function<void(const LabeledMultigraph&)>& visit,
                      unsigned parts = 1, unsigned part = 0);

// ---- Decision procedures for the structural lemmas. ----

// Lengths in the order l01, l12, l23, l02, l13, l03.
using SimpleLengths = std::array<long, 6>;

enum class SimpleCase { kA, kB, kC, kHypothesisViolation, kNone };
enum class MultiCase { kX, kY, kZ, kHypothesisViolation, kNone };

std::string to_string(SimpleCase c);
std::string to_string(MultiCase c);

LabeledMultigraph complete_graph(const SimpleLengths& l);
bool simple_hypothesis(const SimpleLengths& l);
SimpleCase classify_simple(const SimpleLengths& l);

// Which of the assumptions (1)-(4) fail; empty when all hold.
std::vector<std::string> multigraph_assumption_failures(const LabeledMultigraph& g);
MultiCase classify_multigraph(const LabeledMultigraph& g);

struct TwoEdgesResult {
  bool hypothesis = false;
  std::vector<std::string> violated;  // conclusions that fail while the hypothesis holds
};

// Requires gcd(l, lp) = 1 and l >= lp >= 1; throws std::invalid_argument otherwise.
TwoEdgesResult twoedges_facts(long l, long lp, long x, long y);

struct LemmaRun {
  std::string lemma;
  long bound = 0;
  std::size_t examined = 0;
  std::size_t hypothesis_count = 0;
  std::vector<std::string> counterexamples;
};

LemmaRun verify_tech_graph(long bound, unsigned threads);
LemmaRun verify_techmult(long bound, unsigned threads);
LemmaRun verify_twoedges(long bound, unsigned threads);

}  // namespace hamfix
