#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamfix/consistency.hpp"

namespace hamfix {

enum class Outcome { kA, kB, kC, kD, kInconsistent };
std::string to_string(Outcome o);

struct Evidence {
  std::string check;
  bool passed = false;
  std::string detail;
};

struct Verdict {
  Outcome outcome = Outcome::kInconsistent;
  std::vector<Evidence> evidence;
  std::optional<std::array<long, 3>> cp3_params;   // case A: (m, n, k)
  std::optional<std::array<long, 2>> gras_params;  // case B: (a, b)
  std::optional<RingPresentation> ring;
  std::optional<ChernVector> chern;
  // Id of the first failed check, empty for survivors.
  std::string failed_check() const;
};

// Dimension-6 data with one isolated point per index. The multigraph is
// induced from the weights unless one is supplied.
Verdict classify(const FixedPointData& data, const LabeledMultigraph* graph = nullptr);

// Standard circle actions.
// CP^3 with exponents (0, m, m+n, m+n+k); moment value of p_i is its exponent.
FixedPointData cp3_circle_data(long m, long n, long k);
// Grassmannian of oriented 2-planes in R^5 with circle weights 0 < a < b on the two
// complex coordinates; moment values -b, -a, a, b.
FixedPointData grassmannian_circle_data(long a, long b);
// Weights {1,2,3}, {1,-1,l}, {1,-1,-l}, {-1,-2,-3}; moment values 0, 1, 2, 3.
FixedPointData x_family_data(long l);

struct EnumerationEntry {
  std::vector<std::vector<Weight>> weights;  // p0..p3
  Verdict verdict;
  std::optional<long> x_family_l;  // set when the weights are x_family_data(l)
};

struct EnumerationResult {
  GraphMode mode = GraphMode::kMulti;
  long max_weight = 0;
  std::size_t graphs = 0;
  std::vector<EnumerationEntry> entries;  // sorted by weights
  std::vector<const EnumerationEntry*> survivors() const;
};

EnumerationResult enumerate_and_classify(long max_weight, GraphMode mode, unsigned threads);

// ---- Surface components in dimension 6 and 4. ----

using Params = std::map<std::string, long>;

// Case ids: "I" (minimal sphere, points {-m,-m,l}, {-n,-n,-l}), "I-shared"
// (points {-m,-n,l}, {-m,-n,-l}), "II" (index-2 sphere between p0 = {n,n,l} or
// {l1,l2,l3} and its negative), "III" (two spheres). Throws std::invalid_argument
// on unknown case or missing parameter.
FixedPointData surface_case_data(const std::string& case_id, const Params& params);
std::vector<std::pair<std::string, Rational>> verify_surface_equations(const std::string& case_id,
                                                                       const Params& params);

// a = constant + b_coefficient * b, from the vanishing of the integral of 1.
struct EulerRelation {
  Rational constant;
  Rational b_coefficient;
};

// Configs: "surface+1pt" (params w1, w2; default -1, -1), "surface+2pts" (param l),
// "surface+surface".
EulerRelation fourdim_euler_check(const std::string& config, const Params& params = {});

}  // namespace hamfix
