#pragma once

#include <string>
#include <vector>

#include "hamfix/localization.hpp"
#include "hamfix/multigraph.hpp"

namespace hamfix {

// Sign convention of the generators. kEulerClass puts Lambda^- t^i on the
// diagonal (the equivariant Euler class of the negative normal bundle).
// kPositiveLeading multiplies alpha_i by the sign of Lambda^-, so the diagonal
// entry is |Lambda^-| t^i.
enum class BasisSign { kEulerClass, kPositiveLeading };

struct BasisClass {
  std::size_t index = 0;
  std::vector<LaurentPoly> restrictions;  // aligned with CanonicalBasis::point_ids
};

struct CanonicalBasis {
  std::vector<std::string> point_ids;  // p_0 .. p_n by index
  std::vector<BasisClass> classes;     // alpha_0 .. alpha_n
};

// Requires one isolated point per index and pairwise distinct Gamma.
CanonicalBasis canonical_basis(const FixedPointData& data, BasisSign sign = BasisSign::kEulerClass);

// classes[i] is beta_{n-i}: Lambda^+ on the diagonal, vanishing at every p_k with k > i.
CanonicalBasis dual_basis(const FixedPointData& data);

// The basis element as an EquivariantClass over data.
EquivariantClass as_class(const FixedPointData& data, const CanonicalBasis& basis, std::size_t i);

struct NonIntegralEntry {
  std::size_t index = 0;
  std::string point;
  LaurentPoly value;
};

std::vector<NonIntegralEntry> integrality_check(const CanonicalBasis& basis);

// Coefficients x_i with cls = sum x_i alpha_i, by forward substitution.
std::vector<LaurentPoly> express_in_basis(const FixedPointData& data, const EquivariantClass& cls,
                                          const CanonicalBasis& basis);

// Pushforward of the fundamental class of the isotropy sphere joining p (weight l) and q (weight -l).
EquivariantClass sphere_pushforward(const FixedPointData& data, const std::string& p, const std::string& q, long l);

// Edges of g whose isotropy component is a sphere: exactly one weight at each
// end is divisible by the length. Length-1 edges are skipped.
std::vector<GraphEdge> isotropy_sphere_edges(const FixedPointData& data, const LabeledMultigraph& g);

struct RingPresentation {
  enum class Kind { kTruncatedPower, kTwoGenerator };
  Kind kind = Kind::kTwoGenerator;
  int half_dim = 0;
  Rational c;                    // x^2 = c y (two-generator form)
  std::vector<Rational> ratios;  // ratios[i]: reduced alpha_i = ratios[i] x^i
  std::string str() const;       // "Z[x,y]/(x^2-5y, y^2)"
  std::string relation() const;  // "x^2=5y"
};

RingPresentation ring_presentation(const FixedPointData& data);

// Coefficients of x, y, xy in c_1, c_2, c_3 (dimension 6).
struct ChernVector {
  Rational c1;
  Rational c2;
  Rational c3;
  bool integral() const { return c1.is_integer() && c2.is_integer() && c3.is_integer(); }
  std::string str(const RingPresentation& ring) const;  // "1+2x+12y+4xy"
  std::string vector_str() const;                        // "[2,12,4]"
};

ChernVector total_chern(const FixedPointData& data);

// For every i, kappa_i with c_i = kappa_i * (reduced alpha_i), via divided differences.
std::vector<Rational> chern_coefficients(const FixedPointData& data);

// prod_{j != k}(Gamma_k - Gamma_j) / Lambda_k for each point by index.
std::vector<Rational> gamma_ratio_constants(const FixedPointData& data);

}  // namespace hamfix
