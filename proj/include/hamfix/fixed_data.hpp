#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hamfix/symmetric.hpp"

namespace hamfix {

struct IsolatedFixedPoint {
  std::string id;
  Rational phi;
  std::vector<Weight> weights;  // kept sorted
  friend bool operator==(const IsolatedFixedPoint&, const IsolatedFixedPoint&) = default;
};

struct SurfaceFixedComponent {
  std::string id;
  Rational phi;
  long genus = 0;
  std::vector<NormalPair> normal;
  friend bool operator==(const SurfaceFixedComponent&, const SurfaceFixedComponent&) = default;
};

using FixedComponent = std::variant<IsolatedFixedPoint, SurfaceFixedComponent>;

// Invalid fixed-point data. component() names the offending component when known.
class DataError : public std::runtime_error {
 public:
  DataError(const std::string& message, std::string component = {})
      : std::runtime_error(component.empty() ? message : "component " + component + ": " + message),
        component_(std::move(component)) {}
  const std::string& component() const { return component_; }

 private:
  std::string component_;
};

class FixedPointData {
 public:
  // Validates weight counts, nonzero weights, unique ids, and existence of a
  // minimum and a maximum. Weights of points are sorted.
  FixedPointData(int half_dim, std::vector<FixedComponent> components);

  int half_dim() const { return half_dim_; }
  const std::vector<FixedComponent>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  const FixedComponent& operator[](std::size_t i) const { return components_[i]; }
  std::size_t find(const std::string& id) const;  // throws DataError if absent
  bool all_isolated() const;

  friend bool operator==(const FixedPointData&, const FixedPointData&) = default;

 private:
  int half_dim_;
  std::vector<FixedComponent> components_;
};

struct PointInvariants {
  long index = 0;       // lambda: number of negative weights
  Integer neg_product;  // Lambda^-
  Integer pos_product;  // Lambda^+
  Integer weight_sum;   // Gamma
  Integer product() const { return neg_product * pos_product; }
};

PointInvariants derive_invariants(const IsolatedFixedPoint& p);

const std::string& component_id(const FixedComponent& c);
const Rational& component_phi(const FixedComponent& c);
long component_index(const FixedComponent& c);     // lambda
long component_half_dim(const FixedComponent& c);  // 0 for points, 1 for surfaces
Integer component_gamma(const FixedComponent& c);
// Weights of the tangent representation that are nonzero.
std::vector<Weight> component_weights(const FixedComponent& c);

struct Violation {
  std::string check;
  std::string detail;
  std::vector<std::string> components;
};

struct CheckReport {
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

CheckReport check_index_order(const FixedPointData& data);
CheckReport check_index_bound(const FixedPointData& data);
CheckReport check_gamma_order(const FixedPointData& data);

std::vector<long> betti_numbers(const FixedPointData& data);

// Same manifold with the circle acting in the opposite direction: weights and
// moment values negated.
FixedPointData reversed(const FixedPointData& data);

// Isolated points ordered by index, one per index 0..n. Throws DataError otherwise.
std::vector<const IsolatedFixedPoint*> points_by_index(const FixedPointData& data);

// Convenience constructor for all-isolated data; phi defaults to the index.
FixedPointData make_point_data(const std::vector<std::vector<Weight>>& weights,
                               const std::vector<Rational>& phis = {});

}  // namespace hamfix
