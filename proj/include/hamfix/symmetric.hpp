#pragma once

#include <span>
#include <vector>

#include "hamfix/laurent.hpp"

namespace hamfix {

using Weight = long;

// Normal weight xi and Euler degree a of one line-bundle summand over a surface.
struct NormalPair {
  Weight weight = 0;
  long degree = 0;
  friend bool operator==(const NormalPair&, const NormalPair&) = default;
};

// sigma_k of the multiset; throws std::invalid_argument if k > size.
Integer elementary_symmetric(std::size_t k, std::span<const Weight> values);

// All sigma_0..sigma_size in one pass.
std::vector<Integer> elementary_symmetric_all(std::span<const Weight> values);

// 1 / prod_j (xi_j t + a_j u) in the ring with u^2 = 0.
SurfaceClass surface_inverse_euler(std::span<const NormalPair> normal);

// prod_j (xi_j t + a_j u).
SurfaceClass surface_euler(std::span<const NormalPair> normal);

}  // namespace hamfix
