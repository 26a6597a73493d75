#pragma once

#include <optional>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

struct LpSolution {
  Rational objective;
  std::vector<Rational> x;
};

// Maximizes c.x subject to A x <= b, x >= 0, with every b_i >= 0 so that the origin is feasible.
// Dense exact tableau simplex with Bland's rule. Returns nullopt when the problem is unbounded.
std::optional<LpSolution> maximize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                                   const std::vector<Rational>& c);

}  // namespace toric
