#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "toric/rational.hpp"
#include "toric/triangulation.hpp"

namespace toric {

struct LiftingFunction {
  std::map<LatticePoint, Rational> heights;
};

// h(apex) - sum coefficients[j] * h(base[j]); strictly positive for a fold, zero for a flatness equality.
struct FoldConstraint {
  int apex = 0;
  std::array<int, 3> base{};
  std::array<Rational, 3> coefficients;
};

struct FoldSystem {
  std::vector<LatticePoint> points;  // index space of the constraints
  std::vector<FoldConstraint> strict;
  std::vector<FoldConstraint> equalities;
};

FoldSystem fold_constraints(const Triangulation& D);
FoldSystem fold_constraints(const Subdivision& S);

Rational evaluate(const FoldConstraint& c, const std::vector<LatticePoint>& points, const LiftingFunction& F);

// True when every strict constraint has positive value and every equality vanishes.
bool is_witness(const FoldSystem& sys, const LiftingFunction& F);

struct RegularityResult {
  bool regular = false;
  Rational slack;  // optimal t, capped at 1
  std::optional<LiftingFunction> witness;  // nonnegative heights with minimum 0
  explicit operator bool() const { return regular; }
};

RegularityResult is_regular(const FoldSystem& sys);
RegularityResult is_regular(const Triangulation& D);
RegularityResult is_regular(const Subdivision& S);

// Maximizes the common fold slack with the listed point indices pinned to height 0.
RegularityResult maximize_slack(const FoldSystem& sys, const std::set<int>& pinned);

// Flattens a lifting function of D over the cell Q (a union of triangles of D around a common vertex p).
LiftingFunction flatten_lifting(const LiftingFunction& F, const Triangulation& D, const Cell& Q);

// The subdivision made of Q and all triangles of D outside Q.
Subdivision coarsen(const Triangulation& D, const Cell& Q);

}  // namespace toric
