#include "toric/regularity.hpp"

#include <algorithm>
#include <map>

#include "toric/errors.hpp"
#include "toric/simplex.hpp"

namespace toric {

namespace {

FoldConstraint make_constraint(const std::vector<LatticePoint>& pts, int apex, std::array<int, 3> base) {
  LatticePoint q = pts[apex], a = pts[base[0]], b = pts[base[1]], c = pts[base[2]];
  long long den = cross(a, b, c);
  if (den == 0) throw AlgorithmFailure("degenerate base in fold constraint");
  FoldConstraint f;
  f.apex = apex;
  f.base = base;
  f.coefficients = {Q(cross(q, b, c), den), Q(cross(a, q, c), den), Q(cross(a, b, q), den)};
  return f;
}

int index_in(const std::vector<LatticePoint>& pts, LatticePoint p) {
  auto it = std::lower_bound(pts.begin(), pts.end(), p);
  if (it == pts.end() || *it != p) throw InputError("cell point outside the polygon");
  return static_cast<int>(it - pts.begin());
}

std::vector<std::pair<int, int>> unit_boundary_segments(const LatticePolygon& C, const std::vector<LatticePoint>& pts) {
  std::vector<std::pair<int, int>> out;
  const auto& V = C.vertices();
  for (std::size_t i = 0; i < V.size(); ++i) {
    LatticePoint a = V[i], b = V[(i + 1) % V.size()];
    long long len = lattice_length(a, b);
    LatticePoint step{(b.x - a.x) / len, (b.y - a.y) / len};
    for (long long s = 0; s < len; ++s) {
      int u = index_in(pts, {a.x + s * step.x, a.y + s * step.y});
      int v = index_in(pts, {a.x + (s + 1) * step.x, a.y + (s + 1) * step.y});
      out.push_back({std::min(u, v), std::max(u, v)});
    }
  }
  return out;
}

std::set<int> default_pins(const std::vector<LatticePoint>& pts) {
  for (std::size_t i = 2; i < pts.size(); ++i)
    if (cross(pts[0], pts[1], pts[i]) != 0) return {0, 1, static_cast<int>(i)};
  throw InputError("point set is collinear");
}

LiftingFunction shifted_to_zero(LiftingFunction F) {
  if (F.heights.empty()) return F;
  Rational lo = F.heights.begin()->second;
  for (const auto& [p, h] : F.heights) lo = std::min(lo, h);
  for (auto& [p, h] : F.heights) h -= lo;
  return F;
}

}  // namespace

FoldSystem fold_constraints(const Triangulation& D) {
  FoldSystem sys;
  sys.points = D.points();
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> edges;  // edge -> (triangle, opposite vertex)
  const auto& T = D.triangles();
  for (int i = 0; i < static_cast<int>(T.size()); ++i)
    for (int j = 0; j < 3; ++j) {
      int a = T[i][j], b = T[i][(j + 1) % 3], c = T[i][(j + 2) % 3];
      edges[{std::min(a, b), std::max(a, b)}].push_back({i, c});
    }
  for (const auto& [e, side] : edges) {
    if (side.size() != 2) continue;
    sys.strict.push_back(make_constraint(sys.points, side[1].second, T[side[0].first]));
  }
  return sys;
}

FoldSystem fold_constraints(const Subdivision& S) {
  FoldSystem sys;
  sys.points = lattice_points(S.polygon);
  const auto& pts = sys.points;
  std::vector<std::array<int, 3>> bases;
  std::map<std::pair<int, int>, std::vector<int>> owners;
  for (int ci = 0; ci < static_cast<int>(S.cells.size()); ++ci) {
    const auto& C = S.cells[ci].polygon;
    const auto& V = C.vertices();
    std::array<int, 3> base{index_in(pts, V[0]), index_in(pts, V[1]), index_in(pts, V[2])};
    bases.push_back(base);
    for (const auto& q : lattice_points(C)) {
      int qi = index_in(pts, q);
      if (qi == base[0] || qi == base[1] || qi == base[2]) continue;
      sys.equalities.push_back(make_constraint(pts, qi, base));
    }
    for (const auto& seg : unit_boundary_segments(C, pts)) owners[seg].push_back(ci);
  }
  std::set<std::pair<int, int>> done;
  for (const auto& [seg, cells] : owners) {
    if (cells.size() != 2) continue;
    int c1 = std::min(cells[0], cells[1]), c2 = std::max(cells[0], cells[1]);
    if (!done.insert({c1, c2}).second) continue;
    LatticePoint a = pts[seg.first], b = pts[seg.second];
    for (const auto& v : S.cells[c2].polygon.vertices())
      if (cross(a, b, v) != 0) {
        sys.strict.push_back(make_constraint(pts, index_in(pts, v), bases[c1]));
        break;
      }
  }
  return sys;
}

Rational evaluate(const FoldConstraint& c, const std::vector<LatticePoint>& points, const LiftingFunction& F) {
  auto h = [&](int i) {
    auto it = F.heights.find(points[i]);
    if (it == F.heights.end()) throw InputError("lifting function is missing a lattice point");
    return it->second;
  };
  Rational v = h(c.apex);
  for (int j = 0; j < 3; ++j) v -= c.coefficients[j] * h(c.base[j]);
  return v;
}

bool is_witness(const FoldSystem& sys, const LiftingFunction& F) {
  for (const auto& c : sys.strict)
    if (sgn(evaluate(c, sys.points, F)) <= 0) return false;
  for (const auto& c : sys.equalities)
    if (sgn(evaluate(c, sys.points, F)) != 0) return false;
  return true;
}

RegularityResult maximize_slack(const FoldSystem& sys, const std::set<int>& pinned) {
  const int n = static_cast<int>(sys.points.size());
  std::vector<int> column(n, -1);
  int free_count = 0;
  for (int i = 0; i < n; ++i)
    if (!pinned.count(i)) column[i] = free_count++;
  const int nvars = 2 * free_count + 1;
  const int t_col = nvars - 1;

  auto row_of = [&](const FoldConstraint& c, int sign) {
    std::vector<Rational> row(nvars);
    auto add = [&](int point, const Rational& w) {
      if (column[point] < 0) return;
      row[2 * column[point]] += sign * w;
      row[2 * column[point] + 1] -= sign * w;
    };
    add(c.apex, Rational(1));
    for (int j = 0; j < 3; ++j) add(c.base[j], -c.coefficients[j]);
    return row;
  };

  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (const auto& c : sys.strict) {
    auto row = row_of(c, -1);
    row[t_col] = 1;
    A.push_back(std::move(row));
    b.push_back(0);
  }
  for (const auto& c : sys.equalities) {
    A.push_back(row_of(c, 1));
    b.push_back(0);
    A.push_back(row_of(c, -1));
    b.push_back(0);
  }
  std::vector<Rational> cap(nvars);
  cap[t_col] = 1;
  A.push_back(cap);
  b.push_back(1);
  std::vector<Rational> obj(nvars);
  obj[t_col] = 1;

  auto sol = maximize(A, b, obj);
  if (!sol) throw AlgorithmFailure("slack maximization is unbounded");
  RegularityResult r;
  r.slack = sol->objective;
  r.regular = sgn(r.slack) > 0;
  if (r.regular) {
    LiftingFunction F;
    for (int i = 0; i < n; ++i) {
      Rational h = 0;
      if (column[i] >= 0) h = sol->x[2 * column[i]] - sol->x[2 * column[i] + 1];
      F.heights[sys.points[i]] = h;
    }
    r.witness = F;
  }
  return r;
}

RegularityResult is_regular(const FoldSystem& sys) {
  RegularityResult r = maximize_slack(sys, default_pins(sys.points));
  if (r.witness) r.witness = shifted_to_zero(*r.witness);
  return r;
}

RegularityResult is_regular(const Triangulation& D) { return is_regular(fold_constraints(D)); }

RegularityResult is_regular(const Subdivision& S) { return is_regular(fold_constraints(S)); }

Subdivision coarsen(const Triangulation& D, const Cell& Q) {
  Subdivision S{D.polygon(), {Q}};
  for (const auto& t : D.triangles()) {
    auto c = D.corners(t);
    if (Q.polygon.contains(c[0]) && Q.polygon.contains(c[1]) && Q.polygon.contains(c[2])) continue;
    S.cells.push_back({LatticePolygon({c[0], c[1], c[2]}), std::vector<Tri>{t}, ""});
  }
  return S;
}

LiftingFunction flatten_lifting(const LiftingFunction& F, const Triangulation& D, const Cell& Q) {
  FoldSystem sys = fold_constraints(D);
  if (!is_witness(sys, F)) throw PreconditionError("the lifting function does not witness regularity of D");
  const LatticePolygon& P = D.polygon();
  const auto& V = Q.polygon.vertices();
  for (std::size_t i = 0; i < V.size(); ++i) {
    LatticePoint a = V[i], b = V[(i + 1) % V.size()];
    if (lattice_length(a, b) == 1) continue;
    bool on_boundary = false;
    for (std::size_t j = 0; j < P.size(); ++j) {
      LatticePoint u = P.vertices()[j], v = P.vertices()[(j + 1) % P.size()];
      if (cross(u, v, a) == 0 && cross(u, v, b) == 0) on_boundary = true;
    }
    if (!on_boundary) throw PreconditionError("the cell has an interior edge of length greater than one");
  }
  std::vector<Tri> members;
  long long area = 0;
  for (const auto& t : D.triangles()) {
    auto c = D.corners(t);
    if (Q.polygon.contains(c[0]) && Q.polygon.contains(c[1]) && Q.polygon.contains(c[2])) {
      members.push_back(t);
      area += 1;
    }
  }
  if (area != Q.polygon.area2()) throw PreconditionError("the cell is not a union of triangles of D");
  if (members.size() == 1) return shifted_to_zero(F);

  Subdivision coarse = coarsen(D, Q);
  FoldSystem csys = fold_constraints(coarse);
  // Three vertices of Q pinned at 0; the flatness equalities make the lifting vanish on all of Q.
  std::set<int> pinned;
  for (int i = 0; i < 3; ++i) pinned.insert(index_in(csys.points, V[i]));
  RegularityResult r = maximize_slack(csys, pinned);
  if (!r.regular) throw AlgorithmFailure("no strictly convex lifting of D is constant on the cell");
  LiftingFunction G = shifted_to_zero(*r.witness);
  if (!is_witness(csys, G)) throw AlgorithmFailure("flattened lifting function is not strictly convex");
  return G;
}

}  // namespace toric
