#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/triangulation.hpp"

namespace oracle {

using toric::LatticePoint;
using Corners = std::array<LatticePoint, 3>;

inline long long orient(LatticePoint a, LatticePoint b, LatticePoint c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline bool inside_closed3(const Corners& t, LatticePoint p3) {
  LatticePoint a{3 * t[0].x, 3 * t[0].y}, b{3 * t[1].x, 3 * t[1].y}, c{3 * t[2].x, 3 * t[2].y};
  long long s = orient(a, b, c) > 0 ? 1 : -1;
  return s * orient(a, b, p3) >= 0 && s * orient(b, c, p3) >= 0 && s * orient(c, a, p3) >= 0;
}

inline LatticePoint centroid3(const Corners& t) {
  return {t[0].x + t[1].x + t[2].x, t[0].y + t[1].y + t[2].y};
}

// Separating axis test over the six edge normals.
inline bool overlap(const Corners& s, const Corners& t) {
  for (const auto* pair : {&s, &t})
    for (int i = 0; i < 3; ++i) {
      const Corners& u = *pair;
      LatticePoint a = u[i], b = u[(i + 1) % 3];
      long long nx = -(b.y - a.y), ny = b.x - a.x;
      auto span = [&](const Corners& w) {
        long long lo = nx * w[0].x + ny * w[0].y, hi = lo;
        for (const auto& p : w) {
          lo = std::min(lo, nx * p.x + ny * p.y);
          hi = std::max(hi, nx * p.x + ny * p.y);
        }
        return std::pair{lo, hi};
      };
      auto [slo, shi] = span(s);
      auto [tlo, thi] = span(t);
      if (shi <= tlo || thi <= slo) return false;
    }
  return true;
}

inline std::vector<Corners> unimodular_triangles(const std::vector<LatticePoint>& pts) {
  std::vector<Corners> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (std::llabs(orient(pts[i], pts[j], pts[k])) == 1) out.push_back({pts[i], pts[j], pts[k]});
  return out;
}

// Exact cover: every uncovered sample point must lie in the closure of a chosen triangle.
inline std::set<std::vector<Corners>> all_triangulations(const toric::LatticePolygon& P) {
  auto pts = toric::lattice_points(P);
  auto tris = unimodular_triangles(pts);
  std::vector<LatticePoint> samples;
  for (const auto& t : tris) samples.push_back(centroid3(t));
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  const long long d = P.area2();
  std::set<std::vector<Corners>> found;
  std::vector<Corners> chosen;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<long long>(chosen.size()) == d) {
      auto s = chosen;
      std::sort(s.begin(), s.end());
      found.insert(s);
      return;
    }
    const LatticePoint* target = nullptr;
    for (const auto& x : samples) {
      bool covered = std::any_of(chosen.begin(), chosen.end(), [&](const Corners& c) { return inside_closed3(c, x); });
      if (!covered) {
        target = &x;
        break;
      }
    }
    if (!target) return;
    for (const auto& t : tris) {
      if (!inside_closed3(t, *target)) continue;
      if (std::any_of(chosen.begin(), chosen.end(), [&](const Corners& c) { return overlap(c, t); })) continue;
      chosen.push_back(t);
      self(self);
      chosen.pop_back();
    }
  };
  rec(rec);
  return found;
}

inline std::vector<Corners> corners_of(const toric::Triangulation& D) {
  std::vector<Corners> out;
  for (const auto& t : D.triangles()) out.push_back(D.corners(t));
  std::sort(out.begin(), out.end());
  return out;
}

// Fourier-Motzkin on the homogeneous strict system a . h > 0 built from the folds of D.
inline bool regular_by_elimination(const toric::Triangulation& D) {
  const auto& pts = D.points();
  const std::size_t n = pts.size();
  using Row = std::vector<long long>;
  std::set<Row> rows;
  auto add_row = [&](Row r) {
    long long g = 0;
    for (long long v : r) g = std::gcd(g, std::llabs(v));
    if (g == 0) {
      rows.insert(r);
      return;
    }
    for (auto& v : r) v /= g;
    rows.insert(r);
  };
  const auto& T = D.triangles();
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = i + 1; j < T.size(); ++j) {
      std::vector<int> shared, only_i, only_j;
      for (int a : T[i]) (std::find(T[j].begin(), T[j].end(), a) != T[j].end() ? shared : only_i).push_back(a);
      for (int b : T[j])
        if (std::find(T[i].begin(), T[i].end(), b) == T[i].end()) only_j.push_back(b);
      if (shared.size() != 2) continue;
      // e = x a + y b + z c with c the apex of triangle i; solved by Cramer over the unimodular frame.
      LatticePoint a = pts[shared[0]], b = pts[shared[1]], c = pts[only_i[0]], e = pts[only_j[0]];
      long long det = orient(a, b, c);
      long long x = orient(e, b, c), y = orient(a, e, c), z = orient(a, b, e);
      Row r(n, 0);
      r[only_j[0]] += det;
      r[shared[0]] -= x;
      r[shared[1]] -= y;
      r[only_i[0]] -= z;
      if (det < 0)
        for (auto& v : r) v = -v;
      add_row(r);
    }
  // Adding an affine function leaves every row unchanged, so three non-collinear points may be pinned at 0.
  std::vector<bool> alive(n, true);
  for (std::size_t k = 2; k < n; ++k)
    if (orient(pts[0], pts[1], pts[k]) != 0) {
      alive[0] = alive[1] = alive[k] = false;
      break;
    }
  {
    std::set<Row> pinned;
    for (auto r : rows) {
      for (std::size_t k = 0; k < n; ++k)
        if (!alive[k]) r[k] = 0;
      pinned.insert(r);
    }
    rows.clear();
    for (const auto& r : pinned) add_row(r);
  }
  while (true) {
    std::size_t var = n;
    std::size_t best = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (!alive[k]) continue;
      std::size_t p = 0, q = 0;
      for (const auto& r : rows) {
        if (r[k] > 0) ++p;
        if (r[k] < 0) ++q;
      }
      std::size_t cost = p * q;
      if (var == n || cost < best) {
        var = k;
        best = cost;
      }
    }
    if (var == n) break;
    alive[var] = false;
    std::vector<Row> pos, neg, zero;
    for (const auto& r : rows) (r[var] > 0 ? pos : r[var] < 0 ? neg : zero).push_back(r);
    rows.clear();
    for (auto& r : zero) add_row(r);
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Row r(n);
        for (std::size_t k = 0; k < n; ++k) r[k] = p[k] * (-q[var]) + q[k] * p[var];
        add_row(r);
      }
  }
  for (const auto& r : rows)
    if (std::all_of(r.begin(), r.end(), [](long long v) { return v == 0; })) return false;
  return true;
}

// All k-subsets of triangles with pairwise disjoint vertex sets.
inline long long naive_skew_count(const toric::Triangulation& D, int k) {
  const auto& T = D.triangles();
  const int m = static_cast<int>(T.size());
  if (k > m) return 0;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  long long count = 0;
  while (true) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = a + 1; b < k && ok; ++b)
        for (int u : T[idx[a]])
          for (int v : T[idx[b]])
            if (u == v) ok = false;
    if (ok) ++count;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return count;
}

}  // namespace oracle
