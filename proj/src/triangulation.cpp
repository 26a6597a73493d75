#include "toric/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

Tri sorted_tri(Tri t) {
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<LatticePoint> ccw(std::vector<LatticePoint> v) {
  if (v.size() >= 3 && cross(v[0], v[1], v[2]) < 0) std::reverse(v.begin(), v.end());
  return v;
}

// True when every vertex of b lies on the closed outer side of some edge line of a.
bool separated_by_edge_of(const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    LatticePoint u = a[i], v = a[(i + 1) % a.size()];
    bool all_out = true;
    for (const auto& q : b)
      if (cross(u, v, q) > 0) {
        all_out = false;
        break;
      }
    if (all_out) return true;
  }
  return false;
}

bool segment_on_boundary(const LatticePolygon& P, LatticePoint u, LatticePoint v) {
  const auto& V = P.vertices();
  for (std::size_t i = 0; i < V.size(); ++i) {
    LatticePoint a = V[i], b = V[(i + 1) % V.size()];
    if (cross(a, b, u) == 0 && cross(a, b, v) == 0) return true;
  }
  return false;
}

std::string label_child(const std::string& parent, int index) {
  if (parent == "Q_p") return "S" + std::to_string(index);
  return parent + "," + std::to_string(index);
}

}  // namespace

bool interiors_overlap(const std::vector<LatticePoint>& a0, const std::vector<LatticePoint>& b0) {
  auto a = ccw(a0);
  auto b = ccw(b0);
  return !separated_by_edge_of(a, b) && !separated_by_edge_of(b, a);
}

Triangulation::Triangulation(LatticePolygon polygon, std::vector<Tri> triangles)
    : polygon_(std::move(polygon)), points_(lattice_points(polygon_)) {
  const int n = static_cast<int>(points_.size());
  for (auto& t : triangles) {
    for (int i : t)
      if (i < 0 || i >= n) throw InputError("triangle index " + std::to_string(i) + " out of range");
    triangles_.push_back(sorted_tri(t));
  }
  std::sort(triangles_.begin(), triangles_.end());
}

Triangulation Triangulation::from_points(const LatticePolygon& polygon,
                                         const std::vector<std::array<LatticePoint, 3>>& triangles) {
  auto pts = lattice_points(polygon);
  std::vector<Tri> idx;
  for (const auto& t : triangles) {
    Tri r{};
    for (int j = 0; j < 3; ++j) {
      auto it = std::lower_bound(pts.begin(), pts.end(), t[j]);
      if (it == pts.end() || *it != t[j]) {
        std::ostringstream os;
        os << "point " << t[j] << " is not a lattice point of the polygon";
        throw InputError(os.str());
      }
      r[j] = static_cast<int>(it - pts.begin());
    }
    idx.push_back(r);
  }
  return Triangulation(polygon, idx);
}

int Triangulation::index_of(LatticePoint p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return -1;
  return static_cast<int>(it - points_.begin());
}

ValidationResult validate(const Triangulation& D) {
  const auto& T = D.triangles();
  const int n = static_cast<int>(D.points().size());
  for (const auto& t : T)
    for (int i : t)
      if (i < 0 || i >= n) throw InputError("triangle index out of range");
  for (std::size_t i = 0; i < T.size(); ++i) {
    auto c = D.corners(T[i]);
    if (std::llabs(cross(c[0], c[1], c[2])) != 1) {
      std::ostringstream os;
      os << "triangle " << i << " is not unimodular";
      return {false, os.str()};
    }
  }
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = i + 1; j < T.size(); ++j) {
      auto a = D.corners(T[i]);
      auto b = D.corners(T[j]);
      if (interiors_overlap({a.begin(), a.end()}, {b.begin(), b.end()})) {
        std::ostringstream os;
        os << "triangles " << i << " and " << j << " overlap";
        return {false, os.str()};
      }
    }
  long long d = D.polygon().area2();
  if (static_cast<long long>(T.size()) != d) {
    std::ostringstream os;
    os << "triangle count " << T.size() << " differs from normalized area " << d;
    return {false, os.str()};
  }
  std::vector<bool> used(n, false);
  for (const auto& t : T)
    for (int i : t) used[i] = true;
  for (int i = 0; i < n; ++i)
    if (!used[i]) {
      std::ostringstream os;
      os << "lattice point " << D.points()[i] << " is not a vertex";
      return {false, os.str()};
    }
  return {};
}

namespace {

using Edge = std::pair<int, int>;
using Frontier = std::vector<Edge>;

struct Enumerator {
  std::vector<LatticePoint> pts;
  std::vector<Tri> placed;
  std::map<Frontier, std::vector<std::vector<Tri>>> memo;

  bool fits(const Tri& t) const {
    std::vector<LatticePoint> a{pts[t[0]], pts[t[1]], pts[t[2]]};
    for (const auto& s : placed)
      if (interiors_overlap(a, {pts[s[0]], pts[s[1]], pts[s[2]]})) return false;
    return true;
  }

  const std::vector<std::vector<Tri>>& complete(const Frontier& F) {
    auto it = memo.find(F);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<Tri>> out;
    if (F.empty()) {
      out.push_back({});
    } else {
      auto [a, b] = F.front();
      for (int c = 0; c < static_cast<int>(pts.size()); ++c) {
        if (cross(pts[a], pts[b], pts[c]) != 1) continue;
        Tri t = sorted_tri({a, b, c});
        if (!fits(t)) continue;
        Frontier G = F;
        for (Edge e : {Edge{a, b}, Edge{b, c}, Edge{c, a}}) {
          auto pos = std::lower_bound(G.begin(), G.end(), e);
          if (pos != G.end() && *pos == e) {
            G.erase(pos);
          } else {
            Edge r{e.second, e.first};
            G.insert(std::lower_bound(G.begin(), G.end(), r), r);
          }
        }
        placed.push_back(t);
        const auto& sub = complete(G);
        placed.pop_back();
        for (const auto& s : sub) {
          auto v = s;
          v.push_back(t);
          out.push_back(std::move(v));
        }
      }
    }
    return memo.emplace(F, std::move(out)).first->second;
  }
};

}  // namespace

std::vector<Triangulation> enumerate_triangulations(const LatticePolygon& P) {
  Enumerator en;
  en.pts = lattice_points(P);
  auto index = [&](LatticePoint q) {
    return static_cast<int>(std::lower_bound(en.pts.begin(), en.pts.end(), q) - en.pts.begin());
  };
  // Unit boundary segments, oriented counter-clockwise so the polygon lies on their left.
  Frontier F;
  const auto& V = P.vertices();
  for (std::size_t i = 0; i < V.size(); ++i) {
    LatticePoint a = V[i], b = V[(i + 1) % V.size()];
    long long len = lattice_length(a, b);
    LatticePoint step{(b.x - a.x) / len, (b.y - a.y) / len};
    for (long long s = 0; s < len; ++s) {
      LatticePoint u{a.x + s * step.x, a.y + s * step.y};
      F.push_back({index(u), index(u + step)});
    }
  }
  std::sort(F.begin(), F.end());
  std::vector<std::vector<Tri>> all = en.complete(F);
  std::vector<Triangulation> out;
  out.reserve(all.size());
  for (auto& tris : all) out.emplace_back(P, std::move(tris));
  std::sort(out.begin(), out.end(),
            [](const Triangulation& x, const Triangulation& y) { return x.triangles() < y.triangles(); });
  return out;
}

Star star(const Triangulation& D, LatticePoint p) {
  int ip = D.index_of(p);
  if (ip < 0) {
    std::ostringstream os;
    os << p << " is not a lattice point of the polygon";
    throw InputError(os.str());
  }
  Star s;
  s.point = p;
  std::vector<LatticePoint> verts;
  for (const auto& t : D.triangles())
    if (t[0] == ip || t[1] == ip || t[2] == ip) {
      s.triangles.push_back(t);
      for (int i : t) verts.push_back(D.points()[i]);
    }
  if (!s.triangles.empty()) {
    auto H = LatticePolygon::hull(verts);
    if (H.area2() == static_cast<long long>(s.triangles.size())) s.hull = H;
  }
  return s;
}

Subdivision as_subdivision(const Triangulation& D) {
  Subdivision S{D.polygon(), {}};
  for (const auto& t : D.triangles()) {
    auto c = D.corners(t);
    S.cells.push_back({LatticePolygon({c[0], c[1], c[2]}), std::vector<Tri>{t}, ""});
  }
  return S;
}

Subdivision intermediate_subdivision(const Triangulation& D, LatticePoint p) {
  Star s = star(D, p);
  if (!s.hull) throw PreconditionError("the star of the point is not convex");
  const auto& T = D.triangles();
  const auto& pts = D.points();
  const LatticePolygon& P = D.polygon();
  std::vector<int> owner(T.size(), -1);
  auto tri_index = [&](const Tri& t) {
    return static_cast<int>(std::lower_bound(T.begin(), T.end(), t) - T.begin());
  };
  auto tri_pts = [&](int i) {
    auto c = D.corners(T[i]);
    return std::vector<LatticePoint>{c[0], c[1], c[2]};
  };

  Subdivision out{P, {}};
  out.cells.push_back({*s.hull, s.triangles, "Q_p"});
  for (const auto& t : s.triangles) owner[tri_index(t)] = 0;

  struct Pending {
    int cell;
    LatticePoint u, v;
  };
  std::vector<Pending> queue;
  std::vector<int> child_count(1, 0);
  auto push_long_edges = [&](int cell) {
    const auto& V = out.cells[cell].polygon.vertices();
    for (std::size_t i = 0; i < V.size(); ++i) {
      LatticePoint u = V[i], v = V[(i + 1) % V.size()];
      if (lattice_length(u, v) > 1 && !segment_on_boundary(P, u, v)) queue.push_back({cell, u, v});
    }
  };
  push_long_edges(0);

  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Pending e = queue[qi];
    const LatticePolygon C = out.cells[e.cell].polygon;
    long long len = lattice_length(e.u, e.v);
    LatticePoint step{(e.v.x - e.u.x) / len, (e.v.y - e.u.y) / len};
    std::vector<int> seeds;
    for (long long k = 0; k < len; ++k) {
      int a = D.index_of({e.u.x + k * step.x, e.u.y + k * step.y});
      int b = D.index_of({e.u.x + (k + 1) * step.x, e.u.y + (k + 1) * step.y});
      int found = -1;
      for (int i = 0; i < static_cast<int>(T.size()); ++i) {
        const auto& t = T[i];
        bool has_a = t[0] == a || t[1] == a || t[2] == a;
        bool has_b = t[0] == b || t[1] == b || t[2] == b;
        if (!has_a || !has_b) continue;
        int c = t[0] + t[1] + t[2] - a - b;
        // The cell lies to the left of u->v, the far side to the right.
        if (cross(e.u, e.v, pts[c]) < 0) found = i;
      }
      if (found < 0) throw AlgorithmFailure("no triangle beyond an interior edge");
      seeds.push_back(found);
    }
    std::set<int> owners;
    for (int i : seeds) owners.insert(owner[i]);
    if (owners.size() == 1 && *owners.begin() >= 0) {
      const auto& W = out.cells[*owners.begin()].polygon.vertices();
      bool full = false;
      for (std::size_t i = 0; i < W.size(); ++i)
        if (W[i] == e.v && W[(i + 1) % W.size()] == e.u) full = true;
      if (full) continue;
      throw AlgorithmFailure("neighbouring cell does not share the whole edge");
    }
    if (owners.count(-1) == 0 || owners.size() > 1)
      throw AlgorithmFailure("cells overlap beyond a long edge");

    std::set<int> members(seeds.begin(), seeds.end());
    LatticePolygon H = LatticePolygon::hull([&] {
      std::vector<LatticePoint> v;
      for (int i : members)
        for (const auto& q : tri_pts(i)) v.push_back(q);
      return v;
    }());
    while (H.area2() != static_cast<long long>(members.size())) {
      std::vector<int> add;
      for (int i = 0; i < static_cast<int>(T.size()); ++i)
        if (!members.count(i) && interiors_overlap(tri_pts(i), H.vertices())) add.push_back(i);
      if (add.empty()) throw AlgorithmFailure("convex closure did not converge");
      std::vector<LatticePoint> v = H.vertices();
      for (int i : add) {
        members.insert(i);
        for (const auto& q : tri_pts(i)) v.push_back(q);
      }
      H = LatticePolygon::hull(v);
    }
    for (int i : members)
      if (owner[i] >= 0) throw AlgorithmFailure("minimal convex union overlaps an existing cell");
    for (const auto& q : lattice_points(H))
      if (C.contains(q) && !(cross(e.u, e.v, q) == 0 && std::min(e.u, e.v) <= q && q <= std::max(e.u, e.v)))
        throw AlgorithmFailure("minimal convex union meets the cell outside the edge");

    int id = static_cast<int>(out.cells.size());
    std::vector<Tri> mt;
    for (int i : members) {
      owner[i] = id;
      mt.push_back(T[i]);
    }
    std::string label = label_child(out.cells[e.cell].label, ++child_count[e.cell]);
    out.cells.push_back({H, mt, label});
    child_count.push_back(0);
    push_long_edges(id);
  }

  for (int i = 0; i < static_cast<int>(T.size()); ++i)
    if (owner[i] < 0) {
      auto c = D.corners(T[i]);
      out.cells.push_back({LatticePolygon({c[0], c[1], c[2]}), std::vector<Tri>{T[i]}, ""});
    }
  return out;
}

bool refine(const Subdivision& D1, const Triangulation& D) {
  if (!(D1.polygon == D.polygon())) throw InputError("subdivision and triangulation have different polygons");
  std::vector<long long> covered(D1.cells.size(), 0);
  for (const auto& t : D.triangles()) {
    auto c = D.corners(t);
    int count = 0;
    for (std::size_t j = 0; j < D1.cells.size(); ++j) {
      const auto& C = D1.cells[j].polygon;
      if (C.contains(c[0]) && C.contains(c[1]) && C.contains(c[2])) {
        ++count;
        covered[j] += std::llabs(cross(c[0], c[1], c[2]));
      }
    }
    if (count != 1) return false;
  }
  for (std::size_t j = 0; j < D1.cells.size(); ++j)
    if (covered[j] != D1.cells[j].polygon.area2()) return false;
  return true;
}

std::vector<std::array<LatticePoint, 3>> canonical_key(const Triangulation& D, std::optional<LatticePoint> marked) {
  std::vector<std::array<LatticePoint, 3>> best;
  bool have = false;
  for (const auto& T : canonical_maps(D.polygon())) {
    std::vector<std::array<LatticePoint, 3>> key;
    key.reserve(D.triangles().size() + 1);
    for (const auto& t : D.triangles()) {
      auto c = D.corners(t);
      std::array<LatticePoint, 3> m{T(c[0]), T(c[1]), T(c[2])};
      std::sort(m.begin(), m.end());
      key.push_back(m);
    }
    std::sort(key.begin(), key.end());
    if (marked) {
      LatticePoint q = T(*marked);
      key.insert(key.begin(), {q, q, q});
    }
    if (!have || key < best) best = std::move(key);
    have = true;
  }
  return best;
}

std::vector<std::array<LatticePoint, 3>> canonical_key_gl(const Triangulation& D) {
  auto flip = [](LatticePoint q) { return LatticePoint{-q.x, q.y}; };
  std::vector<LatticePoint> pv;
  for (const auto& v : D.polygon().vertices()) pv.push_back(flip(v));
  std::vector<std::array<LatticePoint, 3>> tris;
  for (const auto& t : D.triangles()) {
    auto c = D.corners(t);
    tris.push_back({flip(c[0]), flip(c[1]), flip(c[2])});
  }
  auto mirrored = Triangulation::from_points(LatticePolygon(pv), tris);
  return std::min(canonical_key(D), canonical_key(mirrored));
}

}  // namespace toric
