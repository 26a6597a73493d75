#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

namespace toric {

struct LatticePoint {
  long long x = 0;
  long long y = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

inline LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
inline LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

// Twice the signed area of (a, b, c); positive when counter-clockwise.
inline long long cross(LatticePoint a, LatticePoint b, LatticePoint c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Number of lattice steps on the segment [a, b].
long long lattice_length(LatticePoint a, LatticePoint b);

struct Equiaffinity {
  std::array<long long, 4> matrix{1, 0, 0, 1};  // row-major [[a, b], [c, d]]
  LatticePoint translation{};

  Equiaffinity() = default;
  Equiaffinity(std::array<long long, 4> m, LatticePoint t);

  long long det() const { return matrix[0] * matrix[3] - matrix[1] * matrix[2]; }
  LatticePoint operator()(LatticePoint p) const {
    return {matrix[0] * p.x + matrix[1] * p.y + translation.x,
            matrix[2] * p.x + matrix[3] * p.y + translation.y};
  }
  Equiaffinity compose(const Equiaffinity& inner) const;  // this after inner
  Equiaffinity inverse() const;
  bool operator==(const Equiaffinity&) const = default;
};

class LatticePolygon {
 public:
  // Vertices may be given in either orientation; collinear boundary points are dropped.
  // Throws InputError for duplicates, fewer than three points, zero area or non-convex input.
  explicit LatticePolygon(std::vector<LatticePoint> vertices);

  // Convex hull of an arbitrary point set (throws InputError when degenerate).
  static LatticePolygon hull(std::vector<LatticePoint> points);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  bool contains(LatticePoint p) const;      // closed polygon
  bool on_boundary(LatticePoint p) const;
  bool strictly_inside(LatticePoint p) const { return contains(p) && !on_boundary(p); }
  long long area2() const;

  bool operator==(const LatticePolygon& o) const { return vertices_ == o.vertices_; }
  bool operator<(const LatticePolygon& o) const { return vertices_ < o.vertices_; }

 private:
  LatticePolygon() = default;
  std::vector<LatticePoint> vertices_;
};

std::ostream& operator<<(std::ostream& os, const LatticePolygon& P);

struct PolygonInvariants {
  long long g = 0;
  long long l = 0;
  long long d = 0;
  long long m = 0;
  long long B = 0;
  long long n_points = 0;
  bool operator==(const PolygonInvariants&) const = default;
};

std::vector<LatticePoint> lattice_points(const LatticePolygon& P);
PolygonInvariants invariants(const LatticePolygon& P);
long long ehrhart_count(const LatticePolygon& P, long long t);
LatticePolygon apply(const Equiaffinity& T, const LatticePolygon& P);

LatticePolygon canonical_form(const LatticePolygon& P);
// Every equiaffinity T with apply(T, P) == canonical_form(P).
std::vector<Equiaffinity> canonical_maps(const LatticePolygon& P);
bool are_equivalent(const LatticePolygon& P, const LatticePolygon& Q);

// Equivalence classes with exactly g interior points and 1 <= d <= d_max, as canonical forms,
// sorted by (d, number of vertices, vertex list).
std::vector<LatticePolygon> enumerate_polygons(int g, int d_max);

}  // namespace toric
