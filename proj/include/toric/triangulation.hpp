#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

using Tri = std::array<int, 3>;  // sorted indices into lattice_points(polygon)

class Triangulation {
 public:
  Triangulation(LatticePolygon polygon, std::vector<Tri> triangles);
  // Builds from triangles given by coordinates.
  static Triangulation from_points(const LatticePolygon& polygon,
                                   const std::vector<std::array<LatticePoint, 3>>& triangles);

  const LatticePolygon& polygon() const { return polygon_; }
  const std::vector<LatticePoint>& points() const { return points_; }
  const std::vector<Tri>& triangles() const { return triangles_; }
  int index_of(LatticePoint p) const;  // -1 when p is not a lattice point of the polygon
  std::array<LatticePoint, 3> corners(const Tri& t) const {
    return {points_[t[0]], points_[t[1]], points_[t[2]]};
  }

  bool operator==(const Triangulation& o) const {
    return polygon_ == o.polygon_ && triangles_ == o.triangles_;
  }

 private:
  LatticePolygon polygon_;
  std::vector<LatticePoint> points_;
  std::vector<Tri> triangles_;
};

struct ValidationResult {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

ValidationResult validate(const Triangulation& D);

std::vector<Triangulation> enumerate_triangulations(const LatticePolygon& P);

struct Cell {
  LatticePolygon polygon;
  std::optional<std::vector<Tri>> member_triangles;
  std::string label;
};

struct Subdivision {
  LatticePolygon polygon;
  std::vector<Cell> cells;
};

struct Star {
  LatticePoint point;
  std::vector<Tri> triangles;
  std::optional<LatticePolygon> hull;
};

Star star(const Triangulation& D, LatticePoint p);

Subdivision intermediate_subdivision(const Triangulation& D, LatticePoint p);

bool refine(const Subdivision& D1, const Triangulation& D);

// Subdivision whose cells are the triangles of D.
Subdivision as_subdivision(const Triangulation& D);

// True when the open triangles (or convex polygons) share interior points.
bool interiors_overlap(const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b);

// Lexicographically smallest sorted triangle list over all equiaffinities taking the
// triangulated polygon (with an optional marked point) to its canonical form.
// Two triangulations are equivalent iff their keys are equal.
std::vector<std::array<LatticePoint, 3>> canonical_key(const Triangulation& D,
                                                       std::optional<LatticePoint> marked = std::nullopt);

// The same key also allowing orientation-reversing lattice maps.
std::vector<std::array<LatticePoint, 3>> canonical_key_gl(const Triangulation& D);

}  // namespace toric
