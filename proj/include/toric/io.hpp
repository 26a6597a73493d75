#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "toric/regularity.hpp"
#include "toric/triangulation.hpp"

namespace toric {

// Polygon block, optionally followed by "triangles:" or "cells:" and their lines.
struct ParsedFile {
  std::optional<LatticePolygon> polygon;
  std::optional<Triangulation> triangulation;
  std::optional<Subdivision> subdivision;
};

// Throws InputError carrying "<source>:<line>: ..." on malformed input.
ParsedFile parse(std::istream& in, const std::string& source = "<input>");
ParsedFile read_file(const std::string& path);

LatticePolygon parse_polygon(std::istream& in, const std::string& source = "<input>");
Triangulation parse_triangulation(std::istream& in, const std::string& source = "<input>");
Subdivision parse_subdivision(std::istream& in, const std::string& source = "<input>");

void write_polygon(std::ostream& os, const LatticePolygon& P);
void write_triangulation(std::ostream& os, const Triangulation& D);
void write_subdivision(std::ostream& os, const Subdivision& S);
// One line per lattice point: "x y num/den".
void write_witness(std::ostream& os, const LiftingFunction& F);

struct SvgOptions {
  std::vector<LatticePoint> dots;
};

// 40 px per lattice unit, y axis pointing up, elements in a fixed order.
std::string render_svg(const Triangulation& D, const SvgOptions& opt = {});
std::string render_svg(const Subdivision& S, const SvgOptions& opt = {});

}  // namespace toric
