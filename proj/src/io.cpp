#include "toric/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
  std::ostringstream os;
  os << source << ":" << line << ": " << what;
  throw InputError(os.str());
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<long long> integers(const std::string& text, const std::string& source, int line) {
  std::istringstream is(text);
  std::vector<long long> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      fail(source, line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail(source, line, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

LatticePolygon make_polygon(std::vector<LatticePoint> v, const std::string& source, int line) {
  try {
    return LatticePolygon(std::move(v));
  } catch (const InputError& e) {
    fail(source, line, e.what());
  }
}

void write_vertices(std::ostream& os, const LatticePolygon& P) {
  for (const auto& v : P.vertices()) os << v.x << " " << v.y << "\n";
}

struct Frame {
  long long min_x, max_y;
  long long width, height;
};

constexpr long long kUnit = 40;
constexpr long long kMargin = 20;

Frame frame_of(const LatticePolygon& P) {
  long long lx = P.vertices()[0].x, hx = lx, ly = P.vertices()[0].y, hy = ly;
  for (const auto& v : P.vertices()) {
    lx = std::min(lx, v.x);
    hx = std::max(hx, v.x);
    ly = std::min(ly, v.y);
    hy = std::max(hy, v.y);
  }
  return {lx, hy, (hx - lx) * kUnit + 2 * kMargin, (hy - ly) * kUnit + 2 * kMargin};
}

long long px(const Frame& f, LatticePoint p) { return (p.x - f.min_x) * kUnit + kMargin; }
long long py(const Frame& f, LatticePoint p) { return (f.max_y - p.y) * kUnit + kMargin; }

std::string points_attr(const Frame& f, const std::vector<LatticePoint>& pts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << px(f, pts[i]) << "," << py(f, pts[i]);
  return os.str();
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

// "Q_p" -> Q with subscript p; "S1,1" -> S with subscript 1,1.
std::string label_markup(const std::string& label) {
  std::string head, sub;
  auto us = label.find('_');
  if (us != std::string::npos) {
    head = label.substr(0, us);
    sub = label.substr(us + 1);
  } else {
    auto digit = label.find_first_of("0123456789");
    head = label.substr(0, digit);
    if (digit != std::string::npos) sub = label.substr(digit);
  }
  std::string out = escape(head);
  if (!sub.empty()) out += "<tspan baseline-shift=\"sub\" font-size=\"10\">" + escape(sub) + "</tspan>";
  return out;
}

void svg_open(std::ostream& os, const Frame& f, const LatticePolygon& P) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width << "\" height=\"" << f.height
     << "\" viewBox=\"0 0 " << f.width << " " << f.height << "\">\n";
  os << "<polygon class=\"outline\" points=\"" << points_attr(f, P.vertices())
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
}

void svg_close(std::ostream& os, const Frame& f, const LatticePolygon& P, const SvgOptions& opt) {
  for (const auto& p : lattice_points(P))
    os << "<circle class=\"lattice\" cx=\"" << px(f, p) << "\" cy=\"" << py(f, p)
       << "\" r=\"2\" fill=\"gray\"/>\n";
  auto dots = opt.dots;
  std::sort(dots.begin(), dots.end());
  for (const auto& p : dots)
    os << "<circle class=\"singular\" cx=\"" << px(f, p) << "\" cy=\"" << py(f, p)
       << "\" r=\"5\" fill=\"black\"/>\n";
  os << "</svg>\n";
}

}  // namespace

ParsedFile parse(std::istream& in, const std::string& source) {
  enum class Section { polygon, triangles, cells } section = Section::polygon;
  std::vector<LatticePoint> vertices;
  std::vector<Tri> triangles;
  std::vector<std::pair<std::string, std::vector<LatticePoint>>> cells;
  std::vector<int> cell_lines;
  int polygon_line = 0, section_line = 0;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = trim(raw);
    if (text.empty() || text[0] == '#') continue;
    if (text == "triangles:" || text == "cells:") {
      if (section != Section::polygon) fail(source, line, "second section header");
      section = text == "triangles:" ? Section::triangles : Section::cells;
      section_line = line;
      continue;
    }
    switch (section) {
      case Section::polygon: {
        auto v = integers(text, source, line);
        if (v.size() != 2) fail(source, line, "expected a vertex \"x y\"");
        vertices.push_back({v[0], v[1]});
        polygon_line = line;
        break;
      }
      case Section::triangles: {
        auto v = integers(text, source, line);
        if (v.size() != 3) fail(source, line, "expected a triangle \"i j k\"");
        for (long long i : v)
          if (i < 0 || i > 1000000) fail(source, line, "triangle index out of range");
        triangles.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])});
        break;
      }
      case Section::cells: {
        auto bar = text.find('|');
        if (bar == std::string::npos) fail(source, line, "expected a cell \"label | x y x y ...\"");
        auto v = integers(text.substr(bar + 1), source, line);
        if (v.size() < 6 || v.size() % 2) fail(source, line, "a cell needs at least three \"x y\" vertices");
        std::vector<LatticePoint> pts;
        for (std::size_t i = 0; i < v.size(); i += 2) pts.push_back({v[i], v[i + 1]});
        cells.push_back({trim(text.substr(0, bar)), pts});
        cell_lines.push_back(line);
        break;
      }
    }
  }
  ParsedFile out;
  if (vertices.empty()) fail(source, line, "no polygon vertices");
  out.polygon = make_polygon(vertices, source, polygon_line);
  if (section == Section::triangles) {
    if (triangles.empty()) fail(source, section_line, "empty triangle list");
    try {
      out.triangulation = Triangulation(*out.polygon, triangles);
    } catch (const InputError& e) {
      fail(source, section_line, e.what());
    }
  } else if (section == Section::cells) {
    if (cells.empty()) fail(source, section_line, "empty cell list");
    Subdivision S{*out.polygon, {}};
    for (std::size_t i = 0; i < cells.size(); ++i) {
      LatticePolygon C = make_polygon(cells[i].second, source, cell_lines[i]);
      for (const auto& v : C.vertices())
        if (!out.polygon->contains(v)) fail(source, cell_lines[i], "cell vertex outside the polygon");
      S.cells.push_back({C, std::nullopt, cells[i].first});
    }
    out.subdivision = std::move(S);
  }
  return out;
}

ParsedFile read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse(in, path);
}

LatticePolygon parse_polygon(std::istream& in, const std::string& source) { return *parse(in, source).polygon; }

Triangulation parse_triangulation(std::istream& in, const std::string& source) {
  auto f = parse(in, source);
  if (!f.triangulation) throw InputError(source + ": no \"triangles:\" section");
  return *f.triangulation;
}

Subdivision parse_subdivision(std::istream& in, const std::string& source) {
  auto f = parse(in, source);
  if (!f.subdivision) throw InputError(source + ": no \"cells:\" section");
  return *f.subdivision;
}

void write_polygon(std::ostream& os, const LatticePolygon& P) { write_vertices(os, P); }

void write_triangulation(std::ostream& os, const Triangulation& D) {
  write_vertices(os, D.polygon());
  os << "triangles:\n";
  for (const auto& t : D.triangles()) os << t[0] << " " << t[1] << " " << t[2] << "\n";
}

void write_subdivision(std::ostream& os, const Subdivision& S) {
  write_vertices(os, S.polygon);
  os << "cells:\n";
  for (const auto& c : S.cells) {
    os << c.label << " |";
    for (const auto& v : c.polygon.vertices()) os << " " << v.x << " " << v.y;
    os << "\n";
  }
}

void write_witness(std::ostream& os, const LiftingFunction& F) {
  for (const auto& [p, h] : F.heights) os << p.x << " " << p.y << " " << to_string(h) << "\n";
}

std::string render_svg(const Triangulation& D, const SvgOptions& opt) {
  const LatticePolygon& P = D.polygon();
  Frame f = frame_of(P);
  std::ostringstream os;
  svg_open(os, f, P);
  for (const auto& t : D.triangles()) {
    auto c = D.corners(t);
    os << "<polygon class=\"triangle\" points=\"" << points_attr(f, {c[0], c[1], c[2]})
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  svg_close(os, f, P, opt);
  return os.str();
}

std::string render_svg(const Subdivision& S, const SvgOptions& opt) {
  const LatticePolygon& P = S.polygon;
  Frame f = frame_of(P);
  std::ostringstream os;
  svg_open(os, f, P);
  for (const auto& c : S.cells) {
    const auto& V = c.polygon.vertices();
    os << "<polygon class=\"cell\" points=\"" << points_attr(f, V)
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (const auto& c : S.cells) {
    if (c.label.empty()) continue;
    const auto& V = c.polygon.vertices();
    long long sx = 0, sy = 0;
    for (const auto& v : V) {
      sx += px(f, v);
      sy += py(f, v);
    }
    const long long n = static_cast<long long>(V.size());
    os << "<text class=\"label\" data-label=\"" << escape(c.label) << "\" x=\"" << sx / n << "\" y=\"" << sy / n
       << "\" font-size=\"14\" text-anchor=\"middle\">" << label_markup(c.label) << "</text>\n";
  }
  svg_close(os, f, P, opt);
  return os.str();
}

}  // namespace toric
