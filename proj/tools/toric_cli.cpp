#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toric/errors.hpp"
#include "toric/io.hpp"
#include "toric/regularity.hpp"
#include "toric/secant.hpp"
#include "toric/triangulation.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace toric;

namespace {

struct RunReport {
  std::string command;
  std::vector<std::string> inputs;
  json results = json::object();
  std::vector<std::string> warnings;
  std::vector<std::string> errors;
};

json point_json(LatticePoint p) { return json::array({p.x, p.y}); }

json polygon_json(const LatticePolygon& P) {
  json v = json::array();
  for (const auto& q : P.vertices()) v.push_back(point_json(q));
  return v;
}

json invariants_json(const PolygonInvariants& inv) {
  return {{"g", inv.g}, {"l", inv.l}, {"d", inv.d}, {"m", inv.m}, {"B", inv.B}};
}

json triangles_json(const Triangulation& D) {
  json v = json::array();
  for (const auto& t : D.triangles()) v.push_back(json::array({t[0], t[1], t[2]}));
  return v;
}

long long max_area() {
  const char* env = std::getenv("TORIC_MAX_AREA");
  if (!env) return 12;
  try {
    return std::stoll(env);
  } catch (const std::exception&) {
    throw InputError("TORIC_MAX_AREA is not an integer");
  }
}

void check_area(const LatticePolygon& P) {
  long long d = P.area2();
  if (d > max_area())
    throw InputError("normalized area " + std::to_string(d) + " exceeds TORIC_MAX_AREA=" + std::to_string(max_area()));
}

std::vector<std::string> expand_inputs(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    if (fs::is_directory(a)) {
      std::vector<std::string> files;
      for (const auto& e : fs::directory_iterator(a))
        if (e.is_regular_file()) files.push_back(e.path().string());
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else {
      out.push_back(a);
    }
  }
  return out;
}

void print_text(std::ostream& os, const json& j, int indent) {
  const std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      os << pad << it.key() << ":\n";
      print_text(os, v, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << pad << it.key() << ":\n";
      for (const auto& item : v) {
        os << pad << "  -\n";
        print_text(os, item, indent + 4);
      }
    } else {
      os << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

void emit(const RunReport& r, const std::string& format) {
  json j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["results"] = r.results;
  j["warnings"] = r.warnings;
  j["errors"] = r.errors;
  if (format == "json-lines") {
    std::cout << j.dump() << "\n";
  } else {
    print_text(std::cout, j, 0);
    std::cout << "\n";
  }
}

template <class F>
void guarded(RunReport& r, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.errors.push_back(e.what());
  }
}

RunReport cmd_census(int g, int d_max) {
  RunReport r{"census", {}};
  guarded(r, [&] {
    auto polys = enumerate_polygons(g, d_max);
    json list = json::array();
    for (const auto& P : polys) {
      json item;
      item["vertices"] = polygon_json(P);
      item["invariants"] = invariants_json(invariants(P));
      list.push_back(item);
    }
    r.results["g"] = g;
    r.results["d_max"] = d_max;
    r.results["count"] = polys.size();
    r.results["polygons"] = list;
  });
  return r;
}

RunReport cmd_triangulate(const std::string& file, bool regular_only) {
  RunReport r{"triangulate", {file}};
  guarded(r, [&] {
    LatticePolygon P = *read_file(file).polygon;
    check_area(P);
    auto all = enumerate_triangulations(P);
    json list = json::array();
    std::size_t regular = 0;
    for (const auto& D : all) {
      bool reg = is_regular(D).regular;
      if (reg) ++regular;
      if (regular_only && !reg) continue;
      list.push_back({{"regular", reg}, {"triangles", triangles_json(D)}});
    }
    r.results["polygon"] = polygon_json(P);
    r.results["count"] = all.size();
    r.results["regular"] = regular;
    r.results["triangulations"] = list;
  });
  return r;
}

RunReport cmd_check(const std::string& file, int k) {
  RunReport r{"check", {file}};
  guarded(r, [&] {
    auto parsed = read_file(file);
    if (!parsed.triangulation) throw InputError(file + ": no \"triangles:\" section");
    const Triangulation& D = *parsed.triangulation;
    auto v = validate(D);
    r.results["valid"] = v.ok;
    if (!v.ok) throw InputError("invalid triangulation: " + v.reason);
    auto reg = is_regular(D);
    r.results["regular"] = reg.regular;
    if (reg.witness) {
      json w = json::array();
      for (const auto& [p, h] : reg.witness->heights) w.push_back({p.x, p.y, to_string(h)});
      r.results["witness"] = w;
    }
    r.results["k"] = k;
    r.results["skew_sets"] = count_skew_k_sets(D, k);
    json sing = json::array();
    for (const auto& s : classify_singularities(D)) {
      json item{{"point", point_json(s.point)},
                {"kind", to_string(s.kind)},
                {"degree", s.degree},
                {"table", s.table},
                {"row", s.table_row},
                {"shape", s.shape},
                {"d1_exists", s.d1_exists}};
      if (s.nu2) item["nu2"] = *s.nu2;
      if (s.nu3) item["nu3"] = *s.nu3;
      if (!s.d1_note.empty()) item["d1_note"] = s.d1_note;
      sing.push_back(item);
    }
    r.results["singularities"] = sing;
    if (k == 2 || k == 3) {
      auto lb = lower_bound_nu_k(D, k);
      json terms = json::array();
      for (const auto& t : lb.terms)
        terms.push_back({{"point", point_json(t.point)},
                         {"kind", to_string(t.kind)},
                         {"contribution", t.contribution},
                         {"included", t.included}});
      r.results["lower_bound"] = {{"skew_sets", lb.skew_sets}, {"terms", terms}, {"total", lb.total}};
      r.warnings.insert(r.warnings.end(), lb.warnings.begin(), lb.warnings.end());
    } else {
      r.warnings.push_back("lower bound is computed for k = 2 and k = 3 only");
    }
    try {
      r.results["delightful"] = is_k_delightful(D, k);
    } catch (const NotDecidable& e) {
      r.results["delightful"] = "undecided";
      r.warnings.push_back(std::string("k-delightfulness undecided: ") + e.what());
    }
  });
  return r;
}

RunReport cmd_classify(const std::string& file, int k_max) {
  RunReport r{"classify-delightful", {file}};
  guarded(r, [&] {
    LatticePolygon P = *read_file(file).polygon;
    check_area(P);
    auto e = catalog_lookup(P, 2);
    auto ks = applicable_ks(P, k_max);
    if (ks.empty()) r.warnings.push_back("no k in [2, kmax] has dim Sec_k = 3k-1 <= r; every regular triangulation qualifies");
    auto found = find_delightful(P, k_max);
    json list = json::array();
    for (const auto& D : found) list.push_back(triangles_json(D));
    r.results["polygon"] = polygon_json(P);
    r.results["family"] = e.family_tag;
    r.results["applicable_k"] = ks;
    r.results["count"] = found.size();
    r.results["classes"] = list;
  });
  return r;
}

RunReport cmd_render(const std::string& file, const std::string& out, const std::string& d1) {
  RunReport r{"render", {file}};
  guarded(r, [&] {
    auto parsed = read_file(file);
    std::string svg;
    if (parsed.triangulation) {
      const Triangulation& D = *parsed.triangulation;
      auto v = validate(D);
      if (!v.ok) throw InputError("invalid triangulation: " + v.reason);
      SvgOptions opt;
      for (const auto& s : classify_singularities(D)) opt.dots.push_back(s.point);
      if (!d1.empty()) {
        long long x = 0, y = 0;
        char comma = 0;
        std::istringstream is(d1);
        if (!(is >> x >> comma >> y) || comma != ',') throw InputError("--d1 expects x,y");
        svg = render_svg(intermediate_subdivision(D, {x, y}), opt);
      } else {
        svg = render_svg(D, opt);
      }
    } else if (parsed.subdivision) {
      svg = render_svg(*parsed.subdivision);
    } else {
      throw InputError(file + ": expected a triangulation or subdivision");
    }
    std::ofstream os(out);
    if (!os) throw InputError("cannot write " + out);
    os << svg;
    r.results["out"] = out;
  });
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric degenerations, triangulations and secant counts of lattice polygons"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json-lines"}));

  int g = 0, d_max = 8;
  auto* census = app.add_subcommand("census", "Enumerate polygons with g interior points and d <= dmax");
  census->add_option("--g", g)->required();
  census->add_option("--dmax", d_max)->required();

  std::vector<std::string> files;
  bool regular_only = false;
  auto* tri = app.add_subcommand("triangulate", "Enumerate unimodular triangulations of polygon files");
  tri->add_option("inputs", files)->required();
  tri->add_flag("--regular-only", regular_only);

  int k = 2;
  auto* check = app.add_subcommand("check", "Validate and analyse triangulation files");
  check->add_option("inputs", files)->required();
  check->add_option("--k", k)->required();

  int k_max = 3;
  auto* classify = app.add_subcommand("classify-delightful", "Find delightful triangulations of polygon files");
  classify->add_option("inputs", files)->required();
  classify->add_option("--kmax", k_max);

  std::string out, d1;
  auto* render = app.add_subcommand("render", "Write an SVG drawing of a triangulation or subdivision");
  render->add_option("input", files)->required()->expected(1);
  render->add_option("--out", out)->required();
  render->add_option("--d1", d1, "Draw the intermediate subdivision at the point x,y");

  CLI11_PARSE(app, argc, argv);

  std::vector<RunReport> reports;
  if (census->parsed()) {
    reports.push_back(cmd_census(g, d_max));
  } else {
    std::vector<std::string> inputs;
    try {
      inputs = expand_inputs(files);
    } catch (const std::exception& e) {
      RunReport r{app.get_subcommands().front()->get_name(), files};
      r.errors.push_back(e.what());
      reports.push_back(r);
    }
    for (const auto& f : inputs) {
      if (tri->parsed()) reports.push_back(cmd_triangulate(f, regular_only));
      if (check->parsed()) reports.push_back(cmd_check(f, k));
      if (classify->parsed()) reports.push_back(cmd_classify(f, k_max));
      if (render->parsed()) reports.push_back(cmd_render(f, out, d1));
    }
  }
  bool failed = false;
  for (const auto& r : reports) {
    emit(r, format);
    if (!r.errors.empty()) failed = true;
  }
  return failed ? 1 : 0;
}
