#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "toric/errors.hpp"
#include "toric/lattice.hpp"

using namespace toric;

namespace {

LatticePolygon poly(std::vector<LatticePoint> v) { return LatticePolygon(std::move(v)); }

LatticePolygon hexagon() { return poly({{1, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}, {0, 1}}); }

// Brute-force search for an SL2(Z) matrix with small entries plus translation mapping P onto Q.
bool brute_equivalent(const LatticePolygon& P, const LatticePolygon& Q, int bound) {
  auto qv = Q.vertices();
  std::sort(qv.begin(), qv.end());
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d) {
          if (a * d - b * c != 1) continue;
          for (const auto& target : qv) {
            LatticePoint v = P.vertices()[0];
            LatticePoint t{target.x - (a * v.x + b * v.y), target.y - (c * v.x + d * v.y)};
            std::vector<LatticePoint> img;
            for (const auto& p : P.vertices()) img.push_back({a * p.x + b * p.y + t.x, c * p.x + d * p.y + t.y});
            std::sort(img.begin(), img.end());
            if (img == qv) return true;
          }
        }
  return false;
}

Equiaffinity random_map(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-3, 3), t(-5, 5);
  while (true) {
    long long a = e(rng), b = e(rng), c = e(rng), d = e(rng);
    if (a * d - b * c == 1) return Equiaffinity({a, b, c, d}, {t(rng), t(rng)});
  }
}

LatticePolygon random_polygon(std::mt19937& rng, int side) {
  std::uniform_int_distribution<int> c(0, side), n(3, 7);
  while (true) {
    std::vector<LatticePoint> pts;
    int k = n(rng);
    for (int i = 0; i < k; ++i) pts.push_back({c(rng), c(rng)});
    try {
      return LatticePolygon::hull(pts);
    } catch (const InputError&) {
    }
  }
}

}  // namespace

TEST_CASE("construction rejects degenerate input") {
  CHECK_THROWS_AS(poly({{0, 0}, {1, 1}, {2, 2}}), InputError);
  CHECK_THROWS_AS(poly({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), InputError);
  CHECK_THROWS_AS(poly({{0, 0}, {1, 0}}), InputError);
  CHECK_THROWS_AS(poly({{0, 0}, {4, 0}, {1, 1}, {0, 4}}), InputError);
}

TEST_CASE("construction normalizes orientation and drops collinear points") {
  auto P = poly({{0, 0}, {0, 1}, {1, 0}});
  CHECK(P.vertices() == std::vector<LatticePoint>{{0, 0}, {1, 0}, {0, 1}});
  auto R = poly({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0, 1}});
  CHECK(R.size() == 4);
  CHECK(R.area2() == 4);
}

TEST_CASE("lattice_points") {
  auto T = poly({{0, 0}, {1, 0}, {0, 1}});
  CHECK(lattice_points(T) == std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(lattice_points(hexagon()).size() == 7);
  CHECK(lattice_points(poly({{0, 0}, {3, 0}, {3, 2}, {0, 2}})).size() == 12);
}

TEST_CASE("invariants") {
  auto V2 = poly({{0, 0}, {2, 0}, {0, 2}});
  CHECK(invariants(V2) == PolygonInvariants{0, 3, 4, 2, 6, 6});
  CHECK(invariants(hexagon()) == PolygonInvariants{1, 6, 6, 1, 6, 7});
  CHECK(invariants(poly({{0, 0}, {1, 0}, {0, 1}})) == PolygonInvariants{0, 3, 1, 1, 3, 3});
}

TEST_CASE("ehrhart_count") {
  auto sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(ehrhart_count(sq, 2) == 9);
  CHECK(ehrhart_count(sq, 0) == 1);
  auto V2 = poly({{0, 0}, {2, 0}, {0, 2}});
  // 3*V2 is the triangle of side 6: (6+1)(6+2)/2 points.
  CHECK(ehrhart_count(V2, 3) == 28);
  CHECK(28 == 2 * 9 + 3 * 3 + 1);
}

TEST_CASE("apply") {
  auto sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  Equiaffinity shear({1, 1, 0, 1}, {0, 0});
  CHECK(apply(shear, sq) == poly({{0, 0}, {1, 0}, {2, 1}, {1, 1}}));
  CHECK(apply(Equiaffinity(), hexagon()) == hexagon());
  auto T = poly({{0, 0}, {1, 0}, {0, 1}});
  CHECK(apply(Equiaffinity({1, 0, 0, 1}, {5, -3}), T) == poly({{5, -3}, {6, -3}, {5, -2}}));
  CHECK_THROWS_AS(Equiaffinity({1, 0, 0, -1}, {0, 0}), InputError);
}

TEST_CASE("canonical_form and are_equivalent") {
  auto sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto par = poly({{0, 0}, {1, 0}, {2, 1}, {1, 1}});
  CHECK(canonical_form(sq) == canonical_form(par));
  CHECK(are_equivalent(sq, sq));
  CHECK_FALSE(are_equivalent(poly({{0, 0}, {2, 0}, {0, 2}}), poly({{0, 0}, {1, 0}, {0, 1}})));
  auto t1 = poly({{0, 0}, {1, 0}, {0, 1}});
  auto t2 = poly({{0, 0}, {1, 0}, {1, 1}});
  CHECK(brute_equivalent(t1, t2, 2));
  CHECK(are_equivalent(t1, t2));
  // Two presentations of the pentagon with one interior point.
  auto p1 = poly({{1, 0}, {2, 1}, {1, 2}, {0, 2}, {0, 1}});
  auto p2 = poly({{0, 0}, {1, 0}, {2, 1}, {1, 2}, {0, 1}});
  CHECK(are_equivalent(p1, p2));
}

TEST_CASE("canonical_maps realize the canonical form") {
  for (const auto& P : {hexagon(), poly({{0, 0}, {3, 0}, {0, 3}}), poly({{0, 0}, {2, 0}, {1, 2}, {0, 1}})}) {
    auto C = canonical_form(P);
    auto maps = canonical_maps(P);
    CHECK(!maps.empty());
    for (const auto& T : maps) CHECK(apply(T, P) == C);
  }
  CHECK(canonical_maps(hexagon()).size() == 6);
  CHECK(canonical_maps(poly({{0, 0}, {3, 0}, {0, 3}})).size() == 3);
}

TEST_CASE("property: Pick identity and Ehrhart consistency on random polygons") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto P = random_polygon(rng, 6);
    auto inv = invariants(P);
    CHECK(inv.d == 2 * inv.g + inv.B - 2);
    CHECK(inv.n_points == inv.g + inv.B);
    for (long long t = 0; t <= 3; ++t) CHECK(2 * ehrhart_count(P, t) == inv.d * t * t + inv.B * t + 2);
  }
}

TEST_CASE("property: equiaffinity invariance and canonical idempotence") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto P = random_polygon(rng, 5);
    auto T = random_map(rng);
    auto Q = apply(T, P);
    CHECK(invariants(Q) == invariants(P));
    CHECK(canonical_form(Q) == canonical_form(P));
    auto C = canonical_form(P);
    CHECK(canonical_form(C) == C);
  }
}

TEST_CASE("property: canonical equivalence agrees with brute-force SL2 search") {
  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    auto P = random_polygon(rng, 3);
    auto Q = random_polygon(rng, 3);
    if (P.area2() != Q.area2() || P.size() != Q.size()) continue;
    bool fast = are_equivalent(P, Q);
    CHECK(fast == brute_equivalent(P, Q, 4));
  }
  auto P = random_polygon(rng, 3);
  CHECK(brute_equivalent(P, canonical_form(P), 6));
}

TEST_CASE("enumerate_polygons small cases") {
  auto g0d1 = enumerate_polygons(0, 1);
  REQUIRE(g0d1.size() == 1);
  CHECK(invariants(g0d1[0]).d == 1);
  auto g0d2 = enumerate_polygons(0, 2);
  CHECK(g0d2.size() == 3);
  std::set<LatticePolygon> expect = {canonical_form(poly({{0, 0}, {1, 0}, {0, 1}})),
                                     canonical_form(poly({{0, 0}, {2, 0}, {0, 1}})),
                                     canonical_form(poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}))};
  CHECK(std::set<LatticePolygon>(g0d2.begin(), g0d2.end()) == expect);
}

TEST_CASE("enumerate_polygons agrees with hulls of point subsets of a box") {
  // Every class realized as the hull of at most 6 points of [0,3]^2 must be enumerated.
  std::vector<LatticePoint> box;
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; y <= 3; ++y) box.push_back({x, y});
  std::set<std::pair<long long, LatticePolygon>> oracle;
  const int n = static_cast<int>(box.size());
  std::vector<int> idx;
  auto visit = [&](const std::vector<int>& s) {
    std::vector<LatticePoint> pts;
    for (int i : s) pts.push_back(box[i]);
    try {
      auto P = LatticePolygon::hull(pts);
      if (P.size() != s.size()) return;
      auto inv = invariants(P);
      if (inv.d <= 6 && inv.g <= 2) oracle.insert({inv.g, canonical_form(P)});
    } catch (const InputError&) {
    }
  };
  std::function<void(int)> rec = [&](int start) {
    if (idx.size() >= 3) visit(idx);
    if (idx.size() == 6) return;
    for (int i = start; i < n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
  for (int g = 0; g <= 2; ++g) {
    auto list = enumerate_polygons(g, 6);
    std::set<LatticePolygon> got(list.begin(), list.end());
    CHECK(got.size() == list.size());
    for (const auto& [og, P] : oracle)
      if (og == g) CHECK_MESSAGE(got.count(P) == 1, "missing class " << P);
  }
}

TEST_CASE("census completeness for g = 0 against random generation") {
  auto census = enumerate_polygons(0, 10);
  std::set<LatticePolygon> known(census.begin(), census.end());
  std::mt19937 rng(19);
  int tested = 0;
  for (int i = 0; i < 3000 && tested < 150; ++i) {
    auto P = random_polygon(rng, 6);
    auto inv = invariants(P);
    if (inv.g != 0 || inv.d > 10) continue;
    ++tested;
    CHECK(known.count(canonical_form(P)) == 1);
  }
  CHECK(tested > 20);
}
