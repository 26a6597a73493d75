#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/triangulation.hpp"

namespace toric {

long long binomial(long long n, long long k);

long long count_skew_k_sets(const Triangulation& D, int k);
std::vector<std::vector<Tri>> list_skew_k_sets(const Triangulation& D, int k);

// (d^2 - 10d + 5B + 2V - 12) / 2; DomainError unless every vertex cone is unimodular.
long long nu2_toric_smooth(const LatticePolygon& P);

struct SecantData {
  int k = 0;
  long long dim = 0;               // dim Sec_k
  std::optional<long long> nu;     // set only when dim = 3k - 1 <= r
  std::string note;                // "expected", "fills", "defective"
};

struct CatalogEntry {
  LatticePolygon canonical_polygon;
  std::string family_tag;
  long long r = 0;                 // ambient projective dimension
  std::vector<SecantData> data;    // k = 2 and k = 3
  const SecantData& at(int k) const;
  bool expected(int k) const;      // dim Sec_k = 3k - 1 <= r
};

// Throws NotInCatalog for polygons with g >= 2; InputError for k outside {2, 3}.
CatalogEntry catalog_lookup(const LatticePolygon& P, int k);

enum class SingularityKind { rational, elliptic };

struct SingularityRecord {
  LatticePoint point;
  SingularityKind kind = SingularityKind::rational;
  int degree = 0;
  int table = 0;                   // 1 rational, 2 elliptic
  int table_row = 0;
  std::string shape;               // e.g. S(1,4), S(2,3), P1(5,5,1)
  std::optional<LatticePolygon> hull;
  std::optional<long long> nu2;
  std::optional<long long> nu3;
  bool d1_exists = false;
  std::string d1_note;
};

std::vector<SingularityRecord> classify_singularities(const Triangulation& D);

struct BoundTerm {
  LatticePoint point;
  SingularityKind kind = SingularityKind::rational;
  int degree = 0;
  long long contribution = 0;
  bool d1_exists = false;
  bool included = false;
  std::string note;
};

struct LowerBound {
  int k = 2;
  long long skew_sets = 0;
  std::vector<BoundTerm> terms;
  long long total = 0;
  std::vector<std::string> warnings;
};

LowerBound lower_bound_nu_k(const Triangulation& D, int k);

// Throws NotDecidable when nu_k of the surface is not available with dim Sec_k = 3k - 1 <= r.
bool is_k_delightful(const Triangulation& D, int k);

// The k in [2, min(k_max, 3)] for which dim Sec_k = 3k - 1 <= r.
std::vector<int> applicable_ks(const LatticePolygon& P, int k_max);

// Regular triangulations that are k-delightful for every applicable k, one per equivalence class.
std::vector<Triangulation> find_delightful(const LatticePolygon& P, int k_max);

std::string to_string(SingularityKind kind);

}  // namespace toric
