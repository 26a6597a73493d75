#include "toric/secant.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <set>
#include <sstream>

#include "toric/errors.hpp"
#include "toric/regularity.hpp"

namespace toric {

namespace {

constexpr std::size_t kMaxPoints = 256;
using Mask = std::bitset<kMaxPoints>;

std::vector<Mask> triangle_masks(const Triangulation& D) {
  if (D.points().size() > kMaxPoints) throw InputError("too many lattice points for skew-set counting");
  std::vector<Mask> out;
  for (const auto& t : D.triangles()) {
    Mask m;
    for (int i : t) m.set(i);
    out.push_back(m);
  }
  return out;
}

void skew_rec(const std::vector<Mask>& masks, int k, std::size_t start, Mask used, std::vector<int>& chosen,
              long long& count, std::vector<std::vector<int>>* out) {
  if (static_cast<int>(chosen.size()) == k) {
    ++count;
    if (out) out->push_back(chosen);
    return;
  }
  const std::size_t remaining = static_cast<std::size_t>(k) - chosen.size();
  for (std::size_t i = start; i + remaining <= masks.size(); ++i) {
    if ((used & masks[i]).any()) continue;
    chosen.push_back(static_cast<int>(i));
    skew_rec(masks, k, i + 1, used | masks[i], chosen, count, out);
    chosen.pop_back();
  }
}

LatticePolygon trapezium(long long short_edge, long long long_edge) {
  if (short_edge == 0) return LatticePolygon({{0, 0}, {long_edge, 0}, {0, 1}});
  return LatticePolygon({{0, 0}, {long_edge, 0}, {short_edge, 1}, {0, 1}});
}

LatticePoint mirror(LatticePoint p) { return {-p.x, p.y}; }

LatticePolygon mirror(const LatticePolygon& P) {
  std::vector<LatticePoint> v;
  for (const auto& q : P.vertices()) v.push_back(mirror(q));
  return LatticePolygon(v);
}

using MarkedForm = std::pair<LatticePolygon, LatticePoint>;

MarkedForm marked_form(const LatticePolygon& Q, LatticePoint p) {
  auto maps = canonical_maps(Q);
  LatticePoint best = maps.front()(p);
  for (const auto& T : maps) best = std::min(best, T(p));
  return {apply(maps.front(), Q), best};
}

bool marked_equivalent_up_to_mirror(const LatticePolygon& Q, LatticePoint p, const LatticePolygon& R, LatticePoint q) {
  if (Q.area2() != R.area2()) return false;
  auto a = marked_form(Q, p);
  return a == marked_form(R, q) || a == marked_form(mirror(R), mirror(q));
}

std::string tag_g1(const PolygonInvariants& inv) {
  std::ostringstream os;
  os << "P1(" << inv.l << "," << inv.d << "," << inv.m << ")";
  return os.str();
}

SecantData data(int k, long long dim, long long r, std::optional<long long> nu) {
  SecantData s;
  s.k = k;
  s.dim = dim;
  if (dim == 3 * k - 1 && dim <= r) {
    s.nu = nu;
    s.note = "expected";
  } else if (dim >= r) {
    s.dim = r;
    s.note = "fills";
  } else {
    s.note = "defective";
  }
  return s;
}

}  // namespace

long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long count_skew_k_sets(const Triangulation& D, int k) {
  if (k < 0) throw InputError("k must be nonnegative");
  auto masks = triangle_masks(D);
  long long count = 0;
  std::vector<int> chosen;
  skew_rec(masks, k, 0, Mask(), chosen, count, nullptr);
  return count;
}

std::vector<std::vector<Tri>> list_skew_k_sets(const Triangulation& D, int k) {
  if (k < 0) throw InputError("k must be nonnegative");
  auto masks = triangle_masks(D);
  long long count = 0;
  std::vector<int> chosen;
  std::vector<std::vector<int>> idx;
  skew_rec(masks, k, 0, Mask(), chosen, count, &idx);
  std::vector<std::vector<Tri>> out;
  for (const auto& s : idx) {
    std::vector<Tri> v;
    for (int i : s) v.push_back(D.triangles()[i]);
    out.push_back(v);
  }
  return out;
}

long long nu2_toric_smooth(const LatticePolygon& P) {
  const auto& V = P.vertices();
  const std::size_t n = V.size();
  for (std::size_t i = 0; i < n; ++i) {
    LatticePoint v = V[i], next = V[(i + 1) % n], prev = V[(i + n - 1) % n];
    long long l1 = lattice_length(v, next), l2 = lattice_length(v, prev);
    LatticePoint e1{(next.x - v.x) / l1, (next.y - v.y) / l1};
    LatticePoint e2{(prev.x - v.x) / l2, (prev.y - v.y) / l2};
    if (std::llabs(e1.x * e2.y - e1.y * e2.x) != 1) {
      std::ostringstream os;
      os << "vertex " << v << " has a singular cone; the smooth double-point formula does not apply";
      throw DomainError(os.str());
    }
  }
  auto inv = invariants(P);
  long long num = inv.d * inv.d - 10 * inv.d + 5 * inv.B + 2 * inv.l - 12;
  return num / 2;
}

const SecantData& CatalogEntry::at(int k) const {
  for (const auto& s : data)
    if (s.k == k) return s;
  throw InputError("catalog data is available for k = 2 and k = 3 only");
}

bool CatalogEntry::expected(int k) const { return at(k).nu.has_value(); }

CatalogEntry catalog_lookup(const LatticePolygon& P, int k) {
  if (k != 2 && k != 3) throw InputError("catalog data is available for k = 2 and k = 3 only");
  auto inv = invariants(P);
  CatalogEntry e{canonical_form(P), "", 0, {}};
  if (inv.g == 0) {
    e.r = inv.d + 1;
    if (are_equivalent(P, LatticePolygon({{0, 0}, {2, 0}, {0, 2}}))) {
      e.family_tag = "veronese(2)";
      e.data = {data(2, 4, e.r, std::nullopt), data(3, 5, e.r, std::nullopt)};
      return e;
    }
    for (long long d1 = 0; 2 * d1 <= inv.d; ++d1) {
      long long d2 = inv.d - d1;
      if (!are_equivalent(P, trapezium(d1, d2))) continue;
      if (d1 == 0) {
        e.family_tag = "cone(" + std::to_string(d2) + ")";
        for (int kk : {2, 3}) e.data.push_back(data(kk, std::min<long long>(2 * kk, e.r), e.r, std::nullopt));
        return e;
      }
      e.family_tag = "scroll(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
      for (int kk : {2, 3}) {
        if (kk <= d1 + 1) {
          if (3 * kk - 1 <= e.r)
            e.data.push_back(data(kk, 3 * kk - 1, e.r, binomial(inv.d - 2 * kk + 2, kk)));
          else
            e.data.push_back(data(kk, e.r, e.r, std::nullopt));
        } else {
          e.data.push_back(data(kk, std::min<long long>(2 * kk + 1, e.r), e.r, std::nullopt));
        }
      }
      return e;
    }
    throw AlgorithmFailure("polygon with g = 0 outside the known families");
  }
  if (inv.g == 1) {
    e.r = inv.d;
    e.family_tag = inv.l == 3 && inv.d == 9 ? "veronese(3)" : tag_g1(inv);
    // Sec_2
    if (inv.d >= 5)
      e.data.push_back(data(2, 5, e.r, binomial(inv.d - 3, 2)));
    else
      e.data.push_back(data(2, e.r, e.r, std::nullopt));
    // Sec_3
    if (inv.d <= 7) {
      e.data.push_back(data(3, e.r, e.r, std::nullopt));
    } else if (inv.d == 8 && inv.m == 3) {
      e.data.push_back(data(3, 8, e.r, 1));
    } else if (inv.d == 8) {
      e.data.push_back(data(3, 7, e.r, std::nullopt));
    } else {
      e.data.push_back(data(3, 8, e.r, 4));
    }
    return e;
  }
  throw NotInCatalog("no secant data for polygons with " + std::to_string(inv.g) + " interior points");
}

std::string to_string(SingularityKind kind) { return kind == SingularityKind::rational ? "rational" : "elliptic"; }

std::vector<SingularityRecord> classify_singularities(const Triangulation& D) {
  std::vector<SingularityRecord> out;
  const LatticePolygon& P = D.polygon();
  for (const auto& p : D.points()) {
    Star s = star(D, p);
    if (!s.hull) continue;
    const LatticePolygon& Q = *s.hull;
    const int deg = static_cast<int>(s.triangles.size());
    auto qi = invariants(Q);
    SingularityRecord rec;
    rec.point = p;
    rec.degree = deg;
    rec.hull = Q;
    if (P.on_boundary(p)) {
      if (qi.g != 0 || deg < 4) continue;
      bool one = marked_equivalent_up_to_mirror(Q, p, trapezium(1, deg - 1), {0, 1}) ||
                 marked_equivalent_up_to_mirror(Q, p, trapezium(1, deg - 1), {1, 1});
      bool two = marked_equivalent_up_to_mirror(Q, p, trapezium(2, deg - 2), {1, 1});
      if (!one && !two) continue;
      rec.kind = SingularityKind::rational;
      rec.table = 1;
      rec.shape = (one ? "S(1," : "S(2,") + std::to_string(deg - (one ? 1 : 2)) + ")";
      int base_row = deg <= 6 ? 2 * (deg - 4) + 1 : 7;
      rec.table_row = base_row + (one ? 0 : 1);
      rec.nu2 = binomial(deg - 2, 2);
      if (two && deg >= 7) rec.nu3 = binomial(deg - 4, 3);
    } else {
      if (qi.g != 1 || !Q.strictly_inside(p) || deg < 5 || deg > 9) continue;
      rec.kind = SingularityKind::elliptic;
      rec.table = 2;
      rec.shape = qi.l == 3 && qi.d == 9 ? "P1(3,9,3)" : tag_g1(qi);
      rec.nu2 = binomial(deg - 3, 2);
      if (deg <= 7) {
        rec.table_row = deg - 4;
      } else if (deg == 8) {
        rec.table_row = qi.m == 3 ? 5 : 4;
        if (qi.m == 3) rec.nu3 = 1;
      } else {
        rec.table_row = 6;
        rec.nu3 = 4;
      }
    }
    try {
      Subdivision D1 = intermediate_subdivision(D, p);
      rec.d1_exists = is_regular(D1).regular;
      if (!rec.d1_exists) rec.d1_note = "intermediate subdivision is not regular";
    } catch (const AlgorithmFailure& err) {
      rec.d1_exists = false;
      rec.d1_note = err.what();
    }
    out.push_back(rec);
  }
  return out;
}

LowerBound lower_bound_nu_k(const Triangulation& D, int k) {
  if (k != 2 && k != 3) throw InputError("the lower bound is implemented for k = 2 and k = 3");
  LowerBound lb;
  lb.k = k;
  lb.skew_sets = count_skew_k_sets(D, k);
  try {
    auto e = catalog_lookup(D.polygon(), k);
    const auto& s = e.at(k);
    if (!s.nu) {
      std::ostringstream os;
      os << "precondition fails: dim Sec_" << k << " = " << s.dim << " (" << s.note << "), r = " << e.r;
      lb.warnings.push_back(os.str());
    }
  } catch (const NotInCatalog&) {
    std::ostringstream os;
    os << "precondition unverified: dim Sec_" << k << " = " << 3 * k - 1 << " <= r is assumed (polygon not in catalog)";
    lb.warnings.push_back(os.str());
  }
  lb.total = lb.skew_sets;
  for (const auto& rec : classify_singularities(D)) {
    const auto& value = k == 2 ? rec.nu2 : rec.nu3;
    if (!value) continue;
    BoundTerm t;
    t.point = rec.point;
    t.kind = rec.kind;
    t.degree = rec.degree;
    t.contribution = *value;
    t.d1_exists = rec.d1_exists;
    t.included = rec.d1_exists;
    if (!t.included) {
      t.note = "dropped: " + rec.d1_note;
      std::ostringstream os;
      os << "contribution of " << rec.point << " dropped (" << rec.d1_note << ")";
      lb.warnings.push_back(os.str());
    } else {
      lb.total += t.contribution;
    }
    lb.terms.push_back(t);
  }
  return lb;
}

bool is_k_delightful(const Triangulation& D, int k) {
  if (k == 1) return true;
  if (k != 2 && k != 3) throw NotDecidable("k-delightfulness is decided for k <= 3 only");
  CatalogEntry e = [&] {
    try {
      return catalog_lookup(D.polygon(), k);
    } catch (const NotInCatalog& err) {
      throw NotDecidable(err.what());
    }
  }();
  const auto& s = e.at(k);
  if (!s.nu) throw NotDecidable("dim Sec_" + std::to_string(k) + " is not 3k-1 <= r (" + s.note + ")");
  return count_skew_k_sets(D, k) == *s.nu;
}

std::vector<int> applicable_ks(const LatticePolygon& P, int k_max) {
  auto e = catalog_lookup(P, 2);
  std::vector<int> out;
  for (int k = 2; k <= std::min(k_max, 3); ++k)
    if (e.expected(k)) out.push_back(k);
  return out;
}

std::vector<Triangulation> find_delightful(const LatticePolygon& P, int k_max) {
  auto e = catalog_lookup(P, 2);
  std::vector<std::pair<int, long long>> targets;
  for (int k : applicable_ks(P, k_max)) targets.push_back({k, *e.at(k).nu});
  std::vector<Triangulation> out;
  std::set<std::vector<std::array<LatticePoint, 3>>> seen;
  for (auto& D : enumerate_triangulations(P)) {
    bool ok = true;
    for (auto [k, nu] : targets)
      if (count_skew_k_sets(D, k) != nu) {
        ok = false;
        break;
      }
    if (!ok || !is_regular(D).regular) continue;
    if (seen.insert(canonical_key(D)).second) out.push_back(std::move(D));
  }
  return out;
}

}  // namespace toric
