#include "toric/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "toric/errors.hpp"
#include "toric/rational.hpp"

namespace toric {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

// Returns (g, s, t) with a*s + b*t = g = gcd(a, b) >= 0.
std::tuple<long long, long long, long long> ext_gcd(long long a, long long b) {
  long long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long long q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return {};
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) return {};
  return h;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  return os << "(" << p.x << "," << p.y << ")";
}

std::ostream& operator<<(std::ostream& os, const LatticePolygon& P) {
  os << "[";
  for (std::size_t i = 0; i < P.size(); ++i) os << (i ? " " : "") << P.vertices()[i];
  return os << "]";
}

long long lattice_length(LatticePoint a, LatticePoint b) {
  return std::gcd(std::llabs(b.x - a.x), std::llabs(b.y - a.y));
}

Equiaffinity::Equiaffinity(std::array<long long, 4> m, LatticePoint t) : matrix(m), translation(t) {
  if (det() != 1) throw InputError("equiaffinity matrix must have determinant 1");
}

Equiaffinity Equiaffinity::compose(const Equiaffinity& in) const {
  const auto& a = matrix;
  const auto& b = in.matrix;
  Equiaffinity r;
  r.matrix = {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
              a[2] * b[1] + a[3] * b[3]};
  r.translation = (*this)(in.translation);
  return r;
}

Equiaffinity Equiaffinity::inverse() const {
  Equiaffinity r;
  r.matrix = {matrix[3], -matrix[1], -matrix[2], matrix[0]};
  Equiaffinity lin = r;
  LatticePoint t = lin(translation);
  r.translation = {-t.x, -t.y};
  return r;
}

LatticePolygon::LatticePolygon(std::vector<LatticePoint> vertices) {
  std::vector<LatticePoint> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("repeated vertex");
  vertices_ = convex_hull(vertices);
  if (vertices_.empty()) throw InputError("degenerate polygon (fewer than three non-collinear points)");
  for (const auto& p : vertices)
    if (!on_boundary(p)) throw InputError("polygon is not convex");
}

LatticePolygon LatticePolygon::hull(std::vector<LatticePoint> points) {
  LatticePolygon P;
  P.vertices_ = convex_hull(std::move(points));
  if (P.vertices_.empty()) throw InputError("degenerate point set");
  return P;
}

bool LatticePolygon::contains(LatticePoint p) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (cross(vertices_[i], vertices_[(i + 1) % vertices_.size()], p) < 0) return false;
  return true;
}

bool LatticePolygon::on_boundary(LatticePoint p) const {
  if (!contains(p)) return false;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (cross(vertices_[i], vertices_[(i + 1) % vertices_.size()], p) == 0) return true;
  return false;
}

long long LatticePolygon::area2() const {
  long long s = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % vertices_.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return s;
}

std::vector<LatticePoint> lattice_points(const LatticePolygon& P) {
  long long x0 = P.vertices()[0].x, x1 = x0, y0 = P.vertices()[0].y, y1 = y0;
  for (const auto& v : P.vertices()) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  std::vector<LatticePoint> out;
  for (long long x = x0; x <= x1; ++x)
    for (long long y = y0; y <= y1; ++y)
      if (P.contains({x, y})) out.push_back({x, y});
  return out;
}

PolygonInvariants invariants(const LatticePolygon& P) {
  PolygonInvariants inv;
  inv.l = static_cast<long long>(P.size());
  inv.d = P.area2();
  for (std::size_t i = 0; i < P.size(); ++i) {
    long long len = lattice_length(P.vertices()[i], P.vertices()[(i + 1) % P.size()]);
    inv.B += len;
    inv.m = std::max(inv.m, len);
  }
  inv.n_points = static_cast<long long>(lattice_points(P).size());
  inv.g = inv.n_points - inv.B;
  if (inv.d != 2 * inv.g + inv.B - 2) throw AlgorithmFailure("Pick identity violated");
  return inv;
}

long long ehrhart_count(const LatticePolygon& P, long long t) {
  if (t < 0) throw InputError("dilation factor must be nonnegative");
  if (t == 0) return 1;
  std::vector<LatticePoint> scaled;
  for (const auto& v : P.vertices()) scaled.push_back({v.x * t, v.y * t});
  return static_cast<long long>(lattice_points(LatticePolygon(scaled)).size());
}

LatticePolygon apply(const Equiaffinity& T, const LatticePolygon& P) {
  std::vector<LatticePoint> image;
  for (const auto& v : P.vertices()) image.push_back(T(v));
  return LatticePolygon(image);
}

namespace {

struct Candidate {
  std::vector<LatticePoint> encoding;
  Equiaffinity map;
};

std::vector<Candidate> edge_candidates(const LatticePolygon& P) {
  const auto pts = lattice_points(P);
  const auto& V = P.vertices();
  long long m = 0;
  for (std::size_t i = 0; i < V.size(); ++i) m = std::max(m, lattice_length(V[i], V[(i + 1) % V.size()]));
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < V.size(); ++i) {
    LatticePoint q1 = V[i], q2 = V[(i + 1) % V.size()];
    if (lattice_length(q1, q2) != m) continue;
    long long a = (q2.x - q1.x) / m, b = (q2.y - q1.y) / m;
    auto [g, s, t] = ext_gcd(a, b);
    (void)g;
    Equiaffinity lin({s, t, -b, a}, {0, 0});
    LatticePoint shift = lin(q1);
    Equiaffinity M({s, t, -b, a}, {-shift.x, -shift.y});
    std::vector<LatticePoint> img;
    img.reserve(pts.size());
    long long k0 = 0;
    bool first = true;
    for (const auto& p : pts) {
      LatticePoint w = M(p);
      img.push_back(w);
      if (w.y > 0) {
        long long k = ceil_div(-w.x, w.y);
        if (first || k > k0) k0 = k;
        first = false;
      }
    }
    Equiaffinity shear({1, k0, 0, 1}, {0, 0});
    for (auto& w : img) w = shear(w);
    std::sort(img.begin(), img.end());
    out.push_back({std::move(img), shear.compose(M)});
  }
  return out;
}

}  // namespace

std::vector<Equiaffinity> canonical_maps(const LatticePolygon& P) {
  auto cands = edge_candidates(P);
  const std::vector<LatticePoint>* best = nullptr;
  for (const auto& c : cands)
    if (!best || c.encoding < *best) best = &c.encoding;
  std::vector<Equiaffinity> out;
  for (const auto& c : cands)
    if (c.encoding == *best) out.push_back(c.map);
  return out;
}

LatticePolygon canonical_form(const LatticePolygon& P) { return apply(canonical_maps(P).front(), P); }

bool are_equivalent(const LatticePolygon& P, const LatticePolygon& Q) {
  if (P.area2() != Q.area2()) return false;
  return canonical_form(P) == canonical_form(Q);
}

namespace {

// Lattice points q outside P with n_i . q <= c_i + slack for every outward edge normal n_i.
std::vector<LatticePoint> growth_candidates(const LatticePolygon& P, long long slack) {
  const auto& V = P.vertices();
  const std::size_t n = V.size();
  std::vector<std::array<long long, 3>> rows;  // nx, ny, bound
  for (std::size_t i = 0; i < n; ++i) {
    LatticePoint a = V[i], b = V[(i + 1) % n];
    long long len = lattice_length(a, b);
    long long nx = (b.y - a.y) / len, ny = -(b.x - a.x) / len;
    rows.push_back({nx, ny, nx * a.x + ny * a.y + slack});
  }
  Rational x0, x1, y0, y1;
  bool any = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      long long det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
      if (det == 0) continue;
      Rational x = Q(rows[i][2] * rows[j][1] - rows[j][2] * rows[i][1], det);
      Rational y = Q(rows[i][0] * rows[j][2] - rows[j][0] * rows[i][2], det);
      bool ok = true;
      for (const auto& r : rows)
        if (Q(r[0]) * x + Q(r[1]) * y > Q(r[2])) ok = false;
      if (!ok) continue;
      if (!any || x < x0) x0 = x;
      if (!any || x > x1) x1 = x;
      if (!any || y < y0) y0 = y;
      if (!any || y > y1) y1 = y;
      any = true;
    }
  std::vector<LatticePoint> out;
  if (!any) return out;
  auto fl = [](const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_si();
  };
  auto cl = [](const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_si();
  };
  for (long long x = fl(x0); x <= cl(x1); ++x)
    for (long long y = fl(y0); y <= cl(y1); ++y) {
      LatticePoint q{x, y};
      bool ok = !P.contains(q);
      for (const auto& r : rows)
        if (r[0] * x + r[1] * y > r[2]) ok = false;
      if (ok) out.push_back(q);
    }
  return out;
}

}  // namespace

std::vector<LatticePolygon> enumerate_polygons(int g, int d_max) {
  if (d_max < 1) throw InputError("d_max must be at least 1");
  if (g < 0) throw InputError("g must be nonnegative");
  std::set<LatticePolygon> seen;
  std::deque<LatticePolygon> queue;
  LatticePolygon start = canonical_form(LatticePolygon({{0, 0}, {1, 0}, {0, 1}}));
  seen.insert(start);
  queue.push_back(start);
  std::vector<std::pair<PolygonInvariants, LatticePolygon>> found;
  while (!queue.empty()) {
    LatticePolygon P = queue.front();
    queue.pop_front();
    PolygonInvariants inv = invariants(P);
    if (inv.g == g) found.push_back({inv, P});
    if (inv.d >= d_max) continue;
    for (const auto& q : growth_candidates(P, d_max - inv.d)) {
      std::vector<LatticePoint> pts = P.vertices();
      pts.push_back(q);
      LatticePolygon R = LatticePolygon::hull(pts);
      if (R.area2() > d_max) continue;
      PolygonInvariants ri = invariants(R);
      if (ri.g > g) continue;
      LatticePolygon C = canonical_form(R);
      if (seen.insert(C).second) queue.push_back(C);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.d, a.first.l, a.second) < std::tie(b.first.d, b.first.l, b.second);
  });
  std::vector<LatticePolygon> out;
  for (auto& f : found) out.push_back(f.second);
  return out;
}

}  // namespace toric
