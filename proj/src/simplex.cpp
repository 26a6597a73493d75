#include "toric/simplex.hpp"

#include "toric/errors.hpp"

namespace toric {

std::optional<LpSolution> maximize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                                   const std::vector<Rational>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  const std::size_t width = n + m + 1;
  // Row i < m holds constraint i; row m holds the negated objective. Column n + m is the right-hand side.
  std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) throw InputError("constraint row has the wrong length");
    if (b[i] < 0) throw InputError("right-hand side must be nonnegative");
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][width - 1] = b[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) T[m][j] = -c[j];

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (sgn(T[m][j]) < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(T[i][enter]) <= 0) continue;
      Rational ratio = T[i][width - 1] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return std::nullopt;
    Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || sgn(T[i][enter]) == 0) continue;
      Rational f = T[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(T[leave][j]) != 0) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  LpSolution sol;
  sol.objective = T[m][width - 1];
  sol.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) sol.x[basis[i]] = T[i][width - 1];
  return sol;
}

}  // namespace toric
