#ifndef ORBITCERT_SIMPLEX_HPP
#define ORBITCERT_SIMPLEX_HPP

#include <optional>
#include <vector>

#include "orbitcert/qmatrix.hpp"
#include "orbitcert/rational.hpp"

namespace orbitcert {

/// Exact rational Phase-I simplex with Bland's rule. Solves E x = d, x >= 0
/// (feasibility only). Terminates on all inputs.
inline std::optional<QVec> solve_eq_nonneg(QMat e, QVec d) {
  const std::size_t m = e.rows(), n = e.cols();
  for (std::size_t i = 0; i < m; ++i)
    if (sgn(d[i]) < 0) {
      d[i] = -d[i];
      for (std::size_t j = 0; j < n; ++j) e(i, j) = -e(i, j);
    }
  // tableau over x-columns and artificial columns
  QMat t(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t(i, j) = e(i, j);
    t(i, n + i) = 1;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  // phase-I objective: minimize the artificial sum; reduced costs start as
  // column sums over the x-part
  QVec cost(n + m, Rat(0));
  Rat objective = 0;
  for (std::size_t i = 0; i < m; ++i) {
    objective += d[i];
    for (std::size_t j = 0; j < n; ++j) cost[j] += t(i, j);
  }

  while (true) {
    // Bland: smallest-index entering column with positive reduced cost
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j)
      if (sgn(cost[j]) > 0) {
        enter = j;
        break;
      }
    if (enter == n + m) break;
    // ratio test; ties resolved toward the smallest basic variable index
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t(i, enter)) <= 0) continue;
      Rat ratio = d[i] / t(i, enter);
      if (leave == m || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) break;  // unbounded direction cannot happen in phase I
    // pivot
    Rat piv = t(leave, enter);
    for (std::size_t j = 0; j < n + m; ++j) t(leave, j) /= piv;
    d[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t(i, enter)) == 0) continue;
      Rat f = t(i, enter);
      for (std::size_t j = 0; j < n + m; ++j) t(i, j) -= f * t(leave, j);
      d[i] -= f * d[leave];
    }
    Rat cf = cost[enter];
    for (std::size_t j = 0; j < n + m; ++j) cost[j] -= cf * t(leave, j);
    objective -= cf * d[leave];
    basis[leave] = enter;
  }

  if (sgn(objective) != 0) return std::nullopt;
  QVec x(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = d[i];
  return x;
}

/// Finds a free rational vector with A lambda >= b, if one exists.
inline std::optional<QVec> feasible_geq(const QMat& a, const QVec& b) {
  const std::size_t m = a.rows(), n = a.cols();
  // A(l+ - l-) - s = b with l+, l-, s >= 0
  QMat e(m, 2 * n + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      e(i, j) = a(i, j);
      e(i, n + j) = -a(i, j);
    }
    e(i, 2 * n + i) = -1;
  }
  auto sol = solve_eq_nonneg(e, b);
  if (!sol) return std::nullopt;
  QVec lambda(n);
  for (std::size_t j = 0; j < n; ++j) lambda[j] = (*sol)[j] - (*sol)[n + j];
  return lambda;
}

/// Nonnegative combination certificate: y >= 0 with sum_i y_i rows_i = target.
inline std::optional<QVec> nonneg_combination(const std::vector<QVec>& rows,
                                              const QVec& target) {
  if (rows.empty()) return is_zero(target) ? std::optional<QVec>(QVec{})
                                           : std::nullopt;
  QMat e = QMat::from_columns(rows);
  return solve_eq_nonneg(e, target);
}

}  // namespace orbitcert

#endif
