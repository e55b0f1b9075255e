#include "symcone/simplex_lp.hpp"

#include <stdexcept>

namespace symcone {

std::optional<std::vector<Rational>> nonnegative_solve(
    const std::vector<QVector>& cols, const QVector& b) {
  const std::size_t m = b.dim();
  const std::size_t k = cols.size();
  for (const auto& c : cols)
    if (c.dim() != m) throw std::invalid_argument("nonnegative_solve: dim mismatch");

  // Phase-1 tableau with one artificial variable per row. Columns
  // 0..k-1 are the structural variables, k..k+m-1 the artificials.
  // Rows are scaled so the right-hand side is nonnegative.
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(k + m + 1, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    Rational s = b[i] < 0 ? Rational(-1) : Rational(1);
    for (std::size_t j = 0; j < k; ++j) T[i][j] = s * cols[j][i];
    T[i][k + i] = 1;
    T[i][k + m] = s * b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;

  // Objective: minimize the sum of artificials. Reduced cost row z,
  // maintained explicitly: z_j = sum_i T[i][j] for artificial-basic rows.
  std::vector<Rational> z(k + m + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= k + m; ++j) z[j] += T[i][j];

  auto pivot = [&](std::size_t row, std::size_t col) {
    Rational inv = Rational(1) / T[row][col];
    for (auto& x : T[row]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i != row && T[i][col] != 0) {
        Rational f = T[i][col];
        for (std::size_t j = 0; j <= k + m; ++j) T[i][j] -= f * T[row][j];
      }
    }
    if (z[col] != 0) {
      Rational f = z[col];
      for (std::size_t j = 0; j <= k + m; ++j) z[j] -= f * T[row][j];
    }
    basis[row] = col;
  };

  for (;;) {
    // Bland's rule: smallest-index entering variable with positive reduced
    // cost (we are minimizing sum of artificials, written as maximizing -z).
    // Artificials never re-enter in phase 1, so only structural columns are
    // candidates.
    std::size_t enter = k + m;
    for (std::size_t j = 0; j < k; ++j) {
      if (z[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == k + m) break;
    // Ratio test, ties broken by smallest basis index (Bland).
    std::size_t leave = m;
    Rational best_ratio = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] > 0) {
        Rational ratio = T[i][k + m] / T[i][enter];
        if (leave == m || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave == m) break;  // unbounded direction; cannot improve further
    pivot(leave, enter);
  }

  if (z[k + m] != 0) return std::nullopt;  // artificials cannot be driven to 0

  std::vector<Rational> x(k, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < k) {
      x[basis[i]] = T[i][k + m];
    } else if (T[i][k + m] != 0) {
      return std::nullopt;  // defensive; unreachable when objective is zero
    }
  }
  return x;
}

}  // namespace symcone
