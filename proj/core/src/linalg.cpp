#include "symcone/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace symcone {

std::vector<std::size_t> rref_inplace(QMatrix& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t n = rows[0].dim();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < rows.size(); ++col) {
    std::size_t sel = row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[row], rows[sel]);
    Rational inv = Rational(1) / rows[row][col];
    rows[row] = inv * rows[row];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != row && rows[i][col] != 0) {
        rows[i] = rows[i] - rows[i][col] * rows[row];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  rows.resize(row, QVector(n));
  return pivots;
}

std::size_t rank(const QMatrix& rows) {
  QMatrix copy = rows;
  return rref_inplace(copy).size();
}

std::vector<QVector> nullspace(const QMatrix& rows, std::size_t n) {
  QMatrix copy = rows;
  std::vector<std::size_t> pivots = rref_inplace(copy);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QVector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -copy[i][free];
    }
    basis.push_back(normalize_primitive(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_columns(
    const std::vector<QVector>& cols, const QVector& b) {
  const std::size_t m = b.dim();
  const std::size_t k = cols.size();
  // Augmented system rows: [A | b].
  QMatrix rows;
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    QVector r(k + 1);
    for (std::size_t j = 0; j < k; ++j) r[j] = cols[j][i];
    r[k] = b[i];
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> pivots = rref_inplace(rows);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == k) return std::nullopt;  // pivot in the b column
  }
  std::vector<Rational> x(k, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][k];
  return x;
}

namespace {

// Column view helpers for integer column reduction. Columns are QVectors
// (entries kept integral throughout).
Integer int_at(const QVector& col, std::size_t row) {
  return numerator(col[row]);
}

void col_axpy(QVector& target, const Integer& factor, const QVector& source) {
  for (std::size_t i = 0; i < target.dim(); ++i)
    target[i] = target[i] - Rational(factor) * source[i];
}

}  // namespace

std::vector<QVector> integer_kernel_basis(const QMatrix& integer_rows,
                                          std::size_t n) {
  const std::size_t m = integer_rows.size();
  // W stored column-wise; U tracks the unimodular column operations.
  std::vector<QVector> W(n, QVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (integer_rows[i].dim() != n)
      throw std::invalid_argument("integer_kernel_basis: row dim mismatch");
    if (!integer_rows[i].is_integral())
      throw std::invalid_argument("integer_kernel_basis: non-integral entry");
    for (std::size_t j = 0; j < n; ++j) W[j][i] = integer_rows[i][j];
  }
  std::vector<QVector> U(n, QVector(n));
  for (std::size_t j = 0; j < n; ++j) U[j][j] = 1;

  std::size_t pivot_count = 0;
  for (std::size_t row = 0; row < m && pivot_count < n; ++row) {
    // Reduce active columns until at most one has a nonzero entry in row.
    for (;;) {
      std::size_t nonzero = 0, best = n;
      for (std::size_t j = pivot_count; j < n; ++j) {
        if (int_at(W[j], row) != 0) {
          ++nonzero;
          if (best == n ||
              abs(int_at(W[j], row)) < abs(int_at(W[best], row)))
            best = j;
        }
      }
      if (nonzero <= 1) {
        if (nonzero == 1) {
          std::swap(W[pivot_count], W[best]);
          std::swap(U[pivot_count], U[best]);
          ++pivot_count;
        }
        break;
      }
      Integer p = int_at(W[best], row);
      for (std::size_t j = pivot_count; j < n; ++j) {
        if (j == best || int_at(W[j], row) == 0) continue;
        Integer q = int_at(W[j], row) / p;  // truncated division is fine here
        if (q != 0) {
          col_axpy(W[j], q, W[best]);
          col_axpy(U[j], q, U[best]);
        }
      }
    }
  }
  std::vector<QVector> basis(U.begin() + static_cast<long>(pivot_count),
                             U.end());
  return basis;
}

std::vector<QVector> column_hnf(const std::vector<QVector>& cols) {
  const std::size_t d = cols.size();
  std::vector<QVector> A = cols;
  for (const auto& c : A) {
    if (c.dim() != d || !c.is_integral())
      throw std::invalid_argument("column_hnf: need a square integral matrix");
  }
  for (std::size_t row = 0; row < d; ++row) {
    for (;;) {
      std::size_t nonzero = 0, best = d;
      for (std::size_t j = row; j < d; ++j) {
        if (int_at(A[j], row) != 0) {
          ++nonzero;
          if (best == d ||
              abs(int_at(A[j], row)) < abs(int_at(A[best], row)))
            best = j;
        }
      }
      if (nonzero == 0)
        throw std::invalid_argument("column_hnf: singular matrix");
      if (nonzero == 1) {
        std::swap(A[row], A[best]);
        if (int_at(A[row], row) < 0) A[row] = -A[row];
        break;
      }
      Integer p = int_at(A[best], row);
      for (std::size_t j = row; j < d; ++j) {
        if (j == best || int_at(A[j], row) == 0) continue;
        Integer q = int_at(A[j], row) / p;
        if (q != 0) col_axpy(A[j], q, A[best]);
      }
    }
  }
  return A;
}

Rational abs_det(const std::vector<QVector>& cols) {
  const std::size_t d = cols.size();
  QMatrix rows(d, QVector(d));
  for (std::size_t j = 0; j < d; ++j) {
    if (cols[j].dim() != d)
      throw std::invalid_argument("abs_det: not square");
    for (std::size_t i = 0; i < d; ++i) rows[i][j] = cols[j][i];
  }
  Rational det = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t sel = col;
    while (sel < d && rows[sel][col] == 0) ++sel;
    if (sel == d) return Rational(0);
    if (sel != col) std::swap(rows[sel], rows[col]);
    det *= rows[col][col];
    Rational inv = Rational(1) / rows[col][col];
    for (std::size_t i = col + 1; i < d; ++i) {
      if (rows[i][col] != 0) {
        Rational f = rows[i][col] * inv;
        rows[i] = rows[i] - f * rows[col];
      }
    }
  }
  return abs_q(det);
}

}  // namespace symcone
