#pragma once

#include <optional>
#include <vector>

#include "symcone/qvector.hpp"

namespace symcone {

// Rows-of-rationals matrix helpers (exact Gaussian elimination).
using QMatrix = std::vector<QVector>;

std::size_t rank(const QMatrix& rows);

// Reduced row echelon form; returns pivot column indices (0-based).
std::vector<std::size_t> rref_inplace(QMatrix& rows);

// Basis of {x : A x = 0} for A given by rows of dimension n.
// Vectors are primitivized; deterministic order.
std::vector<QVector> nullspace(const QMatrix& rows, std::size_t n);

// Solve A x = b where A is given column-wise (cols[j] is the j-th column).
// Returns any exact solution, or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_columns(
    const std::vector<QVector>& cols, const QVector& b);

// Lattice basis of {x in Z^n : W x = 0} for an integer matrix W (rows of
// dimension n, integral entries). Computed by unimodular column reduction, so
// the result is a basis of the full integer kernel lattice (not just a
// rational basis cleared of denominators).
std::vector<QVector> integer_kernel_basis(const QMatrix& integer_rows,
                                          std::size_t n);

// Column-style Hermite normal form of a nonsingular square integer matrix
// given column-wise: returns H lower-triangular with positive diagonal such
// that the columns of H generate the same lattice as the columns of A.
std::vector<QVector> column_hnf(const std::vector<QVector>& cols);

// |det| of a square matrix given column-wise.
Rational abs_det(const std::vector<QVector>& cols);

}  // namespace symcone
