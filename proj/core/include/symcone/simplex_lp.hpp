#pragma once

#include <optional>
#include <vector>

#include "symcone/qvector.hpp"

namespace symcone {

// Exact rational phase-1 simplex with Bland's rule: find x >= 0 with
// sum_j x_j * cols[j] = b, or report infeasibility. The returned solution is
// basic, so it has at most rank(cols) nonzero entries (Caratheodory).
std::optional<std::vector<Rational>> nonnegative_solve(
    const std::vector<QVector>& cols, const QVector& b);

}  // namespace symcone
