#pragma once

#include <cstdint>
#include <vector>

#include "symcone/qvector.hpp"

namespace symcone {

// V-representation of {x : <g,x> >= 0 for all g in constraints}:
// extreme rays of the pointed quotient plus a basis of the lineality space.
// Rays are reduced modulo the lineality space, primitivized, and sorted
// lexicographically; the lineality basis is in reduced row echelon form
// (primitivized), so the output is canonical for a given constraint set.
struct DDResult {
  std::vector<QVector> rays;
  std::vector<QVector> lineality;
};

// Double description method. Constraints are deduplicated after
// primitivization and inserted in lexicographic order, making the run
// deterministic. Zero constraints are ignored.
//
// When `work_budget` is non-null, each ray classification and each adjacency
// candidate pair costs one unit from it; the run throws BudgetExhaustedError
// once the budget is spent, so callers with hard resource limits fail loudly
// instead of grinding on intermediate cones that are too large.
DDResult double_description(std::size_t dim, std::vector<QVector> constraints,
                            std::uint64_t* work_budget = nullptr);

}  // namespace symcone
