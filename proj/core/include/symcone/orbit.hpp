#pragma once

#include <vector>

#include "symcone/permutation.hpp"
#include "symcone/qvector.hpp"

namespace symcone {

// The Sym(n)-orbit of u zero-padded to dimension n: all distinct coordinate
// permutations, in lexicographic order. Enumerates distinct multiset
// permutations directly (never n! raw permutations), so repeated entries and
// padded zeros stay cheap.
std::vector<QVector> orbit(const QVector& u, std::size_t n);

// n! / prod(multiplicities!) without enumerating; used for cross-checks.
Integer orbit_size(const QVector& u, std::size_t n);

// All n! permutations of Sym(n); only for small n (exhaustive oracles).
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace symcone
