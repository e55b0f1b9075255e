#pragma once

#include <cstdint>
#include <vector>

#include "symcone/cone.hpp"
#include "symcone/errors.hpp"
#include "symcone/qvector.hpp"

namespace symcone {

struct HilbertBasis {
  std::size_t dim = 0;
  std::vector<QVector> elements;  // integral, deterministically ordered

  // sup of l1 norms over the elements (0 for the empty basis).
  Rational max_norm() const {
    Rational m = 0;
    for (const auto& e : elements) m = std::max(m, l1_norm(e));
    return m;
  }
};

struct MonoidSpec {
  std::size_t dim = 0;
  std::vector<QVector> generators;  // integral
};

enum class Tri { Yes, No, Undecided };

inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

// Hilbert basis of C ∩ Z^dim for a pointed rational cone C (classical
// Gordan). Pipeline: extreme rays -> placing triangulation -> fundamental
// parallelepiped lattice points per simplicial subcone -> irreducibility
// sieve. Throws NonPointedError for non-pointed input and
// BudgetExhaustedError if the lattice enumeration exceeds `budget` points.
HilbertBasis hilbert_basis(const Cone& c, std::uint64_t budget = kDefaultBudget);

// True iff u (integral, nonzero, in C) has no decomposition u = v + w with
// v, w nonzero elements of C ∩ Z^dim.
bool is_irreducible(const QVector& u, const Cone& c,
                    std::uint64_t budget = kDefaultBudget);

// Bounded-search membership in the monoid generated by M's generators.
// When cone(generators) is pointed the search is complete, so any answer
// returned within budget is exact (Yes/No); in the non-pointed case, and on
// budget exhaustion, the result may be Undecided.
Tri monoid_contains(const MonoidSpec& m, const QVector& u,
                    std::uint64_t budget = kDefaultBudget);

// Generating set of the unit-group lattice lin(cone(M)) ∩ Z^dim.
std::vector<QVector> units(const MonoidSpec& m);

// True iff U(M) is trivial, equivalently (bridge lemma) cone(M) is pointed.
bool is_positive(const MonoidSpec& m);

}  // namespace symcone
