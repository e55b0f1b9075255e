#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "symcone/qvector.hpp"

namespace symcone {

// An exact nonnegative combination u = sum lambda_i * ray_i with at most
// dim(u) terms (Caratheodory).
struct MembershipWitness {
  std::vector<std::pair<QVector, Rational>> coefficients;
};

struct MinimalGenerators {
  bool pointed = true;
  std::vector<QVector> lineality;     // empty iff pointed
  std::vector<QVector> extreme_rays;  // extreme rays of the pointed quotient
};

// Rational polyhedral cone held as a primitive-ray V-representation with a
// lazily computed, cached H-representation. Values are immutable after
// construction; cache fills are one-shot and internally synchronized.
class Cone {
 public:
  static Cone from_rays(std::size_t dim, std::vector<QVector> rays);
  static Cone zero(std::size_t dim) { return from_rays(dim, {}); }
  static Cone full_space(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<QVector>& rays() const { return rays_; }

  // Generators of the dual cone: extreme rays plus +/- pairs of a basis of
  // the dual's lineality space. x is in the cone iff <f,x> >= 0 for all f.
  const std::vector<QVector>& facets() const;

  // Exact basis of lin(C) = {u in C : -u in C}; empty iff pointed.
  const std::vector<QVector>& lineality_basis() const;
  bool is_pointed() const { return lineality_basis().empty(); }

  bool contains(const QVector& u) const;
  std::optional<MembershipWitness> witness(const QVector& u) const;

 private:
  Cone() = default;

  struct Cache;

  std::size_t dim_ = 0;
  std::vector<QVector> rays_;  // primitive, deduped, sorted
  std::shared_ptr<Cache> cache_;
};

// The cone {x : <g,x> >= 0 for all g in constraints}, as a V-representation.
Cone cone_from_constraints(std::size_t dim, const std::vector<QVector>& constraints);
Cone dual(const Cone& c);
bool double_dual_check(const Cone& c);
Cone intersect(const Cone& c, const Cone& d);
// Intersect with the order cone {x_1 <= x_2 <= ... <= x_n}.
Cone ordered_slice(const Cone& c);
bool equals(const Cone& c, const Cone& d);
MinimalGenerators minimal_generators(const Cone& c);
// Canonical cone generated by the extreme rays (and +/- lineality basis).
Cone canonicalize(const Cone& c);

}  // namespace symcone
