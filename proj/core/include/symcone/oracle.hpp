#pragma once

#include <cstdint>
#include <vector>

#include "symcone/chain.hpp"
#include "symcone/cone.hpp"
#include "symcone/qvector.hpp"

namespace symcone {

// Knobs for the brute-force cross-check oracles. The oracles deliberately
// share no code paths with the main algorithms (box scans, Fourier-Motzkin,
// exhaustive pairings) so that agreement is meaningful evidence.
struct OracleConfig {
  std::uint64_t seed = 0;
  // Exhaustive enumeration is used up to this many cases; beyond it, seeded
  // random sampling with `trials` draws.
  std::uint64_t max_exhaustive = 200000;
  std::size_t trials = 500;
};

// All irreducible elements of C ∩ Z^n with l1 norm <= bound, found by a plain
// box scan: u is reducible iff some v in the box (v != u, v != 0) has
// u - v ∈ C. Agrees with the Hilbert basis whenever bound >= ||H|| + 1.
std::vector<QVector> brute_hilbert(const Cone& c, long bound);

// H-representation of cone(rays) by Fourier-Motzkin elimination of the
// combination variables — an independent alternative to double description.
std::vector<QVector> fm_facets(std::size_t dim, const std::vector<QVector>& rays);

// u ∈ cone(gens)? Decided via fm_facets; shares nothing with the simplex
// witness path.
bool convex_membership(const QVector& u, std::size_t dim,
                       const std::vector<QVector>& gens);

// Do all pairings <sigma(d), p> for d in duals, p in primal, sigma in Sym(n)
// come out nonnegative? Exhaustive over each orbit when it is small enough,
// otherwise seeded sampling (then the check is one-sided).
bool pairing_audit(const std::vector<QVector>& primal,
                   const std::vector<QVector>& duals, std::size_t n,
                   const OracleConfig& cfg = {});

// Independent take on classify_restricted_dual: decide which of ±e_1 pair
// nonnegatively with every generator orbit at a probe level, and map the
// survivorship pattern to a tag.
RestrictedDualClass restricted_dual_probe(const ChainSpec& spec);

}  // namespace symcone
