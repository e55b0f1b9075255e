#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symcone/cone.hpp"
#include "symcone/hilbert.hpp"
#include "symcone/permutation.hpp"
#include "symcone/qvector.hpp"

namespace symcone {

// A Sym-invariant chain of cones presented canonically: C_n = {0} for n < r
// and C_n = cone(Sym(n)(G)) for n >= r, where G lives at level r.
struct ChainSpec {
  std::size_t r = 1;
  std::vector<QVector> generators;  // each of dimension r
};

// (prefix_1, ..., prefix_k, tail, tail, ...): the representable slice of the
// infinite-dimensional dual space.
struct EventuallyConstantSeq {
  QVector prefix;
  Rational tail;
};

enum class ConeClass {
  Pointed,
  // Global (Sym-invariant) non-pointed cones.
  C1_full,        // R^(N)
  C2_sumzero,     // R Sym(e_1 - e_2)
  C3_sumnonneg,   // R^(N)_{>=0} + R Sym(e_1 - e_2)
  C4_sumnonpos,   // -C3
  // Local (Sym(n)-invariant) non-pointed cones.
  D1_full,        // R^n
  D2_sumzero,     // {s = 0}
  D3_sumnonneg,   // {s >= 0}
  D4_sumnonpos,   // {s <= 0}
  D5_diagonal,    // R * (1, ..., 1)
};

enum class MonoidClass {
  Positive,
  M1, M2, M3, M4,      // global non-positive normal monoids, matching c_i
  N1, N2, N3, N4, N5,  // local non-positive normal monoids, matching D_i
};

enum class RestrictedDualClass { Zero, NonnegOrthant, NonposOrthant, FullSpace };

struct StabilizationReport {
  // Smallest level found to generate the verification window; empty when not
  // found up to the cap.
  std::optional<std::size_t> empirical_index;
  std::size_t cap = 0;
  std::size_t window = 0;
  bool certified = false;
  std::string certificate_details;
};

struct RefinedParams {
  std::size_t s = 0;  // max count of positive entries over sorted generators
  std::size_t t = 0;  // max count of negative entries over sorted generators
  std::size_t p = 0;  // max{s + t, r + 1}
};

// Level-n cone of the chain ({0} for n < r).
Cone local_cone(const ChainSpec& spec, std::size_t n);

// I_n(a, b): the n+1 non-decreasing vectors with entries in {a, b}
// (a single constant vector when a == b). Requires a <= b.
std::vector<QVector> insertion_levels(const Rational& a, const Rational& b,
                                      std::size_t n);

// F_{i,m}(u): splice every element of I_{m-dim(u)}(u_i, u_{i+1}) between
// positions i and i+1 of the non-decreasing vector u (i is 1-based).
std::vector<QVector> insertion_family(const QVector& u, std::size_t i,
                                      std::size_t m);

// w in O_{i,m}(u): w equals u with a non-decreasing block from
// [u_i, u_{i+1}]^{dim(w)-dim(u)} spliced between positions i and i+1.
bool ordered_insertion_member(const QVector& u, std::size_t i,
                              const QVector& w);

// s, t, p of the sharpened generator-transfer bound, computed from the
// generators sorted non-increasingly.
RefinedParams refined_params(const ChainSpec& spec);

// F_n: a Sym(n)-equivariant generating set for C_n^*, transferred from the
// extreme rays of the ordered slice of C_L^* with L = 2r (plain) or L = p
// (refined). Requires n > L.
std::vector<QVector> equivariant_dual_generators(const ChainSpec& spec,
                                                 std::size_t n,
                                                 bool refined = false);

// Smallest level m <= cap whose Sym-orbit generates every checked later level
// (window levels above m). Canonical chains carry a constructive certificate.
StabilizationReport stability_index(const ChainSpec& spec, std::size_t cap,
                                    std::size_t window = 3);
// Same test for an explicit chain (chain[i] lives in R^{i+1}); empirical only.
StabilizationReport stability_index(const std::vector<Cone>& chain,
                                    std::size_t window = 3);

// C ∩ R^n == C_n, checked by slicing C_{n+k} with x_{n+1} = ... = 0 for
// k = 1..window.
bool truncation_consistent(const ChainSpec& spec, std::size_t n,
                           std::size_t window = 3);

// For u in C_{n+1}, a permutation sigma such that the last two entries of
// sigma(u) have nonnegative product and merging them lands in C_n. Searches
// all coordinate pairs; absent when no pair works (legal below the 3p^2
// threshold). Throws std::invalid_argument when u is not in C_{n+1}.
std::optional<Permutation> merge_condition(const ChainSpec& spec,
                                           const QVector& u);
// Same search against explicitly given consecutive levels (c_high in
// R^{n+1}, c_low in R^n); avoids rebuilding the cones across many calls.
std::optional<Permutation> merge_condition(const Cone& c_low,
                                           const Cone& c_high,
                                           const QVector& u);

enum class EquiHilbertMode { Certified, Empirical };

struct EquivariantHilbertResult {
  bool pointed = true;
  // Meaningful only when !pointed: the non-positive monoid type the chain's
  // monoid belongs to.
  MonoidClass monoid_class = MonoidClass::Positive;
  std::size_t level = 0;  // q (certified) or the empirical index
  HilbertBasis basis;     // full (orbit-closed) Hilbert basis at `level`
  // Canonical orbit representatives: entries sorted non-increasingly.
  std::vector<QVector> representatives;
  StabilizationReport report;
};

// Equivariant Hilbert basis of the chain's monoid. Certified mode realizes the
// construction q = max{3r^2, ||H_{3r^2}||}; empirical mode finds the smallest
// m <= cap with Sym(m+k)(H_m) containing H_{m+k} over a window. Non-pointed
// chains are rerouted to the non-positive classification (pointed=false).
EquivariantHilbertResult equivariant_hilbert_basis(
    const ChainSpec& spec, EquiHilbertMode mode, std::size_t cap = 8,
    std::size_t window = 2, std::uint64_t budget = kDefaultBudget);

// Empirical stability index of the monoid chain M_n = C_n ∩ Z^n, tested via
// Hilbert-basis inclusion.
StabilizationReport monoid_stability_index(const ChainSpec& spec,
                                           std::size_t cap,
                                           std::size_t window = 2,
                                           std::uint64_t budget = kDefaultBudget);

// Classify a Sym(n)-invariant cone into Pointed or one of the five local
// non-pointed types. Throws std::invalid_argument if not Sym(n)-invariant and
// std::logic_error if a non-pointed cone matches none of the five (which the
// classification theorem rules out).
ConeClass classify_local_cone(const Cone& c);

// Classify the chain's global cone into Pointed or one of the four global
// non-pointed types, decided at level N = max{2r, 2}.
ConeClass classify_global_cone(const ChainSpec& spec);

MonoidClass classify_local_monoid(const MonoidSpec& m);
MonoidClass classify_global_monoid(const ChainSpec& spec);

// The restricted dual C^* ∩ R^(N) of the global cone, by generator sign
// analysis.
RestrictedDualClass classify_restricted_dual(const ChainSpec& spec);

struct GlobalDualVerdict {
  bool member = false;
  // On rejection: the generator and a finite placement of its entries
  // (aligned with w's prefix, overflow entries meeting the tail) realizing a
  // negative pairing.
  std::optional<QVector> violating_generator;
  std::optional<QVector> violating_placement;
  std::optional<Rational> violating_value;
};

// Does the eventually-constant sequence w pair nonnegatively with every
// element of the global cone? The minimum over the infinite symmetric group
// is computed finitely via the rearrangement inequality.
GlobalDualVerdict global_dual_member(const ChainSpec& spec,
                                     const EventuallyConstantSeq& w);

// The corollary's dual elements (u, v): u a non-decreasing member of
// O(C_{2r}^*), v a non-decreasing block in [u_r, u_{r+1}] followed by a
// constant tail in the same interval. The result is asserted against
// global_dual_member.
EventuallyConstantSeq corollary_dual_elements(const ChainSpec& spec,
                                              const QVector& u,
                                              const QVector& block,
                                              const Rational& tail);

std::string to_string(ConeClass c);
std::string to_string(MonoidClass m);
std::string to_string(RestrictedDualClass d);

}  // namespace symcone
