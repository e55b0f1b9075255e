#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "symcone/chain.hpp"
#include "symcone/cone.hpp"
#include "symcone/hilbert.hpp"
#include "symcone/orbit.hpp"
#include "symcone/qvector.hpp"

using namespace symcone;

namespace {

const ChainSpec kEx33{3, {QVector{-2, -1, 4}, QVector{-3, 1, 3}}};
const ChainSpec kA2{2, {QVector{-1, 2}}};
const ChainSpec kA3{2, {QVector{-1, 3}}};
const ChainSpec kOrthant{1, {QVector{1}}};

std::vector<QVector> sorted_set(std::vector<QVector> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// {(1^n), (5,6^(n-2),7)} plus {(3^i, 4^(n-i)) : 1 <= i <= n-1}.
std::vector<QVector> ex33_dual_formula(std::size_t n) {
  std::vector<QVector> out;
  out.push_back(QVector::ones(n));
  QVector mid(n);
  mid[0] = 5;
  for (std::size_t k = 1; k + 1 < n; ++k) mid[k] = 6;
  mid[n - 1] = 7;
  out.push_back(mid);
  for (std::size_t i = 1; i < n; ++i) {
    QVector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = (k < i) ? 3 : 4;
    out.push_back(v);
  }
  return sorted_set(out);
}

Cone sym_cone(const std::vector<QVector>& gens, std::size_t n) {
  std::set<QVector> closure;
  for (const QVector& g : gens)
    for (QVector& w : orbit(g, n)) closure.insert(std::move(w));
  return Cone::from_rays(n, {closure.begin(), closure.end()});
}

}  // namespace

TEST_CASE("local cones of canonical chains") {
  CHECK(equals(local_cone(kEx33, 2), Cone::zero(2)));
  Cone c3 = local_cone(kEx33, 3);
  CHECK(c3.rays().size() <= 12);
  CHECK(c3.is_pointed());
  CHECK(local_cone(kA2, 4).rays().size() == 12);
  CHECK(equals(local_cone({1, {}}, 3), Cone::zero(3)));
  CHECK_THROWS_AS((void)local_cone(kA2, 0), std::invalid_argument);
}

TEST_CASE("insertion levels I_n(a,b)") {
  CHECK(insertion_levels(1, 2, 2) ==
        std::vector<QVector>{QVector{1, 1}, QVector{1, 2}, QVector{2, 2}});
  CHECK(insertion_levels(Rational(1, 2), 3, 1) ==
        std::vector<QVector>{QVector{Rational(1, 2)}, QVector{3}});
  CHECK(insertion_levels(0, 0, 3) == std::vector<QVector>{QVector{0, 0, 0}});
  CHECK_THROWS_AS((void)insertion_levels(2, 1, 2), std::invalid_argument);
}

TEST_CASE("insertion families F_{i,m}(u)") {
  QVector u{1, 2, 3, 4};
  CHECK(insertion_family(u, 2, 5) ==
        std::vector<QVector>{QVector{1, 2, 2, 3, 4}, QVector{1, 2, 3, 3, 4}});
  CHECK(insertion_family(u, 2, 6) ==
        std::vector<QVector>{QVector{1, 2, 2, 2, 3, 4},
                             QVector{1, 2, 2, 3, 3, 4},
                             QVector{1, 2, 3, 3, 3, 4}});
  CHECK(insertion_family(QVector{5, 5, 7}, 1, 4) ==
        std::vector<QVector>{QVector{5, 5, 5, 7}});
  CHECK_THROWS_AS((void)insertion_family(QVector{2, 1}, 1, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)insertion_family(u, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS((void)insertion_family(u, 2, 4), std::invalid_argument);
}

TEST_CASE("ordered insertion membership") {
  QVector u{1, 4};
  CHECK(ordered_insertion_member(u, 1, QVector{1, 2, 3, 4}));
  CHECK(!ordered_insertion_member(u, 1, QVector{1, 3, 2, 4}));
  CHECK(!ordered_insertion_member(u, 1, QVector{1, 0, 2, 4}));
  CHECK(ordered_insertion_member(u, 1, QVector{1, 4}));  // empty block
}

TEST_CASE("refined transfer parameters (s, t, p)") {
  RefinedParams rp =
      refined_params({3, {QVector{4, -1, -2}, QVector{3, 3, -1}}});
  CHECK(rp.s == 2);
  CHECK(rp.t == 2);
  CHECK(rp.p == 4);

  RefinedParams nn = refined_params({2, {QVector{1, 1}, QVector{2, 0}}});
  CHECK(nn.t == 0);
  CHECK(nn.p == 3);  // r + 1 for nonnegative generators

  RefinedParams np = refined_params({2, {QVector{-1, -1}}});
  CHECK(np.s == 0);
  CHECK(np.t == 2);
  CHECK(np.p == 3);
}

TEST_CASE("equivariant dual generators reproduce the closed-form family") {
  CHECK(sorted_set(equivariant_dual_generators(kEx33, 7)) ==
        ex33_dual_formula(7));
  CHECK_THROWS_AS((void)equivariant_dual_generators(kEx33, 6),
                  std::invalid_argument);
}

TEST_CASE("transferred generators span the directly computed dual") {
  // Refined variant: base level p = 4 for this r = 3 spec, so level 5 works
  // even though the plain variant would need a level above 2r = 6.
  std::vector<QVector> f5r = equivariant_dual_generators(kEx33, 5, true);
  CHECK(equals(sym_cone(f5r, 5), dual(local_cone(kEx33, 5))));

  std::vector<QVector> f5 = equivariant_dual_generators(kA2, 5);
  CHECK(equals(sym_cone(f5, 5), dual(local_cone(kA2, 5))));
}

TEST_CASE("cone stability indices") {
  StabilizationReport r1 = stability_index(kEx33, 5);
  CHECK(r1.empirical_index == 3);
  CHECK(r1.certified);
  CHECK(!r1.certificate_details.empty());

  CHECK(stability_index(kA2, 6).empirical_index == 2);
  CHECK(stability_index(ChainSpec{1, {}}, 3).empirical_index == 1);

  std::vector<Cone> chain;
  for (std::size_t n = 1; n <= 4; ++n) chain.push_back(local_cone(kA2, n));
  StabilizationReport re = stability_index(chain);
  CHECK(re.empirical_index == 2);
  CHECK(!re.certified);
}

TEST_CASE("truncation consistency") {
  CHECK(truncation_consistent(kEx33, 6, 2));
  CHECK(truncation_consistent(kA2, 4));
  CHECK(truncation_consistent({2, {QVector{1, 1}}}, 1));
}

TEST_CASE("merge condition finds and certifies witnesses") {
  QVector u{-1, 1, 1, 0};
  REQUIRE(local_cone(kA2, 4).contains(u));
  auto sigma = merge_condition(kA2, u);
  REQUIRE(sigma.has_value());
  QVector pu = apply_perm(*sigma, u);
  CHECK(pu[2] * pu[3] >= 0);
  QVector merged{pu[0], pu[1], pu[2] + pu[3]};
  CHECK(local_cone(kA2, 3).contains(merged));

  auto tau = merge_condition(kOrthant, QVector{1, 1});
  REQUIRE(tau.has_value());
  CHECK(local_cone(kOrthant, 1).contains(QVector{2}));

  CHECK_THROWS_AS((void)merge_condition(kA2, QVector{-1, 0, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("certified equivariant Gordan for the orthant chain") {
  EquivariantHilbertResult r =
      equivariant_hilbert_basis(kOrthant, EquiHilbertMode::Certified);
  CHECK(r.pointed);
  CHECK(r.level == 3);
  CHECK(r.basis.elements ==
        std::vector<QVector>{QVector{0, 0, 1}, QVector{0, 1, 0},
                             QVector{1, 0, 0}});
  CHECK(r.representatives == std::vector<QVector>{QVector{1, 0, 0}});
  CHECK(r.report.certified);
}

TEST_CASE("certified mode on the reflected orthant stays pointed") {
  EquivariantHilbertResult r = equivariant_hilbert_basis(
      {1, {QVector{-1}}}, EquiHilbertMode::Certified);
  CHECK(r.pointed);
  CHECK(r.level == 3);
  CHECK(r.representatives == std::vector<QVector>{QVector{0, 0, -1}});
}

TEST_CASE("empirical equivariant Hilbert basis of the a = 2 family") {
  EquivariantHilbertResult r =
      equivariant_hilbert_basis(kA2, EquiHilbertMode::Empirical, 6, 2);
  CHECK(r.pointed);
  CHECK(r.level == 3);
  CHECK(r.report.empirical_index == 3);
  CHECK(!r.report.certified);
  CHECK(r.representatives ==
        std::vector<QVector>{QVector{1, 0, 0}, QVector{1, 1, -1},
                             QVector{2, 0, -1}});
  CHECK(r.basis.elements ==
        sorted_set(sym_cone({QVector{1, 0, 0}, QVector{-1, 2, 0},
                             QVector{-1, 1, 1}}, 3).rays()));
}

TEST_CASE("non-pointed chains reroute to the monoid classification") {
  EquivariantHilbertResult r = equivariant_hilbert_basis(
      {2, {QVector{1, -1}}}, EquiHilbertMode::Empirical);
  CHECK(!r.pointed);
  CHECK(r.monoid_class == MonoidClass::M2);
  CHECK(r.basis.elements.empty());
}

TEST_CASE("certified mode respects its budget") {
  // q for r = 2 lives at dimension 3r^2 = 12; a tiny budget must fail loudly.
  CHECK_THROWS_AS((void)equivariant_hilbert_basis(
                      kA2, EquiHilbertMode::Certified, 8, 2, 10),
                  BudgetExhaustedError);
}

TEST_CASE("monoid stability indices") {
  CHECK(monoid_stability_index(kA2, 6).empirical_index == 3);
  CHECK(monoid_stability_index(kOrthant, 4).empirical_index == 1);
  CHECK_THROWS_AS((void)monoid_stability_index({2, {QVector{1, -1}}}, 4),
                  NonPointedError);
}

TEST_CASE("local cone classification") {
  CHECK(classify_local_cone(Cone::from_rays(
            2, {QVector{1, 0}, QVector{0, 1}})) == ConeClass::Pointed);
  CHECK(classify_local_cone(Cone::from_rays(3, [] {
          std::vector<QVector> rays;
          for (const QVector& v : orbit(QVector{1, -1, 0}, 3)) rays.push_back(v);
          return rays;
        }())) == ConeClass::D2_sumzero);
  CHECK(classify_local_cone(Cone::from_rays(
            3, {QVector{1, 1, 1}, QVector{-1, -1, -1}})) ==
        ConeClass::D5_diagonal);
  CHECK(classify_local_cone(Cone::from_rays(
            2, {QVector{1, -1}, QVector{-1, 1}, QVector{1, 0}, QVector{0, 1}})) ==
        ConeClass::D3_sumnonneg);
  CHECK(classify_local_cone(Cone::full_space(3)) == ConeClass::D1_full);
  CHECK(classify_local_cone(Cone::from_rays(
            2, {QVector{1, -1}, QVector{-1, 1}, QVector{-1, 0}, QVector{0, -1}})) ==
        ConeClass::D4_sumnonpos);
  CHECK_THROWS_AS((void)classify_local_cone(Cone::from_rays(2, {QVector{1, 0}})),
                  std::invalid_argument);
}

TEST_CASE("global cone classification hits all four tags") {
  CHECK(classify_global_cone({1, {QVector{1}, QVector{-1}}}) ==
        ConeClass::C1_full);
  CHECK(classify_global_cone({2, {QVector{1, -1}}}) == ConeClass::C2_sumzero);
  CHECK(classify_global_cone({2, {QVector{1, -1}, QVector{1, 0}}}) ==
        ConeClass::C3_sumnonneg);
  CHECK(classify_global_cone({2, {QVector{1, -1}, QVector{-1, 0}}}) ==
        ConeClass::C4_sumnonpos);
  CHECK(classify_global_cone(kEx33) == ConeClass::Pointed);
  CHECK(classify_global_cone(kA2) == ConeClass::Pointed);
}

TEST_CASE("monoid classification mirrors the cone tags") {
  CHECK(classify_global_monoid({2, {QVector{1, -1}}}) == MonoidClass::M2);
  CHECK(classify_global_monoid(kA2) == MonoidClass::Positive);
  MonoidSpec diag{3, {QVector{1, 1, 1}, QVector{-1, -1, -1}}};
  CHECK(classify_local_monoid(diag) == MonoidClass::N5);
  MonoidSpec pos{2, {QVector{1, 0}, QVector{0, 1}}};
  CHECK(classify_local_monoid(pos) == MonoidClass::Positive);
}

TEST_CASE("restricted dual classification by generator signs") {
  CHECK(classify_restricted_dual({2, {QVector{1, 2}}}) ==
        RestrictedDualClass::NonnegOrthant);
  CHECK(classify_restricted_dual({3, {QVector{-2, -1, 4}}}) ==
        RestrictedDualClass::Zero);
  CHECK(classify_restricted_dual({1, {}}) == RestrictedDualClass::FullSpace);
  CHECK(classify_restricted_dual({1, {QVector{-1}}}) ==
        RestrictedDualClass::NonposOrthant);
  CHECK(classify_restricted_dual({1, {QVector{1}, QVector{-1}}}) ==
        RestrictedDualClass::Zero);
}

TEST_CASE("global dual membership for eventually constant sequences") {
  EventuallyConstantSeq ones{QVector{1}, 1};
  CHECK(global_dual_member(kEx33, ones).member);

  EventuallyConstantSeq mid{QVector{5, 6, 6, 6, 6, 7}, 6};
  CHECK(global_dual_member(kEx33, mid).member);

  for (const Rational& tail : {Rational(3), Rational(4), Rational(7, 2)}) {
    EventuallyConstantSeq step{QVector{3, 3, 3, 4, 4, 4}, tail};
    CHECK(global_dual_member(kEx33, step).member);
  }

  EventuallyConstantSeq bad{QVector{1}, 0};
  GlobalDualVerdict v = global_dual_member(kEx33, bad);
  CHECK(!v.member);
  REQUIRE(v.violating_generator.has_value());
  REQUIRE(v.violating_placement.has_value());
  REQUIRE(v.violating_value.has_value());
  CHECK(*v.violating_value < 0);
  // The placement realizes the reported pairing against (prefix, tail, ...).
  const QVector& placed = *v.violating_placement;
  Rational recomputed = 0;
  for (std::size_t i = 0; i < placed.dim(); ++i)
    recomputed += placed[i] * (i < bad.prefix.dim() ? bad.prefix[i] : bad.tail);
  CHECK(recomputed == *v.violating_value);
}

TEST_CASE("corollary dual elements: construction and guard rails") {
  EventuallyConstantSeq s = corollary_dual_elements(
      kEx33, QVector{3, 3, 3, 4, 4, 4}, QVector(), Rational(7, 2));
  CHECK(s.prefix == QVector{3, 3, 3, 4, 4, 4});
  CHECK(s.tail == Rational(7, 2));

  EventuallyConstantSeq ones = corollary_dual_elements(
      kEx33, QVector::ones(6), QVector(), 1);
  CHECK(ones.tail == 1);

  // Degenerate interval forces the tail.
  CHECK_THROWS_AS((void)corollary_dual_elements(kEx33, QVector::ones(6),
                                                QVector(), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)corollary_dual_elements(kEx33,
                                                QVector{3, 3, 3, 4, 4, 4},
                                                QVector{5}, Rational(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)corollary_dual_elements(kEx33, QVector{4, 3, 3, 4, 4, 4},
                                                QVector(), Rational(4)),
                  std::invalid_argument);
}

TEST_CASE("tag names are stable") {
  CHECK(to_string(ConeClass::C2_sumzero) == "C2_sumzero");
  CHECK(to_string(MonoidClass::M4) == "M4");
  CHECK(to_string(RestrictedDualClass::FullSpace) == "full_space");
}
