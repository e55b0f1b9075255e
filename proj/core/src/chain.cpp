#include "symcone/chain.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "symcone/double_description.hpp"
#include "symcone/linalg.hpp"
#include "symcone/orbit.hpp"

namespace symcone {

namespace {

void check_spec(const ChainSpec& spec) {
  if (spec.r < 1)
    throw std::invalid_argument("ChainSpec: r must be a positive integer");
  for (const auto& g : spec.generators)
    if (g.dim() != spec.r)
      throw std::invalid_argument("ChainSpec: generator dimension != r");
}

std::vector<QVector> orbit_closure(const std::vector<QVector>& vs,
                                   std::size_t n) {
  std::set<QVector> out;
  for (const QVector& v : vs)
    for (QVector& w : orbit(v, n)) out.insert(std::move(w));
  return {out.begin(), out.end()};
}

bool non_decreasing(const QVector& u) {
  for (std::size_t i = 0; i + 1 < u.dim(); ++i)
    if (u[i] > u[i + 1]) return false;
  return true;
}

QVector concat(const QVector& a, const QVector& b) {
  QVector r(a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.dim(); ++i) r[a.dim() + i] = b[i];
  return r;
}

}  // namespace

Cone local_cone(const ChainSpec& spec, std::size_t n) {
  check_spec(spec);
  if (n < 1) throw std::invalid_argument("local_cone: n must be >= 1");
  if (n < spec.r) return Cone::zero(n);
  return Cone::from_rays(n, orbit_closure(spec.generators, n));
}

std::vector<QVector> insertion_levels(const Rational& a, const Rational& b,
                                      std::size_t n) {
  if (a > b) throw std::invalid_argument("insertion_levels: requires a <= b");
  if (n < 1) throw std::invalid_argument("insertion_levels: n must be >= 1");
  std::vector<QVector> out;
  if (a == b) {
    QVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = a;
    out.push_back(std::move(v));
    return out;
  }
  for (std::size_t k = 0; k <= n; ++k) {
    QVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (i < n - k) ? a : b;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<QVector> insertion_family(const QVector& u, std::size_t i,
                                      std::size_t m) {
  if (!non_decreasing(u))
    throw std::invalid_argument("insertion_family: u must be non-decreasing");
  const std::size_t n = u.dim();
  if (i < 1 || i + 1 > n)
    throw std::invalid_argument("insertion_family: index out of range");
  if (m <= n)
    throw std::invalid_argument("insertion_family: target dimension must "
                                "exceed dim(u)");
  std::vector<QVector> out;
  for (const QVector& block : insertion_levels(u[i - 1], u[i], m - n)) {
    QVector v(m);
    for (std::size_t k = 0; k < i; ++k) v[k] = u[k];
    for (std::size_t k = 0; k < m - n; ++k) v[i + k] = block[k];
    for (std::size_t k = i; k < n; ++k) v[m - n + k] = u[k];
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ordered_insertion_member(const QVector& u, std::size_t i,
                              const QVector& w) {
  if (!non_decreasing(u))
    throw std::invalid_argument(
        "ordered_insertion_member: u must be non-decreasing");
  const std::size_t n = u.dim(), m = w.dim();
  if (i < 1 || i + 1 > n) return false;
  if (m < n) return false;
  const std::size_t len = m - n;
  for (std::size_t k = 0; k < i; ++k)
    if (w[k] != u[k]) return false;
  for (std::size_t k = i; k < n; ++k)
    if (w[len + k] != u[k]) return false;
  const Rational& lo = u[i - 1];
  const Rational& hi = u[i];
  for (std::size_t k = 0; k < len; ++k) {
    const Rational& x = w[i + k];
    if (x < lo || x > hi) return false;
    if (k > 0 && w[i + k - 1] > x) return false;
  }
  return true;
}

RefinedParams refined_params(const ChainSpec& spec) {
  check_spec(spec);
  if (spec.generators.empty())
    throw std::invalid_argument("refined_params: generators must be nonempty");
  RefinedParams rp;
  for (const QVector& g : spec.generators) {
    QVector gs = sorted_rep(g, SortDirection::NonIncreasing);
    std::size_t pos = 0, neg = 0;
    for (std::size_t i = 0; i < gs.dim(); ++i) {
      if (gs[i] > 0) ++pos;
      if (gs[i] < 0) ++neg;
    }
    rp.s = std::max(rp.s, pos);
    rp.t = std::max(rp.t, neg);
  }
  rp.p = std::max(rp.s + rp.t, spec.r + 1);
  return rp;
}

std::vector<QVector> equivariant_dual_generators(const ChainSpec& spec,
                                                 std::size_t n, bool refined) {
  check_spec(spec);
  std::size_t insert_at = spec.r;
  std::size_t base_level = 2 * spec.r;
  if (refined) {
    RefinedParams rp = refined_params(spec);
    insert_at = std::max<std::size_t>(rp.s, 1);
    base_level = rp.p;
  }
  if (n <= base_level)
    throw std::invalid_argument(
        "equivariant_dual_generators: level must exceed the base level " +
        std::to_string(base_level));

  // Sanity check of the chain's stabilization at r: the base level must be
  // generated by the Sym-orbit of the level-r cone.
  std::size_t r0 = std::max<std::size_t>(spec.r, 1);
  Cone base_cone = local_cone(spec, base_level);
  Cone regen = Cone::from_rays(
      base_level, orbit_closure(local_cone(spec, r0).rays(), base_level));
  if (!equals(base_cone, regen))
    throw std::runtime_error(
        "equivariant_dual_generators: stabilization at r not confirmed at the "
        "base level");

  MinimalGenerators mg = minimal_generators(ordered_slice(dual(base_cone)));
  std::vector<QVector> base = mg.extreme_rays;
  for (const QVector& l : mg.lineality) {
    base.push_back(l);
    base.push_back(normalize_primitive(-l));
  }

  std::set<QVector> out;
  for (const QVector& u : base)
    for (QVector& v : insertion_family(u, insert_at, n))
      out.insert(normalize_primitive(v));
  return {out.begin(), out.end()};
}

namespace {

StabilizationReport stability_scan(
    std::size_t cap, std::size_t window,
    const std::function<Cone(std::size_t)>& level,
    std::size_t max_level) {
  StabilizationReport rep;
  rep.cap = cap;
  rep.window = window;
  for (std::size_t m = 1; m <= cap; ++m) {
    bool ok = true;
    for (std::size_t n = m + 1; n <= std::min(m + window, max_level); ++n) {
      Cone cn = level(n);
      Cone gen = Cone::from_rays(n, orbit_closure(level(m).rays(), n));
      if (!equals(cn, gen)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      rep.empirical_index = m;
      break;
    }
  }
  return rep;
}

}  // namespace

StabilizationReport stability_index(const ChainSpec& spec, std::size_t cap,
                                    std::size_t window) {
  check_spec(spec);
  StabilizationReport rep = stability_scan(
      cap, window, [&](std::size_t n) { return local_cone(spec, n); },
      cap + window);
  rep.certified = true;
  rep.certificate_details =
      "canonical chain: C_n = cone(Sym(n)(G)) for every n >= r by "
      "construction, so the stability index is at most r = " +
      std::to_string(spec.r);
  return rep;
}

StabilizationReport stability_index(const std::vector<Cone>& chain,
                                    std::size_t window) {
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (chain[i].dim() != i + 1)
      throw std::invalid_argument(
          "stability_index: chain[i] must live in R^(i+1)");
  StabilizationReport rep = stability_scan(
      chain.size(), window, [&](std::size_t n) { return chain[n - 1]; },
      chain.size());
  rep.certified = false;
  rep.certificate_details =
      "explicit chain: window-limited empirical verification only";
  return rep;
}

bool truncation_consistent(const ChainSpec& spec, std::size_t n,
                           std::size_t window) {
  check_spec(spec);
  if (n < 1) throw std::invalid_argument("truncation_consistent: n >= 1");
  Cone cn = local_cone(spec, n);
  for (std::size_t k = 1; k <= window; ++k) {
    std::size_t big = n + k;
    std::vector<QVector> constraints = local_cone(spec, big).facets();
    for (std::size_t j = n; j < big; ++j) {
      constraints.push_back(QVector::unit(big, j));
      constraints.push_back(-QVector::unit(big, j));
    }
    Cone sliced = cone_from_constraints(big, constraints);
    std::vector<QVector> truncated;
    for (const QVector& g : sliced.rays()) truncated.push_back(truncate(g, n));
    if (!equals(Cone::from_rays(n, truncated), cn)) return false;
  }
  return true;
}

std::optional<Permutation> merge_condition(const ChainSpec& spec,
                                           const QVector& u) {
  check_spec(spec);
  if (u.dim() < 2)
    throw std::invalid_argument("merge_condition: need dimension >= 2");
  return merge_condition(local_cone(spec, u.dim() - 1),
                         local_cone(spec, u.dim()), u);
}

std::optional<Permutation> merge_condition(const Cone& c_low,
                                           const Cone& c_high,
                                           const QVector& u) {
  const std::size_t n1 = u.dim();
  if (n1 < 2 || c_high.dim() != n1 || c_low.dim() + 1 != n1)
    throw std::invalid_argument("merge_condition: dimension mismatch");
  if (!c_high.contains(u))
    throw std::invalid_argument("merge_condition: u is not in C_{n+1}");
  const std::size_t n = n1 - 1;
  const Cone& cn = c_low;
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = i + 1; j < n1; ++j) {
      if (u[i] * u[j] < 0) continue;
      QVector merged(n);
      std::size_t pos = 0;
      for (std::size_t k = 0; k < n1; ++k)
        if (k != i && k != j) merged[pos++] = u[k];
      merged[n - 1] = u[i] + u[j];
      if (!cn.contains(merged)) continue;
      // sigma sends the paired coordinates to the last two slots, keeping the
      // others in order: apply_perm(sigma, u) ends with u_i, u_j.
      std::vector<std::size_t> images(n1);
      std::size_t next = 1;
      for (std::size_t k = 0; k < n1; ++k) {
        if (k == i)
          images[k] = n1 - 1;
        else if (k == j)
          images[k] = n1;
        else
          images[k] = next++;
      }
      return Permutation::from_one_based(images);
    }
  }
  return std::nullopt;
}

namespace {

// Canonical orbit representative for equivariant reporting.
QVector canonical_rep(const QVector& u) {
  return sorted_rep(u, SortDirection::NonIncreasing);
}

bool orbit_covers(const HilbertBasis& low, const HilbertBasis& high) {
  std::set<QVector> reps;
  for (const QVector& h : low.elements)
    reps.insert(canonical_rep(pad(h, high.dim)));
  for (const QVector& h : high.elements)
    if (!reps.count(canonical_rep(h))) return false;
  return true;
}

}  // namespace

EquivariantHilbertResult equivariant_hilbert_basis(const ChainSpec& spec,
                                                   EquiHilbertMode mode,
                                                   std::size_t cap,
                                                   std::size_t window,
                                                   std::uint64_t budget) {
  check_spec(spec);
  for (const QVector& g : spec.generators)
    if (!g.is_integral())
      throw std::invalid_argument(
          "equivariant_hilbert_basis: generators must be integral");
  EquivariantHilbertResult res;
  if (classify_global_cone(spec) != ConeClass::Pointed) {
    res.pointed = false;
    res.monoid_class = classify_global_monoid(spec);
    res.report.certificate_details =
        "chain is not pointed: the monoid is one of the four non-positive "
        "Sym-invariant normal monoids (" + to_string(res.monoid_class) + ")";
    return res;
  }

  if (mode == EquiHilbertMode::Certified) {
    const std::size_t p = 3 * spec.r * spec.r;
    HilbertBasis hp = hilbert_basis(local_cone(spec, p), budget);
    Rational norm = hp.max_norm();
    std::size_t q = p;
    if (norm > Rational(static_cast<long>(p)))
      q = static_cast<std::size_t>(static_cast<std::uint64_t>(floor_q(norm)));
    res.level = q;
    res.basis = (q == p) ? hp : hilbert_basis(local_cone(spec, q), budget);
    res.report.certified = true;
    res.report.cap = cap;
    res.report.window = window;
    res.report.empirical_index = q;
    std::ostringstream os;
    os << "certified: q = max{3r^2, ||H_{3r^2}||} = max{" << p << ", "
       << norm << "} = " << q
       << "; H_q is a Sym-equivariant generating set of the chain's monoid";
    res.report.certificate_details = os.str();
  } else {
    std::map<std::size_t, HilbertBasis> memo;
    auto basis_at = [&](std::size_t n) -> const HilbertBasis& {
      auto it = memo.find(n);
      if (it == memo.end())
        it = memo.emplace(n, hilbert_basis(local_cone(spec, n), budget)).first;
      return it->second;
    };
    res.report.cap = cap;
    res.report.window = window;
    std::size_t start = std::max<std::size_t>(spec.r, 1);
    for (std::size_t m = start; m <= cap; ++m) {
      bool ok = true;
      for (std::size_t k = 1; k <= window; ++k) {
        if (!orbit_covers(basis_at(m), basis_at(m + k))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        res.report.empirical_index = m;
        res.level = m;
        res.basis = basis_at(m);
        break;
      }
    }
    if (!res.report.empirical_index) {
      res.level = cap;
      res.basis = basis_at(cap);
      res.report.certificate_details =
          "empirical: no stabilizing level found up to the cap";
    } else {
      res.report.certificate_details =
          "empirical: Sym(m+k)(H_m) covers H_{m+k} for k = 1.." +
          std::to_string(window) + " at m = " + std::to_string(res.level);
    }
  }

  std::set<QVector> reps;
  for (const QVector& h : res.basis.elements) reps.insert(canonical_rep(h));
  res.representatives.assign(reps.begin(), reps.end());
  return res;
}

StabilizationReport monoid_stability_index(const ChainSpec& spec,
                                           std::size_t cap, std::size_t window,
                                           std::uint64_t budget) {
  check_spec(spec);
  EquivariantHilbertResult res = equivariant_hilbert_basis(
      spec, EquiHilbertMode::Empirical, cap, window, budget);
  if (!res.pointed)
    throw NonPointedError(
        "monoid_stability_index: requires a pointed canonical chain");
  StabilizationReport rep = res.report;
  rep.certified = false;
  rep.certificate_details +=
      "; theorem bound: the index is at most q = max{3r^2, ||H_{3r^2}||}";
  return rep;
}

ConeClass classify_local_cone(const Cone& c) {
  const std::size_t n = c.dim();
  for (const QVector& ray : c.rays())
    for (const QVector& w : orbit(ray, n))
      if (!c.contains(w))
        throw std::invalid_argument(
            "classify_local_cone: cone is not Sym(n)-invariant");
  const std::vector<QVector>& lin = c.lineality_basis();
  if (lin.empty()) return ConeClass::Pointed;
  const QVector ones = QVector::ones(n);

  if (lin.size() == n) return ConeClass::D1_full;

  bool lin_sumzero = true;
  for (const QVector& l : lin)
    if (coordinate_sum(l) != 0) lin_sumzero = false;

  if (lin.size() + 1 == n && lin_sumzero) {
    bool pos = false, neg = false;
    for (const QVector& ray : c.rays()) {
      Rational s = coordinate_sum(ray);
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    ConeClass tag;
    Cone expect = Cone::zero(n);
    if (pos && neg) {
      throw std::logic_error(
          "classify_local_cone: non-pointed cone matches none of the five "
          "local types (classification violated)");
    } else if (pos) {
      tag = ConeClass::D3_sumnonneg;
      expect = cone_from_constraints(n, {ones});
    } else if (neg) {
      tag = ConeClass::D4_sumnonpos;
      expect = cone_from_constraints(n, {-ones});
    } else {
      tag = ConeClass::D2_sumzero;
      expect = cone_from_constraints(n, {ones, -ones});
    }
    if (equals(c, expect)) return tag;
    throw std::logic_error(
        "classify_local_cone: non-pointed cone matches none of the five "
        "local types (classification violated)");
  }

  if (lin.size() == 1 &&
      (lin[0] == ones || lin[0] == normalize_primitive(-ones))) {
    if (equals(c, Cone::from_rays(n, {ones, -ones})))
      return ConeClass::D5_diagonal;
  }
  throw std::logic_error(
      "classify_local_cone: non-pointed cone matches none of the five local "
      "types (classification violated)");
}

ConeClass classify_global_cone(const ChainSpec& spec) {
  check_spec(spec);
  const std::size_t N = std::max<std::size_t>(2 * spec.r, 2);
  Cone cn = local_cone(spec, N);
  QVector swapdiff(N);
  swapdiff[0] = 1;
  swapdiff[1] = -1;
  if (!cn.contains(swapdiff) || !cn.contains(-swapdiff))
    return ConeClass::Pointed;
  bool plus = cn.contains(QVector::unit(N, 0));
  bool minus = cn.contains(-QVector::unit(N, 0));
  if (plus && minus) return ConeClass::C1_full;
  if (plus) return ConeClass::C3_sumnonneg;
  if (minus) return ConeClass::C4_sumnonpos;
  return ConeClass::C2_sumzero;
}

namespace {

MonoidClass cone_tag_to_monoid(ConeClass c) {
  switch (c) {
    case ConeClass::Pointed: return MonoidClass::Positive;
    case ConeClass::C1_full: return MonoidClass::M1;
    case ConeClass::C2_sumzero: return MonoidClass::M2;
    case ConeClass::C3_sumnonneg: return MonoidClass::M3;
    case ConeClass::C4_sumnonpos: return MonoidClass::M4;
    case ConeClass::D1_full: return MonoidClass::N1;
    case ConeClass::D2_sumzero: return MonoidClass::N2;
    case ConeClass::D3_sumnonneg: return MonoidClass::N3;
    case ConeClass::D4_sumnonpos: return MonoidClass::N4;
    case ConeClass::D5_diagonal: return MonoidClass::N5;
  }
  throw std::logic_error("cone_tag_to_monoid: unreachable");
}

}  // namespace

MonoidClass classify_local_monoid(const MonoidSpec& m) {
  for (const QVector& g : m.generators)
    if (!g.is_integral())
      throw std::invalid_argument(
          "classify_local_monoid: generators must be integral");
  return cone_tag_to_monoid(
      classify_local_cone(Cone::from_rays(m.dim, m.generators)));
}

MonoidClass classify_global_monoid(const ChainSpec& spec) {
  check_spec(spec);
  for (const QVector& g : spec.generators)
    if (!g.is_integral())
      throw std::invalid_argument(
          "classify_global_monoid: generators must be integral");
  return cone_tag_to_monoid(classify_global_cone(spec));
}

RestrictedDualClass classify_restricted_dual(const ChainSpec& spec) {
  check_spec(spec);
  bool any_pos = false, any_neg = false;
  for (const QVector& g : spec.generators) {
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < g.dim(); ++i) {
      if (g[i] > 0) pos = true;
      if (g[i] < 0) neg = true;
    }
    if (pos && neg) return RestrictedDualClass::Zero;  // mixed-sign generator
    if (pos) any_pos = true;
    if (neg) any_neg = true;
  }
  if (any_pos && any_neg) return RestrictedDualClass::Zero;
  if (any_pos) return RestrictedDualClass::NonnegOrthant;
  if (any_neg) return RestrictedDualClass::NonposOrthant;
  return RestrictedDualClass::FullSpace;  // C = {0}
}

GlobalDualVerdict global_dual_member(const ChainSpec& spec,
                                     const EventuallyConstantSeq& w) {
  check_spec(spec);
  GlobalDualVerdict verdict;
  verdict.member = true;
  const std::size_t k = w.prefix.dim();
  if (k > 20)
    throw std::invalid_argument(
        "global_dual_member: prefix too long for exact subset enumeration");

  for (const QVector& g : spec.generators) {
    std::vector<Rational> entries;
    Rational total = 0;
    for (std::size_t i = 0; i < g.dim(); ++i) {
      if (g[i] != 0) {
        entries.push_back(g[i]);
        total += g[i];
      }
    }
    if (entries.empty()) continue;
    const std::size_t e = entries.size();

    Rational best;
    bool have_best = false;
    std::uint32_t best_pmask = 0, best_emask = 0;
    // Choose which entries land on prefix positions (the rest meet the tail)
    // and minimize each fixed choice exactly by opposite sorting.
    for (std::uint32_t pmask = 0; pmask < (1u << k); ++pmask) {
      const int j = std::popcount(pmask);
      if (static_cast<std::size_t>(j) > e) continue;
      std::vector<Rational> wvals;
      for (std::size_t i = 0; i < k; ++i)
        if (pmask & (1u << i)) wvals.push_back(w.prefix[i]);
      std::sort(wvals.begin(), wvals.end());
      for (std::uint32_t emask = 0; emask < (1u << e); ++emask) {
        if (std::popcount(emask) != j) continue;
        std::vector<Rational> evals;
        Rational esum = 0;
        for (std::size_t i = 0; i < e; ++i)
          if (emask & (1u << i)) {
            evals.push_back(entries[i]);
            esum += entries[i];
          }
        std::sort(evals.begin(), evals.end(), std::greater<Rational>());
        Rational val = (total - esum) * w.tail;
        for (int i = 0; i < j; ++i) val += evals[i] * wvals[i];
        if (!have_best || val < best) {
          have_best = true;
          best = val;
          best_pmask = pmask;
          best_emask = emask;
        }
      }
    }
    if (have_best && best < 0) {
      verdict.member = false;
      verdict.violating_generator = g;
      verdict.violating_value = best;
      // Reconstruct the minimizing placement: chosen entries on the chosen
      // prefix positions (opposite-sorted against the prefix values), the
      // remaining entries immediately after the prefix.
      std::vector<std::size_t> positions;
      for (std::size_t i = 0; i < k; ++i)
        if (best_pmask & (1u << i)) positions.push_back(i);
      std::sort(positions.begin(), positions.end(),
                [&](std::size_t a, std::size_t b) {
                  if (w.prefix[a] != w.prefix[b])
                    return w.prefix[a] < w.prefix[b];
                  return a < b;
                });
      std::vector<Rational> chosen, rest;
      for (std::size_t i = 0; i < e; ++i)
        (best_emask & (1u << i) ? chosen : rest).push_back(entries[i]);
      std::sort(chosen.begin(), chosen.end(), std::greater<Rational>());
      QVector placed(k + rest.size());
      for (std::size_t i = 0; i < positions.size(); ++i)
        placed[positions[i]] = chosen[i];
      for (std::size_t i = 0; i < rest.size(); ++i) placed[k + i] = rest[i];
      verdict.violating_placement = placed;
      return verdict;
    }
  }
  return verdict;
}

EventuallyConstantSeq corollary_dual_elements(const ChainSpec& spec,
                                              const QVector& u,
                                              const QVector& block,
                                              const Rational& tail) {
  check_spec(spec);
  const std::size_t r = spec.r;
  if (u.dim() != 2 * r)
    throw std::invalid_argument(
        "corollary_dual_elements: u must live at level 2r");
  if (!non_decreasing(u))
    throw std::invalid_argument(
        "corollary_dual_elements: u must be non-decreasing");
  const Cone level_cone = local_cone(spec, 2 * r);
  for (const QVector& ray : level_cone.rays())
    if (dot(ray, u) < 0)
      throw std::invalid_argument(
          "corollary_dual_elements: u is not in the ordered dual slice");
  const Rational& lo = u[r - 1];
  const Rational& hi = u[r];
  if (!non_decreasing(block))
    throw std::invalid_argument(
        "corollary_dual_elements: block must be non-decreasing");
  for (std::size_t i = 0; i < block.dim(); ++i)
    if (block[i] < lo || block[i] > hi)
      throw std::invalid_argument(
          "corollary_dual_elements: block entries must lie in [u_r, u_{r+1}]");
  if (tail < lo || tail > hi)
    throw std::invalid_argument(
        "corollary_dual_elements: tail must lie in [u_r, u_{r+1}]");
  if (block.dim() > 0 && block[block.dim() - 1] > tail)
    throw std::invalid_argument(
        "corollary_dual_elements: block must not exceed the tail constant");

  EventuallyConstantSeq seq{concat(u, block), tail};
  GlobalDualVerdict verdict = global_dual_member(spec, seq);
  if (!verdict.member)
    throw std::logic_error(
        "corollary_dual_elements: constructed sequence rejected by "
        "global_dual_member (corollary violated)");
  return seq;
}

std::string to_string(ConeClass c) {
  switch (c) {
    case ConeClass::Pointed: return "Pointed";
    case ConeClass::C1_full: return "C1_full";
    case ConeClass::C2_sumzero: return "C2_sumzero";
    case ConeClass::C3_sumnonneg: return "C3_sumnonneg";
    case ConeClass::C4_sumnonpos: return "C4_sumnonpos";
    case ConeClass::D1_full: return "D1_full";
    case ConeClass::D2_sumzero: return "D2_sumzero";
    case ConeClass::D3_sumnonneg: return "D3_sumnonneg";
    case ConeClass::D4_sumnonpos: return "D4_sumnonpos";
    case ConeClass::D5_diagonal: return "D5_diagonal";
  }
  return "?";
}

std::string to_string(MonoidClass m) {
  switch (m) {
    case MonoidClass::Positive: return "Positive";
    case MonoidClass::M1: return "M1";
    case MonoidClass::M2: return "M2";
    case MonoidClass::M3: return "M3";
    case MonoidClass::M4: return "M4";
    case MonoidClass::N1: return "N1";
    case MonoidClass::N2: return "N2";
    case MonoidClass::N3: return "N3";
    case MonoidClass::N4: return "N4";
    case MonoidClass::N5: return "N5";
  }
  return "?";
}

std::string to_string(RestrictedDualClass d) {
  switch (d) {
    case RestrictedDualClass::Zero: return "zero";
    case RestrictedDualClass::NonnegOrthant: return "nonneg_orthant";
    case RestrictedDualClass::NonposOrthant: return "nonpos_orthant";
    case RestrictedDualClass::FullSpace: return "full_space";
  }
  return "?";
}

}  // namespace symcone
