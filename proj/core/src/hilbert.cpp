#include "symcone/hilbert.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symcone/double_description.hpp"
#include "symcone/linalg.hpp"

namespace symcone {

namespace {

// Placing (lexicographic) triangulation of a full-dimensional pointed cone in
// R^d given by its extreme rays (processed in their given, sorted order).
// Returns index sets of size d.
std::vector<std::vector<std::size_t>> placing_triangulation(
    std::size_t d, const std::vector<QVector>& rays, std::uint64_t& budget) {
  std::vector<std::vector<std::size_t>> simplices;
  QMatrix span_basis;  // echelonized rows spanning processed rays
  auto in_span = [&](const QVector& v) {
    QVector w = v;
    for (const QVector& b : span_basis) {
      std::size_t p = 0;
      while (b[p] == 0) ++p;
      if (w[p] != 0) w = w - (w[p] / b[p]) * b;
    }
    if (w.is_zero()) return true;
    span_basis.push_back(w);
    return false;
  };

  std::vector<QVector> processed;
  for (std::size_t j = 0; j < rays.size(); ++j) {
    const QVector& r = rays[j];
    if (j == 0) {
      in_span(r);
      simplices.push_back({0});
      processed.push_back(r);
      continue;
    }
    if (!in_span(r)) {
      // Dimension grows: every simplex extends by the new ray.
      for (auto& s : simplices) s.push_back(j);
      processed.push_back(r);
      continue;
    }
    // Same span: attach the new ray to the visible part of the boundary.
    DDResult dd = double_description(d, processed, &budget);
    std::set<std::vector<std::size_t>> fresh;
    for (const QVector& f : dd.rays) {
      if (dot(f, r) >= 0) continue;  // facet not visible from r
      std::vector<bool> on_facet(processed.size());
      for (std::size_t i = 0; i < processed.size(); ++i)
        on_facet[i] = (dot(f, processed[i]) == 0);
      for (const auto& s : simplices) {
        std::vector<std::size_t> ridge;
        for (std::size_t i : s)
          if (on_facet[i]) ridge.push_back(i);
        if (ridge.size() + 1 == s.size()) {
          ridge.push_back(j);
          fresh.insert(std::move(ridge));
        }
      }
    }
    for (const auto& s : fresh) simplices.push_back(s);
    processed.push_back(r);
  }
  return simplices;
}

// Lattice points in the half-open fundamental parallelepiped of the
// simplicial cone with ray matrix A (columns), excluding 0.
std::vector<QVector> parallelepiped_points(const std::vector<QVector>& A,
                                           std::uint64_t& budget) {
  const std::size_t d = A.size();
  std::vector<QVector> H = column_hnf(A);
  Integer det = 1;
  for (std::size_t i = 0; i < d; ++i) det *= numerator(H[i][i]);
  if (det == 1) return {};
  if (det > Integer(budget))
    throw BudgetExhaustedError("fundamental parallelepiped too large: " +
                               det.str());
  budget -= static_cast<std::uint64_t>(det);

  std::vector<QVector> points;
  // Residue representatives x with 0 <= x_i < H[i][i] form a complete system
  // of residues of Z^d modulo the column lattice of A; map each to its
  // representative inside the parallelepiped of A.
  std::vector<Integer> x(d, Integer(0));
  for (;;) {
    QVector xv(d);
    bool zero = true;
    for (std::size_t i = 0; i < d; ++i) {
      xv[i] = Rational(x[i]);
      if (x[i] != 0) zero = false;
    }
    if (!zero) {
      auto t = solve_columns(A, xv);
      QVector z(d);
      bool nonzero = false;
      for (std::size_t i = 0; i < d; ++i) {
        Rational frac = (*t)[i] - Rational(floor_q((*t)[i]));
        for (std::size_t row = 0; row < d; ++row) z[row] += frac * A[i][row];
        if (frac != 0) nonzero = true;
      }
      if (nonzero) points.push_back(z);
    }
    // Increment the mixed-radix counter over the diagonal of H.
    std::size_t i = 0;
    while (i < d) {
      x[i] += 1;
      if (x[i] < numerator(H[i][i])) break;
      x[i] = 0;
      ++i;
    }
    if (i == d) break;
  }
  return points;
}

}  // namespace

HilbertBasis hilbert_basis(const Cone& c, std::uint64_t budget) {
  // Extreme rays via two budgeted double-description runs (dual, then back),
  // so oversized inputs hit the budget here instead of stalling un-gated.
  DDResult facet_dd = double_description(c.dim(), c.rays(), &budget);
  std::vector<QVector> constraints = facet_dd.rays;
  for (const QVector& l : facet_dd.lineality) {
    constraints.push_back(l);
    constraints.push_back(normalize_primitive(-l));
  }
  DDResult gen_dd = double_description(c.dim(), constraints, &budget);
  if (!gen_dd.lineality.empty())
    throw NonPointedError(
        "hilbert_basis: cone is not pointed; use the non-pointed "
        "classification instead");
  HilbertBasis hb;
  hb.dim = c.dim();
  if (gen_dd.rays.empty()) return hb;

  const std::size_t n = c.dim();
  std::vector<QVector> rays = gen_dd.rays;  // primitive, sorted
  std::size_t d = rank(QMatrix(rays.begin(), rays.end()));

  // Map a lower-dimensional cone onto Z^d via a lattice basis of
  // span(C) ∩ Z^n, so the parallelepiped enumeration sees the right lattice.
  std::vector<QVector> B;  // columns of the lattice basis, dim n
  std::vector<QVector> local_rays;
  if (d < n) {
    std::vector<QVector> w = nullspace(QMatrix(rays.begin(), rays.end()), n);
    B = integer_kernel_basis(QMatrix(w.begin(), w.end()), n);
    for (const QVector& r : rays) {
      auto x = solve_columns(B, r);
      QVector lr(d);
      for (std::size_t i = 0; i < d; ++i) lr[i] = (*x)[i];
      local_rays.push_back(normalize_primitive(lr));
    }
    std::sort(local_rays.begin(), local_rays.end());
  } else {
    local_rays = rays;
  }

  // Facets of the full-dimensional local cone: grading and membership.
  DDResult dual_dd = double_description(d, local_rays, &budget);
  const std::vector<QVector>& facet_normals = dual_dd.rays;
  auto in_local_cone = [&](const QVector& u) {
    for (const QVector& f : facet_normals)
      if (dot(f, u) < 0) return false;
    return true;
  };
  QVector phi(d);
  for (const QVector& f : facet_normals) phi = phi + f;

  // Candidates: parallelepiped lattice points of each simplicial subcone,
  // plus the primitive extreme rays.
  auto simplices = placing_triangulation(d, local_rays, budget);
  std::set<QVector> candidate_set(local_rays.begin(), local_rays.end());
  for (const auto& s : simplices) {
    std::vector<QVector> A;
    for (std::size_t i : s) A.push_back(local_rays[i]);
    for (QVector& z : parallelepiped_points(A, budget))
      candidate_set.insert(std::move(z));
  }

  // Irreducibility sieve, graded by the strictly positive form phi.
  std::vector<QVector> candidates(candidate_set.begin(), candidate_set.end());
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const QVector& a, const QVector& b) {
                     Rational pa = dot(phi, a), pb = dot(phi, b);
                     if (pa != pb) return pa < pb;
                     return a < b;
                   });
  std::vector<QVector> basis_local;
  for (const QVector& u : candidates) {
    bool reducible = false;
    for (const QVector& v : basis_local) {
      QVector w = u - v;
      if (!w.is_zero() && in_local_cone(w)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis_local.push_back(u);
  }

  for (const QVector& h : basis_local) {
    if (d < n) {
      QVector lifted(n);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t row = 0; row < n; ++row)
          lifted[row] += h[i] * B[i][row];
      hb.elements.push_back(lifted);
    } else {
      hb.elements.push_back(h);
    }
  }
  std::sort(hb.elements.begin(), hb.elements.end());
  return hb;
}

bool is_irreducible(const QVector& u, const Cone& c, std::uint64_t budget) {
  if (!u.is_integral() || u.is_zero())
    throw std::invalid_argument("is_irreducible: need a nonzero integer vector");
  if (!c.contains(u))
    throw std::invalid_argument("is_irreducible: vector not in the monoid");
  // u is reducible iff subtracting some other irreducible stays in the
  // (normal) monoid C ∩ Z^dim.
  HilbertBasis hb = hilbert_basis(c, budget);
  for (const QVector& h : hb.elements) {
    if (h == u) continue;
    QVector w = u - h;
    if (!w.is_zero() && w.is_integral() && c.contains(w)) return false;
  }
  // Either u is in the basis, or u decomposes with no irreducible part
  // remaining in the monoid (impossible); report accordingly.
  return std::find(hb.elements.begin(), hb.elements.end(), u) != hb.elements.end();
}

namespace {

Tri bounded_search(const std::vector<QVector>& gens, const Cone& cone,
                   const QVector& phi, bool pointed, const QVector& u,
                   std::uint64_t& budget) {
  // Depth-first over generator multiplicities; remainder must stay in the
  // cone of the generators, and when a strictly positive grading exists the
  // multiplicity of each generator is bounded by phi(rem)/phi(g).
  std::vector<std::pair<QVector, std::size_t>> stack;
  stack.emplace_back(u, 0);
  while (!stack.empty()) {
    if (budget == 0) return Tri::Undecided;
    --budget;
    auto [rem, start] = stack.back();
    stack.pop_back();
    if (rem.is_zero()) return Tri::Yes;
    if (start >= gens.size()) continue;
    if (!cone.contains(rem)) continue;
    const QVector& g = gens[start];
    Integer cmax;
    if (pointed) {
      Rational pg = dot(phi, g);
      cmax = pg > 0 ? floor_q(dot(phi, rem) / pg) : Integer(0);
    } else {
      // No grading available: fall back to an l1-based cap. This keeps the
      // search finite but can miss witnesses, hence Undecided on exhaustion.
      Rational lg = l1_norm(g);
      cmax = lg > 0 ? floor_q((l1_norm(u) * 4) / lg) : Integer(0);
    }
    QVector rem2 = rem;
    for (Integer cnt = 0; cnt <= cmax; ++cnt) {
      stack.emplace_back(rem2, start + 1);
      rem2 = rem2 - g;
    }
  }
  return pointed ? Tri::No : Tri::Undecided;
}

}  // namespace

Tri monoid_contains(const MonoidSpec& m, const QVector& u,
                    std::uint64_t budget) {
  if (!u.is_integral())
    throw std::invalid_argument("monoid_contains: need an integer vector");
  for (const auto& g : m.generators)
    if (!g.is_integral())
      throw std::invalid_argument("monoid_contains: non-integral generator");
  if (u.is_zero()) return Tri::Yes;
  Cone cone = Cone::from_rays(m.dim, m.generators);
  if (!cone.contains(u)) return Tri::No;
  bool pointed = cone.is_pointed();
  QVector phi(m.dim);
  if (pointed) {
    for (const QVector& f : cone.facets()) phi = phi + f;
  }
  // Deterministic generator order.
  std::vector<QVector> gens = m.generators;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return bounded_search(gens, cone, phi, pointed, u, budget);
}

std::vector<QVector> units(const MonoidSpec& m) {
  Cone cone = Cone::from_rays(m.dim, m.generators);
  const auto& facets = cone.facets();
  if (facets.empty()) {
    // cone(M) is the whole space: the unit lattice is Z^dim.
    std::vector<QVector> basis;
    for (std::size_t i = 0; i < m.dim; ++i)
      basis.push_back(QVector::unit(m.dim, i));
    return basis;
  }
  return integer_kernel_basis(QMatrix(facets.begin(), facets.end()), m.dim);
}

bool is_positive(const MonoidSpec& m) {
  return Cone::from_rays(m.dim, m.generators).is_pointed();
}

}  // namespace symcone
