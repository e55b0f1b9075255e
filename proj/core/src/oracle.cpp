#include "symcone/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "symcone/orbit.hpp"

namespace symcone {

namespace {

// Enumerate all integer vectors of dimension n with l1 norm <= bound,
// invoking fn on each.
template <typename Fn>
void box_scan(std::size_t n, long bound, Fn&& fn) {
  QVector u(n);
  // Depth-first over coordinates with the remaining norm budget.
  auto rec = [&](auto&& self, std::size_t i, long remaining) -> void {
    if (i == n) {
      fn(u);
      return;
    }
    for (long v = -remaining; v <= remaining; ++v) {
      u[i] = v;
      self(self, i + 1, remaining - std::abs(v));
    }
    u[i] = 0;
  };
  rec(rec, 0, bound);
}

}  // namespace

std::vector<QVector> brute_hilbert(const Cone& c, long bound) {
  const std::size_t n = c.dim();
  std::vector<QVector> members;  // nonzero integer cone points in the box
  box_scan(n, bound, [&](const QVector& u) {
    if (!u.is_zero() && c.contains(u)) members.push_back(u);
  });
  std::vector<QVector> irreducibles;
  for (const QVector& u : members) {
    bool reducible = false;
    for (const QVector& v : members) {
      if (v == u) continue;
      QVector w = u - v;
      if (!w.is_zero() && c.contains(w)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) irreducibles.push_back(u);
  }
  std::sort(irreducibles.begin(), irreducibles.end());
  return irreducibles;
}

namespace {

// One Fourier-Motzkin step: eliminate variable `var` from the system
// {<row, y> >= 0}, rows over dimension m.
std::vector<QVector> fm_eliminate(const std::vector<QVector>& rows,
                                  std::size_t var) {
  std::vector<const QVector*> pos, neg, zero;
  for (const QVector& row : rows) {
    if (row[var] > 0)
      pos.push_back(&row);
    else if (row[var] < 0)
      neg.push_back(&row);
    else
      zero.push_back(&row);
  }
  std::set<QVector> out;
  for (const QVector* z : zero)
    if (!z->is_zero()) out.insert(normalize_primitive(*z));
  for (const QVector* p : pos)
    for (const QVector* q : neg) {
      QVector comb = (*p)[var] * (*q) - (*q)[var] * (*p);
      if (!comb.is_zero()) out.insert(normalize_primitive(comb));
    }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<QVector> fm_facets(std::size_t dim,
                               const std::vector<QVector>& rays) {
  const std::size_t k = rays.size();
  // System over y = (x_1..x_dim, l_1..l_k):
  //   x - sum l_j ray_j = 0  (two inequalities per coordinate), l >= 0.
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    QVector row(dim + k);
    row[i] = 1;
    for (std::size_t j = 0; j < k; ++j) row[dim + j] = -rays[j][i];
    rows.push_back(row);
    rows.push_back(-row);
  }
  for (std::size_t j = 0; j < k; ++j)
    rows.push_back(QVector::unit(dim + k, dim + j));
  for (std::size_t j = 0; j < k; ++j)
    rows = fm_eliminate(rows, dim + k - 1 - j);
  std::set<QVector> out;
  for (const QVector& row : rows) out.insert(truncate(row, dim));
  return {out.begin(), out.end()};
}

bool convex_membership(const QVector& u, std::size_t dim,
                       const std::vector<QVector>& gens) {
  for (const QVector& f : fm_facets(dim, gens))
    if (dot(f, u) < 0) return false;
  return true;
}

bool pairing_audit(const std::vector<QVector>& primal,
                   const std::vector<QVector>& duals, std::size_t n,
                   const OracleConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  for (const QVector& d : duals) {
    QVector dn = pad(d, n);
    Integer osize = orbit_size(dn, n);
    if (osize * Integer(primal.size()) <= Integer(cfg.max_exhaustive)) {
      for (const QVector& sd : orbit(dn, n))
        for (const QVector& p : primal)
          if (dot(sd, pad(p, n)) < 0) return false;
    } else {
      // Seeded sampling of random permutations of the dual vector.
      std::vector<Rational> entries = dn.entries();
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        std::shuffle(entries.begin(), entries.end(), rng);
        QVector sd{std::vector<Rational>(entries)};
        for (const QVector& p : primal)
          if (dot(sd, pad(p, n)) < 0) return false;
      }
    }
  }
  return true;
}

RestrictedDualClass restricted_dual_probe(const ChainSpec& spec) {
  const std::size_t probe = std::max<std::size_t>(2 * spec.r, 3);
  bool plus = true, minus = true;
  for (const QVector& g : spec.generators) {
    for (const QVector& v : orbit(g, probe)) {
      if (v[0] < 0) plus = false;
      if (v[0] > 0) minus = false;
    }
  }
  if (plus && minus) return RestrictedDualClass::FullSpace;
  if (plus) return RestrictedDualClass::NonnegOrthant;
  if (minus) return RestrictedDualClass::NonposOrthant;
  return RestrictedDualClass::Zero;
}

}  // namespace symcone
