#include "symcone/double_description.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "symcone/errors.hpp"
#include "symcone/linalg.hpp"

namespace symcone {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t nbits) { return Bits((nbits + 63) / 64, 0); }

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= (std::uint64_t{1} << (i % 64)); }

Bits bits_and(const Bits& a, const Bits& b) {
  Bits r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

std::size_t popcount(const Bits& b) {
  std::size_t c = 0;
  for (std::uint64_t w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

struct Ray {
  QVector v;
  Bits tight;
};

// Rank of the constraints indexed by `common`, with early exit once the
// target rank is reached. For two distinct extreme rays (mod lineality) the
// rank of their common tight constraints never exceeds target = D - 2, so
// reaching it certifies adjacency.
bool adjacency_rank_reaches(const Bits& common,
                            const std::vector<QVector>& constraints,
                            std::size_t target) {
  if (target == 0) return true;
  std::vector<QVector> basis;
  for (std::size_t w = 0; w < common.size(); ++w) {
    std::uint64_t word = common[w];
    while (word) {
      std::size_t bit = static_cast<std::size_t>(std::countr_zero(word));
      word &= word - 1;
      QVector v = constraints[w * 64 + bit];
      // Reduce v against the current basis (each basis row has a leading
      // pivot position recorded implicitly by construction order).
      for (const QVector& b : basis) {
        std::size_t p = 0;
        while (b[p] == 0) ++p;
        if (v[p] != 0) v = v - (v[p] / b[p]) * b;
      }
      if (!v.is_zero()) {
        basis.push_back(v);
        if (basis.size() >= target) return true;
      }
    }
  }
  return false;
}

}  // namespace

DDResult double_description(std::size_t dim, std::vector<QVector> constraints,
                            std::uint64_t* work_budget) {
  auto charge = [work_budget](std::uint64_t amount) {
    if (!work_budget) return;
    if (*work_budget < amount)
      throw BudgetExhaustedError("double description work limit exceeded");
    *work_budget -= amount;
  };
  // Canonicalize constraint list: drop zeros, primitivize, dedupe, sort.
  std::vector<QVector> cs;
  cs.reserve(constraints.size());
  for (const auto& g : constraints) {
    if (g.dim() != dim)
      throw std::invalid_argument("double_description: constraint dim mismatch");
    if (!g.is_zero()) cs.push_back(normalize_primitive(g));
  }
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  const std::size_t m = cs.size();

  // Start from the full space: lineality = R^dim, no rays.
  std::vector<QVector> L;
  for (std::size_t i = 0; i < dim; ++i) L.push_back(QVector::unit(dim, i));
  std::vector<Ray> rays;

  for (std::size_t ci = 0; ci < m; ++ci) {
    const QVector& g = cs[ci];
    // Case 1: the constraint is nonzero somewhere on the lineality space.
    std::size_t b0_idx = L.size();
    for (std::size_t i = 0; i < L.size(); ++i) {
      if (dot(g, L[i]) != 0) {
        b0_idx = i;
        break;
      }
    }
    if (b0_idx < L.size()) {
      QVector b0 = L[b0_idx];
      Rational gb0 = dot(g, b0);
      if (gb0 < 0) {
        b0 = -b0;
        gb0 = -gb0;
      }
      std::vector<QVector> newL;
      for (std::size_t i = 0; i < L.size(); ++i) {
        if (i == b0_idx) continue;
        Rational gb = dot(g, L[i]);
        newL.push_back(gb == 0 ? L[i] : L[i] - (gb / gb0) * b0);
      }
      L = std::move(newL);
      for (Ray& r : rays) {
        Rational gv = dot(g, r.v);
        if (gv != 0) r.v = normalize_primitive(r.v - (gv / gb0) * b0);
        set_bit(r.tight, ci);
      }
      Ray nb;
      nb.v = normalize_primitive(b0);
      nb.tight = make_bits(m);
      for (std::size_t j = 0; j < ci; ++j) set_bit(nb.tight, j);
      rays.push_back(std::move(nb));
      continue;
    }

    // Case 2: the constraint vanishes on the lineality space. Split rays.
    std::vector<std::size_t> pos, neg;
    std::vector<Rational> vals(rays.size());
    charge(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      vals[i] = dot(g, rays[i].v);
      if (vals[i] > 0)
        pos.push_back(i);
      else if (vals[i] < 0)
        neg.push_back(i);
      else
        set_bit(rays[i].tight, ci);
    }
    if (neg.empty()) continue;

    const std::size_t D = dim - L.size();
    const std::size_t target = D >= 2 ? D - 2 : 0;
    std::vector<Ray> combos;
    for (std::size_t p : pos) {
      charge(neg.size());
      for (std::size_t q : neg) {
        Bits common = bits_and(rays[p].tight, rays[q].tight);
        if (popcount(common) < target) continue;
        if (!adjacency_rank_reaches(common, cs, target)) continue;
        Ray w;
        w.v = normalize_primitive(vals[p] * rays[q].v - vals[q] * rays[p].v);
        w.tight = std::move(common);
        set_bit(w.tight, ci);
        combos.push_back(std::move(w));
      }
    }
    std::vector<Ray> kept;
    kept.reserve(rays.size() - neg.size() + combos.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (vals[i] >= 0) kept.push_back(std::move(rays[i]));
    }
    for (Ray& w : combos) kept.push_back(std::move(w));
    rays = std::move(kept);
  }

  // Canonicalize: lineality in primitive RREF; rays reduced modulo lineality.
  DDResult result;
  QMatrix lrows(L.begin(), L.end());
  std::vector<std::size_t> pivots = rref_inplace(lrows);
  for (const Ray& r : rays) {
    QVector v = r.v;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (v[pivots[i]] != 0) v = v - v[pivots[i]] * lrows[i];
    }
    if (!v.is_zero()) result.rays.push_back(normalize_primitive(v));
  }
  std::sort(result.rays.begin(), result.rays.end());
  result.rays.erase(std::unique(result.rays.begin(), result.rays.end()),
                    result.rays.end());
  for (const QVector& row : lrows) result.lineality.push_back(normalize_primitive(row));
  return result;
}

}  // namespace symcone
