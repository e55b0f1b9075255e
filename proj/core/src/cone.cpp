#include "symcone/cone.hpp"

#include <algorithm>

#include "symcone/double_description.hpp"
#include "symcone/linalg.hpp"
#include "symcone/simplex_lp.hpp"

namespace symcone {

struct Cone::Cache {
  std::mutex mutex;
  std::optional<std::vector<QVector>> facets;
  std::optional<std::vector<QVector>> lineality;
};

namespace {

// Generator list of the cone described by a DD run: extreme rays plus +/-
// pairs spanning the lineality space.
std::vector<QVector> generators_of(const DDResult& dd) {
  std::vector<QVector> gens = dd.rays;
  for (const QVector& l : dd.lineality) {
    gens.push_back(l);
    gens.push_back(normalize_primitive(-l));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

}  // namespace

Cone Cone::from_rays(std::size_t dim, std::vector<QVector> rays) {
  Cone c;
  c.dim_ = dim;
  c.cache_ = std::make_shared<Cache>();
  for (const auto& r : rays) {
    if (r.dim() != dim)
      throw std::invalid_argument("Cone::from_rays: ray dim mismatch");
    if (!r.is_zero()) c.rays_.push_back(normalize_primitive(r));
  }
  std::sort(c.rays_.begin(), c.rays_.end());
  c.rays_.erase(std::unique(c.rays_.begin(), c.rays_.end()), c.rays_.end());
  return c;
}

Cone Cone::full_space(std::size_t dim) {
  std::vector<QVector> rays;
  for (std::size_t i = 0; i < dim; ++i) {
    rays.push_back(QVector::unit(dim, i));
    rays.push_back(-QVector::unit(dim, i));
  }
  return from_rays(dim, std::move(rays));
}

const std::vector<QVector>& Cone::facets() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->facets) {
    cache_->facets = generators_of(double_description(dim_, rays_));
  }
  return *cache_->facets;
}

const std::vector<QVector>& Cone::lineality_basis() const {
  const std::vector<QVector>& fs = facets();
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->lineality) {
    // lin(C) = {x : <f,x> = 0 for every facet normal f}.
    cache_->lineality = nullspace(QMatrix(fs.begin(), fs.end()), dim_);
  }
  return *cache_->lineality;
}

bool Cone::contains(const QVector& u) const {
  if (u.dim() != dim_)
    throw std::invalid_argument("Cone::contains: dim mismatch");
  for (const QVector& f : facets()) {
    if (dot(f, u) < 0) return false;
  }
  return true;
}

std::optional<MembershipWitness> Cone::witness(const QVector& u) const {
  if (!contains(u)) return std::nullopt;
  auto x = nonnegative_solve(rays_, u);
  if (!x) return std::nullopt;  // defensive; contains() already said yes
  MembershipWitness w;
  for (std::size_t j = 0; j < rays_.size(); ++j) {
    if ((*x)[j] != 0) w.coefficients.emplace_back(rays_[j], (*x)[j]);
  }
  return w;
}

Cone cone_from_constraints(std::size_t dim,
                           const std::vector<QVector>& constraints) {
  return Cone::from_rays(dim, generators_of(double_description(dim, constraints)));
}

Cone dual(const Cone& c) {
  return Cone::from_rays(c.dim(),
                         generators_of(double_description(c.dim(), c.rays())));
}

bool double_dual_check(const Cone& c) { return equals(dual(dual(c)), c); }

Cone intersect(const Cone& c, const Cone& d) {
  if (c.dim() != d.dim())
    throw std::invalid_argument("intersect: dim mismatch");
  std::vector<QVector> constraints = c.facets();
  const auto& df = d.facets();
  constraints.insert(constraints.end(), df.begin(), df.end());
  return Cone::from_rays(c.dim(),
                         generators_of(double_description(c.dim(), constraints)));
}

Cone ordered_slice(const Cone& c) {
  std::vector<QVector> constraints = c.facets();
  for (std::size_t i = 0; i + 1 < c.dim(); ++i) {
    QVector g(c.dim());
    g[i] = -1;
    g[i + 1] = 1;
    constraints.push_back(std::move(g));
  }
  return Cone::from_rays(c.dim(),
                         generators_of(double_description(c.dim(), constraints)));
}

bool equals(const Cone& c, const Cone& d) {
  if (c.dim() != d.dim()) return false;
  for (const QVector& r : c.rays())
    if (!d.contains(r)) return false;
  for (const QVector& r : d.rays())
    if (!c.contains(r)) return false;
  return true;
}

MinimalGenerators minimal_generators(const Cone& c) {
  DDResult dd = double_description(c.dim(), c.facets());
  MinimalGenerators mg;
  mg.pointed = dd.lineality.empty();
  mg.lineality = dd.lineality;
  mg.extreme_rays = dd.rays;
  return mg;
}

Cone canonicalize(const Cone& c) {
  return Cone::from_rays(c.dim(),
                         generators_of(double_description(c.dim(), c.facets())));
}

}  // namespace symcone
