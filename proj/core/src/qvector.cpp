#include "symcone/qvector.hpp"

#include <algorithm>
#include <sstream>

namespace symcone {

std::string QVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational coordinate_sum(const QVector& u) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i];
  return s;
}

Rational l1_norm(const QVector& u) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += abs_q(u[i]);
  return s;
}

std::set<std::size_t> support(const QVector& u) {
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (u[i] != 0) s.insert(i + 1);
  return s;
}

QVector sorted_rep(const QVector& u, SortDirection direction) {
  std::vector<Rational> e = u.entries();
  if (direction == SortDirection::NonDecreasing)
    std::sort(e.begin(), e.end());
  else
    std::sort(e.begin(), e.end(), std::greater<Rational>());
  return QVector(std::move(e));
}

QVector pad(const QVector& u, std::size_t n) {
  if (n < u.dim())
    throw std::invalid_argument("pad: target dimension smaller than input");
  QVector r(n);
  for (std::size_t i = 0; i < u.dim(); ++i) r[i] = u[i];
  return r;
}

QVector truncate(const QVector& u, std::size_t n) {
  if (n > u.dim())
    throw std::invalid_argument("truncate: target dimension larger than input");
  for (std::size_t i = n; i < u.dim(); ++i)
    if (u[i] != 0)
      throw std::invalid_argument("truncate: nonzero entry beyond position " +
                                  std::to_string(n));
  QVector r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = u[i];
  return r;
}

QVector normalize_primitive(const QVector& u) {
  if (u.is_zero())
    throw std::invalid_argument("normalize_primitive: zero vector");
  // Clear denominators, then divide by the gcd of the numerators.
  Integer lcm_den = 1;
  for (std::size_t i = 0; i < u.dim(); ++i)
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(u[i]));
  Integer g = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Integer num = numerator(u[i]) * (lcm_den / denominator(u[i]));
    g = boost::multiprecision::gcd(g, num);
  }
  Rational scale = Rational(lcm_den) / Rational(g);
  QVector r(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) r[i] = u[i] * scale;
  return r;
}

}  // namespace symcone
