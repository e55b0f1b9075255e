#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcone/rational.hpp"

namespace symcone {

enum class SortDirection { NonDecreasing, NonIncreasing };

// Dense exact-rational vector with an explicit ambient dimension.
// Coordinates are 1-based in all external formats; internally 0-based.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t dim) : entries_(dim) {}
  explicit QVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  QVector(std::initializer_list<Rational> entries) : entries_(entries) {}

  static QVector from_ints(const std::vector<long>& v) {
    std::vector<Rational> e(v.begin(), v.end());
    return QVector(std::move(e));
  }
  static QVector unit(std::size_t dim, std::size_t i /* 0-based */) {
    QVector u(dim);
    u[i] = 1;
    return u;
  }
  static QVector ones(std::size_t dim) {
    QVector u(dim);
    for (auto& x : u.entries_) x = 1;
    return u;
  }

  std::size_t dim() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& x : entries_)
      if (x != 0) return false;
    return true;
  }

  bool is_integral() const {
    for (const auto& x : entries_)
      if (!symcone::is_integral(x)) return false;
    return true;
  }

  friend QVector operator+(const QVector& a, const QVector& b) {
    check_dims(a, b);
    QVector r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend QVector operator-(const QVector& a, const QVector& b) {
    check_dims(a, b);
    QVector r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
  }
  friend QVector operator*(const Rational& c, const QVector& a) {
    QVector r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = c * a[i];
    return r;
  }
  friend QVector operator-(const QVector& a) { return Rational(-1) * a; }

  friend bool operator==(const QVector& a, const QVector& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const QVector& a, const QVector& b) { return !(a == b); }
  // Lexicographic order; used for all deterministic set orderings.
  friend bool operator<(const QVector& a, const QVector& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }

  std::string str() const;

 private:
  static void check_dims(const QVector& a, const QVector& b) {
    if (a.dim() != b.dim())
      throw std::invalid_argument("QVector dimension mismatch: " +
                                  std::to_string(a.dim()) + " vs " +
                                  std::to_string(b.dim()));
  }

  std::vector<Rational> entries_;
};

Rational dot(const QVector& a, const QVector& b);

// s(u): the sum of the entries of u.
Rational coordinate_sum(const QVector& u);

// l1 norm: the sum of absolute values of the entries.
Rational l1_norm(const QVector& u);

// 1-based indices of the nonzero entries.
std::set<std::size_t> support(const QVector& u);

// A permutation of u's entries, sorted in the requested direction.
QVector sorted_rep(const QVector& u, SortDirection direction);

// Zero-pad u to dimension n (requires n >= u.dim()).
QVector pad(const QVector& u, std::size_t n);

// Drop trailing coordinates down to dimension n; the dropped tail must be zero.
QVector truncate(const QVector& u, std::size_t n);

// The unique positive scalar multiple of u with coprime integer entries.
QVector normalize_primitive(const QVector& u);

}  // namespace symcone
