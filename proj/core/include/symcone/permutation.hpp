#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "symcone/qvector.hpp"

namespace symcone {

// A bijection on {1..n}. Stored 0-based internally; the external (JSON/CLI)
// format is 1-based.
class Permutation {
 public:
  explicit Permutation(std::size_t n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  // images[i] = sigma(i+1), 1-based on both sides.
  static Permutation from_one_based(const std::vector<std::size_t>& images) {
    Permutation p(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] < 1 || images[i] > images.size() || seen[images[i] - 1])
        throw std::invalid_argument("Permutation: images not a bijection");
      seen[images[i] - 1] = true;
      p.img_[i] = images[i] - 1;
    }
    return p;
  }

  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j) {
    // i, j are 1-based.
    Permutation p(n);
    std::swap(p.img_[i - 1], p.img_[j - 1]);
    return p;
  }

  std::size_t n() const { return img_.size(); }
  // sigma(i) for 1-based i.
  std::size_t image(std::size_t i) const { return img_[i - 1] + 1; }

  std::vector<std::size_t> one_based_images() const {
    std::vector<std::size_t> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[i] = img_[i] + 1;
    return v;
  }

  Permutation inverse() const {
    Permutation p(n());
    for (std::size_t i = 0; i < n(); ++i) p.img_[img_[i]] = i;
    return p;
  }

  // (this ∘ other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const {
    if (n() != other.n())
      throw std::invalid_argument("Permutation: size mismatch in compose");
    Permutation p(n());
    for (std::size_t i = 0; i < n(); ++i) p.img_[i] = img_[other.img_[i]];
    return p;
  }

  // sigma(u)_i = u_{sigma^{-1}(i)}, equivalently result[sigma(i)] = u[i].
  QVector apply(const QVector& u) const {
    if (u.dim() != n())
      throw std::invalid_argument("Permutation: dimension mismatch in apply");
    QVector r(n());
    for (std::size_t i = 0; i < n(); ++i) r[img_[i]] = u[i];
    return r;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }

 private:
  std::vector<std::size_t> img_;
};

inline QVector apply_perm(const Permutation& sigma, const QVector& u) {
  return sigma.apply(u);
}

}  // namespace symcone
