#include "symcone/orbit.hpp"

#include <algorithm>
#include <map>

namespace symcone {

std::vector<QVector> orbit(const QVector& u, std::size_t n) {
  QVector padded = pad(u, n);
  std::vector<Rational> e = padded.entries();
  std::sort(e.begin(), e.end());
  std::vector<QVector> result;
  // std::next_permutation over a sorted multiset yields each distinct
  // permutation exactly once, in lexicographic order.
  do {
    result.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return result;
}

Integer orbit_size(const QVector& u, std::size_t n) {
  QVector padded = pad(u, n);
  std::map<Rational, std::size_t> mult;
  for (std::size_t i = 0; i < n; ++i) ++mult[padded[i]];
  Integer fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= i;
  for (const auto& [value, m] : mult) {
    Integer f = 1;
    for (std::size_t i = 2; i <= m; ++i) f *= i;
    fact /= f;
  }
  return fact;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i + 1;
  std::vector<Permutation> result;
  do {
    result.push_back(Permutation::from_one_based(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

}  // namespace symcone
