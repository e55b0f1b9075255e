#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "symcone/orbit.hpp"
#include "symcone/permutation.hpp"
#include "symcone/qvector.hpp"
#include "symcone/rational.hpp"

using namespace symcone;

TEST_CASE("rational helpers: floor, ceil, sign, integrality") {
  CHECK(floor_q(Rational(7, 2)) == 3);
  CHECK(floor_q(Rational(-7, 2)) == -4);
  CHECK(floor_q(Rational(-4)) == -4);
  CHECK(ceil_q(Rational(7, 2)) == 4);
  CHECK(ceil_q(Rational(-7, 2)) == -3);
  CHECK(sign_q(Rational(-1, 3)) == -1);
  CHECK(sign_q(Rational(0)) == 0);
  CHECK(sign_q(Rational(5)) == 1);
  CHECK(is_integral(Rational(6, 3)));
  CHECK(!is_integral(Rational(1, 2)));
  CHECK(abs_q(Rational(-3, 4)) == Rational(3, 4));
}

TEST_CASE("coordinate_sum and l1_norm") {
  CHECK(coordinate_sum(QVector{-2, -1, 4}) == 1);
  CHECK(coordinate_sum(QVector{0, 0, 0}) == 0);
  CHECK(coordinate_sum(QVector{1, -1}) == 0);
  CHECK(l1_norm(QVector{-1, 2}) == 3);
  CHECK(l1_norm(QVector{0, 0, 0, 0}) == 0);
  CHECK(l1_norm(QVector{-1, 1, 1}) == 3);
}

TEST_CASE("support uses 1-based indices") {
  CHECK(support(QVector{0, 3, 0, -1}) == std::set<std::size_t>{2, 4});
  CHECK(support(QVector{0, 0}).empty());
  CHECK(support(QVector{-3, 1, 3, 0, 0, 0}) == std::set<std::size_t>{1, 2, 3});
}

TEST_CASE("sorted_rep in both directions, idempotent") {
  CHECK(sorted_rep(QVector{3, 1, 2}, SortDirection::NonDecreasing) ==
        QVector{1, 2, 3});
  CHECK(sorted_rep(QVector{1, 1, 1}, SortDirection::NonDecreasing) ==
        QVector{1, 1, 1});
  CHECK(sorted_rep(QVector{1, 1, 1}, SortDirection::NonIncreasing) ==
        QVector{1, 1, 1});
  CHECK(sorted_rep(QVector{-2, -1, 4}, SortDirection::NonIncreasing) ==
        QVector{4, -1, -2});
  QVector once = sorted_rep(QVector{5, -3, 0, 2}, SortDirection::NonDecreasing);
  CHECK(sorted_rep(once, SortDirection::NonDecreasing) == once);
}

TEST_CASE("pad and truncate round trip; truncate guards nonzero tails") {
  CHECK(pad(QVector{1, 2}, 4) == QVector{1, 2, 0, 0});
  CHECK(truncate(QVector{1, 2, 0, 0}, 2) == QVector{1, 2});
  CHECK(truncate(pad(QVector{1, 2}, 5), 2) == QVector{1, 2});
  CHECK_THROWS_AS((void)truncate(QVector{1, 2, 3}, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)pad(QVector{1, 2, 3}, 2), std::invalid_argument);
}

TEST_CASE("normalize_primitive: gcd division, denominators, sign") {
  CHECK(normalize_primitive(QVector{2, 4, -6}) == QVector{1, 2, -3});
  CHECK(normalize_primitive(QVector{Rational(1, 2), Rational(3, 2)}) ==
        QVector{1, 3});
  CHECK(normalize_primitive(QVector{-5, 0, 0}) == QVector{-1, 0, 0});
  CHECK_THROWS_AS((void)normalize_primitive(QVector{0, 0}),
                  std::invalid_argument);
  // Invariant under positive scaling.
  for (long num = 1; num <= 5; ++num) {
    Rational lambda(num, 3);
    CHECK(normalize_primitive(lambda * QVector{6, -9, 3}) ==
          normalize_primitive(QVector{6, -9, 3}));
  }
}

TEST_CASE("permutation action follows result_i = u_{sigma^{-1}(i)}") {
  Permutation id(3);
  CHECK(apply_perm(id, QVector{5, 6, 7}) == QVector{5, 6, 7});
  Permutation swap12 = Permutation::transposition(2, 1, 2);
  CHECK(apply_perm(swap12, QVector{1, -1}) == QVector{-1, 1});
  Permutation cyc = Permutation::from_one_based({2, 3, 1});
  CHECK(apply_perm(cyc, QVector{10, 20, 30}) == QVector{30, 10, 20});
}

TEST_CASE("permutation group structure: compose, inverse, validation") {
  Permutation a = Permutation::from_one_based({2, 3, 1});
  Permutation b = Permutation::from_one_based({1, 3, 2});
  QVector u{7, 11, 13};
  CHECK(apply_perm(a.compose(b), u) == apply_perm(a, apply_perm(b, u)));
  CHECK(a.compose(a.inverse()) == Permutation(3));
  CHECK(a.inverse().compose(a) == Permutation(3));
  CHECK_THROWS_AS(Permutation::from_one_based({1, 1, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_based({0, 1, 2}),
                  std::invalid_argument);
}

TEST_CASE("orbit enumerates distinct multiset permutations in lex order") {
  auto o = orbit(QVector{1, 1, 0}, 3);
  CHECK(o == std::vector<QVector>{QVector{0, 1, 1}, QVector{1, 0, 1},
                                  QVector{1, 1, 0}});
  CHECK(orbit(QVector{1, -1}, 2) ==
        std::vector<QVector>{QVector{-1, 1}, QVector{1, -1}});
  auto big = orbit(QVector{-1, 2}, 4);
  CHECK(big.size() == 12);
  CHECK(std::is_sorted(big.begin(), big.end()));
  CHECK(std::set<QVector>(big.begin(), big.end()).size() == big.size());
}

TEST_CASE("orbit_size matches both the multinomial and exhaustive counts") {
  CHECK(orbit_size(QVector{-1, 2}, 4) == 12);
  CHECK(orbit_size(QVector{-2, -1, 4}, 6) == 120);
  CHECK(orbit_size(QVector{1, 1, 0}, 3) == 3);
  for (const QVector& u :
       {QVector{1, 0, 2}, QVector{1, 1, -1}, QVector{0, 0, 3}}) {
    std::set<QVector> images;
    for (const Permutation& sigma : all_permutations(4))
      images.insert(apply_perm(sigma, pad(u, 4)));
    CHECK(Integer(images.size()) == orbit_size(u, 4));
    auto o = orbit(u, 4);
    CHECK(std::vector<QVector>(images.begin(), images.end()) == o);
  }
}

TEST_CASE("seeded invariance properties of the group action") {
  std::mt19937_64 rng(20260823);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 2 + static_cast<std::size_t>(t % 5);
    QVector u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = entry(rng);
    std::vector<std::size_t> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::shuffle(im.begin(), im.end(), rng);
    Permutation sigma = Permutation::from_one_based(im);
    CHECK(coordinate_sum(apply_perm(sigma, u)) == coordinate_sum(u));
    CHECK(l1_norm(apply_perm(sigma, u)) == l1_norm(u));
    CHECK(sorted_rep(apply_perm(sigma, u), SortDirection::NonDecreasing) ==
          sorted_rep(u, SortDirection::NonDecreasing));
  }
}
