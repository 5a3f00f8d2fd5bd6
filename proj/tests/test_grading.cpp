#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gradsk/grading.hpp"

using namespace gradsk;

TEST_CASE("right-to-left lex order") {
  CHECK(lex_compare({1, 0}, {0, 1}) < 0);
  CHECK(lex_compare({3, -2}, {3, -2}) == 0);
  CHECK(lex_compare({0, -1}, {0, 0}) < 0);
  CHECK_THROWS_AS(lex_compare({1}, {1, 2}), Error);
}

TEST_CASE("lex order is a total order compatible with addition") {
  std::mt19937_64 rng(5);
  auto rv = [&]() {
    Vec v(3);
    for (auto& x : v) x = Int(static_cast<long>(rng() % 11) - 5);
    return v;
  };
  for (int t = 0; t < 300; ++t) {
    Vec a = rv(), b = rv(), c = rv();
    int ab = lex_compare(a, b);
    CHECK(ab == -lex_compare(b, a));
    if (ab < 0) CHECK(lex_compare(vec_add(a, c), vec_add(b, c)) < 0);
    if (ab == 0) CHECK(a == b);
    // transitivity spot check
    if (ab < 0 && lex_compare(b, c) < 0) CHECK(lex_compare(a, c) < 0);
  }
}

TEST_CASE("lattice quotients") {
  GradeLattice z2 = GradeLattice::full(2);
  CHECK(quotient_lattice(z2, z2).is_trivial());

  GradeLattice l = GradeLattice::scaled({2, 4});
  FGAbGroup q = quotient_lattice(z2, l);
  CHECK(q.invariant_factors() == Vec{2, 4});
  CHECK(lattice_index(z2, l) == 8);

  // toex shape: r = (4,4) gives (Z/4)^4
  GradeLattice z4amb = GradeLattice::full(4);
  GradeLattice center = GradeLattice::scaled({4, 4, 4, 4});
  CHECK(quotient_lattice(z4amb, center).invariant_factors() ==
        Vec{4, 4, 4, 4});

  CHECK_THROWS_AS(quotient_lattice(l, z2), Error);  // not a sublattice

  // infinite index shows up as a free factor
  GradeLattice line(2, IntMatrix{{1, 0}});
  FGAbGroup qi = quotient_lattice(z2, line);
  CHECK(!qi.finite());
  CHECK(lattice_index(z2, line) == 0);
}

TEST_CASE("index is multiplicative in towers") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    auto d = [&]() { return Int(1 + static_cast<long>(rng() % 3)); };
    Vec d1{d(), d()}, d2{d(), d()};
    GradeLattice ge = GradeLattice::full(2);
    GradeLattice gt = GradeLattice::scaled({d1[0], d1[1]});
    GradeLattice gr(2, IntMatrix{{d1[0] * d2[0], 0}, {0, d1[1] * d2[1]}});
    CHECK(gt.contains_lattice(gr));
    CHECK(lattice_index(ge, gr) ==
          lattice_index(ge, gt) * lattice_index(gt, gr));
  }
}

TEST_CASE("fundamental equality bookkeeping") {
  GradeLattice z2 = GradeLattice::full(2);
  CHECK(fundamental_equality_check(4, 4, z2, z2));  // unramified

  // totally ramified quaternion shape: dim 4 = 1 * 4
  GradeLattice center = GradeLattice::scaled({2, 2});
  GradeLattice whole = GradeLattice::full(2);
  CHECK(lattice_index(whole, center) == 4);
  CHECK(fundamental_equality_check(4, 1, whole, center));
  CHECK(!fundamental_equality_check(16, 1, whole, center));

  // two quaternion factors: dim 16 = 1 * 16
  GradeLattice c4 = GradeLattice::scaled({2, 2, 2, 2});
  CHECK(fundamental_equality_check(16, 1, GradeLattice::full(4), c4));

  GradeLattice line(2, IntMatrix{{1, 0}});
  CHECK_THROWS_AS(fundamental_equality_check(1, 1, z2, line), Error);
}

TEST_CASE("canonical bases") {
  // two generating sets of the same lattice compare equal
  GradeLattice a(2, IntMatrix{{2, 0}, {0, 3}, {2, 3}});
  GradeLattice b(2, IntMatrix{{2, 3}, {2, 0}, {0, 3}});
  CHECK(a == b);
  CHECK(a.rank() == 2);
  CHECK(a.contains({4, 3}));
  CHECK(!a.contains({1, 0}));
}
