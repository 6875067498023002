#include <random>

#include "doctest.h"
#include "rewrite_oracle.hpp"

using namespace uqv;
using uqv_oracle::oracle_product;

TEST_CASE("oracle agrees on hand-checkable products") {
  UqAlgebra A(3);
  // 1_m 1_n
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n) {
      AlgElem o = oracle_product(3, {0, m, 0}, {0, n, 0});
      if (m == n) CHECK(o == AlgElem::mono(3, {PBWMono{0, m, 0}}, CycRat(3, 1)));
      else CHECK(o.is_zero());
    }
  // nilpotency inside an idempotent
  CHECK(oracle_product(3, {2, 0, 0}, {1, 0, 0}).is_zero());
  CHECK(oracle_product(3, {0, 1, 2}, {0, 1, 1}).is_zero());
  // divided-power recombination: F^(1) F^(1) = [2] F^(2)
  AlgElem ff = oracle_product(3, {0, 0, 1}, {0, 1, 1});
  AlgElem viaA = UqAlgebra(3).mono_product({0, 0, 1}, {0, 1, 1});
  CHECK(ff == viaA);
}

TEST_CASE("500 random basis products match the straightening oracle") {
  const int r = 3;
  UqAlgebra A(r);
  std::mt19937 rng(987654321u);
  std::uniform_int_distribution<int> d(0, r - 1);
  for (int trial = 0; trial < 500; ++trial) {
    PBWMono u{d(rng), d(rng), d(rng)};
    PBWMono v{d(rng), d(rng), d(rng)};
    AlgElem lhs = A.mono_product(u, v);
    AlgElem rhs = oracle_product(r, u, v);
    CHECK_MESSAGE(lhs == rhs, mono_str(u), " * ", mono_str(v));
  }
}

TEST_CASE("oracle also holds at r = 5 on a smaller sample") {
  const int r = 5;
  UqAlgebra A(r);
  std::mt19937 rng(13579u);
  std::uniform_int_distribution<int> d(0, r - 1);
  for (int trial = 0; trial < 40; ++trial) {
    PBWMono u{d(rng), d(rng), d(rng)};
    PBWMono v{d(rng), d(rng), d(rng)};
    CHECK(A.mono_product(u, v) == oracle_product(r, u, v));
  }
}
