#include "doctest.h"
#include "uqv/appendix.hpp"
#include "uqv/qcomb.hpp"

using namespace uqv;

namespace {
bool no_fail(const std::vector<CheckReport>& reps) {
  for (const auto& r : reps)
    if (r.status == CheckReport::Status::Fail) return false;
  return !reps.empty();
}
}  // namespace

TEST_CASE("frozen family values") {
  // B_1 = 1 - q^4
  CHECK(family_B(1) == LaurentPoly::one() - LaurentPoly::monomial(4));
  CHECK(family_B(0) == LaurentPoly::one());
  // C_{m,0} = 1, C_{m,1} = 1 - q^(m+1)
  CHECK(family_C(7, 0) == LaurentPoly::one());
  CHECK(family_C(3, 1) == LaurentPoly::one() - LaurentPoly::monomial(4));
  // A with n = 0 collapses to a single binomial
  CHECK(family_A(4, 2, 0) == qbinom(4, 2));
  // P_{1,m,1} = -(m+1) q^(m+1)
  CHECK(family_P(1, 3, 1) == LaurentPoly::monomial(4, -4));
  CHECK(family_P(0, 5, 0) == LaurentPoly::one());
}

TEST_CASE("weights") {
  CHECK(weight_c(0, 9) == 0);
  CHECK(weight_c(2, 3) == 14);
  CHECK(weight_e(1, 1, 0, 0) == 0);
  CHECK(weight_e(2, 1, 3, -1) == weight_c(2, 3) + weight_c(1, -1) - 8);
  CHECK(binom_z(6, 2) == 15);
  CHECK(binom_z(4, 5) == 0);
  CHECK(binom_z(4, -1) == 0);
}

TEST_CASE("identity suite over reduced ranges") {
  AppendixConfig cfg;
  cfg.range_a = 5;
  cfg.range_b = 8;
  cfg.range_c = 8;
  cfg.range_d = 5;
  cfg.range_e = 4;
  cfg.range_p = 5;
  cfg.range_q = 3;
  cfg.div_c = 6;
  cfg.div_d = 5;
  CHECK(no_fail(check_appendix_families(3, cfg)));
}

TEST_CASE("vanishing of D at the root of unity") {
  for (int r : {3, 5, 7})
    CHECK(check_vanishing_D(r).status == CheckReport::Status::Pass);
  // spot witnesses at r = 5: inside and outside the vanishing triangle
  CycContext ctx(5);
  CHECK(reduce_at_zeta(family_D(3, 3), ctx).is_zero());
  CHECK(!reduce_at_zeta(family_D(2, 2), ctx).is_zero());
}

TEST_CASE("gauss and h identities") {
  for (int r : {3, 5, 7}) CHECK(no_fail(check_gauss_and_h(r)));
}

TEST_CASE("floor inequalities") {
  for (int r : {3, 5}) CHECK(no_fail(check_floor_inequalities(r)));
}
