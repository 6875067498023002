#include "doctest.h"
#include "uqv/cyclotomic.hpp"

using namespace uqv;

TEST_CASE("power basis reduction") {
  CHECK(CycInt::zeta_pow(3, 3) == CycInt(3, 1));
  CHECK(CycInt::zeta_pow(3, -1) == CycInt::zeta_pow(3, 2));
  // zeta^(r-1) = -(1 + zeta + ... + zeta^(r-2))
  CycInt top = CycInt::zeta_pow(5, 4);
  for (int i = 0; i < 4; ++i) CHECK(top[i] == -1);
  // sum of all r-th roots of unity vanishes
  CycInt s(7);
  for (int e = 0; e < 7; ++e) s += CycInt::zeta_pow(7, e);
  CHECK(s.is_zero());
}

TEST_CASE("cycint ring ops and content") {
  CycInt a = CycInt::zeta_pow(5, 1) + CycInt::zeta_pow(5, 2);
  CycInt b = CycInt::zeta_pow(5, 3);
  CHECK(a * b == CycInt::zeta_pow(5, 4) + CycInt::zeta_pow(5, 5));
  CHECK(a.scaled(6).content() == 6);
  CHECK((a - a).is_zero());
}

TEST_CASE("cycrat reduction and inverse") {
  // frozen: (1 - zeta)^-1 = (2 + zeta)/3 at r = 3
  CycRat h(CycInt(3, 1) - CycInt::zeta_pow(3, 1));
  CycRat hinv = h.inverse();
  CycInt expected_num = CycInt(3, 2) + CycInt::zeta_pow(3, 1);
  CHECK(hinv == CycRat(expected_num, mpz_class(3)));
  CHECK(h * hinv == CycRat(3, 1));
  CHECK(!hinv.is_integral());
  CHECK(h.is_integral());

  CycRat reduced(CycInt(5, 4), mpz_class(6));
  CHECK(reduced.den() == 3);
  CHECK(reduced.num() == CycInt(5, 2));

  for (int e = 1; e < 7; ++e) {
    CycRat z = CycRat::zeta_pow(7, e);
    CHECK(z * z.inverse() == CycRat(7, 1));
  }
  CHECK_THROWS(CycRat(CycInt(3)).inverse());
}

TEST_CASE("reduce_at_zeta is a homomorphism") {
  CycContext ctx(5);
  LaurentPoly p = LaurentPoly::monomial(3, 2) + LaurentPoly::monomial(-1, 7);
  LaurentPoly q = LaurentPoly::monomial(6, -4) + LaurentPoly::one();
  CHECK(reduce_at_zeta(p * q, ctx) == reduce_at_zeta(p, ctx) * reduce_at_zeta(q, ctx));
  CHECK(reduce_at_zeta(p + q, ctx) == reduce_at_zeta(p, ctx) + reduce_at_zeta(q, ctx));
  CHECK(reduce_at_zeta(cyclotomic_phi(5), ctx).is_zero());
}

TEST_CASE("units") {
  CycContext c3(3), c5(5);
  CHECK(is_unit(CycInt::zeta_pow(5, 3)));
  CHECK(is_unit(CycInt(5, -1)));
  CHECK(!is_unit(h_zeta(c3)));
  CHECK(!is_unit(h_zeta(c5)));
  CHECK(!is_unit(CycInt(5, 5)));
  CHECK(!is_unit(CycInt(5)));
  // [2] = zeta + zeta^-1 is a unit for r >= 5
  CHECK(is_unit(CycInt::zeta_pow(5, 1) + CycInt::zeta_pow(5, -1)));
}

TEST_CASE("gauss sums frozen at r = 3") {
  CycContext ctx(3);
  CHECK(gauss_sum(0, ctx) == CycInt(3, 1) + CycInt::zeta_pow(3, 1).scaled(2));
  CHECK(gauss_sum(1, ctx) == CycInt(3, 2) + CycInt::zeta_pow(3, 2));
}

TEST_CASE("h-power division") {
  CycContext ctx(3);
  // r = unit * h^(r-1): 3 / h^2 is integral and a unit at r = 3
  CycRat q = divide_exact_h_zeta(CycRat(3, 3), 2);
  CHECK(q.is_integral());
  CHECK(is_unit(q.num()));
  CycRat partial = divide_exact_h_zeta(CycRat(3, 3), 3);
  CHECK(!partial.is_integral());
}
