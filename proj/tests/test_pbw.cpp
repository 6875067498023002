#include "doctest.h"
#include "uqv/pbw.hpp"
#include "uqv/qcomb.hpp"

using namespace uqv;

namespace {

AlgElem gen_e(const UqAlgebra& A) {
  AlgElem x = A.zero();
  for (int m = 0; m < A.r(); ++m) x.add({PBWMono{1, m, 0}}, CycRat(A.r(), 1));
  return x;
}

AlgElem gen_f(const UqAlgebra& A, int pow = 1) {
  AlgElem x = A.zero();
  for (int m = 0; m < A.r(); ++m) x.add({PBWMono{0, m, pow}}, CycRat(A.r(), 1));
  return x;
}

AlgElem idem(const UqAlgebra& A, int m) {
  return AlgElem::mono(A.r(), {PBWMono{0, ((m % A.r()) + A.r()) % A.r(), 0}},
                       CycRat(A.r(), 1));
}

bool all_pass(const std::vector<CheckReport>& reps) {
  for (const auto& r : reps)
    if (r.status != CheckReport::Status::Pass) return false;
  return !reps.empty();
}

}  // namespace

TEST_CASE("defining relations") {
  for (int r : {3, 5}) {
    UqAlgebra A(r);
    AlgElem E = gen_e(A), F = gen_f(A);
    AlgElem K = A.k_power(1), Ki = A.k_power(-1);

    CHECK(A.multiply(E, F) - A.multiply(F, E) == K - Ki);
    CHECK(A.multiply(A.multiply(K, E), Ki) == E.scaled(A.zeta(2)));
    CHECK(A.multiply(A.multiply(K, F), Ki) == F.scaled(A.zeta(-2)));
    CHECK(A.multiply(K, A.k_power(r - 1)) == A.one());
    CHECK(A.power(E, r).is_zero());
    CHECK(A.power(F, r).is_zero());
  }
}

TEST_CASE("idempotents") {
  UqAlgebra A(5);
  AlgElem sum = A.zero();
  for (int m = 0; m < 5; ++m) {
    sum = sum + idem(A, m);
    for (int n = 0; n < 5; ++n) {
      AlgElem p = A.multiply(idem(A, m), idem(A, n));
      if (m == n) CHECK(p == idem(A, m));
      else CHECK(p.is_zero());
    }
  }
  CHECK(sum == A.one());
  // K in terms of idempotents
  AlgElem k = A.zero();
  for (int m = 0; m < 5; ++m) k = k + idem(A, m).scaled(A.zeta(-2 * m));
  CHECK(k == A.k_power(1));
}

TEST_CASE("divided powers") {
  UqAlgebra A(5);
  CycContext ctx(5);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      AlgElem p = A.multiply(gen_f(A, a), gen_f(A, b));
      if (a + b < 5)
        CHECK(p == gen_f(A, a + b).scaled(CycRat(qbinom_at_zeta(a + b, a, ctx))));
      else
        CHECK(p.is_zero());
    }
}

TEST_CASE("counit antipode coproduct spot values") {
  UqAlgebra A(5);
  AlgElem E = gen_e(A), F = gen_f(A);
  CHECK(A.counit(E).is_zero());
  CHECK(A.counit(F).is_zero());
  CHECK(A.counit(idem(A, 0)) == CycRat(5, 1));
  CHECK(A.counit(idem(A, 2)).is_zero());
  CHECK(A.counit(A.one()) == CycRat(5, 1));

  CHECK(A.antipode(E) == A.multiply(E, A.k_power(-1)).scaled(CycRat(5, -1)));
  CHECK(A.antipode(F) == A.multiply(A.k_power(1), F).scaled(CycRat(5, -1)));
  CHECK(A.antipode(idem(A, 2)) == idem(A, -2));

  // Delta(E) = E (x) K + 1 (x) E
  AlgElem dE = A.coproduct(E);
  AlgElem K = A.k_power(1), unit = A.one();
  AlgElem expect(5, 2);
  for (const auto& [w, c] : E.terms())
    for (const auto& [w2, c2] : K.terms()) expect.add({w[0], w2[0]}, c * c2);
  for (const auto& [w, c] : unit.terms())
    for (const auto& [w2, c2] : E.terms()) expect.add({w[0], w2[0]}, c * c2);
  CHECK(dE == expect);
}

TEST_CASE("rescaled integral frozen values") {
  UqAlgebra A(5);
  for (int m = 0; m < 5; ++m) {
    CycRat v = A.integral_lambda_rescaled(
        AlgElem::mono(5, {PBWMono{4, m, 4}}, CycRat(5, 1)));
    CHECK(v == A.zeta(-2 * (m - 4)));
    CHECK(A.integral_lambda_rescaled(
               AlgElem::mono(5, {PBWMono{3, m, 4}}, CycRat(5, 1)))
              .is_zero());
  }
  CHECK(A.cointegral_rescaled() ==
        AlgElem::mono(5, {PBWMono{4, 4, 4}}, CycRat(5, 1)));
}

TEST_CASE("hopf and ribbon suites at r = 3") {
  CHECK(all_pass(check_hopf(3)));
  CHECK(all_pass(check_quasitriangular(3)));
  CHECK(all_pass(check_ribbon(3)));
  CHECK(all_pass(check_integral(3)));
  CHECK(UqAlgebra(3).drinfeld_check().status == CheckReport::Status::Pass);
}
