#include "doctest.h"
#include "uqv/qcomb.hpp"

using namespace uqv;

namespace {
bool all_pass(const std::vector<CheckReport>& reps) {
  for (const auto& r : reps)
    if (r.status != CheckReport::Status::Pass) return false;
  return !reps.empty();
}
}  // namespace

TEST_CASE("frozen small values") {
  CHECK(qbrace(2) == LaurentPoly::monomial(2) - LaurentPoly::monomial(-2));
  CHECK(qbrace(0).is_zero());
  CHECK(qint(1) == LaurentPoly::one());
  CHECK(qint(3) ==
        LaurentPoly::monomial(2) + LaurentPoly::one() + LaurentPoly::monomial(-2));
  CHECK(qbinom(2, 1) == LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
  CHECK(qbinom(4, 2) == LaurentPoly::monomial(4) + LaurentPoly::monomial(2) +
                            LaurentPoly(2) + LaurentPoly::monomial(-2) +
                            LaurentPoly::monomial(-4));
  CHECK(qbinom(5, 0) == LaurentPoly::one());
  CHECK(qbinom(5, 5) == LaurentPoly::one());
}

TEST_CASE("conventions outside the triangle") {
  CHECK(qbinom(3, -1).is_zero());
  CHECK(qbinom(-2, 1).is_zero());
  CHECK(qbinom(2, 3).is_zero());
  CHECK(qshifted_brace(4, -1).is_zero());
}

TEST_CASE("factorials") {
  CHECK(qbrace_factorial(0) == LaurentPoly::one());
  CHECK(qbrace_factorial(3) == qbrace(1) * qbrace(2) * qbrace(3));
  CHECK(qint_factorial(3) == qint(1) * qint(2) * qint(3));
  // {n;k} = {n}{n-1}...{n-k+1}
  CHECK(qshifted_brace(5, 2) == qbrace(5) * qbrace(4));
  CHECK(qshifted_brace(5, 0) == LaurentPoly::one());
}

TEST_CASE("classical specialization at q = 1") {
  CHECK(qbinom(6, 2).eval_at_one() == 15);
  CHECK(qbinom(7, 3).eval_at_one() == 35);
  CHECK(qint(5).eval_at_one() == 5);
}

TEST_CASE("values at zeta") {
  CycContext ctx(5);
  CHECK(qint_at_zeta(5, ctx).is_zero());
  CHECK(qbinom_at_zeta(6, 2, ctx) == reduce_at_zeta(qbinom(6, 2), ctx));
  CHECK(qint_factorial_at_zeta(4, ctx) == reduce_at_zeta(qint_factorial(4), ctx));
}

TEST_CASE("identity suite") {
  CHECK(all_pass(check_qcomb(3)));
  CHECK(all_pass(check_qcomb(5)));
  CHECK(all_pass(check_qcomb(7)));
}
