#include "uqv/qcomb.hpp"

#include <stdexcept>

namespace uqv {

LaurentPoly qbrace(long n) {
  if (n == 0) return LaurentPoly::zero();
  return LaurentPoly::monomial(n) - LaurentPoly::monomial(-n);
}

LaurentPoly qshifted_brace(long n, long k) {
  if (k < 0) return LaurentPoly::zero();
  LaurentPoly p = LaurentPoly::one();
  for (long j = 1; j <= k; ++j) p *= qbrace(n - k + j);
  return p;
}

LaurentPoly qbrace_factorial(long k) { return qshifted_brace(k, k); }

LaurentPoly qint(long n) {
  // {n}/{1}, exact
  if (n == 0) return LaurentPoly::zero();
  LaurentPoly p;
  long a = n < 0 ? -n : n;
  for (long j = 0; j < a; ++j) p += LaurentPoly::monomial(a - 1 - 2 * j);
  return n < 0 ? -p : p;
}

LaurentPoly qint_factorial(long k) {
  LaurentPoly p = LaurentPoly::one();
  for (long j = 1; j <= k; ++j) p *= qint(j);
  return p;
}

LaurentPoly qbinom(long k, long l) {
  if (k < 0 || l < 0 || k < l) return LaurentPoly::zero();
  // {k;l}/{l}! = [k]!/([l]![k-l]!), divided exactly
  auto q = qshifted_brace(k, l).divide_exact(qbrace_factorial(l));
  if (!q) throw std::logic_error("q-binomial division not exact");
  return *q;
}

CycInt qint_at_zeta(long n, const CycContext& ctx) {
  return reduce_at_zeta(qint(n), ctx);
}

CycInt qint_factorial_at_zeta(long k, const CycContext& ctx) {
  return reduce_at_zeta(qint_factorial(k), ctx);
}

CycInt qbinom_at_zeta(long k, long l, const CycContext& ctx) {
  return reduce_at_zeta(qbinom(k, l), ctx);
}

std::vector<CheckReport> check_qcomb(int r) {
  std::vector<CheckReport> out;
  const std::vector<std::pair<std::string, std::string>> pr = {{"r", std::to_string(r)}};
  auto push = [&](const std::string& check, bool ok, const std::string& w) {
    out.push_back(ok ? CheckReport::pass("qcomb", check, pr)
                     : CheckReport::fail("qcomb", check, w, pr));
  };
  auto wit = [](long n, long k) {
    return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
  };
  const long N = 12;

  {
    bool ok = true;
    std::string w;
    for (long n = 1; n <= N && ok; ++n)
      for (long k = -2; k <= n + 2; ++k) {
        LaurentPoly rhs = qbinom(n - 1, k).shifted(k) + qbinom(n - 1, k - 1).shifted(k - n);
        if (!(qbinom(n, k) == rhs)) {
          ok = false;
          w = wit(n, k);
          break;
        }
      }
    push("pascal-first-form", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (long n = 1; n <= N && ok; ++n)
      for (long k = -2; k <= n + 2; ++k) {
        LaurentPoly rhs = qbinom(n - 1, k).shifted(-k) + qbinom(n - 1, k - 1).shifted(n - k);
        if (!(qbinom(n, k) == rhs)) {
          ok = false;
          w = wit(n, k);
          break;
        }
      }
    push("pascal-second-form", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (long n = 0; n <= N && ok; ++n)
      for (long k = 0; k <= n; ++k) {
        if (!(qbinom(n, k).inverted_variable() == qbinom(n, k)) ||
            !(qbinom(n, k) == qbinom(n, n - k))) {
          ok = false;
          w = wit(n, k);
          break;
        }
      }
    push("binomial-symmetry", ok, w);
  }
  {
    bool ok = qbinom(3, -1).is_zero() && qbinom(-1, 0).is_zero() && qbinom(3, 5).is_zero() &&
              qshifted_brace(4, -2).is_zero() && qbinom(0, 0) == LaurentPoly::one();
    push("boundary-conventions", ok, "convention violated");
  }
  {
    bool ok = true;
    std::string w;
    for (long k = 0; k <= N && ok; ++k) {
      LaurentPoly lhs = qint_factorial(k) * qbrace(1).pow((unsigned long)k);
      if (!(lhs == qbrace_factorial(k))) {
        ok = false;
        w = "k=" + std::to_string(k);
      }
    }
    push("factorial-consistency", ok, w);
  }
  {
    CycContext ctx(r);
    bool ok = true;
    std::string w;
    for (long n = 1; n <= r - 1 && ok; ++n)
      if (!is_unit(qint_at_zeta(n, ctx))) {
        ok = false;
        w = "n=" + std::to_string(n);
      }
    if (ok && !qint_at_zeta(r, ctx).is_zero()) {
      ok = false;
      w = "[r] != 0";
    }
    push("quantum-integer-units", ok, w);
  }
  return out;
}

}  // namespace uqv
