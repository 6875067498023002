#pragma once

#include <vector>

#include "uqv/cyclotomic.hpp"
#include "uqv/laurent.hpp"
#include "uqv/report.hpp"

namespace uqv {

// Polynomial families of the appendices, as exact Laurent polynomials.
//   A_{l,m,n} = sum_k (-1)^k q^(k(m-n+1)) [n k] [k+l m]      (l,m,n >= 0, m <= n+l)
//   B_n      = sum_k (-1)^k q^(-k(n-5)) [n k]
//   C_{m,n}  = sum_k (-1)^k q^(k(2k+m-n)) [n k]
//   D_{m,n}  = sum_k (-1)^k q^(-k(2k+4m+n+1)) [n k] C_{-4k-2m-1,m}(q^-1)
//   E_{m1,m2,n1,n2} = double alternating sum with exponent 2(k1-k2)^2 + ...
//   P_{l,m,n} and Q_{l,m1,m2,n1,n2}: classical-binomial analogues weighted by
//   the integers c(k,m-n) resp. e(k1,k2,m1-n1,m2-n2).
LaurentPoly family_A(long l, long m, long n);
LaurentPoly family_B(long n);
LaurentPoly family_C(long m, long n);
LaurentPoly family_D(long m, long n);
LaurentPoly family_E(long m1, long m2, long n1, long n2);
LaurentPoly family_P(long l, long m, long n);
LaurentPoly family_Q(long l, long m1, long m2, long n1, long n2);

// c(l,m) = l(2l+m);  e(l1,l2,m1,m2) = c(l1,m1) + c(l2,m2) - 4 l1 l2
long weight_c(long l, long m);
long weight_e(long l1, long l2, long m1, long m2);

// Classical binomial, zero outside 0 <= k <= n.
mpz_class binom_z(long n, long k);

// Exhaustive parameter bounds for the identity suites.
struct AppendixConfig {
  long range_a = 8;
  long range_b = 12;
  long range_c = 12;   // |m| bound; n runs to range_c - 2
  long range_d = 8;
  long range_e = 6;    // n bounds; |m| bounds = range_e + 2
  long range_p = 6;
  long range_q = 4;
  long div_c = 0;      // 0 = use 2r
  long div_d = 0;      // 0 = use r + 2

  static AppendixConfig defaults(int r);
};

// Recurrences, closed forms, derivative links, weight identities, values at
// q = 1, and the h(q)-divisibility statements, over the configured ranges.
std::vector<CheckReport> check_appendix_families(int r, const AppendixConfig& cfg);

// D_{r-m-1,n}(zeta) = 0 for 0 <= m < n <= r-1.
CheckReport check_vanishing_D(int r);

// Gauss sum identities and h(zeta)-unit quotients in Z[zeta].
std::vector<CheckReport> check_gauss_and_h(int r);

// The floor-function inequalities used by the divisibility bookkeeping:
//   floor(n/2) - floor((n-k)/2) <= floor((k+1)/2)
//   floor((n+k)/2) - floor(n/2) + floor((r-k)/2) >= (r-1)/2
//   floor((n1+n2)/2) - floor((n1+n2-k1-k2)/2) <= floor((k1+k2+1)/2)
std::vector<CheckReport> check_floor_inequalities(int r);

}  // namespace uqv
