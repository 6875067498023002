#pragma once

#include <vector>

#include "uqv/cyclotomic.hpp"
#include "uqv/laurent.hpp"
#include "uqv/report.hpp"

namespace uqv {

// Quantum combinatorics in Z[q, q^-1]:
//   {n}   = q^n - q^-n
//   {n;k} = prod_{j=1}^k {n-k+j}
//   {k}!  = {k;k}
//   [n]   = {n}/{1}
//   [k]!  = prod_{j=1}^k [j]
//   [k l] = [k]!/([l]![k-l]!)
// with {n;k} = [k l] = 0 whenever k < 0, l < 0, or k < l.

LaurentPoly qbrace(long n);
LaurentPoly qshifted_brace(long n, long k);
LaurentPoly qbrace_factorial(long k);
LaurentPoly qint(long n);
LaurentPoly qint_factorial(long k);
LaurentPoly qbinom(long k, long l);

CycInt qint_at_zeta(long n, const CycContext& ctx);
CycInt qint_factorial_at_zeta(long k, const CycContext& ctx);
CycInt qbinom_at_zeta(long k, long l, const CycContext& ctx);

// Pascal identities in both forms, q <-> q^-1 and top-bottom symmetry,
// boundary conventions, factorial consistency, and unit quantum integers
// at zeta.
std::vector<CheckReport> check_qcomb(int r);

}  // namespace uqv
