#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "uqv/laurent.hpp"

namespace uqv {

// Parameters of the coefficient ring: an odd prime r, with zeta a primitive
// r-th root of unity. Since r is prime, 1 + q + ... + q^(r-1) is the minimal
// polynomial of zeta, so Z[zeta] has the power basis zeta^0 .. zeta^(r-2).
struct CycContext {
  int r;
  explicit CycContext(int r);
};

// Element of Z[zeta] in power-basis coordinates of degree <= r-2.
class CycInt {
public:
  CycInt() : r_(0) {}
  explicit CycInt(int r) : r_(r), c_(r - 1) {}
  CycInt(int r, const mpz_class& constant);

  static CycInt zeta_pow(int r, long e);

  int r() const { return r_; }
  bool is_zero() const;
  const std::vector<mpz_class>& coords() const { return c_; }
  mpz_class& operator[](int i) { return c_[i]; }
  const mpz_class& operator[](int i) const { return c_[i]; }

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  bool operator==(const CycInt& o) const { return r_ == o.r_ && c_ == o.c_; }

  CycInt scaled(const mpz_class& s) const;
  mpz_class content() const;  // gcd of coordinates, nonnegative

  std::string str() const;

private:
  int r_;
  std::vector<mpz_class> c_;
};

// Element of Q(zeta) as numerator in Z[zeta] over a single positive integer
// denominator, kept reduced (gcd(denominator, content(numerator)) = 1).
class CycRat {
public:
  CycRat() : den_(1) {}
  explicit CycRat(CycInt n) : num_(std::move(n)), den_(1) {}
  CycRat(CycInt n, mpz_class d);
  CycRat(int r, long constant) : num_(r, constant), den_(1) {}

  static CycRat zeta_pow(int r, long e) { return CycRat(CycInt::zeta_pow(r, e)); }

  int r() const { return num_.r(); }
  bool is_zero() const { return num_.is_zero(); }
  const CycInt& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  CycRat operator+(const CycRat& o) const;
  CycRat operator-(const CycRat& o) const;
  CycRat operator-() const;
  CycRat operator*(const CycRat& o) const;
  CycRat& operator+=(const CycRat& o);
  bool operator==(const CycRat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const CycRat& o) const { return !(*this == o); }

  CycRat inverse() const;  // throws on zero
  CycRat operator/(const CycRat& o) const { return *this * o.inverse(); }

  bool is_integral() const { return den_ == 1; }

  std::string str() const;

private:
  void normalize();
  CycInt num_;
  mpz_class den_;
};

// Evaluation q -> zeta; a ring homomorphism Z[q,q^-1] -> Z[zeta].
CycInt reduce_at_zeta(const LaurentPoly& p, const CycContext& ctx);

bool is_unit(const CycInt& x);

// G_n = sum_{l=0}^{r-1} zeta^{-2l(l-n)}
CycInt gauss_sum(long n, const CycContext& ctx);

// h(zeta) = 1 - zeta
CycInt h_zeta(const CycContext& ctx);

// x / h(zeta)^k, computed in Q(zeta)
CycRat divide_exact_h_zeta(const CycRat& x, unsigned k);

}  // namespace uqv
