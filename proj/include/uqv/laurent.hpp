#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace uqv {

// Element of Z[q, q^-1], stored sparsely as exponent -> coefficient.
// Zero coefficients are never stored.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(const mpz_class& constant);
  explicit LaurentPoly(long constant);

  // c * q^exp
  static LaurentPoly monomial(long exp, const mpz_class& c = 1);
  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(1); }

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<long, mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(long exp) const;
  long min_exp() const;  // requires nonzero
  long max_exp() const;  // requires nonzero

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }

  LaurentPoly scaled(const mpz_class& c) const;
  LaurentPoly shifted(long exp) const;  // * q^exp
  LaurentPoly pow(unsigned long k) const;

  // q -> q^-1
  LaurentPoly inverted_variable() const;

  // formal d/dq
  LaurentPoly derivative() const;

  mpz_class eval_at_one() const;

  // Exact division; nullopt if the division leaves a remainder.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

  // Exact division by h(q)^k = (1-q)^k; nullopt if some stage is not divisible.
  std::optional<LaurentPoly> divide_exact_h(unsigned k) const;

  std::string str() const;

private:
  void set(long exp, mpz_class c);
  std::map<long, mpz_class> coeffs_;
};

// 1 + q + ... + q^(r-1)
LaurentPoly cyclotomic_phi(int r);

}  // namespace uqv
