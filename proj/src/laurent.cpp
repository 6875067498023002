#include "uqv/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace uqv {

LaurentPoly::LaurentPoly(const mpz_class& constant) {
  if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(long exp, const mpz_class& c) {
  LaurentPoly p;
  if (c != 0) p.coeffs_[exp] = c;
  return p;
}

mpz_class LaurentPoly::coeff(long exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

long LaurentPoly::min_exp() const {
  if (coeffs_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (coeffs_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

void LaurentPoly::set(long exp, mpz_class c) {
  if (c == 0)
    coeffs_.erase(exp);
  else
    coeffs_[exp] = std::move(c);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_[e] = -c;
    } else {
      it->second -= c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly p = *this;
  p += o;
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly p = *this;
  p -= o;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_[e] = -c;
  return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly p;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) {
      auto it = p.coeffs_.find(e1 + e2);
      if (it == p.coeffs_.end()) {
        p.coeffs_[e1 + e2] = c1 * c2;
      } else {
        it->second += c1 * c2;
      }
    }
  for (auto it = p.coeffs_.begin(); it != p.coeffs_.end();)
    it = it->second == 0 ? p.coeffs_.erase(it) : std::next(it);
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
  LaurentPoly p;
  if (c == 0) return p;
  for (const auto& [e, v] : coeffs_) p.coeffs_[e] = v * c;
  return p;
}

LaurentPoly LaurentPoly::shifted(long exp) const {
  LaurentPoly p;
  for (const auto& [e, v] : coeffs_) p.coeffs_[e + exp] = v;
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned long k) const {
  LaurentPoly acc = one();
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

LaurentPoly LaurentPoly::inverted_variable() const {
  LaurentPoly p;
  for (const auto& [e, v] : coeffs_) p.coeffs_[-e] = v;
  return p;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly p;
  for (const auto& [e, v] : coeffs_)
    if (e != 0) p.coeffs_[e - 1] = v * e;
  return p;
}

mpz_class LaurentPoly::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& [e, v] : coeffs_) s += v;
  return s;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (is_zero()) return zero();
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const long dtop = d.max_exp();
  const mpz_class& dlead = d.coeffs_.rbegin()->second;
  // For an exact quotient, exponents are bounded below by this difference.
  const long qmin = min_exp() - d.min_exp();
  while (!rem.is_zero()) {
    long rtop = rem.max_exp();
    if (rtop - dtop < qmin) return std::nullopt;
    mpz_class q = rem.coeffs_.rbegin()->second / dlead;
    if (q * dlead != rem.coeffs_.rbegin()->second) return std::nullopt;
    LaurentPoly term = monomial(rtop - dtop, q);
    quot += term;
    rem -= term * d;
    if (!rem.is_zero() && rem.max_exp() >= rtop) return std::nullopt;
  }
  return quot;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact_h(unsigned k) const {
  LaurentPoly h = one() - monomial(1);
  LaurentPoly cur = *this;
  for (unsigned i = 0; i < k; ++i) {
    if (cur.is_zero()) return cur;
    auto q = cur.divide_exact(h);
    if (!q) return std::nullopt;
    cur = *q;
  }
  return cur;
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    mpz_class a = first ? c : mpz_class(abs(c));
    first = false;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1 && a != -1)
        os << a.get_str() << "*";
      else if (a == -1)
        os << "-";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly cyclotomic_phi(int r) {
  LaurentPoly p;
  for (int i = 0; i < r; ++i) p += LaurentPoly::monomial(i);
  return p;
}

}  // namespace uqv
