#include "uqv/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace uqv {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

CycContext::CycContext(int r_) : r(r_) {
  if (r < 3 || r % 2 == 0 || !is_prime(r))
    throw std::invalid_argument("r must be an odd prime >= 3");
}

CycInt::CycInt(int r, const mpz_class& constant) : r_(r), c_(r - 1) {
  c_[0] = constant;
}

CycInt CycInt::zeta_pow(int r, long e) {
  CycInt x(r);
  long m = e % r;
  if (m < 0) m += r;
  if (m < r - 1) {
    x.c_[m] = 1;
  } else {
    // zeta^(r-1) = -(1 + zeta + ... + zeta^(r-2))
    for (int i = 0; i < r - 1; ++i) x.c_[i] = -1;
  }
  return x;
}

bool CycInt::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  for (int i = 0; i < r_ - 1; ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  for (int i = 0; i < r_ - 1; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycInt CycInt::operator+(const CycInt& o) const {
  CycInt x = *this;
  x += o;
  return x;
}

CycInt CycInt::operator-(const CycInt& o) const {
  CycInt x = *this;
  x -= o;
  return x;
}

CycInt CycInt::operator-() const {
  CycInt x(r_);
  for (int i = 0; i < r_ - 1; ++i) x.c_[i] = -c_[i];
  return x;
}

CycInt CycInt::operator*(const CycInt& o) const {
  const int n = r_ - 1;
  std::vector<mpz_class> conv(2 * n - 1);
  for (int i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (o.c_[j] == 0) continue;
      conv[i + j] += c_[i] * o.c_[j];
    }
  }
  // fold exponents >= r back via zeta^r = 1, then eliminate zeta^(r-1)
  CycInt x(r_);
  for (int e = 2 * n - 2; e >= 0; --e) {
    if (conv[e] == 0) continue;
    int m = e % r_;
    if (m < n) {
      x.c_[m] += conv[e];
    } else {
      for (int i = 0; i < n; ++i) x.c_[i] -= conv[e];
    }
  }
  return x;
}

CycInt CycInt::scaled(const mpz_class& s) const {
  CycInt x(r_);
  for (int i = 0; i < r_ - 1; ++i) x.c_[i] = c_[i] * s;
  return x;
}

mpz_class CycInt::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::string CycInt::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < r_ - 1; ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    mpz_class a = first ? c_[i] : mpz_class(abs(c_[i]));
    first = false;
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1 && a != -1)
        os << a.get_str() << "*";
      else if (a == -1)
        os << "-";
      os << "z";
      if (i != 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

CycRat::CycRat(CycInt n, mpz_class d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw std::invalid_argument("zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  normalize();
}

void CycRat::normalize() {
  if (den_ == 1) return;
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  mpz_class g;
  mpz_class c = num_.content();
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den_.get_mpz_t());
  if (g > 1) {
    den_ /= g;
    CycInt n(num_.r());
    for (int i = 0; i < num_.r() - 1; ++i) n[i] = num_[i] / g;
    num_ = n;
  }
}

CycRat& CycRat::operator+=(const CycRat& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
    mpz_class l = den_ / g * o.den_;
    num_ = num_.scaled(l / den_) + o.num_.scaled(l / o.den_);
    den_ = l;
  }
  normalize();
  return *this;
}

CycRat CycRat::operator+(const CycRat& o) const {
  CycRat x = *this;
  x += o;
  return x;
}

CycRat CycRat::operator-(const CycRat& o) const { return *this + (-o); }

CycRat CycRat::operator-() const {
  CycRat x = *this;
  x.num_ = -x.num_;
  return x;
}

CycRat CycRat::operator*(const CycRat& o) const {
  CycRat x;
  x.num_ = num_ * o.num_;
  x.den_ = den_ * o.den_;
  x.normalize();
  return x;
}

CycRat CycRat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta)");
  const int r = num_.r();
  const int n = r - 1;
  // Extended Euclid over Q[t] for the numerator against phi = 1 + t + ... + t^(r-1):
  // find u with u * num == 1 (mod phi).
  using Poly = std::vector<mpq_class>;  // index = degree
  auto deg = [](const Poly& p) {
    for (int i = int(p.size()) - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1;
  };
  Poly a(r);  // phi
  for (int i = 0; i < r; ++i) a[i] = 1;
  Poly b(n);
  for (int i = 0; i < n; ++i) b[i] = mpq_class(num_[i]);
  Poly ua(r), ub(r);  // cofactors of the second argument only
  ub[0] = 1;
  while (true) {
    int db = deg(b);
    if (db < 0) throw std::logic_error("numerator not invertible mod phi");
    int da = deg(a);
    if (da < db) {
      std::swap(a, b);
      std::swap(ua, ub);
      continue;
    }
    if (db == 0) break;
    // a -= (lead(a)/lead(b)) t^(da-db) * b
    mpq_class f = a[da] / b[db];
    int s = da - db;
    for (int i = 0; i <= db; ++i) a[i + s] -= f * b[i];
    a[da] = 0;
    for (int i = 0; i + s < r; ++i) ua[i + s] -= f * ub[i];
  }
  // now b is a nonzero rational constant and ub * num == b (mod phi)
  mpq_class c = b[deg(b)];
  Poly u(n, 0);
  for (int i = 0; i < n && i < int(ub.size()); ++i) u[i] = ub[i] / c;
  // clear rational denominators
  mpz_class common = 1;
  for (int i = 0; i < n; ++i)
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), u[i].get_den().get_mpz_t());
  CycInt numer(r);
  for (int i = 0; i < n; ++i) {
    mpq_class v = u[i] * common;
    numer[i] = v.get_num();
  }
  return CycRat(numer, common) * CycRat(CycInt(r, den_));
}

std::string CycRat::str() const {
  if (den_ == 1) return num_.str();
  return "(" + num_.str() + ")/" + den_.get_str();
}

CycInt reduce_at_zeta(const LaurentPoly& p, const CycContext& ctx) {
  CycInt x(ctx.r);
  for (const auto& [e, c] : p.coeffs()) x += CycInt::zeta_pow(ctx.r, e).scaled(c);
  return x;
}

bool is_unit(const CycInt& x) {
  if (x.is_zero()) return false;
  return CycRat(x).inverse().is_integral();
}

CycInt gauss_sum(long n, const CycContext& ctx) {
  CycInt g(ctx.r);
  for (long l = 0; l < ctx.r; ++l) g += CycInt::zeta_pow(ctx.r, -2 * l * (l - n));
  return g;
}

CycInt h_zeta(const CycContext& ctx) {
  CycInt h(ctx.r, 1);
  h -= CycInt::zeta_pow(ctx.r, 1);
  return h;
}

CycRat divide_exact_h_zeta(const CycRat& x, unsigned k) {
  if (k == 0) return x;
  CycContext ctx(x.r());
  CycRat hinv = CycRat(h_zeta(ctx)).inverse();
  CycRat acc = x;
  for (unsigned i = 0; i < k; ++i) acc = acc * hinv;
  return acc;
}

}  // namespace uqv
