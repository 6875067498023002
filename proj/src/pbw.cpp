#include "uqv/pbw.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "uqv/qcomb.hpp"

namespace uqv {

AlgElem AlgElem::mono(int r, PBWWord w, CycRat c) {
  AlgElem x(r, int(w.size()));
  x.add(w, c);
  return x;
}

void AlgElem::add(const PBWWord& w, const CycRat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_[w] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
  AlgElem x = *this;
  for (const auto& [w, c] : o.terms_) x.add(w, c);
  return x;
}

AlgElem AlgElem::operator-(const AlgElem& o) const {
  AlgElem x = *this;
  for (const auto& [w, c] : o.terms_) x.add(w, -c);
  return x;
}

AlgElem AlgElem::scaled(const CycRat& c) const {
  AlgElem x(r_, g_);
  if (c.is_zero()) return x;
  for (const auto& [w, v] : terms_) x.terms_[w] = v * c;
  return x;
}

UqAlgebra::UqAlgebra(int r) : r_(r), ctx_(r) {
  inv_qfact_.reserve(r);
  for (int k = 0; k < r; ++k)
    inv_qfact_.push_back(CycRat(qint_factorial_at_zeta(k, ctx_)).inverse());
}

AlgElem UqAlgebra::one(int g) const {
  // unit = sum_m 1_m in each factor
  AlgElem x(r_, g);
  PBWWord w(g);
  std::vector<int> idx(g, 0);
  while (true) {
    for (int j = 0; j < g; ++j) w[j] = PBWMono{0, idx[j], 0};
    x.add(w, CycRat(r_, 1));
    int j = g - 1;
    while (j >= 0 && ++idx[j] == r_) idx[j--] = 0;
    if (j < 0) break;
  }
  return x;
}

AlgElem UqAlgebra::k_power(long p) const {
  // K = sum_n zeta^(-2n) 1_n
  AlgElem x(r_, 1);
  for (int n = 0; n < r_; ++n) x.add({PBWMono{0, n, 0}}, zeta(-2 * n * p));
  return x;
}

AlgElem UqAlgebra::lmul_f1(const PBWMono& m) const {
  auto it = f1_cache_.find(m);
  if (it != f1_cache_.end()) return it->second;
  AlgElem res(r_, 1);
  if (m.e == 0) {
    // F^(1) 1_m F^(f) = [f+1] 1_{m+1} F^(f+1)
    if (m.f + 1 < r_) {
      res.add({PBWMono{0, (m.m + 1) % r_, m.f + 1}}, CycRat(qint_at_zeta(m.f + 1, ctx_)));
    }
  } else {
    // F^(1) E x = E (F^(1) x) - (K - K^-1) x  on x = E^(e-1) 1_m F^(f)
    PBWMono inner{m.e - 1, m.m, m.f};
    AlgElem rec = lmul_f1(inner);
    for (const auto& [w, c] : rec.terms()) {
      PBWMono t = w[0];
      if (t.e + 1 < r_) {
        t.e += 1;
        res.add({t}, c);
      }
    }
    // K acts on E^(e-1) 1_m by the scalar zeta^(2(e-1) - 2m)
    long d = 2L * (m.e - 1 - m.m);
    CycRat s = zeta(d) - zeta(-d);
    res.add({inner}, -s);
  }
  f1_cache_[m] = res;
  return res;
}

AlgElem UqAlgebra::mono_mul1(const PBWMono& a, const PBWMono& b) const {
  auto key = std::make_pair(a, b);
  auto it = mul_cache_.find(key);
  if (it != mul_cache_.end()) return it->second;
  // (E^e1 1_m1 F^(f1)) * b: apply F^(f1), then 1_m1, then E^e1 on the left
  AlgElem x = AlgElem::mono(r_, {b}, CycRat(r_, 1));
  for (int i = 0; i < a.f; ++i) {
    AlgElem next(r_, 1);
    for (const auto& [w, c] : x.terms()) {
      AlgElem fm = lmul_f1(w[0]);
      for (const auto& [w2, c2] : fm.terms()) next.add(w2, c2 * c);
    }
    x = next;
  }
  if (a.f > 0) x = x.scaled(inv_qfact_[a.f]);
  // 1_m1 E^e 1_m = delta_{m1+e, m} ...
  AlgElem filt(r_, 1);
  for (const auto& [w, c] : x.terms())
    if ((a.m + w[0].e) % r_ == w[0].m) filt.add(w, c);
  // E^e1 on the left
  AlgElem res(r_, 1);
  for (const auto& [w, c] : filt.terms()) {
    PBWMono t = w[0];
    if (t.e + a.e < r_) {
      t.e += a.e;
      res.add({t}, c);
    }
  }
  mul_cache_[key] = res;
  return res;
}

namespace {

// res += c * (parts[0] (x) ... (x) parts[g-1]) for single-factor summands
void cartesian_add(AlgElem& res, const std::vector<AlgElem>& parts, const CycRat& c) {
  const int g = int(parts.size());
  std::vector<std::map<PBWWord, CycRat>::const_iterator> its(g);
  for (int j = 0; j < g; ++j) its[j] = parts[j].terms().begin();
  while (true) {
    PBWWord w(g);
    CycRat v = c;
    for (int j = 0; j < g; ++j) {
      w[j] = its[j]->first[0];
      v = v * its[j]->second;
    }
    res.add(w, v);
    int j = g - 1;
    while (j >= 0) {
      if (++its[j] != parts[j].terms().end()) break;
      its[j] = parts[j].terms().begin();
      --j;
    }
    if (j < 0) break;
  }
}

}  // namespace

AlgElem UqAlgebra::multiply(const AlgElem& a, const AlgElem& b) const {
  if (a.degree() != b.degree()) throw std::invalid_argument("tensor degree mismatch");
  const int g = a.degree();
  AlgElem res(r_, g);
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      // factorwise products, combined by cartesian expansion
      std::vector<AlgElem> parts(g);
      bool dead = false;
      for (int j = 0; j < g && !dead; ++j) {
        parts[j] = mono_mul1(wa[j], wb[j]);
        dead = parts[j].is_zero();
      }
      if (dead) continue;
      cartesian_add(res, parts, ca * cb);
    }
  return res;
}

AlgElem UqAlgebra::power(const AlgElem& a, int n) const {
  AlgElem acc = one(a.degree());
  for (int i = 0; i < n; ++i) acc = multiply(acc, a);
  return acc;
}

AlgElem UqAlgebra::coproduct_mono(const PBWMono& m) const {
  auto it = cop_cache_.find(m);
  if (it != cop_cache_.end()) return it->second;
  if (cop_e_pows_.empty()) {
    // Delta(E) = E (x) K + 1 (x) E, Delta(F^(1)) = K^-1 (x) F^(1) + F^(1) (x) 1
    AlgElem de(r_, 2), df(r_, 2);
    for (int a = 0; a < r_; ++a)
      for (int b = 0; b < r_; ++b) {
        de.add({PBWMono{1, a, 0}, PBWMono{0, b, 0}}, zeta(-2 * b));
        de.add({PBWMono{0, a, 0}, PBWMono{1, b, 0}}, CycRat(r_, 1));
        df.add({PBWMono{0, a, 0}, PBWMono{0, b, 1}}, zeta(2 * a));
        df.add({PBWMono{0, a, 1}, PBWMono{0, b, 0}}, CycRat(r_, 1));
      }
    cop_e_pows_.push_back(one(2));
    cop_f_pows_.push_back(one(2));
    for (int k = 1; k < r_; ++k) {
      cop_e_pows_.push_back(multiply(cop_e_pows_.back(), de));
      cop_f_pows_.push_back(multiply(cop_f_pows_.back(), df));
    }
  }
  // Delta(1_m) = sum_k 1_{m-k} (x) 1_k
  AlgElem dm(r_, 2);
  for (int k = 0; k < r_; ++k)
    dm.add({PBWMono{0, ((m.m - k) % r_ + r_) % r_, 0}, PBWMono{0, k, 0}}, CycRat(r_, 1));
  AlgElem res = multiply(multiply(cop_e_pows_[m.e], dm), cop_f_pows_[m.f]);
  if (m.f > 0) res = res.scaled(inv_qfact_[m.f]);
  cop_cache_[m] = res;
  return res;
}

AlgElem UqAlgebra::coproduct(const AlgElem& a) const { return coproduct_at(a, 0); }

AlgElem UqAlgebra::coproduct_at(const AlgElem& a, int slot) const {
  const int g = a.degree();
  AlgElem res(r_, g + 1);
  for (const auto& [w, c] : a.terms()) {
    AlgElem cop = coproduct_mono(w[slot]);
    for (const auto& [cw, cc] : cop.terms()) {
      PBWWord nw;
      nw.reserve(g + 1);
      for (int j = 0; j < slot; ++j) nw.push_back(w[j]);
      nw.push_back(cw[0]);
      nw.push_back(cw[1]);
      for (int j = slot + 1; j < g; ++j) nw.push_back(w[j]);
      res.add(nw, c * cc);
    }
  }
  return res;
}

AlgElem UqAlgebra::iterated_coproduct(const AlgElem& a, int legs) const {
  AlgElem x = a;
  while (x.degree() < legs) x = coproduct_at(x, x.degree() - 1);
  return x;
}

const AlgElem& UqAlgebra::antipode_mono(const PBWMono& m) const {
  auto it = antipode_cache_.find(m);
  if (it != antipode_cache_.end()) return it->second;
  // S(E) = -E K^-1, S(F^(1)) = -K F^(1), S(1_m) = 1_{-m}; S is an
  // anti-homomorphism, so S(E^e 1_m F^(f)) = S(F)^f/[f]! S(1_m) S(E)^e
  AlgElem se(r_, 1), sf(r_, 1);
  for (int j = 0; j < r_; ++j) {
    se.add({PBWMono{1, j, 0}}, -zeta(2 * j));
    sf.add({PBWMono{0, j, 1}}, -zeta(-2 * j));
  }
  AlgElem res = AlgElem::mono(r_, {PBWMono{0, (r_ - m.m) % r_, 0}}, CycRat(r_, 1));
  for (int i = 0; i < m.e; ++i) res = multiply(res, se);
  AlgElem sfp = one(1);
  for (int i = 0; i < m.f; ++i) sfp = multiply(sfp, sf);
  if (m.f > 0) sfp = sfp.scaled(inv_qfact_[m.f]);
  res = multiply(sfp, res);
  return antipode_cache_[m] = res;
}

AlgElem UqAlgebra::antipode(const AlgElem& a) const { return antipode_slot(a, 0); }

AlgElem UqAlgebra::antipode_slot(const AlgElem& a, int slot) const {
  const int g = a.degree();
  AlgElem res(r_, g);
  for (const auto& [w, c] : a.terms()) {
    const AlgElem& s = antipode_mono(w[slot]);
    for (const auto& [sw, sc] : s.terms()) {
      PBWWord nw = w;
      nw[slot] = sw[0];
      res.add(nw, c * sc);
    }
  }
  return res;
}

CycRat UqAlgebra::counit(const AlgElem& a) const {
  CycRat res(r_, 0);
  for (const auto& [w, c] : a.terms()) {
    bool triv = true;
    for (const auto& m : w) triv = triv && m.e == 0 && m.m == 0 && m.f == 0;
    if (triv) res += c;
  }
  return res;
}

CycRat UqAlgebra::integral_lambda_rescaled(const AlgElem& a) const {
  if (a.degree() != 1) throw std::invalid_argument("lambda' needs tensor degree 1");
  // E^l 1_m F^(n) = E^l F^(n) 1_{m-n}, and lambda'(E^l F^(n) 1_j) =
  // zeta^(-2j) d_{l,r-1} d_{n,r-1}
  CycRat res(r_, 0);
  for (const auto& [w, c] : a.terms()) {
    const PBWMono& m = w[0];
    if (m.e == r_ - 1 && m.f == r_ - 1) res += c * zeta(-2L * (m.m - m.f));
  }
  return res;
}

AlgElem UqAlgebra::cointegral_rescaled() const {
  // E^(r-1) F^(r-1) 1_0 = E^(r-1) 1_{r-1} F^(r-1)
  return AlgElem::mono(r_, {PBWMono{r_ - 1, r_ - 1, r_ - 1}}, CycRat(r_, 1));
}

AlgElem UqAlgebra::r_matrix() const {
  // sum_{m,n} zeta^(n(n-1)/2) K^-m E^n (x) 1_m F^(n)
  AlgElem res(r_, 2);
  for (int m = 0; m < r_; ++m)
    for (int n = 0; n < r_; ++n) {
      CycRat c = zeta((long(n) * (n - 1)) / 2);
      // K^-m E^n = sum_j zeta^(2jm) 1_j E^n = sum_j zeta^(2(j-n)m) E^n 1_j
      for (int j = 0; j < r_; ++j)
        res.add({PBWMono{n, j, 0}, PBWMono{0, m, n}}, c * zeta(2L * (j - n) * m));
    }
  return res;
}

AlgElem UqAlgebra::r_matrix_alt() const {
  // sum_{m,n} zeta^(n(n-1)/2) 1_m E^n (x) K^-m F^(n)
  AlgElem res(r_, 2);
  for (int m = 0; m < r_; ++m)
    for (int n = 0; n < r_; ++n) {
      CycRat c = zeta((long(n) * (n - 1)) / 2);
      for (int j = 0; j < r_; ++j)
        res.add({PBWMono{n, (m + n) % r_, 0}, PBWMono{0, j, n}}, c * zeta(2L * j * m));
    }
  return res;
}

AlgElem UqAlgebra::ribbon() const {
  // sum_{m,n} (-1)^m zeta^(-(m+3)m/2 - 2(m+n+1)n) E^m F^(m) 1_n
  AlgElem res(r_, 1);
  for (int m = 0; m < r_; ++m)
    for (int n = 0; n < r_; ++n) {
      long exp = -(long(m) + 3) * m / 2 - 2L * (m + n + 1) * n;
      CycRat c = zeta(exp);
      if (m % 2) c = -c;
      res.add({PBWMono{m, (n + m) % r_, m}}, c);
    }
  return res;
}

AlgElem UqAlgebra::ribbon_inv() const {
  AlgElem res(r_, 1);
  for (int m = 0; m < r_; ++m)
    for (int n = 0; n < r_; ++n) {
      long exp = (long(m) + 3) * m / 2 + 2L * (m + n + 1) * n;
      res.add({PBWMono{m, (n + m) % r_, m}}, zeta(exp));
    }
  return res;
}

AlgElem UqAlgebra::m_matrix() const {
  // M = R''_j R'_i (x) R'_j R''_i
  AlgElem R = r_matrix();
  AlgElem res(r_, 2);
  for (const auto& [wi, ci] : R.terms())
    for (const auto& [wj, cj] : R.terms()) {
      AlgElem first = mono_mul1(wj[1], wi[0]);
      if (first.is_zero()) continue;
      AlgElem second = mono_mul1(wj[0], wi[1]);
      for (const auto& [f, cf] : first.terms())
        for (const auto& [s, cs] : second.terms())
          res.add({f[0], s[0]}, ci * cj * cf * cs);
    }
  return res;
}

AlgElem UqAlgebra::adjoint_action(const AlgElem& x, const AlgElem& y) const {
  const int g = y.degree();
  AlgElem legs = iterated_coproduct(x, 2 * g);
  AlgElem res(r_, g);
  for (const auto& [lw, lc] : legs.terms())
    for (const auto& [yw, yc] : y.terms()) {
      std::vector<AlgElem> parts(g);
      bool dead = false;
      for (int j = 0; j < g && !dead; ++j) {
        // x_(2j) y_j S(x_(2j+1))
        AlgElem left = mono_mul1(lw[2 * j], yw[j]);
        AlgElem part(r_, 1);
        const AlgElem& s = antipode_mono(lw[2 * j + 1]);
        for (const auto& [a, ca] : left.terms())
          for (const auto& [b, cb] : s.terms()) {
            AlgElem p = mono_mul1(a[0], b[0]);
            for (const auto& [pw, pc] : p.terms()) part.add(pw, ca * cb * pc);
          }
        parts[j] = part;
        dead = part.is_zero();
      }
      if (dead) continue;
      cartesian_add(res, parts, lc * yc);
    }
  return res;
}

CheckReport UqAlgebra::drinfeld_check() const {
  AlgElem R = r_matrix();
  AlgElem res(r_, 1);
  for (const auto& [wi, ci] : R.terms())
    for (const auto& [wj, cj] : R.terms()) {
      // scalar lambda'(R'_j R''_i), element R''_j R'_i
      AlgElem in = mono_mul1(wj[0], wi[1]);
      CycRat s = integral_lambda_rescaled(in) * ci * cj;
      if (s.is_zero()) continue;
      AlgElem out = mono_mul1(wj[1], wi[0]);
      for (const auto& [w, c] : out.terms()) res.add(w, c * s);
    }
  AlgElem expected = cointegral_rescaled().scaled(CycRat(r_, r_));
  if (res == expected)
    return CheckReport::pass("factorizability", "drinfeld-map", {{"r", std::to_string(r_)}});
  return CheckReport::fail("factorizability", "drinfeld-map",
                           "lambda'(R'_j R''_i) R''_j R'_i != r * Lambda'",
                           {{"r", std::to_string(r_)}});
}

void UqAlgebra::warm_up() const {
  for (const auto& a : pbw_basis(r_)) {
    coproduct_mono(a);
    antipode_mono(a);
    for (const auto& b : pbw_basis(r_)) mono_mul1(a, b);
  }
}

std::vector<PBWMono> pbw_basis(int r) {
  std::vector<PBWMono> basis;
  basis.reserve(r * r * r);
  for (int e = 0; e < r; ++e)
    for (int m = 0; m < r; ++m)
      for (int f = 0; f < r; ++f) basis.push_back(PBWMono{e, m, f});
  return basis;
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

AlgElem swap_legs(const AlgElem& x, int r) {
  AlgElem res(r, 2);
  for (const auto& [w, c] : x.terms()) res.add({w[1], w[0]}, c);
  return res;
}

// Place the two legs of x at slots i < j of a 3-fold tensor, with the unit
// (sum of idempotents) in the remaining slot.
AlgElem embed_two(const AlgElem& x, int r, int i, int j) {
  int free_slot = 3 - i - j;
  AlgElem res(r, 3);
  for (const auto& [w, c] : x.terms())
    for (int m = 0; m < r; ++m) {
      PBWWord nw(3);
      nw[i] = w[0];
      nw[j] = w[1];
      nw[free_slot] = PBWMono{0, m, 0};
      res.add(nw, c);
    }
  return res;
}

void push(std::vector<CheckReport>& out, const std::string& suite, const std::string& check,
          bool ok, const std::string& witness, const Params& pr) {
  out.push_back(ok ? CheckReport::pass(suite, check, pr)
                   : CheckReport::fail(suite, check, witness, pr));
}

}  // namespace

std::vector<CheckReport> check_hopf(int r, int random_pairs, unsigned seed) {
  std::vector<CheckReport> out;
  const Params pr = {{"r", std::to_string(r)}};
  UqAlgebra A(r);
  const auto basis = pbw_basis(r);

  bool coassoc = true, counit_l = true, counit_r = true, anti_l = true, anti_r = true,
       s2 = true;
  std::string w_coassoc, w_counit, w_anti, w_s2;
  AlgElem k1 = A.k_power(1), km1 = A.k_power(-1);
  for (const auto& b : basis) {
    AlgElem x = AlgElem::mono(r, {b}, CycRat(r, 1));
    AlgElem dx = A.coproduct(x);
    if (coassoc && !(A.coproduct_at(dx, 0) == A.coproduct_at(dx, 1))) {
      coassoc = false;
      w_coassoc = mono_str(b);
    }
    // (epsilon (x) id) Delta and (id (x) epsilon) Delta
    AlgElem left(r, 1), right(r, 1);
    for (const auto& [w, c] : dx.terms()) {
      if (w[0].e == 0 && w[0].m == 0 && w[0].f == 0) left.add({w[1]}, c);
      if (w[1].e == 0 && w[1].m == 0 && w[1].f == 0) right.add({w[0]}, c);
    }
    if (counit_l && !(left == x)) {
      counit_l = false;
      w_counit = mono_str(b);
    }
    if (counit_r && !(right == x)) {
      counit_r = false;
      w_counit = mono_str(b);
    }
    // mu (S (x) id) Delta = eta epsilon = mu (id (x) S) Delta
    AlgElem sl(r, 1), sr(r, 1);
    for (const auto& [w, c] : dx.terms()) {
      AlgElem a0 = AlgElem::mono(r, {w[0]}, c);
      AlgElem a1 = AlgElem::mono(r, {w[1]}, CycRat(r, 1));
      sl = sl + A.multiply(A.antipode(a0), a1);
      sr = sr + A.multiply(a0, A.antipode(a1));
    }
    AlgElem expect = A.one(1).scaled(A.counit(x));
    if (anti_l && !(sl == expect)) {
      anti_l = false;
      w_anti = mono_str(b);
    }
    if (anti_r && !(sr == expect)) {
      anti_r = false;
      w_anti = mono_str(b);
    }
    if (s2 && !(A.antipode(A.antipode(x)) == A.multiply(A.multiply(k1, x), km1))) {
      s2 = false;
      w_s2 = mono_str(b);
    }
  }
  push(out, "hopf", "coassociativity", coassoc, w_coassoc, pr);
  push(out, "hopf", "counit-law", counit_l && counit_r, w_counit, pr);
  push(out, "hopf", "antipode-law", anti_l && anti_r, w_anti, pr);
  push(out, "hopf", "antipode-squared", s2, w_s2, pr);

  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  bool bialg = true, eps_mult = true;
  std::string w_bialg;
  for (int t = 0; t < random_pairs; ++t) {
    AlgElem a = AlgElem::mono(r, {basis[pick(rng)]}, CycRat(r, 1));
    AlgElem b = AlgElem::mono(r, {basis[pick(rng)]}, CycRat(r, 1));
    AlgElem ab = A.multiply(a, b);
    if (bialg && !(A.coproduct(ab) == A.multiply(A.coproduct(a), A.coproduct(b)))) {
      bialg = false;
      w_bialg = "pair " + std::to_string(t);
    }
    if (eps_mult && A.counit(ab) != A.counit(a) * A.counit(b)) {
      eps_mult = false;
      w_bialg = "pair " + std::to_string(t);
    }
  }
  push(out, "hopf", "coproduct-multiplicative", bialg, w_bialg, pr);
  push(out, "hopf", "counit-multiplicative", eps_mult, w_bialg, pr);
  push(out, "hopf", "coproduct-of-unit", A.coproduct(A.one(1)) == A.one(2), "Delta(1)", pr);
  return out;
}

std::vector<CheckReport> check_quasitriangular(int r) {
  std::vector<CheckReport> out;
  const Params pr = {{"r", std::to_string(r)}};
  UqAlgebra A(r);
  AlgElem R = A.r_matrix();

  push(out, "hopf", "r-matrix-forms", R == A.r_matrix_alt(), "two closed forms differ", pr);

  bool inter = true;
  std::string w_inter;
  for (const auto& b : pbw_basis(r)) {
    AlgElem x = AlgElem::mono(r, {b}, CycRat(r, 1));
    AlgElem dx = A.coproduct(x);
    if (!(A.multiply(R, dx) == A.multiply(swap_legs(dx, r), R))) {
      inter = false;
      w_inter = mono_str(b);
      break;
    }
  }
  push(out, "hopf", "r-matrix-intertwiner", inter, w_inter, pr);

  AlgElem r13 = embed_two(R, r, 0, 2);
  push(out, "hopf", "hexagon-coproduct-left",
       A.coproduct_at(R, 0) == A.multiply(r13, embed_two(R, r, 1, 2)),
       "(Delta (x) id) R != R13 R23", pr);
  push(out, "hopf", "hexagon-coproduct-right",
       A.coproduct_at(R, 1) == A.multiply(r13, embed_two(R, r, 0, 1)),
       "(id (x) Delta) R != R13 R12", pr);
  return out;
}

std::vector<CheckReport> check_ribbon(int r) {
  std::vector<CheckReport> out;
  const Params pr = {{"r", std::to_string(r)}};
  UqAlgebra A(r);
  AlgElem th = A.ribbon();

  push(out, "ribbon", "inverse", A.multiply(th, A.ribbon_inv()) == A.one(1),
       "theta theta^-1 != 1", pr);

  bool central = true;
  std::string w;
  for (const auto& b : pbw_basis(r)) {
    AlgElem x = AlgElem::mono(r, {b}, CycRat(r, 1));
    if (!(A.multiply(th, x) == A.multiply(x, th))) {
      central = false;
      w = mono_str(b);
      break;
    }
  }
  push(out, "ribbon", "centrality", central, w, pr);
  push(out, "ribbon", "antipode-invariance", A.antipode(th) == th, "S(theta) != theta", pr);
  return out;
}

std::vector<CheckReport> check_integral(int r) {
  std::vector<CheckReport> out;
  const Params pr = {{"r", std::to_string(r)}};
  UqAlgebra A(r);
  const auto basis = pbw_basis(r);
  AlgElem lam_cap = A.cointegral_rescaled();

  bool lam_ok = true, coint_ok = true;
  std::string w_lam, w_coint;
  for (const auto& b : basis) {
    AlgElem x = AlgElem::mono(r, {b}, CycRat(r, 1));
    AlgElem dx = A.coproduct(x);
    // lambda'(x_(2)) x_(1)
    AlgElem acc(r, 1);
    for (const auto& [w, c] : dx.terms()) {
      CycRat s = A.integral_lambda_rescaled(AlgElem::mono(r, {w[1]}, c));
      acc.add({w[0]}, s);
    }
    if (lam_ok && !(acc == A.one(1).scaled(A.integral_lambda_rescaled(x)))) {
      lam_ok = false;
      w_lam = mono_str(b);
    }
    if (coint_ok && !(A.multiply(x, lam_cap) == lam_cap.scaled(A.counit(x)))) {
      coint_ok = false;
      w_coint = mono_str(b);
    }
  }
  push(out, "integral", "integral-axiom", lam_ok, w_lam, pr);
  push(out, "integral", "cointegral-axiom", coint_ok, w_coint, pr);
  push(out, "integral", "normalization",
       A.integral_lambda_rescaled(lam_cap) == CycRat(r, 1), "lambda'(Lambda') != 1", pr);

  bool sc_ok = true;
  std::string w_sc;
  auto all_integral = [](const AlgElem& x) {
    for (const auto& [w, c] : x.terms())
      if (!c.is_integral()) return false;
    return true;
  };
  for (const auto& a : basis) {
    AlgElem xa = AlgElem::mono(r, {a}, CycRat(r, 1));
    if (!all_integral(A.coproduct(xa)) || !all_integral(A.antipode(xa))) {
      sc_ok = false;
      w_sc = mono_str(a);
      break;
    }
    for (const auto& b : basis) {
      AlgElem prod = A.multiply(xa, AlgElem::mono(r, {b}, CycRat(r, 1)));
      if (!all_integral(prod)) {
        sc_ok = false;
        w_sc = mono_str(a) + " * " + mono_str(b);
        break;
      }
    }
    if (!sc_ok) break;
  }
  push(out, "integral", "structure-constants", sc_ok, w_sc, pr);
  return out;
}

std::string mono_str(const PBWMono& m) {
  std::ostringstream os;
  os << "E^" << m.e << " 1_" << m.m << " F^(" << m.f << ")";
  return os.str();
}

std::string word_str(const PBWWord& w) {
  std::string s;
  for (size_t j = 0; j < w.size(); ++j) {
    if (j) s += " (x) ";
    s += mono_str(w[j]);
  }
  return s;
}

}  // namespace uqv
