#pragma once

#include <map>
#include <vector>

#include "uqv/cyclotomic.hpp"
#include "uqv/report.hpp"

namespace uqv {

// One tensor factor of a PBW basis monomial E^e 1_m F^(f), with
// 0 <= e, m, f <= r-1. Any expression raising e or f to r vanishes.
struct PBWMono {
  int e = 0;
  int m = 0;
  int f = 0;
  auto operator<=>(const PBWMono&) const = default;
};

using PBWWord = std::vector<PBWMono>;  // one entry per tensor factor

// Sparse linear combination of PBW monomial words with Q(zeta) coefficients;
// an element of u_zeta(sl2)^(tensor g). Tensor degree is uniform per value.
class AlgElem {
public:
  AlgElem() : r_(0), g_(0) {}
  AlgElem(int r, int g) : r_(r), g_(g) {}

  static AlgElem mono(int r, PBWWord w, CycRat c);

  int zr() const { return r_; }
  int degree() const { return g_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<PBWWord, CycRat>& terms() const { return terms_; }

  void add(const PBWWord& w, const CycRat& c);
  AlgElem operator+(const AlgElem& o) const;
  AlgElem operator-(const AlgElem& o) const;
  AlgElem scaled(const CycRat& c) const;
  bool operator==(const AlgElem& o) const { return terms_ == o.terms_; }

private:
  int r_, g_;
  std::map<PBWWord, CycRat> terms_;
};

// The small quantum group u_zeta(sl2) for one cyclotomic context, with all
// Hopf and ribbon structure. Holds lazily built memo tables for structure
// constants; not safe for concurrent first use, share read-only afterwards
// (or call warm_up() first).
class UqAlgebra {
public:
  explicit UqAlgebra(int r);

  int r() const { return r_; }
  const CycContext& ctx() const { return ctx_; }

  CycRat zeta(long e) const { return CycRat::zeta_pow(r_, e); }

  AlgElem zero(int g = 1) const { return AlgElem(r_, g); }
  AlgElem one(int g = 1) const;  // sum of idempotents in each factor
  AlgElem k_power(long p) const;  // K^p as idempotent combination, g = 1

  AlgElem multiply(const AlgElem& a, const AlgElem& b) const;
  AlgElem power(const AlgElem& a, int n) const;

  // Product of two single-factor basis monomials (memoized).
  AlgElem mono_product(const PBWMono& a, const PBWMono& b) const { return mono_mul1(a, b); }

  AlgElem coproduct(const AlgElem& a) const;               // g = 1 -> 2
  AlgElem coproduct_at(const AlgElem& a, int slot) const;  // g -> g+1
  AlgElem iterated_coproduct(const AlgElem& a, int legs) const;

  AlgElem antipode(const AlgElem& a) const;  // g = 1
  AlgElem antipode_slot(const AlgElem& a, int slot) const;
  CycRat counit(const AlgElem& a) const;  // g = 1

  // lambda' = sqrt(r) * lambda; lambda'(E^l F^(m) 1_n) = zeta^(-2n) d_{l,r-1} d_{m,r-1}
  CycRat integral_lambda_rescaled(const AlgElem& a) const;
  // Lambda' = Lambda / sqrt(r) = E^(r-1) F^(r-1) 1_0
  AlgElem cointegral_rescaled() const;

  AlgElem r_matrix() const;            // K^-m E^n (x) 1_m F^(n) form
  AlgElem r_matrix_alt() const;        // 1_m E^n (x) K^-m F^(n) form
  AlgElem ribbon() const;
  AlgElem ribbon_inv() const;
  AlgElem m_matrix() const;

  // g-th tensor power of the adjoint action x |> y = x_(1) y S(x_(2))
  AlgElem adjoint_action(const AlgElem& x, const AlgElem& y) const;

  // Rescaled factorizability: lambda'(R'_j R''_i) R''_j R'_i = r * Lambda'
  CheckReport drinfeld_check() const;

  // Force-populate single-factor memo tables (products, coproducts, antipodes).
  void warm_up() const;

private:
  AlgElem mono_mul1(const PBWMono& a, const PBWMono& b) const;
  AlgElem lmul_f1(const PBWMono& m) const;
  AlgElem coproduct_mono(const PBWMono& m) const;
  const AlgElem& antipode_mono(const PBWMono& m) const;

  int r_;
  CycContext ctx_;
  std::vector<CycRat> inv_qfact_;  // 1/[k]! at zeta, k = 0..r-1

  mutable std::map<std::pair<PBWMono, PBWMono>, AlgElem> mul_cache_;
  mutable std::map<PBWMono, AlgElem> f1_cache_;
  mutable std::map<PBWMono, AlgElem> cop_cache_;
  mutable std::map<PBWMono, AlgElem> antipode_cache_;
  mutable std::vector<AlgElem> cop_e_pows_, cop_f_pows_;
};

// All r^3 PBW basis monomials for g = 1 (in lexicographic order).
std::vector<PBWMono> pbw_basis(int r);

// Hopf algebra axioms over the full PBW basis (coassociativity, counit and
// antipode laws, S^2 = K-conjugation) plus Delta/epsilon multiplicativity on
// random basis pairs.
std::vector<CheckReport> check_hopf(int r, int random_pairs = 64, unsigned seed = 20240901);

// R Delta(x) = Delta^op(x) R, both hexagon equations, and agreement of the
// two closed forms of the R-matrix.
std::vector<CheckReport> check_quasitriangular(int r);

// theta theta^-1 = 1, centrality of theta, S(theta) = theta.
std::vector<CheckReport> check_ribbon(int r);

// lambda'(x_(2)) x_(1) = lambda'(x) 1, x Lambda' = epsilon(x) Lambda',
// lambda'(Lambda') = 1, and integrality of all structure constants of
// multiplication, coproduct, and antipode on the PBW basis.
std::vector<CheckReport> check_integral(int r);

std::string mono_str(const PBWMono& m);
std::string word_str(const PBWWord& w);

}  // namespace uqv
