#pragma once

#include <vector>

#include "uqv/matrix.hpp"
#include "uqv/pbw.hpp"
#include "uqv/report.hpp"

namespace uqv {

// Bases of U_g = u_zeta(sl2)^(x g): the PBW product basis E 1 F, and the
// rescaled basis E 1' F obtained by the T-substitution on the idempotent
// index together with a global power of h(zeta).
enum class UBasis { E1F, E1PrimeF };

enum class HGen { TauAlpha, TauBeta, TauGamma };

// The HKL projective mapping class group action on U_g, with fixed scalar
// representatives: tau_alpha x = theta^-1 x, tau_beta x =
// lambda'(theta_(2) x) S(theta_(1)), tau_gamma (x1 (x) x2) =
// x1 S(theta^-1_(1)) (x) theta^-1_(2) x2, applied factor-wise.
class HklModel {
public:
  HklModel(int r, int g);

  int r() const { return r_; }
  int genus() const { return g_; }
  long dim() const { return dim_; }
  const UqAlgebra& algebra() const { return alg_; }

  SparseMat generator(HGen gen, int j, UBasis basis) const;

  // Matrix of the g-fold adjoint action of a single-factor element, E1F basis.
  SparseMat adjoint_matrix(const AlgElem& x) const;

  // Columns are the coordinates of `from`-basis vectors in the `to` basis.
  SparseMat transition(UBasis from, UBasis to) const;

  long word_index(const PBWWord& w) const;
  PBWWord index_word(long idx) const;

  // Phi_g on the homological basis index (a, b, n): the scalar N(a, b, n)
  // and the target PBW word E^(iota(rev b)) 1_(rev n) F^(rev a).
  CycRat phi_scalar(const std::vector<int>& a, const std::vector<int>& b,
                    const std::vector<int>& n) const;
  PBWWord phi_word(const std::vector<int>& a, const std::vector<int>& b,
                   const std::vector<int>& n) const;

private:
  SparseMat one_factor_op(HGen gen) const;
  SparseMat embed(const SparseMat& op, int j, int span) const;
  SparseMat t_transform(bool inverse) const;

  int r_, g_;
  long dim_;
  UqAlgebra alg_;
};

// Entry integrality of every generator in the E1'F basis; the determinant is
// measured and reported (warning when not a unit or not computed), since only
// the Schroedinger side fixes normalization.
std::vector<CheckReport> check_hkl_integrality(int r, int g);

// Every generator matrix commutes exactly with the adjoint matrices of E,
// F^(1), and each idempotent 1_m.
std::vector<CheckReport> check_adjoint_equivariance(int r, int g);

// Braid/commutation relations up to scalar, mirroring the Schroedinger list.
std::vector<CheckReport> check_mcg_relations_hkl(int r, int g);

// 1_m acts on each Phi-image basis vector by delta_{m = sum(a+b) + g mod r},
// and every Phi scalar is a power of zeta (hence a unit).
std::vector<CheckReport> check_idempotent_grading(int r, int g);

// E1F <-> E1'F transition roundtrips to the identity.
CheckReport check_u_basis_roundtrip(int r, int g);

}  // namespace uqv
