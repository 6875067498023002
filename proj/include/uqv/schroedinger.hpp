#pragma once

#include <vector>

#include "uqv/matrix.hpp"
#include "uqv/report.hpp"

namespace uqv {

// Bases of the degree-r Schrödinger representation space on r^g coordinates:
// the standard basis v, the triangular basis t, and the rescaled basis
// v'_n = h^(-floor(|n|/2)) t_n with |n| the total multi-index sum.
enum class SBasis { V, T, VPrime };

// Generators: Heisenberg alpha_j, beta_j and the projective mapping class
// action tau_alpha_j, tau_beta_j (factor j), tau_gamma_j (factors j, j+1).
enum class SGen { Alpha, Beta, TauAlpha, TauBeta, TauGamma };

class SchroModel {
public:
  SchroModel(int r, int g);

  int r() const { return r_; }
  int genus() const { return g_; }
  int dim() const { return dim_; }

  // Matrix of the generator at factor j in the requested basis, and its
  // closed-form inverse (no elimination involved).
  CycMatrix generator(SGen gen, int j, SBasis basis) const;
  CycMatrix generator_inverse(SGen gen, int j, SBasis basis) const;

  // Columns are the coordinates of `from`-basis vectors in the `to` basis.
  CycMatrix transition(SBasis from, SBasis to) const;

private:
  CycMatrix one_factor(SGen gen, bool inverse) const;  // r x r, gamma r^2 x r^2
  CycMatrix embed(const CycMatrix& m, int j, int span) const;
  CycMatrix from_v(SBasis b) const;  // columns of b-basis vectors in v
  CycMatrix to_v_inverse(SBasis b) const;  // closed-form inverse of from_v
  CycMatrix conjugate(const CycMatrix& m_v, SBasis b) const;

  int r_, g_, dim_;
  CycContext ctx_;
};

// Exact closed-form triangular matrices of alpha, beta, tau_alpha, tau_beta
// in the t basis at genus 1, compared entrywise.
std::vector<CheckReport> check_schro_triangularity(int r);

// Same for tau_gamma in the t (x) t basis at genus 2.
CheckReport check_schro_gamma_triangularity(int r);

// In the v' basis every generator is integral with integral closed-form
// inverse and unit determinant.
std::vector<CheckReport> check_schro_integrality(int r, int g);

// Braid relations for (tau_alpha_j, tau_beta_j), (tau_beta_j, tau_gamma_j),
// (tau_gamma_j, tau_beta_{j+1}); all other generator pairs commute. All up to
// a global scalar.
std::vector<CheckReport> check_mcg_relations_psi(int r, int g);

// alpha_j beta_j = zeta^4 beta_j alpha_j exactly; disjoint factors commute.
std::vector<CheckReport> check_heisenberg_relations(int r, int g);

// v -> t -> v' -> v composes to the identity, as do all two-basis roundtrips.
CheckReport check_transition_roundtrip(int r, int g);

}  // namespace uqv
