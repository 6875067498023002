#include "doctest.h"
#include "uqv/hkl.hpp"

using namespace uqv;

namespace {
bool no_fail(const std::vector<CheckReport>& reps) {
  for (const auto& r : reps)
    if (r.status == CheckReport::Status::Fail) return false;
  return !reps.empty();
}
bool all_pass(const std::vector<CheckReport>& reps) {
  for (const auto& r : reps)
    if (r.status != CheckReport::Status::Pass) return false;
  return !reps.empty();
}
}  // namespace

TEST_CASE("word indexing") {
  HklModel m(3, 2);
  CHECK(m.dim() == 729);
  for (long idx : {0L, 1L, 41L, 500L, 728L})
    CHECK(m.word_index(m.index_word(idx)) == idx);
  CHECK(m.index_word(0) == PBWWord{{0, 0, 0}, {0, 0, 0}});
  CHECK(m.index_word(728) == PBWWord{{2, 2, 2}, {2, 2, 2}});
}

TEST_CASE("homological base point") {
  // a = b = 0, n = 0 maps to E^(r-1) 1_0 F^(0) with unit scalar 1
  HklModel m(3, 1);
  CHECK(m.phi_scalar({0}, {0}, {0}) == CycRat(3, 1));
  CHECK(m.phi_word({0}, {0}, {0}) == PBWWord{{2, 0, 0}});
}

TEST_CASE("tau_alpha in the PBW basis is theta^-1 left multiplication") {
  HklModel m(3, 1);
  const UqAlgebra& A = m.algebra();
  SparseMat ta = m.generator(HGen::TauAlpha, 0, UBasis::E1F);
  AlgElem ti = A.ribbon_inv();
  for (long j = 0; j < m.dim(); ++j) {
    AlgElem prod = A.multiply(ti, AlgElem::mono(3, m.index_word(j), CycRat(3, 1)));
    for (const auto& [w, c] : prod.terms()) {
      auto it = ta.col(j).find((int)m.word_index(w));
      REQUIRE(it != ta.col(j).end());
      CHECK(it->second == c);
    }
  }
}

TEST_CASE("integrality in the rescaled basis") {
  CHECK(no_fail(check_hkl_integrality(3, 1)));
  CHECK(no_fail(check_hkl_integrality(5, 1)));
  CHECK(check_u_basis_roundtrip(3, 1).status == CheckReport::Status::Pass);
  CHECK(check_u_basis_roundtrip(5, 1).status == CheckReport::Status::Pass);
  CHECK(check_u_basis_roundtrip(3, 2).status == CheckReport::Status::Pass);
}

TEST_CASE("adjoint equivariance") {
  CHECK(all_pass(check_adjoint_equivariance(3, 1)));
}

TEST_CASE("grading and unit scalars") {
  CHECK(all_pass(check_idempotent_grading(3, 1)));
  CHECK(all_pass(check_idempotent_grading(3, 2)));
  CHECK(all_pass(check_idempotent_grading(5, 1)));
}

TEST_CASE("mapping class relations at genus 2") {
  CHECK(all_pass(check_mcg_relations_hkl(3, 2)));
}
