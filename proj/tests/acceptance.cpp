#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "uqv/appendix.hpp"
#include "uqv/hkl.hpp"
#include "uqv/pbw.hpp"
#include "uqv/qcomb.hpp"
#include "uqv/schroedinger.hpp"

#include "rewrite_oracle.hpp"

// One verdict line per acceptance criterion. A criterion passes when none of
// its checks fail (warnings are reported but not fatal).

using namespace uqv;

namespace {

struct Verdict {
  bool ok = true;
  int warns = 0;
  std::string first_witness;

  void absorb(const CheckReport& rep) {
    if (rep.status == CheckReport::Status::Warn) ++warns;
    if (rep.status != CheckReport::Status::Fail) return;
    if (ok) first_witness = rep.suite + "/" + rep.check + ": " + rep.witness;
    ok = false;
  }
  void absorb(const std::vector<CheckReport>& reps) {
    for (const auto& r : reps) absorb(r);
  }
  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) first_witness = what;
    ok = false;
  }
};

int finish(int n, const std::string& label, const Verdict& v,
           std::chrono::steady_clock::time_point t0) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cout << "criterion " << n << ": " << (v.ok ? "PASS" : "FAIL") << " — "
            << label << " (" << ms << " ms";
  if (v.warns) std::cout << ", " << v.warns << " warning(s)";
  std::cout << ")";
  if (!v.ok) std::cout << " [" << v.first_witness << "]";
  std::cout << "\n" << std::flush;
  return v.ok ? 0 : 1;
}

int criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  for (int r : {3, 5}) {
    v.absorb(check_hopf(r));
    v.absorb(check_ribbon(r));
    v.absorb(check_integral(r));
    v.absorb(UqAlgebra(r).drinfeld_check());
  }
  v.absorb(check_quasitriangular(3));
  return finish(1, "Hopf, ribbon, integral, and factorizability axioms (r = 3, 5)",
                v, t0);
}

int criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  for (int r : {3, 5, 7}) v.absorb(check_schro_triangularity(r));
  for (int r : {3, 5}) v.absorb(check_schro_gamma_triangularity(r));
  return finish(2, "triangular closed forms in the t basis (r = 3, 5, 7; gamma at genus 2)",
                v, t0);
}

int criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  for (int r : {3, 5, 7, 11}) {
    v.absorb(check_schro_integrality(r, 1));
    v.absorb(check_heisenberg_relations(r, 1));
  }
  for (int r : {3, 5}) {
    v.absorb(check_schro_integrality(r, 2));
    v.absorb(check_heisenberg_relations(r, 2));
  }
  return finish(3, "integral v' basis with unit determinants (r up to 11, genus up to 2)",
                v, t0);
}

int criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  v.absorb(check_hkl_integrality(3, 1));
  v.absorb(check_hkl_integrality(3, 2));
  v.absorb(check_hkl_integrality(5, 1));
  v.absorb(check_adjoint_equivariance(3, 1));
  v.absorb(check_adjoint_equivariance(3, 2));
  v.absorb(check_adjoint_equivariance(5, 1));
  return finish(4, "integral mapping class action on the quantum group side with exact equivariance",
                v, t0);
}

int criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  for (int r : {3, 5, 7})
    for (int g : {1, 2}) v.absorb(check_mcg_relations_psi(r, g));
  for (int g : {1, 2}) v.absorb(check_mcg_relations_hkl(3, g));
  return finish(5, "mapping class group relations up to scalar on both sides", v, t0);
}

int criterion6() {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  v.absorb(check_appendix_families(13, AppendixConfig::defaults(13)));
  for (int r : {3, 5, 7, 11, 13}) {
    v.absorb(check_vanishing_D(r));
    v.absorb(check_gauss_and_h(r));
    v.absorb(check_floor_inequalities(r));
  }
  return finish(6, "appendix polynomial identities, divisibility, and vanishing (r up to 13)",
                v, t0);
}

int criterion7() {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  {
    const int r = 3;
    UqAlgebra A(r);
    std::mt19937 rng(424243u);
    std::uniform_int_distribution<int> d(0, r - 1);
    for (int trial = 0; trial < 500 && v.ok; ++trial) {
      PBWMono a{d(rng), d(rng), d(rng)};
      PBWMono b{d(rng), d(rng), d(rng)};
      v.require(A.mono_product(a, b) == uqv_oracle::oracle_product(r, a, b),
                "product mismatch at " + mono_str(a) + " * " + mono_str(b));
    }
  }
  for (int r : {3, 5, 7})
    for (int g : {1, 2}) v.absorb(check_transition_roundtrip(r, g));
  v.absorb(check_u_basis_roundtrip(3, 1));
  v.absorb(check_u_basis_roundtrip(3, 2));
  v.absorb(check_u_basis_roundtrip(5, 1));
  return finish(7, "self-consistency: product probes and basis-change roundtrips", v, t0);
}

}  // namespace

int main() {
  int failures = 0;
  failures += criterion1();
  failures += criterion2();
  failures += criterion3();
  failures += criterion4();
  failures += criterion5();
  failures += criterion6();
  failures += criterion7();
  if (failures) std::cout << failures << " criterion(s) failed\n";
  else std::cout << "all acceptance criteria passed\n";
  return failures ? 1 : 0;
}
