#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "uqv/appendix.hpp"
#include "uqv/dumpfmt.hpp"
#include "uqv/hkl.hpp"
#include "uqv/pbw.hpp"
#include "uqv/qcomb.hpp"
#include "uqv/report.hpp"
#include "uqv/schroedinger.hpp"

namespace {

bool is_odd_prime(int r) {
  if (r < 3 || r % 2 == 0) return false;
  for (int d = 3; d * d <= r; d += 2)
    if (r % d == 0) return false;
  return true;
}

const std::set<std::string> kSuites = {
    "qcomb",          "hopf",
    "ribbon",         "integral",
    "factorizability", "schroedinger-triangularity",
    "schroedinger-integrality", "hkl-integrality",
    "hkl-equivariance", "mcg-relations",
    "appendix",       "grading",
    "all"};

void append(std::vector<uqv::CheckReport>& all, std::vector<uqv::CheckReport> more) {
  for (auto& r : more) all.push_back(std::move(r));
}

long pow_long(long b, long e) {
  long res = 1;
  while (e-- > 0) res *= b;
  return res;
}

int run_verify(int r, int genus, const std::set<std::string>& suites,
               const std::map<std::string, long>& ranges, const std::string& out_path) {
  using namespace uqv;
  auto want = [&](const std::string& s) { return suites.count("all") || suites.count(s); };

  AppendixConfig cfg = AppendixConfig::defaults(r);
  for (const auto& [fam, n] : ranges) {
    if (fam == "A") cfg.range_a = n;
    else if (fam == "B") cfg.range_b = n;
    else if (fam == "C") cfg.range_c = n;
    else if (fam == "D") cfg.range_d = n;
    else if (fam == "E") cfg.range_e = n;
    else if (fam == "P") cfg.range_p = n;
    else if (fam == "Q") cfg.range_q = n;
    else if (fam == "DIVC") cfg.div_c = n;
    else if (fam == "DIVD") cfg.div_d = n;
    else {
      std::cerr << "unknown family in --range: " << fam << "\n";
      return 2;
    }
  }

  std::vector<CheckReport> reports;
  if (want("qcomb")) append(reports, check_qcomb(r));
  if (want("hopf")) {
    append(reports, check_hopf(r));
    append(reports, check_quasitriangular(r));
  }
  if (want("ribbon")) append(reports, check_ribbon(r));
  if (want("integral")) append(reports, check_integral(r));
  if (want("factorizability")) reports.push_back(UqAlgebra(r).drinfeld_check());
  if (want("schroedinger-triangularity")) {
    append(reports, check_schro_triangularity(r));
    if (genus >= 2) reports.push_back(check_schro_gamma_triangularity(r));
  }
  if (want("schroedinger-integrality")) {
    append(reports, check_schro_integrality(r, genus));
    reports.push_back(check_transition_roundtrip(r, genus));
  }
  if (want("hkl-integrality")) {
    append(reports, check_hkl_integrality(r, genus));
    reports.push_back(check_u_basis_roundtrip(r, genus));
  }
  if (want("hkl-equivariance")) append(reports, check_adjoint_equivariance(r, genus));
  if (want("mcg-relations")) {
    append(reports, check_mcg_relations_psi(r, genus));
    append(reports, check_heisenberg_relations(r, genus));
    if (pow_long(r, 3L * genus) <= 729) append(reports, check_mcg_relations_hkl(r, genus));
  }
  if (want("appendix")) {
    append(reports, check_appendix_families(r, cfg));
    reports.push_back(check_vanishing_D(r));
    append(reports, check_gauss_and_h(r));
    append(reports, check_floor_inequalities(r));
  }
  if (want("grading")) append(reports, check_idempotent_grading(r, genus));

  std::string rendered = render_report(reports);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream os(out_path);
    if (!os) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return 2;
    }
    os << rendered;
  }

  int npass = 0, nfail = 0, nwarn = 0;
  for (const auto& rep : reports) {
    if (rep.status == CheckReport::Status::Fail) ++nfail;
    else if (rep.status == CheckReport::Status::Warn) ++nwarn;
    else ++npass;
  }
  std::cerr << "checks: " << npass << " pass, " << nwarn << " warn, " << nfail << " fail\n";
  return nfail ? 1 : 0;
}

int run_dump(int r, int genus, const std::string& spec, const std::string& out_path) {
  using namespace uqv;
  auto c1 = spec.find(':');
  auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    std::cerr << "--dump expects REP:GEN:BASIS\n";
    return 2;
  }
  std::string rep = spec.substr(0, c1);
  std::string gen = spec.substr(c1 + 1, c2 - c1 - 1);
  std::string basis = spec.substr(c2 + 1);

  CycMatrix m;
  std::string note = "fixed scalar representative; the group action is projective";
  if (rep == "psi" || rep == "heisenberg") {
    SBasis b;
    if (basis == "v") b = SBasis::V;
    else if (basis == "t") b = SBasis::T;
    else if (basis == "vprime") b = SBasis::VPrime;
    else {
      std::cerr << "unknown basis for " << rep << ": " << basis << "\n";
      return 2;
    }
    SGen sg;
    if (rep == "heisenberg" && gen == "alpha") sg = SGen::Alpha;
    else if (rep == "heisenberg" && gen == "beta") sg = SGen::Beta;
    else if (rep == "psi" && gen == "tau-alpha") sg = SGen::TauAlpha;
    else if (rep == "psi" && gen == "tau-beta") sg = SGen::TauBeta;
    else if (rep == "psi" && gen == "tau-gamma" && genus >= 2) sg = SGen::TauGamma;
    else {
      std::cerr << "invalid generator for " << rep << ": " << gen << "\n";
      return 2;
    }
    if (rep == "heisenberg") note = "Heisenberg action is exact (not projective)";
    m = SchroModel(r, genus).generator(sg, 0, b);
  } else if (rep == "hkl") {
    UBasis b;
    if (basis == "e1f") b = UBasis::E1F;
    else if (basis == "e1primef") b = UBasis::E1PrimeF;
    else {
      std::cerr << "unknown basis for hkl: " << basis << "\n";
      return 2;
    }
    HGen hg;
    if (gen == "tau-alpha") hg = HGen::TauAlpha;
    else if (gen == "tau-beta") hg = HGen::TauBeta;
    else if (gen == "tau-gamma" && genus >= 2) hg = HGen::TauGamma;
    else {
      std::cerr << "invalid generator for hkl: " << gen << "\n";
      return 2;
    }
    m = HklModel(r, genus).generator(hg, 0, b).dense();
  } else {
    std::cerr << "unknown representation: " << rep << "\n";
    return 2;
  }

  std::string text = render_matrix_dump(
      m, {{"r", std::to_string(r)},
          {"genus", std::to_string(genus)},
          {"rep", rep},
          {"generator", gen},
          {"basis", basis},
          {"scalar-note", note}});
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out_path);
    if (!os) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return 2;
    }
    os << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of quantum representations of mapping class groups"};
  app.require_subcommand(1);

  int r = 3, genus = 1, workers = 0;
  std::vector<std::string> suite_flags, range_flags;
  std::string out_path, dump_spec;

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--r", r, "odd prime order of the root of unity");
  verify->add_option("--genus", genus, "surface genus");
  verify->add_option("--suite", suite_flags, "suite name (repeatable)");
  verify->add_option("--range", range_flags, "per-family bound FAMILY=N (repeatable)");
  verify->add_option("--out", out_path, "report output path");
  verify->add_option("--workers", workers, "worker thread limit");

  CLI::App* dump = app.add_subcommand("dump", "dump one generator matrix exactly");
  dump->add_option("--r", r, "odd prime order of the root of unity");
  dump->add_option("--genus", genus, "surface genus");
  dump->add_option("--dump", dump_spec, "REP:GEN:BASIS selection")->required();
  dump->add_option("--out", out_path, "matrix output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!is_odd_prime(r)) {
    std::cerr << "--r must be an odd prime >= 3 (got " << r << ")\n";
    return 2;
  }
  if (genus < 1) {
    std::cerr << "--genus must be >= 1\n";
    return 2;
  }
#ifdef _OPENMP
  if (workers > 0) omp_set_num_threads(workers);
#endif

  try {
    if (app.got_subcommand(dump)) return run_dump(r, genus, dump_spec, out_path);

    std::set<std::string> suites(suite_flags.begin(), suite_flags.end());
    if (suites.empty()) suites.insert("all");
    for (const auto& s : suites)
      if (!kSuites.count(s)) {
        std::cerr << "unknown suite: " << s << "\n";
        return 2;
      }
    std::map<std::string, long> ranges;
    for (const auto& rf : range_flags) {
      auto eq = rf.find('=');
      if (eq == std::string::npos) {
        std::cerr << "--range expects FAMILY=N\n";
        return 2;
      }
      ranges[rf.substr(0, eq)] = std::stol(rf.substr(eq + 1));
    }
    return run_verify(r, genus, suites, ranges, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
