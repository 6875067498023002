#include "uqv/hkl.hpp"

#include <map>
#include <string>

#include "uqv/qcomb.hpp"

namespace uqv {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

long pow_long(long b, long e) {
  long res = 1;
  while (e-- > 0) res *= b;
  return res;
}

int local_index(const PBWMono& m, int r) { return (m.e * r + m.m) * r + m.f; }

PBWMono local_mono(int idx, int r) {
  PBWMono m;
  m.f = idx % r;
  idx /= r;
  m.m = idx % r;
  m.e = idx / r;
  return m;
}

void push(std::vector<CheckReport>& out, const std::string& suite, const std::string& check,
          bool ok, const std::string& witness, const Params& pr) {
  out.push_back(ok ? CheckReport::pass(suite, check, pr)
                   : CheckReport::fail(suite, check, witness, pr));
}

}  // namespace

HklModel::HklModel(int r, int g)
    : r_(r), g_(g), dim_(pow_long(r, 3L * g)), alg_(r) {}

long HklModel::word_index(const PBWWord& w) const {
  long idx = 0;
  for (int j = 0; j < g_; ++j) idx = idx * (r_ * r_ * r_) + local_index(w[j], r_);
  return idx;
}

PBWWord HklModel::index_word(long idx) const {
  PBWWord w(g_);
  const long block = r_ * r_ * r_;
  for (int j = g_ - 1; j >= 0; --j) {
    w[j] = local_mono(int(idx % block), r_);
    idx /= block;
  }
  return w;
}

SparseMat HklModel::one_factor_op(HGen gen) const {
  const int n = r_ * r_ * r_;
  if (gen == HGen::TauAlpha) {
    SparseMat m(r_, n);
    AlgElem thi = alg_.ribbon_inv();
    for (int b = 0; b < n; ++b) {
      PBWMono bm = local_mono(b, r_);
      for (const auto& [w, c] : thi.terms()) {
        AlgElem prod = alg_.mono_product(w[0], bm);
        for (const auto& [pw, pc] : prod.terms())
          m.add(local_index(pw[0], r_), b, c * pc);
      }
    }
    return m;
  }
  if (gen == HGen::TauBeta) {
    SparseMat m(r_, n);
    AlgElem dth = alg_.coproduct(alg_.ribbon());
    // precompute S(theta_(1)) per coproduct term
    std::vector<std::tuple<AlgElem, PBWMono, CycRat>> entries;
    for (const auto& [w, c] : dth.terms())
      entries.emplace_back(alg_.antipode(AlgElem::mono(r_, {w[0]}, CycRat(r_, 1))), w[1], c);
    for (int b = 0; b < n; ++b) {
      PBWMono bm = local_mono(b, r_);
      for (const auto& [s0, w1, c] : entries) {
        CycRat s = alg_.integral_lambda_rescaled(alg_.mono_product(w1, bm)) * c;
        if (s.is_zero()) continue;
        for (const auto& [sw, sc] : s0.terms()) m.add(local_index(sw[0], r_), b, s * sc);
      }
    }
    return m;
  }
  // tau_gamma on two factors
  const int n2 = n * n;
  SparseMat m(r_, n2);
  AlgElem dthi = alg_.coproduct(alg_.ribbon_inv());
  for (const auto& [w, c] : dthi.terms()) {
    AlgElem s0 = alg_.antipode(AlgElem::mono(r_, {w[0]}, CycRat(r_, 1)));
    std::vector<AlgElem> left(n), right(n);
    for (int b = 0; b < n; ++b) {
      PBWMono bm = local_mono(b, r_);
      AlgElem lv(r_, 1);
      for (const auto& [sw, sc] : s0.terms()) {
        AlgElem p = alg_.mono_product(bm, sw[0]);
        for (const auto& [pw, pc] : p.terms()) lv.add(pw, sc * pc);
      }
      left[b] = lv;
      right[b] = alg_.mono_product(w[1], bm);
    }
    for (int b1 = 0; b1 < n; ++b1) {
      if (left[b1].is_zero()) continue;
      for (int b2 = 0; b2 < n; ++b2)
        for (const auto& [lw, lc] : left[b1].terms())
          for (const auto& [rw, rc] : right[b2].terms())
            m.add(local_index(lw[0], r_) * n + local_index(rw[0], r_), b1 * n + b2,
                  c * lc * rc);
    }
  }
  return m;
}

SparseMat HklModel::embed(const SparseMat& op, int j, int span) const {
  const long block = pow_long(r_, 3L * span);
  const long slow = pow_long(r_, 3L * (g_ - j - span));
  const long shi = dim_ / (block * slow);
  SparseMat res(r_, int(dim_));
  for (long hi = 0; hi < shi; ++hi)
    for (long lcol = 0; lcol < block; ++lcol) {
      const auto& col = op.col(int(lcol));
      if (col.empty()) continue;
      for (long lo = 0; lo < slow; ++lo) {
        long gcol = (hi * block + lcol) * slow + lo;
        for (const auto& [lrow, v] : col)
          res.add(int((hi * block + lrow) * slow + lo), int(gcol), v);
      }
    }
  return res;
}

SparseMat HklModel::t_transform(bool inverse) const {
  const int n = r_ * r_ * r_;
  CycContext ctx(r_);
  // per-factor substitution on the idempotent index
  SparseMat l1(r_, n);
  for (int e = 0; e < r_; ++e)
    for (int m = 0; m < r_; ++m)
      for (int f = 0; f < r_; ++f)
        for (int k = 0; k <= m; ++k) {
          CycRat c;
          if (!inverse) {
            c = CycRat::zeta_pow(r_, long(m - k) * (m - 1)) *
                CycRat(qbinom_at_zeta(m, k, ctx));
            if ((m - k) % 2) c = -c;
          } else {
            c = CycRat::zeta_pow(r_, long(k) * (m - k)) * CycRat(qbinom_at_zeta(m, k, ctx));
          }
          l1.add((e * r_ + k) * r_ + f, (e * r_ + m) * r_ + f, c);
        }
  SparseMat p = SparseMat::identity(r_, int(dim_));
  for (int j = 0; j < g_; ++j) p = p * embed(l1, j, 1);

  CycRat h = CycRat(h_zeta(ctx));
  CycRat hinv = h.inverse();
  SparseMat d(r_, int(dim_));
  for (long idx = 0; idx < dim_; ++idx) {
    long rest = idx, s = 0;
    for (int j = 0; j < g_; ++j) {
      s += (rest / r_) % r_;
      rest /= r_ * r_ * r_;
    }
    CycRat sc(r_, 1);
    const CycRat& base = inverse ? h : hinv;
    for (long i = 0; i < s / 2; ++i) sc = sc * base;
    d.add(int(idx), int(idx), sc);
  }
  return inverse ? d * p : p * d;
}

SparseMat HklModel::transition(UBasis from, UBasis to) const {
  if (from == to) return SparseMat::identity(r_, int(dim_));
  return from == UBasis::E1PrimeF ? t_transform(false) : t_transform(true);
}

SparseMat HklModel::generator(HGen gen, int j, UBasis basis) const {
  int span = gen == HGen::TauGamma ? 2 : 1;
  SparseMat m = embed(one_factor_op(gen), j, span);
  if (basis == UBasis::E1PrimeF) m = t_transform(true) * m * t_transform(false);
  return m;
}

SparseMat HklModel::adjoint_matrix(const AlgElem& x) const {
  AlgElem legs = alg_.iterated_coproduct(x, 2 * g_);
  // memoized antipodes of the odd-leg monomials
  std::map<PBWMono, AlgElem> anti;
  for (const auto& [lw, lc] : legs.terms())
    for (int j = 0; j < g_; ++j) {
      const PBWMono& s = lw[2 * j + 1];
      if (!anti.count(s)) anti[s] = alg_.antipode(AlgElem::mono(r_, {s}, CycRat(r_, 1)));
    }
  SparseMat res(r_, int(dim_));
  for (long idx = 0; idx < dim_; ++idx) {
    PBWWord w = index_word(idx);
    for (const auto& [lw, lc] : legs.terms()) {
      std::vector<AlgElem> parts(g_);
      bool dead = false;
      for (int j = 0; j < g_ && !dead; ++j) {
        AlgElem left = alg_.mono_product(lw[2 * j], w[j]);
        AlgElem part(r_, 1);
        for (const auto& [a, ca] : left.terms())
          for (const auto& [b, cb] : anti[lw[2 * j + 1]].terms()) {
            AlgElem p = alg_.mono_product(a[0], b[0]);
            for (const auto& [pw, pc] : p.terms()) part.add(pw, ca * cb * pc);
          }
        parts[j] = part;
        dead = part.is_zero();
      }
      if (dead) continue;
      // cartesian expansion over the factors
      std::vector<std::map<PBWWord, CycRat>::const_iterator> its(g_);
      for (int j = 0; j < g_; ++j) its[j] = parts[j].terms().begin();
      while (true) {
        PBWWord nw(g_);
        CycRat v = lc;
        for (int j = 0; j < g_; ++j) {
          nw[j] = its[j]->first[0];
          v = v * its[j]->second;
        }
        res.add(int(word_index(nw)), int(idx), v);
        int j = g_ - 1;
        while (j >= 0) {
          if (++its[j] != parts[j].terms().end()) break;
          its[j] = parts[j].terms().begin();
          --j;
        }
        if (j < 0) break;
      }
    }
  }
  return res;
}

CycRat HklModel::phi_scalar(const std::vector<int>& a, const std::vector<int>& b,
                            const std::vector<int>& n) const {
  long exp = 0;
  for (int i = 0; i < g_; ++i)
    for (int j = i + 1; j < g_; ++j) exp += 2L * (a[i] + b[i]) * (a[j] + b[j]);
  for (int k = 0; k < g_; ++k) {
    long ak = a[k], bk = b[k], nk = n[k];
    exp += 2 * (ak + bk) * k + ak * (ak - 1) / 2 + 2 * ak * bk - 2 * (bk - 1) * nk;
  }
  return CycRat::zeta_pow(r_, exp);
}

PBWWord HklModel::phi_word(const std::vector<int>& a, const std::vector<int>& b,
                           const std::vector<int>& n) const {
  PBWWord w(g_);
  for (int j = 0; j < g_; ++j) {
    w[j].e = r_ - 1 - b[g_ - 1 - j];
    w[j].m = n[g_ - 1 - j];
    w[j].f = a[g_ - 1 - j];
  }
  return w;
}

std::vector<CheckReport> check_hkl_integrality(int r, int g) {
  std::vector<CheckReport> out;
  HklModel model(r, g);

  struct Item {
    HGen gen;
    int j;
    const char* name;
  };
  std::vector<Item> items;
  for (int j = 0; j < g; ++j) {
    items.push_back({HGen::TauAlpha, j, "tau-alpha"});
    items.push_back({HGen::TauBeta, j, "tau-beta"});
  }
  for (int j = 0; j + 1 < g; ++j) items.push_back({HGen::TauGamma, j, "tau-gamma"});

  for (const auto& it : items) {
    Params pr = {{"r", std::to_string(r)}, {"g", std::to_string(g)},
                 {"j", std::to_string(it.j)}};
    SparseMat m = model.generator(it.gen, it.j, UBasis::E1PrimeF);
    std::string check = std::string(it.name) + "-e1primef";
    if (auto bad = m.first_non_integral()) {
      out.push_back(CheckReport::fail("hkl-integrality", check,
                                      "non-integral entry at (" +
                                          std::to_string(bad->first) + "," +
                                          std::to_string(bad->second) + ")",
                                      pr));
    } else {
      out.push_back(CheckReport::pass("hkl-integrality", check, pr));
    }

    std::string det_check = std::string(it.name) + "-determinant";
    if (model.dim() > 125) {
      out.push_back(
          CheckReport::warn("hkl-integrality", det_check, "determinant not computed", pr));
    } else {
      CycRat det = m.dense().determinant();
      if (det.is_integral() && is_unit(det.num())) {
        out.push_back(CheckReport::pass("hkl-integrality", det_check, pr));
      } else if (det.is_zero()) {
        out.push_back(CheckReport::fail("hkl-integrality", det_check, "determinant is zero",
                                        pr));
      } else {
        long val = 0;
        while (val < 8L * r * model.dim()) {
          CycRat q = divide_exact_h_zeta(det, unsigned(val + 1));
          if (!q.is_integral()) break;
          ++val;
        }
        out.push_back(CheckReport::warn(
            "hkl-integrality", det_check,
            "determinant not a unit, h-valuation " + std::to_string(val), pr));
      }
    }
  }
  return out;
}

std::vector<CheckReport> check_adjoint_equivariance(int r, int g) {
  std::vector<CheckReport> out;
  HklModel model(r, g);

  AlgElem e_elem(r, 1), f_elem(r, 1);
  for (int m = 0; m < r; ++m) {
    e_elem.add({PBWMono{1, m, 0}}, CycRat(r, 1));
    f_elem.add({PBWMono{0, m, 1}}, CycRat(r, 1));
  }
  std::vector<std::pair<std::string, SparseMat>> ad;
  ad.emplace_back("E", model.adjoint_matrix(e_elem));
  ad.emplace_back("F1", model.adjoint_matrix(f_elem));
  for (int m = 0; m < r; ++m)
    ad.emplace_back("1_" + std::to_string(m),
                    model.adjoint_matrix(AlgElem::mono(r, {PBWMono{0, m, 0}}, CycRat(r, 1))));

  struct Item {
    HGen gen;
    int j;
    const char* name;
  };
  std::vector<Item> items;
  for (int j = 0; j < g; ++j) {
    items.push_back({HGen::TauAlpha, j, "tau-alpha"});
    items.push_back({HGen::TauBeta, j, "tau-beta"});
  }
  for (int j = 0; j + 1 < g; ++j) items.push_back({HGen::TauGamma, j, "tau-gamma"});

  for (const auto& it : items) {
    Params pr = {{"r", std::to_string(r)}, {"g", std::to_string(g)},
                 {"j", std::to_string(it.j)}};
    SparseMat m = model.generator(it.gen, it.j, UBasis::E1F);
    bool ok = true;
    std::string w;
    for (const auto& [name, am] : ad)
      if (!(m * am).equals(am * m)) {
        ok = false;
        w = "fails to commute with adjoint " + name;
        break;
      }
    push(out, "hkl-equivariance", std::string(it.name) + "-adjoint", ok, w, pr);
  }
  return out;
}

std::vector<CheckReport> check_mcg_relations_hkl(int r, int g) {
  std::vector<CheckReport> out;
  const Params pr = {{"r", std::to_string(r)}, {"g", std::to_string(g)}};
  HklModel model(r, g);

  struct Gen {
    std::string name;
    SparseMat m;
  };
  std::vector<Gen> gens;
  for (int j = 0; j < g; ++j) {
    gens.push_back({"ta" + std::to_string(j), model.generator(HGen::TauAlpha, j, UBasis::E1F)});
    gens.push_back({"tb" + std::to_string(j), model.generator(HGen::TauBeta, j, UBasis::E1F)});
  }
  for (int j = 0; j + 1 < g; ++j)
    gens.push_back({"tg" + std::to_string(j), model.generator(HGen::TauGamma, j, UBasis::E1F)});

  auto braid_pair = [&](const std::string& a, const std::string& b) {
    for (int j = 0; j < g; ++j) {
      std::string sj = std::to_string(j);
      if (a == "ta" + sj && b == "tb" + sj) return true;
      if (a == "tb" + sj && b == "tg" + sj) return true;
      if (a == "tg" + sj && b == "tb" + std::to_string(j + 1)) return true;
    }
    return false;
  };

  bool braid_ok = true, comm_ok = true;
  std::string braid_w, comm_w;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      const SparseMat& a = gens[i].m;
      const SparseMat& b = gens[j].m;
      bool braid = braid_pair(gens[i].name, gens[j].name) ||
                   braid_pair(gens[j].name, gens[i].name);
      if (braid) {
        if (!(a * b * a).proportional_to(b * a * b) && braid_ok) {
          braid_ok = false;
          braid_w = gens[i].name + "," + gens[j].name;
        }
      } else if (!(a * b).proportional_to(b * a) && comm_ok) {
        comm_ok = false;
        comm_w = gens[i].name + "," + gens[j].name;
      }
    }
  push(out, "mcg-relations", "hkl-braid", braid_ok, braid_w, pr);
  push(out, "mcg-relations", "hkl-commuting", comm_ok, comm_w, pr);
  return out;
}

std::vector<CheckReport> check_idempotent_grading(int r, int g) {
  std::vector<CheckReport> out;
  const Params pr = {{"r", std::to_string(r)}, {"g", std::to_string(g)}};
  HklModel model(r, g);

  bool grade_ok = true;
  std::string grade_w;
  for (int m = 0; m < r && grade_ok; ++m) {
    SparseMat ad =
        model.adjoint_matrix(AlgElem::mono(r, {PBWMono{0, m, 0}}, CycRat(r, 1)));
    for (long idx = 0; idx < model.dim(); ++idx) {
      PBWWord w = model.index_word(idx);
      long grade = 0;
      for (const auto& mm : w) grade += mm.f - mm.e;
      bool hit = ((grade % r) + r) % r == m;
      const auto& col = ad.col(int(idx));
      bool ok = hit ? (col.size() == 1 && col.count(int(idx)) &&
                       col.at(int(idx)) == CycRat(r, 1))
                    : col.empty();
      if (!ok) {
        grade_ok = false;
        grade_w = "1_" + std::to_string(m) + " on " + word_str(w);
        break;
      }
    }
  }
  push(out, "grading", "idempotent-grading", grade_ok, grade_w, pr);

  bool phi_ok = true;
  std::string phi_w;
  std::vector<char> seen(model.dim(), 0);
  std::vector<int> a(g), b(g), n(g);
  long total = 1;
  for (int j = 0; j < 3 * g; ++j) total *= r;
  for (long code = 0; code < total && phi_ok; ++code) {
    long rest = code;
    for (int j = 0; j < g; ++j) {
      a[j] = int(rest % r);
      rest /= r;
      b[j] = int(rest % r);
      rest /= r;
      n[j] = int(rest % r);
      rest /= r;
    }
    CycRat nz = model.phi_scalar(a, b, n);
    if (!(nz.is_integral() && is_unit(nz.num()))) {
      phi_ok = false;
      phi_w = "non-unit Phi scalar";
      break;
    }
    long idx = model.word_index(model.phi_word(a, b, n));
    if (seen[idx]) {
      phi_ok = false;
      phi_w = "Phi target hit twice";
      break;
    }
    seen[idx] = 1;
  }
  push(out, "grading", "phi-unit-scalars", phi_ok, phi_w, pr);
  return out;
}

CheckReport check_u_basis_roundtrip(int r, int g) {
  const Params pr = {{"r", std::to_string(r)}, {"g", std::to_string(g)}};
  HklModel model(r, g);
  SparseMat fwd = model.transition(UBasis::E1PrimeF, UBasis::E1F);
  SparseMat bwd = model.transition(UBasis::E1F, UBasis::E1PrimeF);
  SparseMat id = SparseMat::identity(r, int(model.dim()));
  bool ok = (fwd * bwd).equals(id) && (bwd * fwd).equals(id);
  return ok ? CheckReport::pass("hkl-integrality", "basis-roundtrip", pr)
            : CheckReport::fail("hkl-integrality", "basis-roundtrip",
                                "roundtrip is not identity", pr);
}

}  // namespace uqv
