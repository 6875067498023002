#pragma once

#include <map>
#include <utility>
#include <vector>

#include "uqv/pbw.hpp"
#include "uqv/qcomb.hpp"

// Independent multiplication oracle: expand idempotents into K-powers and
// divided powers into plain powers, straighten words in the letters
// E < K < X (X = F^(1)) with the defining relations
//   K E = zeta^2 E K,   K X = zeta^-2 X K,   X E = E X - K + K^(r-1),
//   E^r = X^r = 0,      K^r = 1,
// then convert the normal form E^a K^b X^c back to the idempotent basis.

namespace uqv_oracle {

enum Letter { LE = 0, LK = 1, LX = 2 };
using Word = std::vector<int>;

struct Term {
  Word w;
  uqv::CycRat c;
};

inline uqv::AlgElem straighten(int r, std::vector<Term> work) {
  using uqv::CycRat;
  uqv::CycContext ctx(r);
  std::map<std::pair<int, std::pair<int, int>>, CycRat> normal;
  while (!work.empty()) {
    Term t = std::move(work.back());
    work.pop_back();
    size_t i = 0;
    while (i + 1 < t.w.size() && t.w[i] <= t.w[i + 1]) ++i;
    if (i + 1 >= t.w.size()) {
      int a = 0, b = 0, c = 0;
      for (int l : t.w) (l == LE ? a : l == LK ? b : c)++;
      if (a >= r || c >= r) continue;
      auto key = std::make_pair(a, std::make_pair(b % r, c));
      auto it = normal.find(key);
      if (it == normal.end()) normal.emplace(key, t.c);
      else it->second += t.c;
      continue;
    }
    int x = t.w[i], y = t.w[i + 1];
    Word swapped = t.w;
    std::swap(swapped[i], swapped[i + 1]);
    if ((x == LK && y == LE) || (x == LX && y == LK)) {
      work.push_back({std::move(swapped), t.c * CycRat::zeta_pow(r, 2)});
    } else {  // X E = E X - K + K^(r-1)
      work.push_back({swapped, t.c});
      Word k1(t.w.begin(), t.w.begin() + i);
      k1.push_back(LK);
      k1.insert(k1.end(), t.w.begin() + i + 2, t.w.end());
      work.push_back({k1, -t.c});
      Word k2(t.w.begin(), t.w.begin() + i);
      for (int j = 0; j < r - 1; ++j) k2.push_back(LK);
      k2.insert(k2.end(), t.w.begin() + i + 2, t.w.end());
      work.push_back({std::move(k2), t.c});
    }
  }

  uqv::AlgElem out(r, 1);
  for (const auto& [key, coeff] : normal) {
    if (coeff.is_zero()) continue;
    auto [a, bc] = key;
    auto [b, c] = bc;
    CycRat fact(uqv::qint_factorial_at_zeta(c, ctx));
    for (int n = 0; n < r; ++n)
      out.add({uqv::PBWMono{a, n, c}}, coeff * fact * CycRat::zeta_pow(r, -2L * n * b));
  }
  return out;
}

inline uqv::AlgElem oracle_product(int r, const uqv::PBWMono& u, const uqv::PBWMono& v) {
  using uqv::CycRat;
  uqv::CycContext ctx(r);
  CycRat scale = CycRat(r, 1) /
                 (CycRat(r, r) * CycRat(r, r) *
                  CycRat(uqv::qint_factorial_at_zeta(u.f, ctx)) *
                  CycRat(uqv::qint_factorial_at_zeta(v.f, ctx)));
  std::vector<Term> work;
  for (int b1 = 0; b1 < r; ++b1)
    for (int b2 = 0; b2 < r; ++b2) {
      Word w;
      for (int i = 0; i < u.e; ++i) w.push_back(LE);
      for (int i = 0; i < b1; ++i) w.push_back(LK);
      for (int i = 0; i < u.f; ++i) w.push_back(LX);
      for (int i = 0; i < v.e; ++i) w.push_back(LE);
      for (int i = 0; i < b2; ++i) w.push_back(LK);
      for (int i = 0; i < v.f; ++i) w.push_back(LX);
      work.push_back(
          {std::move(w),
           scale * CycRat::zeta_pow(r, 2L * b1 * u.m + 2L * b2 * v.m)});
    }
  return straighten(r, std::move(work));
}

}  // namespace uqv_oracle
