#include "uqv/matrix.hpp"

#include <stdexcept>

namespace uqv {

CycMatrix::CycMatrix(int r, int rows, int cols)
    : r_(r), rows_(rows), cols_(cols), e_(size_t(rows) * cols, CycRat(CycInt(r))) {}

CycMatrix CycMatrix::identity(int r, int n) {
  CycMatrix m(r, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = CycRat(r, 1);
  return m;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
  CycMatrix m(r_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
  CycMatrix m(r_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
  return m;
}

CycMatrix CycMatrix::multiply_serial(const CycMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  CycMatrix m(r_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const CycRat& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const CycRat& b = o.at(k, j);
        if (b.is_zero()) continue;
        m.at(i, j) += a * b;
      }
    }
  return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  CycMatrix m(r_, rows_, o.cols_);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const CycRat& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const CycRat& b = o.at(k, j);
        if (b.is_zero()) continue;
        m.at(i, j) += a * b;
      }
    }
  return m;
}

CycMatrix CycMatrix::scaled(const CycRat& s) const {
  CycMatrix m(r_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * s;
  return m;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

CycMatrix CycMatrix::kron(const CycMatrix& o) const {
  CycMatrix m(r_, rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (int k = 0; k < o.rows_; ++k)
        for (int l = 0; l < o.cols_; ++l)
          m.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
    }
  return m;
}

std::optional<CycMatrix> CycMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  int n = rows_;
  CycMatrix a = *this;
  CycMatrix inv = identity(r_, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!a.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    CycRat pinv = a.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = a.at(col, j) * pinv;
      inv.at(col, j) = inv.at(col, j) * pinv;
    }
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      CycRat f = a.at(i, col);
      for (int j = 0; j < n; ++j) {
        if (!a.at(col, j).is_zero()) a.at(i, j) += -(f * a.at(col, j));
        if (!inv.at(col, j).is_zero()) inv.at(i, j) += -(f * inv.at(col, j));
      }
    }
  }
  return inv;
}

CycRat CycMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  int n = rows_;
  CycMatrix a = *this;
  CycRat det(r_, 1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!a.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return CycRat(r_, 0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      det = -det;
    }
    det = det * a.at(col, col);
    CycRat pinv = a.at(col, col).inverse();
#pragma omp parallel for schedule(dynamic)
    for (int i = col + 1; i < n; ++i) {
      if (a.at(i, col).is_zero()) continue;
      CycRat f = a.at(i, col) * pinv;
      for (int j = col; j < n; ++j)
        if (!a.at(col, j).is_zero()) a.at(i, j) += -(f * a.at(col, j));
    }
  }
  return det;
}

bool CycMatrix::all_integral() const { return !first_non_integral().has_value(); }

std::optional<std::pair<int, int>> CycMatrix::first_non_integral() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_integral()) return std::make_pair(i, j);
  return std::nullopt;
}

bool CycMatrix::proportional_to(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  // locate first nonzero entry of each; the ratio must be global
  int fi = -1, fj = -1;
  for (int i = 0; i < rows_ && fi < 0; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) {
        fi = i;
        fj = j;
        break;
      }
  if (fi < 0) {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!o.at(i, j).is_zero()) return false;
    return true;
  }
  if (o.at(fi, fj).is_zero()) return false;
  CycRat s = o.at(fi, fj) / at(fi, fj);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!(at(i, j) * s == o.at(i, j))) return false;
  return true;
}

bool CycMatrix::is_upper_triangular() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < i && j < cols_; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

bool CycMatrix::is_lower_triangular() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

SparseMat SparseMat::identity(int r, int n) {
  SparseMat m(r, n);
  for (int i = 0; i < n; ++i) m.cols_[i][i] = CycRat(r, 1);
  return m;
}

void SparseMat::add(int row, int col, const CycRat& v) {
  if (v.is_zero()) return;
  auto& c = cols_[col];
  auto it = c.find(row);
  if (it == c.end()) {
    c[row] = v;
  } else {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
  SparseMat m(r_, n_);
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < n_; ++j) {
    std::map<int, CycRat> acc;
    for (const auto& [k, b] : o.cols_[j])
      for (const auto& [i, a] : cols_[k]) {
        auto it = acc.find(i);
        if (it == acc.end())
          acc[i] = a * b;
        else
          it->second += a * b;
      }
    for (auto it = acc.begin(); it != acc.end();)
      it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    m.cols_[j] = std::move(acc);
  }
  return m;
}

SparseMat SparseMat::operator-(const SparseMat& o) const {
  SparseMat m = *this;
  for (int j = 0; j < n_; ++j)
    for (const auto& [i, v] : o.cols_[j]) m.add(i, j, -v);
  return m;
}

SparseMat SparseMat::scaled(const CycRat& s) const {
  SparseMat m(r_, n_);
  for (int j = 0; j < n_; ++j)
    for (const auto& [i, v] : cols_[j]) m.add(i, j, v * s);
  return m;
}

bool SparseMat::is_zero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

bool SparseMat::all_integral() const { return !first_non_integral().has_value(); }

std::optional<std::pair<int, int>> SparseMat::first_non_integral() const {
  for (int j = 0; j < n_; ++j)
    for (const auto& [i, v] : cols_[j])
      if (!v.is_integral()) return std::make_pair(i, j);
  return std::nullopt;
}

bool SparseMat::proportional_to(const SparseMat& o) const {
  if (n_ != o.n_) return false;
  int fj = -1, fi = -1;
  for (int j = 0; j < n_ && fj < 0; ++j)
    if (!cols_[j].empty()) {
      fj = j;
      fi = cols_[j].begin()->first;
    }
  if (fj < 0) return o.is_zero();
  auto it = o.cols_[fj].find(fi);
  if (it == o.cols_[fj].end()) return false;
  CycRat s = it->second / cols_[fj].at(fi);
  return scaled(s).equals(o);
}

bool SparseMat::equals(const SparseMat& o) const {
  if (n_ != o.n_) return false;
  for (int j = 0; j < n_; ++j)
    if (cols_[j] != o.cols_[j]) return false;
  return true;
}

CycMatrix SparseMat::dense() const {
  CycMatrix m(r_, n_, n_);
  for (int j = 0; j < n_; ++j)
    for (const auto& [i, v] : cols_[j]) m.at(i, j) = v;
  return m;
}

}  // namespace uqv
