#pragma once

#include <map>
#include <optional>
#include <vector>

#include "uqv/cyclotomic.hpp"

namespace uqv {

// Dense square-or-rectangular matrix over Q(zeta), row-major.
class CycMatrix {
public:
  CycMatrix() : r_(0), rows_(0), cols_(0) {}
  CycMatrix(int r, int rows, int cols);

  static CycMatrix identity(int r, int n);

  int zr() const { return r_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  CycRat& at(int i, int j) { return e_[i * cols_ + j]; }
  const CycRat& at(int i, int j) const { return e_[i * cols_ + j]; }

  CycMatrix operator+(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  CycMatrix operator*(const CycMatrix& o) const;  // OpenMP kernel
  CycMatrix scaled(const CycRat& s) const;
  bool operator==(const CycMatrix& o) const;

  // Serial reference kernel; same contract as operator*.
  CycMatrix multiply_serial(const CycMatrix& o) const;

  CycMatrix kron(const CycMatrix& o) const;

  // Gauss-Jordan over the field Q(zeta).
  std::optional<CycMatrix> inverse() const;
  CycRat determinant() const;

  bool all_integral() const;
  // First non-integral entry, if any.
  std::optional<std::pair<int, int>> first_non_integral() const;

  // Equality up to a global nonzero scalar in Q(zeta).
  bool proportional_to(const CycMatrix& o) const;

  bool is_upper_triangular() const;
  bool is_lower_triangular() const;

private:
  int r_, rows_, cols_;
  std::vector<CycRat> e_;
};

// Column-major sparse matrix over Q(zeta), for the r^(3g)-dimensional
// representations on tensor powers of the small quantum group.
class SparseMat {
public:
  SparseMat() : r_(0), n_(0) {}
  SparseMat(int r, int n) : r_(r), n_(n), cols_(n) {}

  static SparseMat identity(int r, int n);

  int zr() const { return r_; }
  int dim() const { return n_; }

  void add(int row, int col, const CycRat& v);
  const std::map<int, CycRat>& col(int j) const { return cols_[j]; }

  SparseMat operator*(const SparseMat& o) const;
  SparseMat operator-(const SparseMat& o) const;
  SparseMat scaled(const CycRat& s) const;
  bool is_zero() const;

  bool all_integral() const;
  std::optional<std::pair<int, int>> first_non_integral() const;
  bool proportional_to(const SparseMat& o) const;
  bool equals(const SparseMat& o) const;

  CycMatrix dense() const;

private:
  int r_, n_;
  std::vector<std::map<int, CycRat>> cols_;
};

}  // namespace uqv
