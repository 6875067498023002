#include <random>

#include "doctest.h"
#include "uqv/matrix.hpp"

using namespace uqv;

namespace {

CycRat random_entry(int r, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), den(1, 5);
  CycInt n(r);
  for (int i = 0; i < r - 1; ++i) n[i] = coef(rng);
  return CycRat(n, mpz_class(den(rng)));
}

CycMatrix random_matrix(int r, int n, std::mt19937& rng) {
  CycMatrix m(r, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = random_entry(r, rng);
  return m;
}

}  // namespace

TEST_CASE("dense basics") {
  CycMatrix id = CycMatrix::identity(3, 4);
  std::mt19937 rng(11);
  CycMatrix a = random_matrix(3, 4, rng);
  CHECK(a * id == a);
  CHECK(id * a == a);
  CHECK(a - a == CycMatrix(3, 4, 4));
  CHECK(a + a == a.scaled(CycRat(3, 2)));
}

TEST_CASE("parallel multiply matches serial reference") {
  std::mt19937 rng(23);
  for (int n : {3, 7, 12}) {
    CycMatrix a = random_matrix(5, n, rng);
    CycMatrix b = random_matrix(5, n, rng);
    CHECK(a * b == a.multiply_serial(b));
  }
}

TEST_CASE("kronecker product") {
  std::mt19937 rng(37);
  CycMatrix a = random_matrix(3, 2, rng);
  CycMatrix b = random_matrix(3, 3, rng);
  CycMatrix k = a.kron(b);
  CHECK(k.rows() == 6);
  CHECK(k.cols() == 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(k.at(i, j) == a.at(i / 3, j / 3) * b.at(i % 3, j % 3));
  // mixed-product property
  CycMatrix c = random_matrix(3, 2, rng);
  CycMatrix d = random_matrix(3, 3, rng);
  CHECK(a.kron(b) * c.kron(d) == (a * c).kron(b * d));
}

TEST_CASE("inverse and determinant") {
  std::mt19937 rng(41);
  CycMatrix a = random_matrix(5, 4, rng);
  auto inv = a.inverse();
  if (inv) {
    CHECK(a * *inv == CycMatrix::identity(5, 4));
    CHECK(*inv * a == CycMatrix::identity(5, 4));
  }
  CycMatrix m(3, 2, 2);
  m.at(0, 0) = CycRat(3, 2);
  m.at(0, 1) = CycRat::zeta_pow(3, 1);
  m.at(1, 0) = CycRat(3, 1);
  m.at(1, 1) = CycRat(3, 3);
  CHECK(m.determinant() == CycRat(3, 6) - CycRat::zeta_pow(3, 1));
  CycMatrix sing(3, 2, 2);
  sing.at(0, 0) = sing.at(0, 1) = sing.at(1, 0) = sing.at(1, 1) = CycRat(3, 1);
  CHECK(!sing.inverse().has_value());
  CHECK(sing.determinant().is_zero());
}

TEST_CASE("integrality scan") {
  CycMatrix m = CycMatrix::identity(5, 3);
  CHECK(m.all_integral());
  CHECK(!m.first_non_integral().has_value());
  m.at(1, 2) = CycRat(CycInt(5, 1), mpz_class(2));
  CHECK(!m.all_integral());
  auto w = m.first_non_integral();
  REQUIRE(w.has_value());
  CHECK(w->first == 1);
  CHECK(w->second == 2);
}

TEST_CASE("proportionality on random rescalings") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 8; ++trial) {
    CycMatrix a = random_matrix(5, 5, rng);
    CycRat s;
    do { s = random_entry(5, rng); } while (s.is_zero());
    CHECK(a.proportional_to(a.scaled(s)));
    CHECK(a.scaled(s).proportional_to(a));
    CycMatrix b = a.scaled(s);
    b.at(2, 3) += CycRat(5, 1);
    CHECK(!a.proportional_to(b));
  }
  CycMatrix z(5, 3, 3);
  CHECK(z.proportional_to(z));
  CHECK(!z.proportional_to(CycMatrix::identity(5, 3)));
}

TEST_CASE("triangular predicates") {
  CycMatrix up(3, 3, 3);
  up.at(0, 0) = up.at(0, 2) = up.at(1, 1) = up.at(2, 2) = CycRat(3, 1);
  CHECK(up.is_upper_triangular());
  CHECK(!up.is_lower_triangular());
  CycMatrix lo(3, 3, 3);
  lo.at(0, 0) = lo.at(2, 0) = lo.at(1, 1) = lo.at(2, 2) = CycRat(3, 1);
  CHECK(lo.is_lower_triangular());
  CHECK(!lo.is_upper_triangular());
}

TEST_CASE("sparse matches dense") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> idx(0, 5);
  SparseMat a(5, 6), b(5, 6);
  for (int k = 0; k < 12; ++k) {
    a.add(idx(rng), idx(rng), random_entry(5, rng));
    b.add(idx(rng), idx(rng), random_entry(5, rng));
  }
  CHECK((a * b).dense() == a.dense() * b.dense());
  CHECK((a - b).dense() == a.dense() - b.dense());
  CycRat s = CycRat::zeta_pow(5, 2);
  CHECK(a.scaled(s).dense() == a.dense().scaled(s));
  CHECK((a - a).is_zero());
  CHECK(a.equals(a));
  CHECK(!a.equals(b));
  CHECK(SparseMat::identity(5, 6).dense() == CycMatrix::identity(5, 6));
  CHECK(a.proportional_to(a.scaled(s)));
  CHECK(a.all_integral() == a.dense().all_integral());
}
