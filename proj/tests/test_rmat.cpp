#include "qgauss/rmatrix.hpp"

#include <doctest.h>

#include <tuple>

using namespace qgauss;

namespace {

const QScalar q = QScalar::q(1);
const QScalar lam = QScalar::lambda();

std::size_t count_equal(const ScalarMatrix& m, const QScalar& v) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, x] : m.row(i)) n += x == v;
  return n;
}

} // namespace

TEST_CASE("GL R-matrices") {
  RMatrixSpec r2 = build_gl(2);
  CHECK(r2.entries.nonzeros() == 5);
  CHECK(r2.at(1, 1, 1, 1) == q);
  CHECK(r2.at(1, 2, 1, 2) == QScalar(1));
  CHECK(r2.at(2, 1, 2, 1) == QScalar(1));
  CHECK(r2.at(2, 2, 2, 2) == q);
  CHECK(r2.at(2, 1, 1, 2) == lam);

  RMatrixSpec r1 = build_gl(1);
  CHECK(r1.entries.nonzeros() == 1);
  CHECK(r1.at(1, 1, 1, 1) == q);

  RMatrixSpec r3 = build_gl(3);
  CHECK(count_equal(r3.entries, q) == 3);
  CHECK(count_equal(r3.entries, QScalar(1)) == 6);
  CHECK(count_equal(r3.entries, lam) == 3);
  CHECK(r3.entries.nonzeros() == 12);
  // brute-force evaluation of the defining formula
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int p = 1; p <= 3; ++p)
        for (int s = 1; s <= 3; ++s) {
          QScalar expect;
          if (m == p && n == s) expect += m == n ? q : QScalar(1);
          if (m > n && n == p && m == s) expect += lam;
          CHECK(r3.at(m, n, p, s) == expect);
        }

  for (int n = 1; n <= 4; ++n) {
    auto ev = build_gl(n).entries.eval(1);
    for (std::size_t i = 0; i < ev.size(); ++i)
      for (std::size_t j = 0; j < ev.size(); ++j) CHECK(ev[i][j] == (i == j ? 1 : 0));
  }
}

TEST_CASE("Sp_q(2) R-matrix matches the 16x16 display") {
  const QScalar X = QScalar(1) + QScalar::q(-2);
  const QScalar Y = QScalar(1) + QScalar::q(-4);
  const QScalar qi = QScalar::q(-1);
  const std::vector<std::tuple<int, int, QScalar>> expected = {
      {1, 1, q},          {2, 2, 1},        {3, 3, 1},          {4, 4, qi},
      {5, 2, lam},        {5, 5, 1},        {6, 6, q},          {7, 4, -lam * qi},
      {7, 7, qi},         {8, 8, 1},        {9, 3, lam},        {9, 9, 1},
      {10, 4, lam * QScalar::q(-3)},        {10, 7, lam * X},   {10, 10, qi},
      {11, 11, q},        {12, 12, 1},      {13, 4, lam * Y},   {13, 7, lam * QScalar::q(-3)},
      {13, 10, -lam * qi}, {13, 13, qi},    {14, 8, lam},       {14, 14, 1},
      {15, 12, lam},      {15, 15, 1},      {16, 16, q},
  };
  RMatrixSpec r = build_bcd(Series::C, 2);
  CHECK(r.dimension == 4);
  CHECK(r.entries.nonzeros() == expected.size());
  for (const auto& [i, j, v] : expected) CHECK(r.entries.at(i - 1, j - 1) == v);
  REQUIRE(r.bcd);
  CHECK(r.bcd->eps == std::vector<int>{1, 1, -1, -1});
}

TEST_CASE("SO_q(3) R-matrix") {
  RMatrixSpec r = build_bcd(Series::B, 1);
  CHECK(r.dimension == 3);
  CHECK(r.at(2, 2, 2, 2) == QScalar(1));
  CMatrixSpec c = build_c_matrix(r);
  // C_ij = (-q)^{i-2} delta_{ij'}
  CHECK(c.entries.at(0, 2) == -QScalar::q(-1));
  CHECK(c.entries.at(1, 1) == QScalar(1));
  CHECK(c.entries.at(2, 0) == -QScalar::q(1));
  CHECK(c.entries.nonzeros() == 3);
  CHECK_THROWS(build_bcd(Series::D, 3));
}

TEST_CASE("super GL R-matrices") {
  RMatrixSpec r11 = build_super_gl(1, 1);
  CHECK(r11.grading == std::vector<int>{0, 1});
  CHECK(r11.at(1, 1, 1, 1) == q);
  CHECK(r11.at(2, 2, 2, 2) == QScalar::q(-1));
  CHECK(r11.at(2, 1, 1, 2) == lam);
  CHECK(r11.entries.nonzeros() == 5);
  CHECK(r11.is_even());

  RMatrixSpec r21 = build_super_gl(2, 1);
  const std::vector<QScalar> diag = {q, 1, 1, 1, q, 1, 1, 1, QScalar::q(-1)};
  for (std::size_t i = 0; i < 9; ++i) CHECK(r21.entries.at(i, i) == diag[i]);
  CHECK(count_equal(r21.entries, lam) == 3);
  CHECK(r21.entries.nonzeros() == 12);

  for (int n = 1; n <= 3; ++n) CHECK(build_super_gl(n, 0).entries == build_gl(n).entries);
}

TEST_CASE("graded tensor") {
  // all-even: ordinary Kronecker product
  ScalarMatrix f(2, 2), g(2, 2);
  f.set(0, 1, q);
  f.set(1, 0, 2);
  g.set(0, 0, 3);
  g.set(1, 1, lam);
  ScalarMatrix k = graded_tensor(f, g, {0, 0}, {0, 0});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) CHECK(k.at(i * 2 + j, a * 2 + b) == f.at(i, a) * g.at(j, b));

  // T (x) I for GL(1|1): a sign appears only at odd rows inside the odd-column block
  const std::vector<int> p = {0, 1};
  ScalarMatrix t(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) t.set(i, j, 1);
  ScalarMatrix t1 = graded_tensor(t, ScalarMatrix::identity(2), p, p);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t kk = 0; kk < 2; ++kk)
      for (std::size_t j = 0; j < 2; ++j) {
        const bool odd_entry = (p[i] + p[kk]) % 2 == 1;
        const QScalar expect = odd_entry && p[j] == 1 ? QScalar(-1) : QScalar(1);
        CHECK(t1.at(i * 2 + j, kk * 2 + j) == expect);
      }
  // I (x) T is block diagonal with T blocks
  ScalarMatrix t2 = graded_tensor(ScalarMatrix::identity(2), t, p, p);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 2; ++l) CHECK(t2.at(i * 2 + j, i * 2 + l) == QScalar(1));
  CHECK(t2.nonzeros() == 8);
}

TEST_CASE("Yang-Baxter equation") {
  CHECK(yang_baxter_check(build_gl(1)));
  CHECK(yang_baxter_check(build_gl(2)));
  CHECK(yang_baxter_check(build_super_gl(1, 1)));
  CHECK(yang_baxter_check(build_bcd(Series::B, 1)));

  // Zeroing the lambda entry leaves a diagonal matrix, which solves YBE trivially.
  RMatrixSpec diagonal = build_gl(2);
  diagonal.entries.set(pair_index(2, 1, 2), pair_index(1, 2, 2), QScalar());
  CHECK(yang_baxter_check(diagonal));
  RMatrixSpec broken = build_gl(2);
  broken.entries.set(pair_index(2, 1, 2), pair_index(1, 2, 2), QScalar::q(2) - QScalar::q(-2));
  CHECK_FALSE(yang_baxter_check(broken));
  RMatrixSpec broken_diag = build_gl(2);
  broken_diag.entries.set(0, 0, QScalar::q(2));
  CHECK_FALSE(yang_baxter_check(broken_diag));

  RMatrixSpec r = build_super_gl(1, 1);
  CHECK(yang_baxter_residual(r) == yang_baxter_residual_serial(r));
}

TEST_CASE("R-matrices are invertible") {
  const Rational q0(3, 2);
  CHECK(invertible_at(build_gl(3), q0));
  CHECK(invertible_at(build_bcd(Series::C, 2), q0));
  CHECK(invertible_at(build_bcd(Series::B, 1), q0));
  CHECK(invertible_at(build_super_gl(2, 1), q0));
  RMatrixSpec zero = build_gl(2);
  zero.entries.set(0, 0, QScalar());
  CHECK_FALSE(invertible_at(zero, q0));
  ScalarMatrix r = build_gl(2).entries;
  CHECK(multiply(r, inverse(r)) == ScalarMatrix::identity(4));
}

TEST_CASE("triplet dump") {
  std::string s = dump_triplets(build_gl(2));
  CHECK(s == "(1,1) (1,1) q\n(1,2) (1,2) 1\n(2,1) (1,2) q - q^-1\n(2,1) (2,1) 1\n(2,2) (2,2) q\n");
}
