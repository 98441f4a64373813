#include "qgauss/qgroup.hpp"
#include "qgauss/qlinalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace qgauss;

namespace {

using Commutative = std::map<Word, Rational>;

// Specializes q -> 1 and lets the letters commute.
Commutative at_q1(const NCPolynomial& p) {
  Commutative out;
  for (const auto& [w, c] : p.terms()) {
    Word s = w;
    std::sort(s.begin(), s.end());
    out[s] += c.eval(Rational(1));
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Classical Leibniz determinant over commuting letters t_ij.
Commutative leibniz(const QuantumGroup& g) {
  const int n = g.n();
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  Commutative out;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += s[i] > s[j];
    Word w;
    for (int i = 0; i < n; ++i) w.push_back(g.alphabet().at(i + 1, s[i]));
    std::sort(w.begin(), w.end());
    out[w] += inv % 2 ? -1 : 1;
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

} // namespace

TEST_CASE("quantum determinant of gl2") {
  auto g = preset("gl2");
  Algebra alg = g->frt_algebra();
  const NCPolynomial a = g->t(1, 1), b = g->t(1, 2), c = g->t(2, 1), d = g->t(2, 2);
  const NCPolynomial det = qdet(alg, g->T());
  CHECK(alg.equal(det, a * d - b * c * QScalar::q(1)));
  CHECK(alg.equal(det, d * a - b * c * QScalar::q(-1)));
  CHECK(det.str(g->alphabet()) == "-q b c + a d");
}

TEST_CASE("determinant of a diagonal matrix") {
  auto g = preset("gl3");
  Algebra alg = g->frt_algebra();
  QMatrix m(3, 3);
  for (int i = 0; i < 3; ++i) m(i, i) = g->t(i + 1, i + 1);
  CHECK(alg.equal(qdet(alg, m), g->t(1, 1) * g->t(2, 2) * g->t(3, 3)));
}

TEST_CASE("row and column expansions agree with the permutation sum") {
  for (const char* name : {"gl2", "gl3"}) {
    CAPTURE(name);
    auto g = preset(name);
    Algebra alg = g->frt_algebra();
    const QMatrix t = g->T();
    const NCPolynomial det = qdet(alg, t);
    for (int k = 1; k <= g->n(); ++k) {
      CHECK(alg.equal(row_expansion(alg, t, k), det));
      CHECK(alg.equal(column_expansion(alg, t, k), det));
    }
  }
}

TEST_CASE("corner minor quasi-commutes with the last row") {
  for (const char* name : {"gl2", "gl3"}) {
    auto g = preset(name);
    Algebra alg = g->frt_algebra();
    const int n = g->n();
    const NCPolynomial m = qminor(alg, g->T(), {n}, {n});
    for (int k = 1; k < n; ++k) CHECK(alg.equal(m * g->t(n, k), g->t(n, k) * m * QScalar::q(1)));
  }
}

TEST_CASE("qdet specializes to the classical determinant at q = 1") {
  for (const char* name : {"gl2", "gl3", "gl4"}) {
    CAPTURE(name);
    auto g = preset(name);
    Algebra alg = g->frt_algebra();
    CHECK(at_q1(qdet(alg, g->T())) == leibniz(*g));
  }
}

TEST_CASE("minors") {
  auto g = preset("sp2");
  Algebra alg = g->frt_algebra();
  const QMatrix t = g->T();
  CHECK(minor(alg, t, {1}, {1}) == g->t(1, 1));
  CHECK(alg.equal(minor(alg, t, {1, 2}, {1, 2}), g->t(1, 1) * g->t(2, 2) - g->t(1, 2) * g->t(2, 1) * QScalar::q(1)));
  CHECK(alg.equal(qminor(alg, t, {3, 4}, {3, 4}), minor(alg, t, {1, 2}, {1, 2})));
  CHECK(qminor(alg, t, {1, 2, 3, 4}, {1, 2, 3, 4}) == NCPolynomial(1));
  CHECK_THROWS_AS(qminor(alg, t, {1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("permutation data") {
  CHECK(permutations(3).size() == 6);
  Permutation p;
  p.images = {1, 3, 2, 4};
  CHECK(p.transposition_index(4) == 1);
  p.images = {1, 2, 4, 3};
  CHECK(p.transposition_index(4) == 0);
  p.images = {4, 3, 2, 1};
  CHECK(p.transposition_index(4) == 2);
  for (const auto& s : permutations(4)) CHECK(s.transposition_index(0) == 0);
}

TEST_CASE("spdet without the extra weight is the ordinary determinant") {
  auto g = preset("sp2");
  Algebra alg = g->frt_algebra();
  const QMatrix t = g->T();
  for (int k = 1; k <= 4; ++k) {
    std::vector<std::size_t> lead(static_cast<std::size_t>(k));
    std::iota(lead.begin(), lead.end(), 0);
    CHECK(alg.equal(spdet(alg, t, k, false), qdet(alg, t.submatrix(lead, lead))));
  }
  CHECK(spdet(alg, t, 0) == NCPolynomial(1));
  CHECK(alg.equal(spdet(alg, t, 1), g->t(1, 1)));
  CHECK(alg.equal(spdet(alg, t, 2), minor(alg, t, {1, 2}, {1, 2})));
}

TEST_CASE("symplectic determinant identities hold only classically") {
  auto g = preset("sp2");
  Algebra alg = g->algebra();
  const QMatrix t = g->T();
  const NCPolynomial r3 = alg.canon(spdet(alg, t, 3) - g->t(1, 1));
  const NCPolynomial r4 = alg.canon(spdet(alg, t, 4) - NCPolynomial(1));
  CHECK_FALSE(r3.is_zero());
  CHECK_FALSE(r4.is_zero());
  // every coefficient of the canonical residuals vanishes at q = 1
  for (const auto* r : {&r3, &r4})
    for (const auto& [w, c] : r->terms()) CHECK(c.eval(Rational(1)) == 0);
}

TEST_CASE("inverse via q-minors") {
  SUBCASE("convention is fixed by the two-sided check") {
    auto g = preset("gl2");
    Localizer loc(g->frt_algebra());
    const int det = loc.register_minor("det", qdet(loc.algebra(), g->T()));
    std::vector<bool> works;
    for (const auto& c : inverse_conventions()) works.push_back(is_two_sided_inverse(loc, g->T(), qinverse(loc, g->T(), det, c)));
    CHECK(works == std::vector<bool>{false, true, false, false});
    const auto conv = resolve_inverse_convention(loc, g->T(), det);
    REQUIRE(conv.has_value());
    CHECK(conv->transpose);
    CHECK_FALSE(conv->flip_sign);
    const LMatrix inv = qinverse(loc, g->T(), det, *conv);
    CHECK(loc.str(inv(0, 0)) == "[det]^-1 d");
    CHECK(loc.str(inv(0, 1)) == "[det]^-1 (-q^-1 b)");
    CHECK(loc.str(inv(1, 0)) == "[det]^-1 (-q c)");
  }
  SUBCASE("gl3") {
    auto g = preset("gl3");
    Localizer loc(g->frt_algebra());
    const int det = loc.register_minor("det", qdet(loc.algebra(), g->T()));
    CHECK(is_two_sided_inverse(loc, g->T(), qinverse(loc, g->T(), det, {true, false})));
  }
  SUBCASE("1x1") {
    auto g = preset("gl1");
    Localizer loc(g->frt_algebra());
    const int det = loc.register_minor("t11", qdet(loc.algebra(), g->T()));
    const LMatrix inv = qinverse(loc, g->T(), det, {true, false});
    CHECK(loc.str(inv(0, 0)) == "[t11]^-1");
    CHECK(is_two_sided_inverse(loc, g->T(), inv));
  }
}

TEST_CASE("centrality") {
  for (const char* name : {"gl2", "gl3"}) {
    auto g = preset(name);
    Algebra alg = g->frt_algebra();
    CHECK(centrality_check(alg, qdet(alg, g->T())));
    CHECK_FALSE(centrality_check(alg, g->t(1, 1)));
  }
  auto g = preset("sp2");
  Algebra alg = g->frt_algebra();
  CHECK(centrality_check(alg, g->q_element()));
}

TEST_CASE("superdeterminant of an even grading is the product") {
  auto g = preset("gl2");
  Localizer loc(g->frt_algebra());
  const int a = loc.register_minor("a", g->t(1, 1));
  const std::vector<LocalizedElement> diag{g->t(1, 1), loc.inverse_of(a)};
  const std::vector<LocalizedElement> inv{loc.inverse_of(a), g->t(1, 1)};
  CHECK(loc.equal(sdet(loc, diag, inv, {0, 0}), NCPolynomial(1)));
  CHECK(loc.equal(sdet(loc, diag, inv, {0, 1}), loc.mul(g->t(1, 1), g->t(1, 1))));
  CHECK_THROWS_AS(sdet(loc, diag, inv, {0}), std::invalid_argument);
}

TEST_CASE("parallel and serial normal forms agree") {
  auto g = preset("sp2");
  const Algebra alg = g->algebra();
  std::vector<NCPolynomial> ps;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) ps.push_back(g->t(5 - i, 5 - j) * g->t(i, j) * g->t(j, i));
  CHECK(canon_all(alg, ps) == canon_all_serial(alg, ps));
  Algebra a = g->frt_algebra();
  CHECK(centrality_check_serial(a, g->q_element()));
  CHECK_FALSE(centrality_check_serial(a, g->t(1, 2)));
}
