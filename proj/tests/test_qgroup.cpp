#include "qgauss/qgroup.hpp"

#include <doctest.h>

using namespace qgauss;

namespace {

const QScalar q = QScalar::q(1);
const QScalar lam = QScalar::lambda();

// The six GL_q(2) relations on a 2x2 block (a b / c d) of generators.
std::vector<NCPolynomial> gl2_relations(const NCPolynomial& a, const NCPolynomial& b, const NCPolynomial& c,
                                        const NCPolynomial& d) {
  return {a * b - b * a * q, a * c - c * a * q, b * c - c * b,
          b * d - d * b * q, c * d - d * c * q, a * d - d * a - b * c * lam};
}

// GL_q(1|1) relations with a, d even and beta, gamma odd.
std::vector<NCPolynomial> gl11_relations(const NCPolynomial& a, const NCPolynomial& beta, const NCPolynomial& gamma,
                                         const NCPolynomial& d) {
  return {a * beta - beta * a * q,    beta * d - d * beta * q.inverse(), beta * gamma + gamma * beta,
          a * gamma - gamma * a * q, gamma * d - d * gamma * q.inverse(), a * d - d * a - gamma * beta * lam,
          beta * beta,               gamma * gamma};
}

bool all_zero(Algebra& alg, const std::vector<NCPolynomial>& ps) {
  for (const auto& p : ps)
    if (!alg.is_zero(p)) return false;
  return true;
}

// Dimension of the space of quadratic relations among the given generators:
// number of words of length 2 minus the rank of their normal forms.
std::size_t quadratic_relation_count(Algebra& alg, const std::vector<Symbol>& gens) {
  Echelon e;
  for (Symbol x : gens)
    for (Symbol y : gens) e.insert(alg.normal_form(NCPolynomial::word(Word{x, y})));
  return gens.size() * gens.size() - e.rank();
}

} // namespace

TEST_CASE("gl2 relations are exactly the six GL_q(2) relations") {
  auto g = preset("gl2");
  CHECK(g->alphabet().size() == 4);
  CHECK(g->relations().size() == 6);
  CHECK(g->system()->rules().size() == 6);
  Echelon expected;
  for (const auto& p : gl2_relations(g->t(1, 1), g->t(1, 2), g->t(2, 1), g->t(2, 2))) expected.insert(p);
  CHECK(expected.rank() == 6);
  for (const auto& r : g->relations()) CHECK(expected.reduce(r.poly()).is_zero());
  CHECK(g->relations()[2].str(g->alphabet()) == "d a = -(q - q^-1) b c + a d");
}

TEST_CASE("gl(1|1) relations include nilpotent odd generators") {
  auto g = preset("gl1|1");
  Algebra alg = g->frt_algebra();
  const auto& al = g->alphabet();
  CHECK(all_zero(alg, gl11_relations(g->t(1, 1), g->t(1, 2), g->t(2, 1), g->t(2, 2))));
  bool beta_sq = false, gamma_sq = false;
  for (const auto& r : g->relations()) {
    beta_sq = beta_sq || r.str(al) == "beta beta = 0";
    gamma_sq = gamma_sq || r.str(al) == "gamma gamma = 0";
  }
  CHECK(beta_sq);
  CHECK(gamma_sq);
}

TEST_CASE("sp2 special relations") {
  auto g = preset("sp2");
  Algebra alg = g->frt_algebra();
  CHECK(g->alphabet().size() == 16);
  CHECK(g->has_c());
  auto t = [&](int i, int j) { return g->t(i, j); };
  const QScalar q2 = QScalar::q(2);
  for (int i = 1; i <= 4; ++i) {
    CHECK(alg.is_zero(t(i, 1) * t(i, 4) - t(i, 4) * t(i, 1) * q2));
    CHECK(alg.is_zero(t(i, 2) * t(i, 3) - t(i, 3) * t(i, 2) * q2 - t(i, 1) * t(i, 4) * lam));
    CHECK(alg.is_zero(t(1, i) * t(4, i) - t(4, i) * t(1, i) * q2));
    CHECK(alg.is_zero(t(2, i) * t(3, i) - t(3, i) * t(2, i) * q2 - t(1, i) * t(4, i) * lam));
  }
}

TEST_CASE("preset table") {
  auto g = preset("gl2|1");
  CHECK(g->alphabet().size() == 9);
  CHECK(g->grading() == std::vector<int>{0, 0, 1});
  CHECK(g->alphabet()[g->alphabet().by_name("alpha")].parity == 1);
  CHECK(g->alphabet()[g->alphabet().by_name("f")].parity == 0);
  CHECK_THROWS_AS(preset("nosuch"), std::invalid_argument);
  CHECK(preset_names().size() == 8);
}

TEST_CASE("confluence and FRT closure of the presets") {
  for (const char* name : {"gl2", "gl3", "sp2", "gl1|1", "gl2|1"}) {
    CAPTURE(name);
    auto g = preset(name);
    CHECK(g->completion_rules() == 0);
    CHECK(check_confluence(*g->system(), 3).empty());
    Algebra alg = g->frt_algebra();
    for (const auto& r : g->relations()) CHECK(alg.normal_form(r.poly()).is_zero());
    for (const auto& p : frt_polynomials(g->rmatrix(), g->alphabet())) CHECK(alg.normal_form(p).is_zero());
  }
}

TEST_CASE("so3 needs cubic rules from completion") {
  auto g = preset("so3");
  const auto rep = orient(g->alphabet(), g->relations(), true);
  CHECK(rep.uncovered.empty());
  CHECK_FALSE(rep.unresolved.empty());
  CHECK(g->completion_rules() == 5);
  CHECK(g->system()->rules().size() == 51);
  CHECK(check_confluence(*g->system(), 2 * g->system()->max_head_length() - 1).empty());
}

TEST_CASE("GL_q(n-1) subalgebra of gl3") {
  auto g = preset("gl3");
  Algebra alg = g->frt_algebra();
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 3; ++c) {
      std::vector<int> rows, cols;
      for (int i = 1; i <= 3; ++i) {
        if (i != r) rows.push_back(i);
        if (i != c) cols.push_back(i);
      }
      auto t = [&](int i, int j) { return g->t(rows[i], cols[j]); };
      CHECK(all_zero(alg, gl2_relations(t(0, 0), t(0, 1), t(1, 0), t(1, 1))));
      std::vector<Symbol> gens;
      for (int i : rows)
        for (int j : cols) gens.push_back(g->alphabet().at(i, j));
      // nothing beyond the six relations
      CHECK(quadratic_relation_count(alg, gens) == 6);
    }
}

TEST_CASE("corner property for gl3 and gl4") {
  for (const char* name : {"gl3", "gl4"}) {
    auto g = preset(name);
    Algebra alg = g->frt_algebra();
    const int n = g->n();
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l)
            CHECK(all_zero(alg, gl2_relations(g->t(i, k), g->t(i, l), g->t(j, k), g->t(j, l))));
  }
}

TEST_CASE("gl(2|1) super sub-structure") {
  auto g = preset("gl2|1");
  Algebra alg = g->frt_algebra();
  auto t = [&](int i, int j) { return g->t(i, j); };
  CHECK(all_zero(alg, gl2_relations(t(1, 1), t(1, 2), t(2, 1), t(2, 2))));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) CHECK(all_zero(alg, gl11_relations(t(i, j), t(i, 3), t(3, j), t(3, 3))));
}

TEST_CASE("C-conditions") {
  SUBCASE("sp2") {
    auto g = preset("sp2");
    const auto rels = c_conditions(*g);
    CHECK(rels.size() == 32);
    std::size_t independent = 0;
    for (const auto& r : rels) independent += r.independent;
    CHECK(independent == 8);
    const auto rep = c_structure(*g);
    CHECK(rep.tct_is_q_c);
    CHECK(rep.ctct_is_q);
    CHECK(rep.q_central);
    CHECK(rep.homogeneous_in_frt == rep.homogeneous);
    CHECK(g->q_element().str(g->alphabet()) == "-q^4 t14 t41 - q^3 t13 t42 + q t12 t43 + t11 t44");
    // q = 1: C is an antisymmetric form
    const auto& c = g->c_matrix().entries;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(c.at(i, j).eval(1) == -c.at(j, i).eval(1));
  }
  SUBCASE("so3") {
    auto g = preset("so3");
    const auto& c = g->c_matrix().entries;
    CHECK(c.at(0, 2) == -q.inverse());
    CHECK(c.at(1, 1) == QScalar(1));
    CHECK(c.at(2, 0) == -q);
    const auto rep = c_structure(*g);
    CHECK(rep.tct_is_q_c);
    CHECK(rep.q_central);
    CHECK(rep.independent == 6);
    CHECK(rep.homogeneous_in_frt == rep.homogeneous);
  }
  SUBCASE("FRT relations survive the quotient") {
    auto g = preset("sp2");
    Algebra alg = g->algebra();
    CHECK(alg.is_quotient());
    for (const auto& r : g->relations()) CHECK(alg.is_zero(r.poly()));
    for (const auto& r : c_conditions(*g)) CHECK(alg.is_zero(r.poly()));
  }
}

TEST_CASE("deforming lambda in the d a rule keeps gl2 confluent") {
  auto g = preset("gl2");
  const RewriteSystem& sys = *g->system();
  const Symbol b = g->alphabet().by_name("b"), c = g->alphabet().by_name("c");
  const int da = sys.find(Word{g->alphabet().by_name("d"), g->alphabet().by_name("a")});
  REQUIRE(da >= 0);
  const NCPolynomial ad = g->t(1, 1) * g->t(2, 2);
  for (const QScalar& mu : {QScalar(0), QScalar::q(2) - QScalar::q(-2), QScalar(7)})
    CHECK(check_confluence(sys.with_replacement(static_cast<std::size_t>(da), ad - NCPolynomial::word(Word{b, c}, mu)),
                           3)
              .empty());
  // the exchange rules are rigid
  const int ba = sys.find(Word{b, g->alphabet().by_name("a")});
  CHECK_FALSE(
      check_confluence(sys.with_replacement(static_cast<std::size_t>(ba), NCPolynomial::word(Word{0, b}, QScalar::q(-2))), 3)
          .empty());
}
