#include "qgauss/rewrite.hpp"

#include <doctest.h>

using namespace qgauss;

namespace {

Alphabet gl2_alphabet() {
  return Alphabet({{"a", 1, 1, 0}, {"b", 1, 2, 0}, {"c", 2, 1, 0}, {"d", 2, 2, 0}});
}

NCPolynomial w(std::initializer_list<Symbol> s, QScalar c = 1) { return NCPolynomial::word(Word(s), c); }

// Hand-written GL_q(2) presentation: a=0 b=1 c=2 d=3.
std::vector<RewriteRule> gl2_rules(int q_power_of_ba = 1) {
  const QScalar q = QScalar::q(1), qi = QScalar::q(-1);
  return {
      {Word{1, 0}, w({0, 1}, QScalar::q(-q_power_of_ba))}, // ba -> q^-1 ab
      {Word{2, 0}, w({0, 2}, qi)},                           // ca -> q^-1 ac
      {Word{2, 1}, w({1, 2})},                               // cb -> bc
      {Word{3, 0}, w({0, 3}) - w({1, 2}, QScalar::lambda())}, // da -> ad - lambda bc
      {Word{3, 1}, w({1, 3}, qi)},                           // db -> q^-1 bd
      {Word{3, 2}, w({2, 3}, qi)},                           // dc -> q^-1 cd
  };
}

std::shared_ptr<const RewriteSystem> gl2_system() {
  return std::make_shared<const RewriteSystem>(gl2_alphabet(), gl2_rules());
}

} // namespace

TEST_CASE("graded sign") {
  CHECK(graded_sign(1, 1) == QScalar(-1));
  CHECK(graded_sign(0, 1) == QScalar(1));
  CHECK(graded_sign(0, 0) == QScalar(1));
  CHECK_THROWS(graded_sign(2, 0));
}

TEST_CASE("words and polynomials") {
  GradedLess less;
  CHECK(less(Word{3}, Word{0, 0}));
  CHECK(less(Word{0, 3}, Word{1, 0}));
  auto alpha = gl2_alphabet();
  NCPolynomial p = w({0, 3}) - w({3, 0}) - w({1, 2}, QScalar::lambda());
  CHECK(p.str(alpha) == "-d a - (q - q^-1) b c + a d");
  CHECK(NCPolynomial().str(alpha) == "0");
  CHECK(NCPolynomial(QScalar::q(2)).str(alpha) == "q^2");
  CHECK((w({0}) * w({1})).leading_word() == Word{0, 1});
  CHECK(w({0}, QScalar::q(-1)).str(alpha) == "q^-1 a");
  CHECK(w({0}, -QScalar::q(-1)).str(alpha) == "-q^-1 a");
}

TEST_CASE("GL_q(2) normal forms") {
  auto sys = gl2_system();
  Reducer red(sys);
  auto alpha = gl2_alphabet();
  CHECK(red.normal_form(Word{1, 0}) == w({0, 1}, QScalar::q(-1)));
  CHECK(red.normal_form(Word{3, 0}) == w({0, 3}) - w({1, 2}, QScalar::lambda()));
  CHECK(red.normal_form(NCPolynomial(1)) == NCPolynomial(1));
  CHECK(red.normal_form(NCPolynomial()).is_zero());
  // det_q = ad - q bc = da - q^-1 bc
  NCPolynomial d1 = w({0, 3}) - w({1, 2}, QScalar::q(1));
  NCPolynomial d2 = w({3, 0}) - w({1, 2}, QScalar::q(-1));
  CHECK(red.normal_form(d1 - d2).is_zero());
  CHECK(red.is_normal(Word{0, 1, 2, 3}));
  CHECK_FALSE(red.is_normal(Word{0, 2, 1}));
  CHECK(sys->uncovered_pairs().empty());
}

TEST_CASE("GL_q(1|1) odd squares") {
  Alphabet alpha({{"a", 1, 1, 0}, {"beta", 1, 2, 1}, {"gamma", 2, 1, 1}, {"d", 2, 2, 0}});
  std::vector<RewriteRule> rules = {
      {Word{1, 1}, NCPolynomial()},
      {Word{2, 2}, NCPolynomial()},
      {Word{2, 1}, w({1, 2}, QScalar(-1))},
  };
  RewriteSystem partial(alpha, rules);
  // ba, ca, da, db, dc are still missing
  CHECK(partial.uncovered_pairs().size() == 5);
  Reducer red(std::make_shared<const RewriteSystem>(partial));
  CHECK(red.normal_form(Word{2, 1}) == w({1, 2}, QScalar(-1)));
  CHECK(red.normal_form(Word{1, 1}).is_zero());
  CHECK(word_parity(Word{1, 2, 0}, alpha) == 0);
  CHECK(word_parity(Word{1, 0}, alpha) == 1);
}

TEST_CASE("rule validation") {
  auto alpha = gl2_alphabet();
  // replacement not smaller than head
  CHECK_THROWS_AS(RewriteSystem(alpha, {{Word{0, 1}, w({1, 0})}}), RewriteError);
  CHECK_THROWS_AS(RewriteSystem(alpha, {{Word{1, 0}, w({0, 1})}, {Word{1, 0}, w({0, 1})}}), RewriteError);
}

TEST_CASE("confluence of GL_q(2)") {
  auto sys = gl2_system();
  CHECK(check_confluence(*sys).empty());
  CHECK(check_confluence_serial(*sys).empty());
}

TEST_CASE("q -> q^2 mutation breaks confluence") {
  RewriteSystem bad(gl2_alphabet(), gl2_rules(2));
  auto pairs = check_confluence(bad);
  CHECK_FALSE(pairs.empty());
  auto serial = check_confluence_serial(bad);
  REQUIRE(serial.size() == pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) CHECK(serial[i].word == pairs[i].word);
}

TEST_CASE("step budget") {
  auto sys = gl2_system();
  Reducer red(sys, 3);
  CHECK_THROWS_AS(red.normal_form(Word{3, 3, 2, 2, 1, 1, 0, 0}), BudgetExceeded);
}

TEST_CASE("echelon orientation") {
  auto alpha = gl2_alphabet();
  // ab - q ba written with an arbitrary scale
  std::vector<NCPolynomial> rel = {
      (w({0, 1}) - w({1, 0}, QScalar::q(1))) * QScalar(3),
      w({0, 1}) * QScalar(2) - w({1, 0}, QScalar::q(1) * QScalar(2)),
  };
  RewriteSystem sys = orient_polynomials(alpha, rel);
  REQUIRE(sys.rules().size() == 1);
  CHECK(sys.rules()[0].head == Word{1, 0});
  CHECK(sys.rules()[0].replacement == w({0, 1}, QScalar::q(-1)));

  Echelon e;
  CHECK(e.insert(w({0, 1}) + w({0})));
  CHECK_FALSE(e.insert(w({0, 1}, QScalar(5)) + w({0}, QScalar(5))));
  CHECK(e.reduce(w({0, 1})) == -w({0}));
}
