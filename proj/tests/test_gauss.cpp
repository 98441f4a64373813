#include "qgauss/gauss.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qgauss;

namespace {

std::size_t failures(const std::vector<CheckResult>& rs) {
  std::size_t n = 0;
  for (const auto& r : rs) n += !r.pass;
  return n;
}

std::vector<std::string> failed_ids(const std::vector<CheckResult>& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs)
    if (!r.pass) out.push_back(r.id);
  return out;
}

// X (x) 1 and 1 (x) X for an even n x n matrix, index (i,k) -> i*n + k.
LMatrix embed(const LMatrix& x, bool first) {
  const std::size_t n = x.rows();
  LMatrix out(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out(first ? i * n + k : k * n + i, first ? j * n + k : k * n + j) = x(i, j);
  return out;
}

LMatrix scalars(const ScalarMatrix& m, bool diagonal_only, bool invert) {
  const std::size_t nn = m.rows();
  LMatrix out(nn, nn);
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) {
      if (diagonal_only && i != j) continue;
      const QScalar& c = m.at(i, j);
      if (c.is_zero()) continue;
      out(i, j) = LocalizedElement(NCPolynomial(invert ? c.inverse() : c));
    }
  return out;
}

LMatrix prod(Localizer& loc, std::initializer_list<const LMatrix*> fs) {
  auto it = fs.begin();
  LMatrix out = **it;
  for (++it; it != fs.end(); ++it) out = lmul(loc, out, **it);
  return out;
}

} // namespace

TEST_CASE("factorization roundtrips") {
  for (const char* name : {"gl2", "gl3", "gl1|1", "gl2|1", "so3", "sp2"}) {
    CAPTURE(name);
    GaussDecomposition gd(preset(name));
    const auto rs = gd.roundtrip_checks();
    CHECK(rs.size() == 11);
    CHECK(failed_ids(rs).empty());
  }
}

TEST_CASE("gl2 Gauss entries") {
  GaussDecomposition gd(preset("gl2"));
  const auto& s = gd.symbols();
  CHECK(gd.str(s.at("A11")) == "a");
  CHECK(gd.str(s.at("A22")) == "[a]^-1 (-q b c + a d)");
  CHECK(gd.str(s.at("l21")) == "[a]^-1 (q c)");
  CHECK(gd.str(s.at("u12")) == "[a]^-1 b");
  CHECK(gd.check("l21 = c a^-1", "").pass);
  CHECK(gd.check("u12 = a^-1 b = b/(q a)", "").pass);
  CHECK_FALSE(gd.check("u12 = b/a", "").pass);
  CHECK(gd.check("A22 = d - c a^-1 b", "").pass);
  CHECK(gd.check("A11 A22 = a d - q b c", "").pass);
  CHECK(failures(verify_factor_relations(gd)) == 0);
  CHECK_THROWS(gd.eval("nosuch"));
  CHECK_THROWS(gd.eval("a +"));
}

TEST_CASE("gl(1|1) Gauss entries and superdeterminant") {
  GaussDecomposition gd(preset("gl1|1"));
  const auto& s = gd.symbols();
  CHECK(gd.str(s.at("B")) == "[a]^-1 (q beta gamma + a d)");
  CHECK(gd.str(s.at("psi")) == "[a]^-1 beta");
  CHECK(gd.str(s.at("sigma")) == "[a]^-1 (q gamma)");
  CHECK(gd.check("B = d - gamma a^-1 beta", "").pass);
  CHECK(gd.check("psi psi = 0 = sigma sigma", "").pass);
  const auto rels = verify_factor_relations(gd);
  CHECK(rels.size() == 12);
  CHECK(failures(rels) == 0);
  const auto det = det_product_checks(gd);
  CHECK(det.size() == 2);
  CHECK(failures(det) == 0);
}

TEST_CASE("gl(2|1) relation lists") {
  GaussDecomposition gd(preset("gl2|1"));
  const auto rels = verify_factor_relations(gd);
  CHECK(rels.size() == 40);
  CHECK(failed_ids(rels).empty());
  // q in place of q^-1 does not hold
  CHECK_FALSE(gd.check("q u w - w u = lambda v", "").pass);
  CHECK(failures(det_product_checks(gd)) == 0);
}

TEST_CASE("gl relation lists and determinant product") {
  for (const char* name : {"gl2", "gl3"}) {
    CAPTURE(name);
    GaussDecomposition gd(preset(name));
    CHECK(failed_ids(verify_factor_relations(gd)).empty());
    const auto det = det_product_checks(gd);
    CHECK(det.size() == 2);
    CHECK(failures(det) == 0);
  }
  GaussDecomposition gd(preset("gl3"));
  CHECK(verify_factor_relations(gd).size() == 30);
  CHECK(gd.principal_minor_ids().size() == 3);
}

TEST_CASE("sp2 entries") {
  GaussDecomposition gd(preset("sp2"));
  const auto rels = verify_factor_relations(gd);
  CHECK(rels.size() == 128);
  CHECK(failed_ids(rels).empty());
  // nearby variants that do not hold
  CHECK_FALSE(gd.check("w31 = (D[2,3|1,3] - lambda D[1,4|1,2]) D[1,2|1,2]^-1", "").pass);
  CHECK_FALSE(gd.check("A33 u34 = -D[1|1]^-1 t12", "").pass);
  // swapped normalizations fail
  CHECK_FALSE(gd.check("l32 l21 = q^2 l21 l32 - (q^2 - q^-2) l31", "").pass);
  CHECK_FALSE(gd.check("u23 u12 = q^2 u12 u23 - (q^4 - 1) u13", "").pass);
  CHECK(gd.principal_minor_ids().size() == 2);
}

TEST_CASE("constraints for the orthogonal and symplectic presets") {
  SUBCASE("sp2") {
    GaussDecomposition gd(preset("sp2"));
    const auto rs = constraint_check_bcd(gd);
    CHECK(rs.size() == 12);
    CHECK(failed_ids(rs) == std::vector<std::string>{"Dsp[3] = Dsp[1]", "Dsp[4] = 1"});
  }
  SUBCASE("so3") {
    GaussDecomposition gd(preset("so3"));
    const auto rs = constraint_check_bcd(gd);
    CHECK(rs.size() == 9);
    CHECK(failed_ids(rs).empty());
    CHECK(gd.check("A22 A22 = 1", "").pass);
    CHECK_FALSE(gd.check("A22 = 1", "").pass);
    CHECK(failed_ids(verify_factor_relations(gd)).empty());
  }
  SUBCASE("GL has no constraints") {
    GaussDecomposition gd(preset("gl2"));
    CHECK_THROWS_AS(constraint_check_bcd(gd), std::invalid_argument);
  }
}

TEST_CASE("independent generator counts") {
  CHECK(independent_generator_count(*preset("sp2")) == 10);
  CHECK(independent_generator_count(*preset("so3")) == 3);
  CHECK(independent_generator_count(*preset("gl1|1")) == 4);
  CHECK(independent_generator_count(*preset("gl2|1")) == 9);
  CHECK(independent_generator_count(*preset("gl3")) == 9);
  CHECK(eliminate_dependents("sp2").size() == 6);
}

TEST_CASE("exchange relations") {
  for (const char* name : {"gl2", "gl3", "sp2"}) {
    CAPTURE(name);
    GaussDecomposition gd(preset(name));
    const auto rs = verify_rmatrix_exchange(gd);
    CHECK(rs.size() == 15);
    CHECK(failed_ids(rs).empty());
  }
  GaussDecomposition so3(preset("so3"));
  const auto fails = failed_ids(verify_rmatrix_exchange(so3));
  CHECK(fails.size() == 3);
  CHECK(std::find(fails.begin(), fails.end(), "R_D R = R R_D") != fails.end());
  GaussDecomposition super(preset("gl1|1"));
  CHECK_THROWS(verify_rmatrix_exchange(super));
}

TEST_CASE("T_L / T^(-) exchange needs T_U") {
  for (const char* name : {"gl2", "gl3"}) {
    CAPTURE(name);
    GaussDecomposition gd(preset(name));
    Localizer& loc = gd.localizer();
    const auto& f = gd.factors();
    const ScalarMatrix& r = gd.group().rmatrix().entries;
    const LMatrix rdi = scalars(r, true, true);
    const LMatrix tm2 = embed(f.Tminus, false), tl1 = embed(f.TL, true), tu1 = embed(f.TU, true);
    CHECK_FALSE(lequal(loc, prod(loc, {&tm2, &rdi, &tl1}), prod(loc, {&tl1, &tm2, &rdi})));
    CHECK(lequal(loc, prod(loc, {&tm2, &rdi, &tu1}), prod(loc, {&tu1, &tm2, &rdi})));
    // the basic FRT relation through the same oracle
    const LMatrix rr = scalars(r, false, false), t = to_lmatrix(gd.group().T());
    const LMatrix t1 = embed(t, true), t2 = embed(t, false);
    CHECK(lequal(loc, prod(loc, {&rr, &t1, &t2}), prod(loc, {&t2, &t1, &rr})));
  }
}

TEST_CASE("Neumann inverse of a unitriangular matrix") {
  GaussDecomposition gd(preset("gl3"));
  Localizer& loc = gd.localizer();
  const LMatrix inv = invert_unitriangular(loc, gd.factors().WL);
  CHECK(lequal(loc, inv, gd.factors().TL));
  CHECK(lequal(loc, lmul(loc, inv, gd.factors().WL), identity_lmatrix(3)));
}

TEST_CASE("exchange exponents of the pivots") {
  // A_m l_ij = q^e l_ij A_m: the Cartan exponents telescope along a row
  GaussDecomposition gd(preset("gl3"));
  CHECK(gd.check("A11 l21 = q l21 A11", "").pass);
  CHECK(gd.check("A22 l21 = q^-1 l21 A22", "").pass);
  CHECK(gd.check("A33 l21 = l21 A33", "").pass);
  CHECK(gd.check("A11 A22 A33 l21 = l21 A11 A22 A33", "").pass);
  CHECK(gd.check("A11 A22 A33 u23 = u23 A11 A22 A33", "").pass);
}
