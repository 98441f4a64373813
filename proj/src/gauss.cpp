#include "qgauss/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qgauss {

namespace {

std::string idx(std::size_t i, std::size_t j) { return std::to_string(i + 1) + std::to_string(j + 1); }

bool is_scalar(const LocalizedElement& x) { return x.den.empty() && x.num.degree() == 0; }

// Recursive-descent evaluator over LocalizedElement values.
class ExprParser {
public:
  ExprParser(GaussDecomposition& gd, const std::map<std::string, LocalizedElement>& symbols,
             const std::map<std::string, LocalizedElement>& inverses, std::string text)
      : gd_(gd), loc_(gd.localizer()), symbols_(symbols), inverses_(inverses), s_(std::move(text)) {}

  LocalizedElement parse() {
    LocalizedElement v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_, 1) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("expression '" + s_ + "': " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '[';
  }
  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }
  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  std::vector<int> index_list() {
    std::vector<int> out{static_cast<int>(integer())};
    while (accept(',')) out.push_back(static_cast<int>(integer()));
    return out;
  }

  LocalizedElement expr() {
    LocalizedElement v;
    bool neg = accept('-');
    if (!neg) accept('+');
    v = term();
    if (neg) v = loc_.neg(v);
    while (true) {
      if (accept('+')) v = loc_.add(v, term());
      else if (accept('-')) v = loc_.sub(v, term());
      else break;
    }
    return v;
  }

  LocalizedElement term() {
    LocalizedElement v = power();
    while (true) {
      if (accept('*')) v = loc_.mul(v, power());
      else if (accept('/')) v = loc_.mul(v, inverse(power()));
      else if (at_atom()) v = loc_.mul(v, power());
      else break;
    }
    return v;
  }

  LocalizedElement power() {
    std::string name;
    LocalizedElement base = atom(&name);
    if (!accept('^')) return base;
    const bool neg = accept('-');
    const long e = integer();
    if (neg) {
      auto it = inverses_.find(name);
      base = it != inverses_.end() ? it->second : inverse(base);
    }
    LocalizedElement out(NCPolynomial(1));
    for (long i = 0; i < e; ++i) out = loc_.mul(out, base);
    return out;
  }

  LocalizedElement inverse(const LocalizedElement& x) {
    LocalizedElement s = loc_.simplify(x);
    if (s.num.is_zero()) fail("division by zero");
    if (is_scalar(s)) return LocalizedElement(NCPolynomial(s.num.constant().inverse()));
    if (s.den.empty())
      if (auto id = loc_.find(s.num)) return loc_.inverse_of(*id);
    return loc_.invert(s, "E" + std::to_string(loc_.minor_count() + 1));
  }

  LocalizedElement atom(std::string* name) {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (accept('(')) {
      LocalizedElement v = expr();
      expect(')');
      return v;
    }
    if (accept('[')) {
      skip();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        // [n]_q = (q^n - q^-n) / (q - q^-1)
        const long n = integer();
        expect(']');
        QScalar v;
        for (long k = 0; k < n; ++k) v = v + QScalar::q(static_cast<int>(n - 1 - 2 * k));
        return LocalizedElement(NCPolynomial(v));
      }
      LocalizedElement x = expr();
      expect(',');
      LocalizedElement y = expr();
      expect(']');
      return loc_.sub(loc_.mul(x, y), loc_.mul(y, x));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return LocalizedElement(NCPolynomial(QScalar(integer())));
    std::string id = ident();
    *name = id;
    if (id == "q") return LocalizedElement(NCPolynomial(QScalar::q(1)));
    if (id == "lambda") return LocalizedElement(NCPolynomial(QScalar::lambda()));
    if ((id == "D" || id == "Dsp") && peek('[')) {
      expect('[');
      std::vector<int> rows = index_list();
      QMatrix t = gd_.group().T();
      if (id == "Dsp") {
        expect(']');
        if (rows.size() != 1) fail("Dsp takes the order k");
        return LocalizedElement(spdet(gd_.algebra(), t, rows[0]));
      }
      expect('|');
      std::vector<int> cols = index_list();
      expect(']');
      return LocalizedElement(minor(gd_.algebra(), t, rows, cols));
    }
    if (auto it = symbols_.find(id); it != symbols_.end()) return it->second;
    const Alphabet& alpha = gd_.group().alphabet();
    if (alpha.has_name(id)) return LocalizedElement(NCPolynomial::letter(alpha.by_name(id)));
    fail("unknown symbol '" + id + "'");
  }

  GaussDecomposition& gd_;
  Localizer& loc_;
  const std::map<std::string, LocalizedElement>& symbols_;
  const std::map<std::string, LocalizedElement>& inverses_;
  std::string s_;
  std::size_t pos_ = 0;
};

std::string pivot_name(const QuantumGroup& g, const NCPolynomial& p, std::size_t k) {
  if (p.size() == 1 && p.degree() == 1 && p.terms().begin()->second.is_one())
    return g.alphabet()[p.leading_word()[0]].name;
  return "D" + std::to_string(k);
}

} // namespace

LMatrix invert_unitriangular(Localizer& loc, const LMatrix& w) {
  const std::size_t n = w.rows();
  const LMatrix id = identity_lmatrix(n);
  LMatrix nil(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) nil(i, j) = loc.simplify(loc.sub(id(i, j), w(i, j)));
  LMatrix sum = id, pw = id;
  for (std::size_t k = 1; k < n; ++k) {
    pw = lmul(loc, pw, nil);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum(i, j) = loc.simplify(loc.add(sum(i, j), pw(i, j)));
  }
  return sum;
}

GaussDecomposition::GaussDecomposition(std::shared_ptr<const QuantumGroup> g)
    : g_(std::move(g)), loc_(g_->algebra()) {
  register_principal_minors();
  eliminate();
  build_symbols();
}

void GaussDecomposition::register_principal_minors() {
  const RMatrixSpec& r = g_->rmatrix();
  const bool gl = r.series == Series::GL;
  const bool symplectic = r.bcd && r.series == Series::C;
  if (!gl && !symplectic) return;
  const QMatrix t = g_->T();
  const int n = g_->n();
  // beyond N/2 the symplectic sums are not used as denominators; the pivots
  // supply the remaining factors
  const int top = symplectic ? n / 2 : n;
  for (int k = 1; k <= top; ++k) {
    std::vector<std::size_t> lead;
    for (int i = 0; i < k; ++i) lead.push_back(static_cast<std::size_t>(i));
    NCPolynomial d = symplectic ? spdet(loc_.algebra(), t, k) : qdet(loc_.algebra(), t.submatrix(lead, lead));
    if (d.degree() == 0 || loc_.find(d)) continue;
    principal_.push_back(loc_.register_minor(pivot_name(*g_, d, static_cast<std::size_t>(k)), d));
  }
}

void GaussDecomposition::eliminate() {
  const std::size_t n = static_cast<std::size_t>(g_->n());
  const QMatrix t = g_->T();
  const LMatrix id = identity_lmatrix(n);
  auto unit = [&] {
    LMatrix m = id;
    m.set_parity(t.row_parity(), t.col_parity());
    return m;
  };

  // row path: W_L T = T_plus
  LMatrix m = to_lmatrix(t), w = unit(), l = unit(), d(n, n);
  d.set_parity(t.row_parity(), t.col_parity());
  f_.TD_inverse.assign(n, LocalizedElement());
  for (std::size_t k = 0; k < n; ++k) {
    const LocalizedElement p = loc_.simplify(m(k, k));
    if (p.num.is_zero()) throw LocalizationRefused("zero pivot at " + std::to_string(k + 1));
    const std::size_t before = loc_.minor_count();
    const LocalizedElement pinv = loc_.invert(p, pivot_name(*g_, p.num, k + 1));
    if (loc_.minor_count() > before) pivot_ids_.push_back(static_cast<int>(before));
    d(k, k) = p;
    f_.TD_inverse[k] = pinv;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (loc_.is_zero(m(i, k))) continue;
      const LocalizedElement mult = loc_.simplify(loc_.mul(m(i, k), pinv));
      l(i, k) = mult;
      for (std::size_t j = k; j < n; ++j) m(i, j) = loc_.simplify(loc_.sub(m(i, j), loc_.mul(mult, m(k, j))));
      if (!loc_.is_zero(m(i, k))) throw std::logic_error("elimination left a nonzero entry");
      m(i, k) = LocalizedElement();
      for (std::size_t j = 0; j < n; ++j) w(i, j) = loc_.simplify(loc_.sub(w(i, j), loc_.mul(mult, w(k, j))));
    }
  }
  f_.Tplus = m;
  f_.WL = w;
  f_.TL = l;
  f_.TD = d;
  f_.TU = unit();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = k + 1; j < n; ++j) f_.TU(k, j) = loc_.simplify(loc_.mul(f_.TD_inverse[k], m(k, j)));

  // column path: T W_U = T_minus
  LMatrix mc = to_lmatrix(t), v = unit(), uc = unit(), dc(n, n);
  LMatrix lc = unit();
  for (std::size_t k = 0; k < n; ++k) {
    const LocalizedElement p = loc_.simplify(mc(k, k));
    const LocalizedElement pinv = loc_.invert(p, pivot_name(*g_, p.num, k + 1));
    dc(k, k) = p;
    for (std::size_t j = k + 1; j < n; ++j) {
      if (loc_.is_zero(mc(k, j))) continue;
      const LocalizedElement mult = loc_.simplify(loc_.mul(pinv, mc(k, j)));
      uc(k, j) = mult;
      for (std::size_t i = k; i < n; ++i) mc(i, j) = loc_.simplify(loc_.sub(mc(i, j), loc_.mul(mc(i, k), mult)));
      if (!loc_.is_zero(mc(k, j))) throw std::logic_error("column elimination left a nonzero entry");
      mc(k, j) = LocalizedElement();
      for (std::size_t i = 0; i < n; ++i) v(i, j) = loc_.simplify(loc_.sub(v(i, j), loc_.mul(v(i, k), mult)));
    }
    for (std::size_t i = k + 1; i < n; ++i) lc(i, k) = loc_.simplify(loc_.mul(mc(i, k), pinv));
  }
  f_.Tminus = mc;
  f_.WU = v;
  TL_col_ = lc;
  TU_col_ = uc;
  TD_col_ = dc;
}

void GaussDecomposition::define(const std::string& name, const LocalizedElement& v, const LocalizedElement* inverse) {
  symbols_[name] = v;
  if (inverse) inverses_[name] = *inverse;
}

void GaussDecomposition::build_symbols() {
  const std::size_t n = static_cast<std::size_t>(g_->n());
  for (std::size_t i = 0; i < n; ++i) {
    define("A" + idx(i, i), f_.TD(i, i), &f_.TD_inverse[i]);
    for (std::size_t j = 0; j < i; ++j) {
      define("l" + idx(i, j), f_.TL(i, j));
      define("u" + idx(j, i), f_.TU(j, i));
      define("w" + idx(i, j), f_.WL(i, j));
    }
  }
  const std::string& name = g_->name();
  if (name == "gl1|1") {
    define("A", f_.TD(0, 0), &f_.TD_inverse[0]);
    define("B", f_.TD(1, 1), &f_.TD_inverse[1]);
    define("psi", f_.TU(0, 1));
    define("sigma", f_.TL(1, 0));
  } else if (name == "gl2|1") {
    define("A", f_.TD(0, 0), &f_.TD_inverse[0]);
    define("B", f_.TD(1, 1), &f_.TD_inverse[1]);
    define("C", f_.TD(2, 2), &f_.TD_inverse[2]);
    define("u", f_.TL(1, 0));
    define("v", f_.TL(2, 0));
    define("w", f_.TL(2, 1));
    define("x", f_.TU(0, 1));
    define("y", f_.TU(0, 2));
    define("z", f_.TU(1, 2));
  }
}

LocalizedElement GaussDecomposition::eval(const std::string& expr) {
  return ExprParser(*this, symbols_, inverses_, expr).parse();
}

CheckResult GaussDecomposition::check(const std::string& equation, const std::string& ref) {
  CheckResult out{equation, ref, false, {}};
  std::vector<std::string> sides;
  std::size_t start = 0;
  for (std::size_t p = equation.find('='); p != std::string::npos; p = equation.find('=', start)) {
    sides.push_back(equation.substr(start, p - start));
    start = p + 1;
  }
  sides.push_back(equation.substr(start));
  if (sides.size() < 2) throw std::invalid_argument("not an equation: " + equation);
  const LocalizedElement first = eval(sides[0]);
  out.pass = true;
  for (std::size_t i = 1; i < sides.size() && out.pass; ++i) {
    const LocalizedElement diff = loc_.simplify(loc_.sub(first, eval(sides[i])));
    if (!diff.num.is_zero()) {
      out.pass = false;
      out.residual = loc_.str(diff);
    }
  }
  return out;
}

namespace {

CheckResult matrix_check(Localizer& loc, const std::string& id, const std::string& ref, const LMatrix& a,
                         const LMatrix& b) {
  CheckResult out{id, ref, true, {}};
  for (std::size_t i = 0; i < a.rows() && out.pass; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const LocalizedElement diff = loc.simplify(loc.sub(a(i, j), b(i, j)));
      if (!diff.num.is_zero()) {
        out.pass = false;
        out.residual = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + loc.str(diff);
        break;
      }
    }
  return out;
}

} // namespace

std::vector<CheckResult> GaussDecomposition::roundtrip_checks() {
  std::vector<CheckResult> out;
  const LMatrix t = to_lmatrix(g_->T());
  const LMatrix ldu = lmul(loc_, lmul(loc_, f_.TL, f_.TD), f_.TU);
  out.push_back(matrix_check(loc_, "T = T_L T_D T_U", "gauss-roundtrip", ldu, t));
  out.push_back(matrix_check(loc_, "T = T_L T_plus", "gauss-roundtrip", lmul(loc_, f_.TL, f_.Tplus), t));
  out.push_back(matrix_check(loc_, "T = T_minus T_U", "gauss-roundtrip", lmul(loc_, f_.Tminus, f_.TU), t));
  out.push_back(matrix_check(loc_, "T_plus = T_D T_U", "gauss-roundtrip", lmul(loc_, f_.TD, f_.TU), f_.Tplus));
  out.push_back(matrix_check(loc_, "T_minus = T_L T_D", "gauss-roundtrip", lmul(loc_, f_.TL, f_.TD), f_.Tminus));
  out.push_back(matrix_check(loc_, "W_L T = T_plus", "gauss-roundtrip", lmul(loc_, f_.WL, t), f_.Tplus));
  out.push_back(matrix_check(loc_, "T W_U = T_minus", "gauss-roundtrip", lmul(loc_, t, f_.WU), f_.Tminus));
  out.push_back(matrix_check(loc_, "T_L = W_L^-1", "gauss-neumann", invert_unitriangular(loc_, f_.WL), f_.TL));
  out.push_back(matrix_check(loc_, "T_L (row path) = T_L (column path)", "gauss-paths", f_.TL, TL_col_));
  out.push_back(matrix_check(loc_, "T_U (row path) = T_U (column path)", "gauss-paths", f_.TU, TU_col_));
  out.push_back(matrix_check(loc_, "T_D (row path) = T_D (column path)", "gauss-paths", f_.TD, TD_col_));
  return out;
}

} // namespace qgauss

namespace qgauss {

namespace {

LMatrix scalar_lmatrix(const ScalarMatrix& m, std::size_t size) {
  LMatrix out(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (const auto& [j, v] : m.row(i)) out(i, j) = LocalizedElement(NCPolynomial(v));
  return out;
}

// X_1 = X (x) 1: entry ((i,k),(j,l)) = X_ij delta_kl
LMatrix kron1(const LMatrix& x) {
  const std::size_t n = x.rows();
  LMatrix out(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i * n + k, j * n + k) = x(i, j);
  return out;
}

// X_2 = 1 (x) X: entry ((i,k),(j,l)) = delta_ij X_kl
LMatrix kron2(const LMatrix& x) {
  const std::size_t n = x.rows();
  LMatrix out(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) out(i * n + k, i * n + l) = x(k, l);
  return out;
}

LMatrix product(Localizer& loc, const std::vector<const LMatrix*>& fs) {
  LMatrix out = *fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = lmul(loc, out, *fs[i]);
  return out;
}

} // namespace

std::vector<CheckResult> verify_rmatrix_exchange(GaussDecomposition& gd) {
  const QuantumGroup& g = gd.group();
  if (!g.rmatrix().is_even() || std::any_of(g.grading().begin(), g.grading().end(), [](int p) { return p != 0; }))
    throw std::invalid_argument("exchange relations are implemented for even gradings only");
  Localizer& loc = gd.localizer();
  const std::size_t n = static_cast<std::size_t>(g.n()), nn = n * n;
  const ScalarMatrix& rs = g.rmatrix().entries;
  ScalarMatrix rds = ScalarMatrix::identity(nn), rdis = ScalarMatrix::identity(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    rds.set(i, i, rs.at(i, i));
    rdis.set(i, i, rs.at(i, i).inverse());
  }
  const LMatrix R = scalar_lmatrix(rs, nn), RD = scalar_lmatrix(rds, nn), RDi = scalar_lmatrix(rdis, nn);
  const GaussFactors& f = gd.factors();
  const LMatrix P1 = kron1(f.Tplus), P2 = kron2(f.Tplus), M1 = kron1(f.Tminus), M2 = kron2(f.Tminus);
  const LMatrix D1 = kron1(f.TD), D2 = kron2(f.TD), U1 = kron1(f.TU), U2 = kron2(f.TU);
  const LMatrix L1 = kron1(f.TL), L2 = kron2(f.TL);
  const LMatrix T1 = kron1(to_lmatrix(g.T())), T2 = kron2(to_lmatrix(g.T()));

  struct Item {
    std::string id;
    std::vector<const LMatrix*> lhs, rhs;
  };
  const std::vector<Item> items = {
      {"R T_1 T_2 = T_2 T_1 R", {&R, &T1, &T2}, {&T2, &T1, &R}},
      // used when moving R_D through R; fails when N is odd
      {"R_D R = R R_D", {&RD, &R}, {&R, &RD}},
      {"R T+_1 T+_2 = T+_2 T+_1 R", {&R, &P1, &P2}, {&P2, &P1, &R}},
      {"R T-_1 T-_2 = T-_2 T-_1 R", {&R, &M1, &M2}, {&M2, &M1, &R}},
      {"T_D1 T_D2 = T_D2 T_D1", {&D1, &D2}, {&D2, &D1}},
      {"R_D T_D1 T-_2 = T-_2 T_D1 R_D", {&RD, &D1, &M2}, {&M2, &D1, &RD}},
      {"R_D T+_1 T_D2 = T_D2 T+_1 R_D", {&RD, &P1, &D2}, {&D2, &P1, &RD}},
      {"R_D T+_1 T-_2 = T-_2 T+_1 R_D", {&RD, &P1, &M2}, {&M2, &P1, &RD}},
      {"R T_U1 R_D T_U2 = T_U2 R_D T_U1 R", {&R, &U1, &RD, &U2}, {&U2, &RD, &U1, &R}},
      {"R T_L1 R_D^-1 T_L2 = T_L2 R_D^-1 T_L1 R", {&R, &L1, &RDi, &L2}, {&L2, &RDi, &L1, &R}},
      {"R_D T_D1 T_L2 = T_L2 T_D1 R_D", {&RD, &D1, &L2}, {&L2, &D1, &RD}},
      {"R_D T_U1 T_D2 = T_D2 T_U1 R_D", {&RD, &U1, &D2}, {&D2, &U1, &RD}},
      {"T_U1 T_L2 = T_L2 T_U1", {&U1, &L2}, {&L2, &U1}},
      {"R_D T+_1 T_L2 = T_L2 R_D T+_1", {&RD, &P1, &L2}, {&L2, &RD, &P1}},
      {"T-_2 R_D^-1 T_U1 = T_U1 T-_2 R_D^-1", {&M2, &RDi, &U1}, {&U1, &M2, &RDi}},
  };
  std::vector<CheckResult> out;
  for (const auto& it : items)
    out.push_back(matrix_check(loc, it.id, "exchange", product(loc, it.lhs), product(loc, it.rhs)));
  return out;
}

} // namespace qgauss

namespace qgauss {

namespace {

std::string ij(int i, int j) { return std::to_string(i) + std::to_string(j); }

std::string qpow(int e) {
  if (e == 0) return "";
  return "q^" + std::to_string(e) + " ";
}

struct Spec {
  std::string equation;
  std::string ref;
};

// Relations shared by the even series: diagonal commutativity, Cartan-type
// exchange of A_m with l_ij and u_ij read off from R_D, and [u, l] = 0.
std::vector<Spec> cartan_lists(const QuantumGroup& g) {
  const int n = g.n();
  const ScalarMatrix& r = g.rmatrix().entries;
  auto rd = [&](int a, int b) { return r.at(pair_index(a, b, n), pair_index(a, b, n)); };
  std::vector<Spec> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({"[A" + ij(i, i) + ", A" + ij(j, j) + "] = 0", "diagonal"});
  for (int m = 1; m <= n; ++m)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j < i; ++j) {
        // A_m l_ij = (R_mj,mj / R_mi,mi) l_ij A_m and A_m u_ji = (R_jm,jm / R_im,im) u_ji A_m
        auto el = (rd(m, j) / rd(m, i)).unit_exponent();
        auto eu = (rd(j, m) / rd(i, m)).unit_exponent();
        if (!el || !eu) throw std::logic_error("non-monomial diagonal R ratio");
        const std::string a = "A" + ij(m, m);
        out.push_back({a + " l" + ij(i, j) + " = " + qpow(*el) + "l" + ij(i, j) + " " + a, "diagonal-lower"});
        out.push_back({a + " u" + ij(j, i) + " = " + qpow(*eu) + "u" + ij(j, i) + " " + a, "diagonal-upper"});
      }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) out.push_back({"[u" + ij(k, l) + ", l" + ij(i, j) + "] = 0", "upper-lower"});
  return out;
}

std::vector<Spec> relation_specs(const QuantumGroup& g) {
  const std::string& name = g.name();
  std::vector<Spec> out;
  auto add = [&](std::initializer_list<const char*> eqs, const char* ref) {
    for (const char* e : eqs) out.push_back({e, ref});
  };
  if (name == "gl1|1") {
    add({"A = a", "psi = A^-1 beta", "sigma = gamma A^-1", "B = d - gamma A^-1 beta"}, "values");
    add({"[A, B] = 0", "A psi = q psi A", "A sigma = q sigma A", "psi psi = 0", "sigma sigma = 0",
         "psi sigma + sigma psi = 0", "B psi = q psi B", "B sigma = q sigma B"},
        "relations");
    return out;
  }
  if (name == "gl2|1") {
    add({"A x = q x A", "A y = q y A", "A z = z A", "A u = q u A", "A v = q v A", "A w = w A",
         "B x = q^-1 x B", "B y = y B", "B z = q z B", "B u = q^-1 u B", "B v = v B", "B w = q w B",
         "C x = x C", "C y = q y C", "C z = q z C", "C u = u C", "C v = q v C", "C w = q w C"},
        "diagonal");
    add({"[A, B] = 0", "[A, C] = 0", "[B, C] = 0", "y y = 0", "z z = 0", "v v = 0", "w w = 0"}, "diagonal-odd");
    add({"x y = q y x", "y z = -q^-1 z y", "q x z - z x = lambda y", "u v = q v u", "v w = -q^-1 w v",
         "u w - q^-1 w u = lambda v"},
        "triangular");
    add({"[x, u] = 0", "[x, v] = 0", "[x, w] = 0", "[u, y] = 0", "[u, z] = 0", "y v + v y = 0", "y w + w y = 0",
         "z v + v z = 0", "z w + w z = 0"},
        "upper-lower");
    return out;
  }
  out = cartan_lists(g);
  if (name == "gl2") add({"A11 = a", "A22 = D[1,2|1,2]/a", "l21 = c/a", "u12 = b/(q a)"}, "values");
  if (name == "sp2") {
    add({"l21 l31 = q^2 l31 l21 + q lambda l41", "l32 l21 = q^2 l21 l32 - (q^4 - 1) l31", "l31 l32 = q^2 l32 l31",
         "[l41, l21] = 0", "[l41, l31] = 0", "[l41, l32] = 0", "[l41, l42] = 0", "[l41, l43] = 0"},
        "lower");
    add({"u12 u13 = q^2 u13 u12 + q lambda u14", "u23 u12 = q^2 u12 u23 - (q^2 - q^-2) u13", "u13 u23 = q^2 u23 u13",
         "[u14, u12] = 0", "[u14, u13] = 0", "[u14, u23] = 0", "[u14, u24] = 0", "[u14, u34] = 0"},
        "upper");
    add({"w21 = -t21 D[1|1]^-1", "w31 = (D[2,3|1,2] - lambda D[1,4|1,2]) D[1,2|1,2]^-1",
         "w32 = -D[1,3|1,2] D[1,2|1,2]^-1", "w41 = -q^2 t41 D[1|1]^-1", "w42 = -q^2 t31 D[1|1]^-1",
         "w43 = t21 D[1|1]^-1", "l21 = -w21", "l32 = -w32", "l43 = -w43",
         "l31 = w32 w21 - w31 = t31 D[1|1]^-1", "l41 = -w43 w32 w21 + w43 w31 + w42 w21 - w41 = t41 D[1|1]^-1",
         "l42 = w43 w32 - w42 = q^-1 D[1,4|1,2] D[1,2|1,2]^-1"},
        "values");
    add({"A11 = D[1|1]", "A22 = D[1|1]^-1 D[1,2|1,2]", "A33 = D[1,2|1,2]^-1 D[1|1]", "A44 = D[1|1]^-1",
         "A11 u12 = t12", "A11 u13 = t13", "A11 u14 = t14", "A22 u23 = D[1|1]^-1 D[1,2|1,3]",
         "A22 u24 = D[1|1]^-1 (t11 t24 - q^2 t14 t21)", "A33 u34 = -D[1,2|1,2]^-1 t12"},
        "values-upper");
  }
  if (name == "so3") add({"l31 = l21^2/[2]", "l32 = l21/q", "u13 = u12^2/[2]", "u23 = q u12"}, "values");
  return out;
}

std::vector<CheckResult> run_specs(GaussDecomposition& gd, const std::vector<Spec>& specs) {
  std::vector<CheckResult> out;
  for (const auto& s : specs) out.push_back(gd.check(s.equation, s.ref));
  return out;
}

} // namespace

std::vector<CheckResult> verify_factor_relations(GaussDecomposition& gd) {
  return run_specs(gd, relation_specs(gd.group()));
}

std::vector<CheckResult> det_product_checks(GaussDecomposition& gd) {
  const QuantumGroup& g = gd.group();
  Localizer& loc = gd.localizer();
  const GaussFactors& f = gd.factors();
  const std::size_t n = static_cast<std::size_t>(g.n());
  std::vector<CheckResult> out;
  const bool super = std::any_of(g.grading().begin(), g.grading().end(), [](int p) { return p != 0; });
  if (!super) {
    if (g.rmatrix().series != Series::GL) return out;
    LocalizedElement prod(NCPolynomial(1));
    for (std::size_t i = 0; i < n; ++i) prod = loc.mul(prod, f.TD(i, i));
    const NCPolynomial det = qdet(gd.algebra(), g.T());
    CheckResult c{"det_q T = A11 ... Ann", "determinant", false, {}};
    const LocalizedElement diff = loc.simplify(loc.sub(prod, LocalizedElement(det)));
    c.pass = diff.num.is_zero();
    if (!c.pass) c.residual = loc.str(diff);
    out.push_back(c);
    out.push_back({"det_q T is central", "determinant", centrality_check(gd.algebra(), det), {}});
    return out;
  }
  std::vector<LocalizedElement> diag;
  for (std::size_t i = 0; i < n; ++i) diag.push_back(f.TD(i, i));
  const LocalizedElement s = sdet(loc, diag, f.TD_inverse, g.grading());
  out.push_back({"sdet_q T is central", "superdeterminant", centrality_check(loc, s), {}});
  if (g.name() == "gl1|1")
    for (const char* e : {"A B^-1 = a a (a d - q gamma beta)^-1 = a/(d - gamma a^-1 beta)"}) {
      CheckResult c = gd.check(e, "superdeterminant");
      const LocalizedElement diff = loc.simplify(loc.sub(s, gd.eval("A B^-1")));
      c.pass = c.pass && diff.num.is_zero();
      out.push_back(c);
    }
  if (g.name() == "gl2|1") {
    CheckResult c = gd.check("A B C^-1 = D[1,2|1,2]/C", "superdeterminant");
    const LocalizedElement diff = loc.simplify(loc.sub(s, gd.eval("A B C^-1")));
    c.pass = c.pass && diff.num.is_zero();
    out.push_back(c);
  }
  return out;
}

std::map<std::string, std::string> eliminate_dependents(const std::string& group_name) {
  if (group_name == "sp2")
    return {{"A33", "A22^-1"},          {"A44", "A11^-1"},       {"l42", "q^2 l31 - l21 l32"},
            {"l43", "-l21"},            {"u24", "q^2 (u13 - u12 u23)"}, {"u34", "-u12"}};
  if (group_name == "so3")
    // A22 is an involution in the quotient
    return {{"A22", "A22^-1"},     {"A33", "A11^-1"}, {"l31", "l21^2/[2]"},
            {"l32", "l21/q"},      {"u13", "u12^2/[2]"}, {"u23", "q u12"}};
  return {};
}

std::size_t independent_generator_count(const QuantumGroup& g) {
  const std::size_t n = static_cast<std::size_t>(g.n());
  return n * n - eliminate_dependents(g.name()).size();
}

std::vector<CheckResult> constraint_check_bcd(GaussDecomposition& gd) {
  const QuantumGroup& g = gd.group();
  if (!g.rmatrix().bcd) throw std::invalid_argument(g.name() + " has no orthogonal/symplectic structure");
  const int n = g.n();
  std::vector<Spec> specs;
  for (int i = 1; i <= n; ++i)
    specs.push_back({"A" + ij(i, i) + " A" + ij(n + 1 - i, n + 1 - i) + " = 1", "diagonal-constraint"});
  for (const auto& [dep, expr] : eliminate_dependents(g.name())) specs.push_back({dep + " = " + expr, "elimination"});
  if (g.rmatrix().series == Series::C) {
    specs.push_back({"Dsp[" + std::to_string(n - 1) + "] = Dsp[1]", "symplectic-determinant"});
    specs.push_back({"Dsp[" + std::to_string(n) + "] = 1", "symplectic-determinant"});
  }
  return run_specs(gd, specs);
}

} // namespace qgauss
