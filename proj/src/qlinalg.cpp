#include "qgauss/qlinalg.hpp"

#include "qgauss/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qgauss {

namespace {

QScalar minus_q_pow(int e) { return (e % 2 ? QScalar(-1) : QScalar(1)) * QScalar::q(e); }

NCPolynomial weighted_det(Algebra& alg, const QMatrix& m, int k, int N, bool use_prime) {
  if (m.rows() < static_cast<std::size_t>(k) || m.cols() < static_cast<std::size_t>(k))
    throw std::invalid_argument("matrix smaller than requested order");
  NCPolynomial sum;
  for (const auto& p : permutations(k)) {
    NCPolynomial term(minus_q_pow(p.length) * (use_prime ? QScalar::q(p.transposition_index(N)) : QScalar(1)));
    for (int i = 0; i < k; ++i) term = term * m(static_cast<std::size_t>(i), static_cast<std::size_t>(p.images[i] - 1));
    sum += term;
  }
  return alg.canon(sum);
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<int>& omit) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= n; ++i)
    if (std::find(omit.begin(), omit.end(), static_cast<int>(i)) == omit.end()) out.push_back(i - 1);
  return out;
}

} // namespace

int Permutation::transposition_index(int N) const {
  int count = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j] && images[i] == N + 1 - images[j]) ++count;
  return count;
}

std::vector<Permutation> permutations(int k) {
  std::vector<int> s(static_cast<std::size_t>(k));
  std::iota(s.begin(), s.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation p;
    p.images = s;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (s[i] > s[j]) ++p.length;
    out.push_back(std::move(p));
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

NCPolynomial qdet(Algebra& alg, const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("qdet needs a square matrix");
  if (m.rows() == 0) return NCPolynomial(1);
  return weighted_det(alg, m, static_cast<int>(m.rows()), 0, false);
}

NCPolynomial minor(Algebra& alg, const QMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor needs as many rows as columns");
  std::vector<std::size_t> r, c;
  for (int i : rows) r.push_back(static_cast<std::size_t>(i - 1));
  for (int j : cols) c.push_back(static_cast<std::size_t>(j - 1));
  return qdet(alg, m.submatrix(r, c));
}

NCPolynomial qminor(Algebra& alg, const QMatrix& m, const std::vector<int>& omit_rows,
                    const std::vector<int>& omit_cols) {
  if (omit_rows.size() != omit_cols.size()) throw std::invalid_argument("qminor needs |rows| = |cols|");
  return qdet(alg, m.submatrix(complement(m.rows(), omit_rows), complement(m.cols(), omit_cols)));
}

NCPolynomial spdet(Algebra& alg, const QMatrix& m, int k, bool use_prime) {
  if (k == 0) return NCPolynomial(1);
  return weighted_det(alg, m, k, static_cast<int>(m.rows()), use_prime);
}

NCPolynomial row_expansion(Algebra& alg, const QMatrix& m, int k) {
  const int n = static_cast<int>(m.rows());
  NCPolynomial sum;
  for (int j = 1; j <= n; ++j)
    sum += m(k - 1, j - 1) * qminor(alg, m, {k}, {j}) * minus_q_pow(j - k);
  return alg.canon(sum);
}

NCPolynomial column_expansion(Algebra& alg, const QMatrix& m, int k) {
  const int n = static_cast<int>(m.rows());
  NCPolynomial sum;
  for (int j = 1; j <= n; ++j)
    sum += qminor(alg, m, {j}, {k}) * m(j - 1, k - 1) * minus_q_pow(k - j);
  return alg.canon(sum);
}

std::vector<InverseConvention> inverse_conventions() {
  return {{false, false}, {true, false}, {false, true}, {true, true}};
}

LMatrix qinverse(Localizer& loc, const QMatrix& t, int det_id, InverseConvention conv) {
  const std::size_t n = t.rows();
  LMatrix out(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const int ii = static_cast<int>(i), jj = static_cast<int>(j);
      NCPolynomial m = conv.transpose ? qminor(loc.algebra(), t, {jj}, {ii}) : qminor(loc.algebra(), t, {ii}, {jj});
      const int s = conv.flip_sign ? jj - ii : ii - jj;
      out(i - 1, j - 1) = loc.mul(loc.inverse_of(det_id), LocalizedElement(m * minus_q_pow(s)));
    }
  return out;
}

LMatrix to_lmatrix(const QMatrix& m) {
  LMatrix out(m.rows(), m.cols());
  out.set_parity(m.row_parity(), m.col_parity());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = LocalizedElement(m(i, j));
  return out;
}

LMatrix identity_lmatrix(std::size_t n) {
  LMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = LocalizedElement(NCPolynomial(1));
  return out;
}

LMatrix lmul(Localizer& loc, const LMatrix& a, const LMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix size mismatch");
  LMatrix out(a.rows(), b.cols());
  out.set_parity(a.row_parity(), b.col_parity());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      LocalizedElement s;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k).num.is_zero() || b(k, j).num.is_zero()) continue;
        s = loc.add(s, loc.mul(a(i, k), b(k, j)));
      }
      out(i, j) = loc.simplify(s);
    }
  return out;
}

bool lequal(Localizer& loc, const LMatrix& a, const LMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!loc.equal(a(i, j), b(i, j))) return false;
  return true;
}

bool is_two_sided_inverse(Localizer& loc, const QMatrix& t, const LMatrix& x) {
  const LMatrix tl = to_lmatrix(t), id = identity_lmatrix(t.rows());
  return lequal(loc, lmul(loc, tl, x), id) && lequal(loc, lmul(loc, x, tl), id);
}

std::optional<InverseConvention> resolve_inverse_convention(Localizer& loc, const QMatrix& t, int det_id) {
  for (const auto& c : inverse_conventions())
    if (is_two_sided_inverse(loc, t, qinverse(loc, t, det_id, c))) return c;
  return std::nullopt;
}

LocalizedElement sdet(Localizer& loc, const std::vector<LocalizedElement>& diag,
                      const std::vector<LocalizedElement>& diag_inverse, const std::vector<int>& grading) {
  if (diag.size() != grading.size() || diag_inverse.size() != grading.size())
    throw std::invalid_argument("sdet: size mismatch");
  LocalizedElement out(NCPolynomial(1));
  for (std::size_t i = 0; i < diag.size(); ++i) out = loc.mul(out, grading[i] ? diag_inverse[i] : diag[i]);
  return loc.simplify(out);
}

std::vector<NCPolynomial> canon_all(const Algebra& alg, const std::vector<NCPolynomial>& ps) {
  return parallel_map<NCPolynomial>(
      ps.size(), [&] { return alg.clone(); }, [&](Algebra& a, std::size_t i) { return a.canon(ps[i]); });
}

std::vector<NCPolynomial> canon_all_serial(const Algebra& alg, const std::vector<NCPolynomial>& ps) {
  return serial_map<NCPolynomial>(
      ps.size(), [&] { return alg.clone(); }, [&](Algebra& a, std::size_t i) { return a.canon(ps[i]); });
}

namespace {

std::vector<NCPolynomial> commutators(const Algebra& alg, const NCPolynomial& x) {
  std::vector<NCPolynomial> out;
  for (std::size_t s = 0; s < alg.alphabet().size(); ++s) {
    const NCPolynomial t = NCPolynomial::letter(static_cast<Symbol>(s));
    out.push_back(x * t - t * x);
  }
  return out;
}

bool all_zero(const std::vector<NCPolynomial>& ps) {
  return std::all_of(ps.begin(), ps.end(), [](const NCPolynomial& p) { return p.is_zero(); });
}

} // namespace

bool centrality_check(Algebra& alg, const NCPolynomial& x) { return all_zero(canon_all(alg, commutators(alg, x))); }

bool centrality_check_serial(Algebra& alg, const NCPolynomial& x) {
  return all_zero(canon_all_serial(alg, commutators(alg, x)));
}

bool centrality_check(Localizer& loc, const LocalizedElement& x) {
  for (std::size_t s = 0; s < loc.alphabet().size(); ++s) {
    const LocalizedElement t(NCPolynomial::letter(static_cast<Symbol>(s)));
    if (!loc.equal(loc.mul(x, t), loc.mul(t, x))) return false;
  }
  return true;
}

} // namespace qgauss
