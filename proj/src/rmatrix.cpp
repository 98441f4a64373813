#include "qgauss/rmatrix.hpp"
#include "qgauss/parallel.hpp"

#include <sstream>
#include <stdexcept>

namespace qgauss {

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, QScalar(1));
  return m;
}

QScalar ScalarMatrix::at(std::size_t i, std::size_t j) const {
  const auto& r = rows_.at(i);
  auto it = r.find(j);
  return it == r.end() ? QScalar() : it->second;
}

void ScalarMatrix::set(std::size_t i, std::size_t j, QScalar v) {
  if (j >= cols_) throw std::out_of_range("column out of range");
  auto& r = rows_.at(i);
  if (v.is_zero())
    r.erase(j);
  else
    r[j] = std::move(v);
}

void ScalarMatrix::add(std::size_t i, std::size_t j, const QScalar& v) {
  if (v.is_zero()) return;
  set(i, j, at(i, j) + v);
}

std::size_t ScalarMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
  if (rows() != o.rows() || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  ScalarMatrix r = *this;
  for (std::size_t i = 0; i < o.rows(); ++i)
    for (const auto& [j, v] : o.rows_[i]) r.add(i, j, -v);
  return r;
}

ScalarMatrix ScalarMatrix::diagonal() const {
  ScalarMatrix d(rows(), cols_);
  for (std::size_t i = 0; i < rows() && i < cols_; ++i) d.set(i, i, at(i, i));
  return d;
}

std::vector<std::vector<Rational>> ScalarMatrix::eval(const Rational& q0) const {
  std::vector<std::vector<Rational>> out(rows(), std::vector<Rational>(cols_, Rational(0)));
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, v] : rows_[i]) out[i][j] = v.eval(q0);
  return out;
}

namespace {

std::map<std::size_t, QScalar> product_row(const ScalarMatrix& a, const ScalarMatrix& b, std::size_t i) {
  std::map<std::size_t, QScalar> acc;
  for (const auto& [k, x] : a.row(i))
    for (const auto& [j, y] : b.row(k)) {
      auto [it, inserted] = acc.try_emplace(j, x * y);
      if (!inserted) it->second += x * y;
    }
  for (auto it = acc.begin(); it != acc.end();) it = it->second.is_zero() ? acc.erase(it) : std::next(it);
  return acc;
}

ScalarMatrix assemble(std::size_t cols, std::vector<std::map<std::size_t, QScalar>> rows) {
  ScalarMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto& [j, v] : rows[i]) m.set(i, j, std::move(v));
  return m;
}

} // namespace

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in multiply");
  auto rows = parallel_map<std::map<std::size_t, QScalar>>(
      a.rows(), [] { return 0; }, [&](int&, std::size_t i) { return product_row(a, b, i); });
  return assemble(b.cols(), std::move(rows));
}

ScalarMatrix multiply_serial(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in multiply");
  auto rows = serial_map<std::map<std::size_t, QScalar>>(
      a.rows(), [] { return 0; }, [&](int&, std::size_t i) { return product_row(a, b, i); });
  return assemble(b.cols(), std::move(rows));
}

ScalarMatrix inverse(const ScalarMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  std::vector<std::vector<QScalar>> a(n, std::vector<QScalar>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, v] : m.row(i)) a[i][j] = v;
    a[i][n + i] = QScalar(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(a[p], a[c]);
    QScalar inv = a[c][c].inverse();
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      QScalar f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k)
        if (!a[c][k].is_zero()) a[r][k] -= f * a[c][k];
    }
  }
  ScalarMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, a[i][n + j]);
  return out;
}

std::string series_name(Series s) {
  switch (s) {
  case Series::GL: return "GL";
  case Series::B: return "B";
  case Series::C: return "C";
  case Series::D: return "D";
  case Series::SuperGL: return "SUPER_GL";
  case Series::Explicit: return "EXPLICIT";
  }
  return "?";
}

QScalar RMatrixSpec::at(int i, int j, int k, int l) const {
  return entries.at(pair_index(i, j, dimension), pair_index(k, l, dimension));
}

bool RMatrixSpec::is_even() const {
  const int n = dimension;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (const auto& [col, v] : entries.row(pair_index(i, j, n))) {
        const int k = static_cast<int>(col) / n + 1;
        const int l = static_cast<int>(col) % n + 1;
        if ((grading[i - 1] + grading[j - 1] + grading[k - 1] + grading[l - 1]) % 2 != 0) return false;
      }
  return true;
}

RMatrixSpec build_gl(int n) { return build_super_gl(n, 0); }

RMatrixSpec build_super_gl(int m, int n) {
  const int dim = m + n;
  if (m < 0 || n < 0 || dim < 1) throw std::invalid_argument("need m + n >= 1");
  RMatrixSpec r;
  r.dimension = dim;
  r.series = n == 0 ? Series::GL : Series::SuperGL;
  r.grading.assign(dim, 0);
  for (int i = m; i < dim; ++i) r.grading[i] = 1;
  r.entries = ScalarMatrix(dim * dim, dim * dim);
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j) {
      const std::size_t ij = pair_index(i, j, dim);
      r.entries.set(ij, ij, i == j ? QScalar::q(1 - 2 * r.grading[i - 1]) : QScalar(1));
      if (i > j) r.entries.set(ij, pair_index(j, i, dim), QScalar::lambda());
    }
  return r;
}

std::optional<OrthoSymplecticData> builtin_bcd_data(Series series, int n) {
  if (series == Series::C && n == 2) return OrthoSymplecticData{{2, 1, -1, -2}, {1, 1, -1, -1}, 1};
  // B1: half-integral rho (1/2, 0, -1/2), so the formula runs at q^2 with rho
  // doubled; eps follows C = (-q)^{i-2} delta_{ij'}.
  if (series == Series::B && n == 1) return OrthoSymplecticData{{1, 0, -1}, {-1, 1, -1}, 2};
  return std::nullopt;
}

RMatrixSpec build_bcd(Series series, int n, std::optional<OrthoSymplecticData> data) {
  if (series != Series::B && series != Series::C && series != Series::D)
    throw std::invalid_argument("build_bcd needs series B, C or D");
  if (!data) data = builtin_bcd_data(series, n);
  if (!data)
    throw std::invalid_argument("no rho vector for series " + series_name(series) + " rank " + std::to_string(n) +
                                "; supply it explicitly");
  const int dim = series == Series::B ? 2 * n + 1 : 2 * n;
  if (static_cast<int>(data->rho.size()) != dim || static_cast<int>(data->eps.size()) != dim)
    throw std::invalid_argument("rho/eps length must equal N");
  const int s = data->q_scale;
  const QScalar qs = QScalar::q(s);
  const QScalar qsinv = QScalar::q(-s);
  const QScalar lam = qs - qsinv;
  auto prime = [dim](int i) { return dim + 1 - i; };

  RMatrixSpec r;
  r.dimension = dim;
  r.series = series;
  r.grading.assign(dim, 0);
  r.bcd = data;
  r.entries = ScalarMatrix(dim * dim, dim * dim);
  auto add = [&](int a, int b, int c, int d, const QScalar& v) {
    // e_ab (x) e_cd sits at row (a,c), column (b,d)
    r.entries.add(pair_index(a, c, dim), pair_index(b, d, dim), v);
  };
  for (int i = 1; i <= dim; ++i) {
    if (i != prime(i)) {
      add(i, i, i, i, qs);
      add(prime(i), prime(i), i, i, qsinv);
    } else {
      add(i, i, i, i, QScalar(1));
    }
    for (int j = 1; j <= dim; ++j)
      if (j != i && j != prime(i)) add(i, i, j, j, QScalar(1));
  }
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j < i; ++j) {
      add(i, j, j, i, lam);
      const int e = data->rho[i - 1] - data->rho[j - 1];
      add(i, j, prime(i), prime(j), -lam * QScalar::q(e) * QScalar(data->eps[i - 1] * data->eps[j - 1]));
    }
  return r;
}

CMatrixSpec build_c_matrix(const RMatrixSpec& r) {
  if (!r.bcd) throw std::invalid_argument("C matrix needs an orthogonal or symplectic R-matrix");
  const int dim = r.dimension;
  CMatrixSpec c;
  c.entries = ScalarMatrix(dim, dim);
  for (int i = 1; i <= dim; ++i) {
    const int j = dim + 1 - i;
    c.entries.set(i - 1, j - 1, QScalar(r.bcd->eps[i - 1]) * QScalar::q(r.bcd->rho[j - 1]));
  }
  return c;
}

std::vector<int> tensor_parity(const std::vector<int>& pf, const std::vector<int>& pg) {
  std::vector<int> out;
  out.reserve(pf.size() * pg.size());
  for (int a : pf)
    for (int b : pg) out.push_back((a + b) % 2);
  return out;
}

ScalarMatrix graded_tensor(const ScalarMatrix& f, const ScalarMatrix& g, const std::vector<int>& pf,
                           const std::vector<int>& pg) {
  const std::size_t nf = f.rows(), ng = g.rows();
  if (f.cols() != nf || g.cols() != ng || pf.size() != nf || pg.size() != ng)
    throw std::invalid_argument("graded_tensor needs square matrices with matching parity vectors");
  ScalarMatrix out(nf * ng, nf * ng);
  for (std::size_t i = 0; i < nf; ++i)
    for (const auto& [k, fik] : f.row(i))
      for (std::size_t j = 0; j < ng; ++j)
        for (const auto& [l, gjl] : g.row(j)) {
          const bool neg = pg[j] * (pf[i] + pf[k]) % 2 != 0;
          QScalar v = fik * gjl;
          out.set(i * ng + j, k * ng + l, neg ? -v : v);
        }
  return out;
}

namespace {

using MulFn = ScalarMatrix (*)(const ScalarMatrix&, const ScalarMatrix&);

ScalarMatrix ybe_residual(const RMatrixSpec& r, MulFn mul) {
  const std::size_t n = static_cast<std::size_t>(r.dimension);
  const auto& p = r.grading;
  const auto pp = tensor_parity(p, p);
  const ScalarMatrix id = ScalarMatrix::identity(n);
  ScalarMatrix swap(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) swap.set(i * n + j, j * n + i, QScalar(p[i] * p[j] ? -1 : 1));
  const ScalarMatrix r12 = graded_tensor(r.entries, id, pp, p);
  const ScalarMatrix r23 = graded_tensor(id, r.entries, p, pp);
  const ScalarMatrix p23 = graded_tensor(id, swap, p, pp);
  const ScalarMatrix r13 = mul(mul(p23, r12), p23);
  const ScalarMatrix lhs = mul(mul(r12, r13), r23);
  const ScalarMatrix rhs = mul(mul(r23, r13), r12);
  return lhs - rhs;
}

} // namespace

ScalarMatrix yang_baxter_residual(const RMatrixSpec& r) { return ybe_residual(r, &multiply); }
ScalarMatrix yang_baxter_residual_serial(const RMatrixSpec& r) { return ybe_residual(r, &multiply_serial); }
bool yang_baxter_check(const RMatrixSpec& r) { return yang_baxter_residual(r).is_zero(); }

bool invertible_at(const RMatrixSpec& r, const Rational& q0) {
  auto a = r.entries.eval(q0);
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(a[p], a[c]);
    for (std::size_t k = c + 1; k < n; ++k) {
      if (a[k][c] == 0) continue;
      Rational f = a[k][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[k][j] -= f * a[c][j];
    }
  }
  return true;
}

std::string dump_triplets(const RMatrixSpec& r) {
  std::ostringstream os;
  const int n = r.dimension;
  for (std::size_t row = 0; row < r.entries.rows(); ++row)
    for (const auto& [col, v] : r.entries.row(row))
      os << '(' << row / n + 1 << ',' << row % n + 1 << ") (" << col / n + 1 << ',' << col % n + 1 << ") "
         << v.str() << '\n';
  return os.str();
}

} // namespace qgauss
