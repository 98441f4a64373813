#pragma once

#include "qgauss/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qgauss {

/// Sparse matrix over QScalar, stored row-wise.
class ScalarMatrix {
public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
  static ScalarMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  QScalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, QScalar v);
  void add(std::size_t i, std::size_t j, const QScalar& v);
  const std::map<std::size_t, QScalar>& row(std::size_t i) const { return rows_[i]; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  ScalarMatrix operator-(const ScalarMatrix& o) const;
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }
  /// Diagonal part.
  ScalarMatrix diagonal() const;

  /// Evaluated at q0 (dense rational).
  std::vector<std::vector<Rational>> eval(const Rational& q0) const;

private:
  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, QScalar>> rows_;
};

/// Row-parallel product (OpenMP) and its serial reference.
ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix multiply_serial(const ScalarMatrix& a, const ScalarMatrix& b);

/// Exact inverse by Gauss-Jordan over Q(q); throws std::domain_error if singular.
ScalarMatrix inverse(const ScalarMatrix& m);

enum class Series { GL, B, C, D, SuperGL, Explicit };

std::string series_name(Series s);

/// Per-(series, rank) data that the R-matrix formula needs but does not fix.
/// Exponents are in units of the algebra's q: with q_scale = s the formula is
/// evaluated at q^s and rho already includes that factor.
struct OrthoSymplecticData {
  std::vector<int> rho;
  std::vector<int> eps;
  int q_scale = 1;
};

struct RMatrixSpec {
  int dimension = 0;          // N
  ScalarMatrix entries;       // N^2 x N^2, row (i,j) -> (i-1)N + (j-1)
  std::vector<int> grading;   // p(i), size N
  Series series = Series::Explicit;
  std::optional<OrthoSymplecticData> bcd;

  QScalar at(int i, int j, int k, int l) const; // R_{ij,kl}, 1-based
  bool is_even() const;
};

/// C = C0 q^rho with (C0)_ij = eps_i delta_{i j'}.
struct CMatrixSpec {
  ScalarMatrix entries; // N x N
};

inline std::size_t pair_index(int i, int j, int n) {
  return static_cast<std::size_t>((i - 1) * n + (j - 1));
}

RMatrixSpec build_gl(int n);
RMatrixSpec build_super_gl(int m, int n);
/// Orthogonal/symplectic R-matrix. Without explicit data the built-in table
/// is used; it covers (C, 2) and (B, 1) only.
RMatrixSpec build_bcd(Series series, int n, std::optional<OrthoSymplecticData> data = std::nullopt);
std::optional<OrthoSymplecticData> builtin_bcd_data(Series series, int n);
CMatrixSpec build_c_matrix(const RMatrixSpec& r);

/// (F (x) G)_{ij;kl} = (-1)^{pG(j) (pF(i) + pF(k))} F_ik G_jl.
ScalarMatrix graded_tensor(const ScalarMatrix& f, const ScalarMatrix& g, const std::vector<int>& pf,
                           const std::vector<int>& pg);
/// Parities of the basis of V (x) W in pair order.
std::vector<int> tensor_parity(const std::vector<int>& pf, const std::vector<int>& pg);

/// R12 R13 R23 - R23 R13 R12 on V (x) V (x) V with graded embeddings.
ScalarMatrix yang_baxter_residual(const RMatrixSpec& r);
ScalarMatrix yang_baxter_residual_serial(const RMatrixSpec& r);
bool yang_baxter_check(const RMatrixSpec& r);

/// Determinant of R at q0 is nonzero.
bool invertible_at(const RMatrixSpec& r, const Rational& q0);

/// Sparse triplet dump: "(i,j) (k,l) value" per nonzero, row-major.
std::string dump_triplets(const RMatrixSpec& r);

} // namespace qgauss
