#pragma once

#include "qgauss/localize.hpp"
#include "qgauss/qmatrix.hpp"

#include <cstddef>
#include <vector>

namespace qgauss {

using LMatrix = BasicMatrix<LocalizedElement>;

/// A permutation of {1..k} with its inversion count and, relative to an
/// index pairing i' = N + 1 - i, its transposition index.
struct Permutation {
  std::vector<int> images; // sigma(1..k), 1-based values
  int length = 0;          // inversion count

  /// Inversions (i < j, sigma(i) > sigma(j)) with sigma(i) = N + 1 - sigma(j).
  int transposition_index(int N) const;
};

/// All permutations of {1..k} in lexicographic order.
std::vector<Permutation> permutations(int k);

/// sum_sigma (-q)^{l(sigma)} m_{1 sigma(1)} ... m_{k sigma(k)}, canonical.
NCPolynomial qdet(Algebra& alg, const QMatrix& m);

/// q-determinant of the submatrix keeping rows and cols (1-based, ascending).
NCPolynomial minor(Algebra& alg, const QMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

/// q-determinant after omitting the given rows and columns (1-based).
/// Omitting everything gives 1.
NCPolynomial qminor(Algebra& alg, const QMatrix& m, const std::vector<int>& omit_rows,
                    const std::vector<int>& omit_cols);

/// Principal symplectic determinant of order k of an N x N matrix:
/// sum_sigma (-q)^{l(sigma)} q^{l'(sigma)} t_{1 sigma(1)} ... t_{k sigma(k)}.
/// With use_prime = false the q^{l'} factor is dropped (then it equals qdet).
NCPolynomial spdet(Algebra& alg, const QMatrix& m, int k, bool use_prime = true);

/// sum_j (-q)^{j-k} t_kj M(k,j), with M(k,j) omitting row k and column j.
NCPolynomial row_expansion(Algebra& alg, const QMatrix& m, int k);
/// sum_j (-q)^{k-j} M(j,k) t_jk.
NCPolynomial column_expansion(Algebra& alg, const QMatrix& m, int k);

/// Adjugate conventions for (T^-1)_ij = (-q)^{s} det^-1 M, with M omitting
/// one row and one column.
struct InverseConvention {
  bool transpose = false; // false: M omits row i, column j; true: row j, column i
  bool flip_sign = false; // false: s = i - j; true: s = j - i
};
std::vector<InverseConvention> inverse_conventions();

/// Inverse of T from the adjugate formula; det_id is the registered q-determinant.
LMatrix qinverse(Localizer& loc, const QMatrix& t, int det_id, InverseConvention conv);

/// True when T * X and X * T both equal the identity.
bool is_two_sided_inverse(Localizer& loc, const QMatrix& t, const LMatrix& x);

/// Finds the convention passing is_two_sided_inverse; nullopt if none does.
std::optional<InverseConvention> resolve_inverse_convention(Localizer& loc, const QMatrix& t, int det_id);

/// prod over even rows of A_ii times prod over odd rows of A_ii^{-1},
/// in row order. diag_inverse[i] is the inverse of A_ii.
LocalizedElement sdet(Localizer& loc, const std::vector<LocalizedElement>& diag,
                      const std::vector<LocalizedElement>& diag_inverse, const std::vector<int>& grading);

/// x t = t x for every generator t.
bool centrality_check(Algebra& alg, const NCPolynomial& x);
bool centrality_check_serial(Algebra& alg, const NCPolynomial& x);

/// canon() of every polynomial, one cloned Algebra per worker (OpenMP), and
/// its serial twin.
std::vector<NCPolynomial> canon_all(const Algebra& alg, const std::vector<NCPolynomial>& ps);
std::vector<NCPolynomial> canon_all_serial(const Algebra& alg, const std::vector<NCPolynomial>& ps);
bool centrality_check(Localizer& loc, const LocalizedElement& x);

/// Matrix products over the localization.
LMatrix lmul(Localizer& loc, const LMatrix& a, const LMatrix& b);
LMatrix to_lmatrix(const QMatrix& m);
LMatrix identity_lmatrix(std::size_t n);
bool lequal(Localizer& loc, const LMatrix& a, const LMatrix& b);

} // namespace qgauss
