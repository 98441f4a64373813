#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgauss {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a rational function is evaluated at a pole.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored densely: coefficient of q^(low_ + k) lives in coeffs_[k]. The
/// vector is trimmed so that the first and last entries are nonzero; the zero
/// polynomial has an empty vector.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long c); // NOLINT(google-explicit-constructor)
  LaurentPoly(BigInt c); // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(BigInt c, int exponent);
  static LaurentPoly q(int exponent = 1) { return monomial(1, exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return coeffs_.size() == 1; }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int exponent) const;
  const BigInt& leading() const { return coeffs_.back(); }
  const BigInt& trailing() const { return coeffs_.front(); }
  std::size_t term_count() const;

  /// Multiply by q^k.
  LaurentPoly shifted(int k) const;
  /// gcd of all coefficients (nonnegative); zero for the zero polynomial.
  BigInt content() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Divide every coefficient by c; c must divide all of them.
  LaurentPoly divided_exact(const BigInt& c) const;

  Rational eval(const Rational& q0) const;

  /// Terms by descending exponent, e.g. "q^2 - 2 + q^-2".
  std::string str() const;

  std::size_t hash() const;

private:
  void trim();
  friend class QScalar;
  friend LaurentPoly poly_gcd(const LaurentPoly&, const LaurentPoly&);
  friend LaurentPoly poly_div_exact(const LaurentPoly&, const LaurentPoly&);

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

/// gcd in Z[q, 1/q], normalized to trailing exponent 0 and positive leading
/// coefficient. gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
/// a / b where b divides a exactly in Z[q, 1/q]; throws std::logic_error otherwise.
LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Element of Q(q): a reduced fraction of Laurent polynomials.
///
/// Canonical form: gcd(num, den) is a unit, the denominator has trailing
/// exponent 0 and positive leading coefficient. Two values are equal iff
/// their stored representations are identical.
class QScalar {
public:
  QScalar() : num_(), den_(1) {}
  QScalar(long c) : num_(c), den_(1) {} // NOLINT(google-explicit-constructor)
  QScalar(LaurentPoly p) : num_(std::move(p)), den_(1) { normalize(); } // NOLINT
  QScalar(LaurentPoly num, LaurentPoly den);

  static QScalar q(int exponent = 1) { return QScalar(LaurentPoly::q(exponent)); }
  /// q - 1/q
  static QScalar lambda();
  /// q + 1/q
  static QScalar q_int2();

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  /// c * q^k with c = +-1.
  bool is_unit_monomial() const;
  /// If this is +-q^k return k, with the sign in *sign.
  std::optional<int> unit_exponent(int* sign = nullptr) const;

  QScalar operator-() const;
  friend QScalar operator+(const QScalar& a, const QScalar& b);
  friend QScalar operator-(const QScalar& a, const QScalar& b);
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  friend QScalar operator/(const QScalar& a, const QScalar& b);
  QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
  QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
  QScalar& operator/=(const QScalar& o) { return *this = *this / o; }
  friend bool operator==(const QScalar& a, const QScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  QScalar inverse() const;
  QScalar pow(int e) const;

  /// Substitute q = q0; throws PoleError when the denominator vanishes or q0 = 0.
  Rational eval(const Rational& q0) const;

  /// "q^2 - 2 + q^-2" or "(num)/(den)".
  std::string str() const;
  /// Like str() but parenthesized whenever more than one term is printed.
  std::string str_atomic() const;

  std::size_t hash() const;

private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

QScalar qs_add(const QScalar& a, const QScalar& b);
QScalar qs_mul(const QScalar& a, const QScalar& b);
Rational qs_eval(const QScalar& a, const Rational& q0);

/// Parse the output of QScalar::str() back (used by golden-file tests).
QScalar parse_qscalar(const std::string& text);

} // namespace qgauss

template <>
struct std::hash<qgauss::QScalar> {
  std::size_t operator()(const qgauss::QScalar& s) const { return s.hash(); }
};
