#pragma once

#include "qgauss/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qgauss {

using Symbol = std::uint8_t;

/// A generator of the free algebra: t_{row,col} with its Z2 parity.
struct Generator {
  std::string name;
  int row = 0;
  int col = 0;
  int parity = 0;
};

/// Generators of one algebra, indexed by Symbol. Symbol order is the
/// (row, col) lexicographic order.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> gens);

  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](Symbol s) const { return gens_[s]; }
  const std::vector<Generator>& generators() const { return gens_; }
  /// Symbol of t_{row,col}; throws if absent.
  Symbol at(int row, int col) const;
  /// Symbol by printed name; throws if absent.
  Symbol by_name(std::string_view name) const;
  bool has_name(std::string_view name) const;

private:
  std::vector<Generator> gens_;
};

using Word = std::basic_string<Symbol>;

/// Graded-lexicographic order: shorter words first, then letterwise.
struct GradedLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

int word_parity(const Word& w, const Alphabet& alpha);
std::string word_str(const Word& w, const Alphabet& alpha);

/// Finite sum of QScalar * Word in the free associative algebra. Products are
/// plain concatenation; nothing commutes until a rewrite system is applied.
class NCPolynomial {
public:
  using Terms = std::map<Word, QScalar, GradedLess>;

  NCPolynomial() = default;
  NCPolynomial(QScalar c); // NOLINT(google-explicit-constructor)
  NCPolynomial(long c) : NCPolynomial(QScalar(c)) {} // NOLINT(google-explicit-constructor)
  static NCPolynomial word(Word w, QScalar c = 1);
  static NCPolynomial letter(Symbol s, QScalar c = 1) { return word(Word(1, s), std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  /// Coefficient of w (zero if absent).
  QScalar coeff(const Word& w) const;
  /// Graded-lex greatest word; must not be called on zero.
  const Word& leading_word() const { return terms_.rbegin()->first; }
  const QScalar& leading_coeff() const { return terms_.rbegin()->second; }
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }
  std::size_t low_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }
  bool is_homogeneous() const { return degree() == low_degree(); }
  /// Constant term (coefficient of the empty word).
  QScalar constant() const { return coeff(Word{}); }

  void add_term(const Word& w, const QScalar& c);
  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  NCPolynomial& operator*=(const QScalar& c);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(NCPolynomial a, const QScalar& c) { return a *= c; }
  friend NCPolynomial operator*(const QScalar& c, NCPolynomial a) { return a *= c; }
  NCPolynomial operator-() const { return *this * QScalar(-1); }
  /// Concatenation product.
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) { return a.terms_ == b.terms_; }

  /// Homogeneous component of the given degree.
  NCPolynomial component(std::size_t deg) const;

  /// Canonical serialization: graded-lex descending, "coef w1 w2".
  std::string str(const Alphabet& alpha) const;

private:
  Terms terms_;
};

/// Formats a coefficient followed by a (possibly empty) monomial body.
/// Used for both polynomial and localized serialization.
std::string format_term(const QScalar& c, const std::string& body, bool first);

} // namespace qgauss
