#pragma once

#include "qgauss/algebra.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgauss {

/// Raised when an element cannot be inverted or moved past a denominator.
struct LocalizationRefused : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Returns m with d t = q^m t d (searched in [-4, 4]); throws LocalizationRefused.
int derive_exchange(Algebra& alg, const NCPolynomial& d, Symbol t);

/// An invertible element registered for localization.
struct MinorInfo {
  std::string name;
  NCPolynomial poly; // canonical
  Weight weight;
  /// exchange[s] = m with d t_s = q^m t_s d, when such m exists.
  std::vector<std::optional<int>> exchange;
};

/// D_1^{-e_1} ... D_k^{-e_k} * numerator, factors in ascending id order.
struct LocalizedElement {
  std::map<int, int> den;
  NCPolynomial num;

  LocalizedElement() = default;
  LocalizedElement(NCPolynomial n) : num(std::move(n)) {} // NOLINT(google-explicit-constructor)
  LocalizedElement(std::map<int, int> d, NCPolynomial n) : den(std::move(d)), num(std::move(n)) {}

  bool is_polynomial() const { return den.empty(); }
};

/// Localization of an Algebra at a set of mutually commuting elements.
class Localizer {
public:
  explicit Localizer(Algebra alg) : alg_(std::move(alg)) {}

  Algebra& algebra() { return alg_; }
  const Alphabet& alphabet() const { return alg_.alphabet(); }

  /// Registers d (or returns the id of an equal registered element). Verifies
  /// that d commutes with every registered element and builds its exchange
  /// table; generators without a monomial exchange are handled by the slower
  /// paths of move_left.
  int register_minor(const std::string& name, const NCPolynomial& d);
  std::optional<int> find(const NCPolynomial& d);
  const MinorInfo& minor(int id) const { return minors_.at(static_cast<std::size_t>(id)); }
  std::size_t minor_count() const { return minors_.size(); }

  LocalizedElement inverse_of(int id) const { return LocalizedElement({{id, 1}}, NCPolynomial(1)); }

  LocalizedElement add(const LocalizedElement& x, const LocalizedElement& y);
  LocalizedElement sub(const LocalizedElement& x, const LocalizedElement& y);
  LocalizedElement neg(const LocalizedElement& x) const;
  LocalizedElement scale(const LocalizedElement& x, const QScalar& c) const;
  LocalizedElement mul(const LocalizedElement& x, const LocalizedElement& y);
  /// Exact equality in the localized algebra.
  bool equal(const LocalizedElement& x, const LocalizedElement& y);
  bool is_zero(const LocalizedElement& x);
  /// Cancels denominators that left-divide the numerator; canonical numerator.
  LocalizedElement simplify(const LocalizedElement& x);
  /// x^{-1} when x = D^{-e} * (product of registered elements); registers
  /// the numerator when it is a new invertible element named new_name.
  LocalizedElement invert(const LocalizedElement& x, const std::string& new_name);

  /// "[D1]^-1 [D2]^-2 (num)"; numerator alone when there is no denominator.
  std::string str(const LocalizedElement& x) const;

  /// n * D^{-1} = D^{-k} * y; returns (k, y).
  std::pair<int, NCPolynomial> move_left(const NCPolynomial& n, int id);

  /// Denominators commute pairwise (re-verified on demand).
  bool denominators_commute();

private:
  NCPolynomial power(int id, int e);
  LocalizedElement with_den(const LocalizedElement& x, const std::map<int, int>& target);

  Algebra alg_;
  std::vector<MinorInfo> minors_;
};

} // namespace qgauss
