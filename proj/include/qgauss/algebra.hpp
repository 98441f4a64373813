#pragma once

#include "qgauss/rewrite.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace qgauss {

using Weight = std::vector<int>;

/// Echelon form that also tracks, for every row, a tag polynomial: each row
/// v was inserted together with some y and stays paired with the same linear
/// combination of the inserted y's.
class TaggedEchelon {
public:
  bool insert(const NCPolynomial& v, const NCPolynomial& tag);
  /// p = remainder + sum c_i v_i; returns (remainder, sum c_i tag_i).
  std::pair<NCPolynomial, NCPolynomial> reduce(const NCPolynomial& p) const;
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(const Word& w) const { return rows_.count(w) != 0; }

private:
  std::map<Word, std::pair<NCPolynomial, NCPolynomial>, GradedLess> rows_;
};

/// Computational view of a finitely presented graded algebra A: normal forms
/// from a confluent rewrite system, a weight grading by letters, and optionally
/// the quotient A/(Q - 1) by a central homogeneous element Q of degree 2.
///
/// In the quotient, canon() returns the representative whose degree-d part is
/// reduced modulo Q*A_{d-2} for every d, which is unique because Q is central
/// and not a zero divisor.
///
/// Holds memo tables; use clone() to get an independent copy per thread.
class Algebra {
public:
  Algebra(std::shared_ptr<const RewriteSystem> sys, std::vector<Weight> letter_weights,
          std::uint64_t step_budget = kDefaultStepBudget);

  Algebra clone() const;

  const Alphabet& alphabet() const { return sys_->alphabet(); }
  const RewriteSystem& system() const { return *sys_; }
  std::shared_ptr<const RewriteSystem> system_ptr() const { return sys_; }
  Reducer& reducer() { return reducer_; }

  /// Imposes Q = 1. Q must be homogeneous of degree 2, weight zero and central.
  void set_central_unit(const NCPolynomial& q_element);
  bool is_quotient() const { return central_.has_value(); }
  const std::optional<NCPolynomial>& central_unit() const { return central_; }

  /// Normal form in A (ignores the quotient).
  NCPolynomial normal_form(const NCPolynomial& p);
  /// Canonical representative (in the quotient when one is set).
  NCPolynomial canon(const NCPolynomial& p);
  NCPolynomial mul(const NCPolynomial& a, const NCPolynomial& b);
  bool is_zero(const NCPolynomial& p) { return canon(p).is_zero(); }
  bool equal(const NCPolynomial& a, const NCPolynomial& b) { return is_zero(a - b); }

  Weight weight(const Word& w) const;
  /// Weight of a weight-homogeneous polynomial; throws otherwise.
  Weight weight(const NCPolynomial& p) const;
  int parity(const Word& w) const { return word_parity(w, alphabet()); }
  std::map<Weight, NCPolynomial> split_by_weight(const NCPolynomial& p) const;

  /// Normal words of A with the given degree and weight.
  const std::vector<Word>& normal_words(std::size_t degree, const Weight& w);
  /// Basis words of the algebra in use (quotient-reduced when set).
  std::vector<Word> basis_words(std::size_t degree, const Weight& w);

  /// Finds y with canon(left * y * right) = canon(target). y ranges over
  /// basis words of degrees compatible with the target, up to extra_degree
  /// beyond the naive bound (only meaningful in the quotient). left and right
  /// must be weight-homogeneous.
  std::optional<NCPolynomial> solve(const NCPolynomial& left, const NCPolynomial& right, const NCPolynomial& target,
                                    std::size_t extra_degree = 2);

  std::uint64_t step_budget() const { return reducer_.budget(); }

private:
  const TaggedEchelon& quotient_echelon(std::size_t degree, const Weight& w);
  std::optional<NCPolynomial> solve_component(const NCPolynomial& left, const NCPolynomial& right,
                                              const NCPolynomial& target, const std::vector<std::size_t>& degrees,
                                              const Weight& w);

  std::shared_ptr<const RewriteSystem> sys_;
  std::vector<Weight> letter_weights_;
  Reducer reducer_;
  std::optional<NCPolynomial> central_;
  std::map<std::size_t, std::map<Weight, std::vector<Word>>> words_;
  std::map<std::pair<std::size_t, Weight>, TaggedEchelon> qech_;
};

} // namespace qgauss
