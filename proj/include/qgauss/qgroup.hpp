#pragma once

#include "qgauss/algebra.hpp"
#include "qgauss/qmatrix.hpp"
#include "qgauss/rmatrix.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qgauss {

/// lhs = rhs.
struct Relation {
  NCPolynomial lhs;
  NCPolynomial rhs;
  /// For C-conditions: the right-hand side is nonzero.
  bool independent = true;

  NCPolynomial poly() const { return lhs - rhs; }
  std::string str(const Alphabet& alpha) const { return lhs.str(alpha) + " = " + rhs.str(alpha); }
};

/// Generators t_ij in (row, col) order with parity p(i) + p(j). Names default
/// to "t<i><j>".
Alphabet make_alphabet(int n, const std::vector<int>& grading, const std::vector<std::string>& names = {});

/// Raw entries of R T1 T2 - T2 T1 R (graded tensor signs), zero entries dropped.
std::vector<NCPolynomial> frt_polynomials(const RMatrixSpec& r, const Alphabet& alpha);

/// FRT relations with duplicates merged: the reduced row echelon basis of
/// the span of the raw entries, each written as head = replacement.
std::vector<Relation> frt_relations(const RMatrixSpec& r, const Alphabet& alpha);

struct OrientReport {
  std::shared_ptr<const RewriteSystem> system;
  std::vector<Word> uncovered;
  std::vector<CriticalPair> unresolved;
  bool ok() const { return system && uncovered.empty() && unresolved.empty(); }
};

/// Orients relations into a rewrite system and runs the completeness and
/// degree-3 confluence diagnostics.
OrientReport orient(const Alphabet& alpha, const std::vector<Relation>& relations, bool check_confluent = true,
                    std::uint64_t step_budget = kDefaultStepBudget);

/// Row/column weights of t_ij: (h(i), h(j)) with h(i) = e_i for GL type and
/// e_i - e_{i'} for orthogonal/symplectic type.
std::vector<Weight> letter_weights(const RMatrixSpec& r, const Alphabet& alpha);

/// A quantum (super)group built from its R-matrix.
class QuantumGroup {
public:
  QuantumGroup(std::string name, RMatrixSpec r, std::vector<std::string> names = {},
               std::uint64_t step_budget = kDefaultStepBudget);

  const std::string& name() const { return name_; }
  int n() const { return r_.dimension; }
  const std::vector<int>& grading() const { return r_.grading; }
  const RMatrixSpec& rmatrix() const { return r_; }
  const Alphabet& alphabet() const { return alpha_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::shared_ptr<const RewriteSystem> system() const { return system_; }
  const std::vector<Weight>& weights() const { return weights_; }
  std::uint64_t step_budget() const { return budget_; }
  /// Rules added by completion beyond the oriented FRT relations.
  std::size_t completion_rules() const { return completion_rules_; }

  /// t_ij as a polynomial (1-based).
  NCPolynomial t(int i, int j) const;
  /// The matrix of generators.
  QMatrix T() const;

  /// FRT algebra A(R) (no C-condition imposed).
  Algebra frt_algebra() const;
  /// The algebra in which the group lives: A(R), or A(R)/(Q - 1) when a C
  /// matrix is present.
  Algebra algebra() const;

  bool has_c() const { return c_.has_value(); }
  const CMatrixSpec& c_matrix() const { return c_.value(); }
  /// Q with T C T^t = Q C in A(R).
  const NCPolynomial& q_element() const { return q_.value(); }

private:
  std::string name_;
  RMatrixSpec r_;
  Alphabet alpha_;
  std::vector<Relation> relations_;
  std::shared_ptr<const RewriteSystem> system_;
  std::vector<Weight> weights_;
  std::optional<CMatrixSpec> c_;
  std::optional<NCPolynomial> q_;
  std::uint64_t budget_;
  std::size_t completion_rules_ = 0;
};

/// T C T^t (entries in the free algebra).
QMatrix tct(const QuantumGroup& g);
/// C T^t C^{-1} T.
QMatrix ctct(const QuantumGroup& g);

/// Elementwise C-conditions T C T^t = C and T^t C^{-1} T = C^{-1}; a relation
/// is flagged independent when its right-hand side is nonzero.
std::vector<Relation> c_conditions(const QuantumGroup& g);

struct CStructureReport {
  bool tct_is_q_c = false;   // T C T^t = Q C in A(R)
  bool ctct_is_q = false;    // C T^t C^{-1} T = Q 1 in A(R)
  bool q_central = false;
  std::size_t independent = 0; // C-conditions with nonzero right-hand side
  std::size_t homogeneous_in_frt = 0; // zero-RHS C-conditions that already hold in A(R)
  std::size_t homogeneous = 0;
};
CStructureReport c_structure(const QuantumGroup& g);

std::vector<std::string> preset_names();
/// gl1..gl4, so3, sp2, gl1|1, gl2|1; throws std::invalid_argument otherwise.
std::shared_ptr<const QuantumGroup> preset(const std::string& name, std::uint64_t step_budget = kDefaultStepBudget);

} // namespace qgauss
