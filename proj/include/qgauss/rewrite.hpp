#pragma once

#include "qgauss/ncpoly.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qgauss {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Symbol s : w) {
      h ^= s;
      h *= 1099511628211ULL;
    }
    return h ^ w.size();
  }
};

/// Thrown when normal-form computation exceeds its step budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a relation set cannot be turned into a usable rewrite system.
struct RewriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// head -> replacement, every replacement word graded-lex smaller than head.
struct RewriteRule {
  Word head;
  NCPolynomial replacement;
};

/// Immutable oriented presentation of a Z2-graded algebra.
class RewriteSystem {
public:
  /// Validates termination (replacement < head) and uniqueness of heads.
  RewriteSystem(Alphabet alphabet, std::vector<RewriteRule> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::size_t max_head_length() const { return max_head_; }
  /// Index of the rule whose head is exactly w, or -1.
  int find(const Word& w) const;
  /// Index of the rule for the adjacent pair (a, b), or -1.
  int pair_rule(Symbol a, Symbol b) const { return pair_index_[a * alphabet_.size() + b]; }

  /// Adjacent pairs that must be reducible (out of order, or an odd square)
  /// but have no rule. Empty for a complete system.
  std::vector<Word> uncovered_pairs() const;

  /// A copy with one rule's replacement swapped (used for mutation tests).
  RewriteSystem with_replacement(std::size_t rule_index, NCPolynomial replacement) const;

private:
  Alphabet alphabet_;
  std::vector<RewriteRule> rules_;
  std::unordered_map<Word, int, WordHash> by_head_;
  std::vector<int> pair_index_;
  std::size_t max_head_ = 0;
};

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

/// Normal-form engine over a RewriteSystem. Holds a memo table, so one
/// Reducer should not be shared between threads; clone() gives an
/// independent instance over the same system.
class Reducer {
public:
  explicit Reducer(std::shared_ptr<const RewriteSystem> sys, std::uint64_t step_budget = kDefaultStepBudget);

  const RewriteSystem& system() const { return *sys_; }
  std::shared_ptr<const RewriteSystem> system_ptr() const { return sys_; }
  Reducer clone() const { return Reducer(sys_, budget_); }

  NCPolynomial normal_form(const NCPolynomial& p);
  NCPolynomial normal_form(const Word& w);
  /// normal_form(a * b)
  NCPolynomial product(const NCPolynomial& a, const NCPolynomial& b);
  bool is_normal(const Word& w) const;

  std::uint64_t steps() const { return steps_; }
  std::uint64_t budget() const { return budget_; }
  /// Resets the step counter (the budget applies per top-level call).
  void reset_steps() { steps_ = 0; }

private:
  const NCPolynomial& append(const Word& normal_word, Symbol x);
  NCPolynomial append_poly(const NCPolynomial& normal, Symbol x);
  void charge();

  std::shared_ptr<const RewriteSystem> sys_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::unordered_map<Word, NCPolynomial, WordHash> memo_;
};

NCPolynomial normal_form(const NCPolynomial& p, Reducer& reducer);

/// Overlap ambiguity whose two resolutions disagree.
struct CriticalPair {
  Word word;
  NCPolynomial via_left;
  NCPolynomial via_right;
};

/// Resolves every overlap ambiguity of total length <= max_degree both ways.
/// Serial reference implementation.
std::vector<CriticalPair> check_confluence_serial(const RewriteSystem& sys, std::size_t max_degree = 3,
                                                  std::uint64_t step_budget = kDefaultStepBudget);
/// OpenMP kernel; same result as the serial version, ordered by word.
std::vector<CriticalPair> check_confluence(const RewriteSystem& sys, std::size_t max_degree = 3,
                                           std::uint64_t step_budget = kDefaultStepBudget);

struct CompletionResult {
  std::shared_ptr<const RewriteSystem> system;
  std::size_t rules_added = 0;
  /// No unresolved overlap of total length <= max_degree remains.
  bool complete = false;
};

/// Knuth-Bendix style completion for homogeneous systems, truncated at
/// max_degree: each unresolved overlap difference becomes a new rule, lowest
/// degree first, until every overlap up to max_degree resolves.
CompletionResult complete_system(const RewriteSystem& sys, std::size_t max_degree,
                                 std::uint64_t step_budget = kDefaultStepBudget, int max_rounds = 32);

/// Sign of exchanging two homogeneous elements of the given parities.
QScalar graded_sign(int p1, int p2);

/// Incremental reduced row echelon form over words: every row has leading
/// coefficient 1 and no row mentions another row's leading word.
class Echelon {
public:
  /// Adds p to the span; returns false if p was already in it.
  bool insert(const NCPolynomial& p);
  /// Remainder of p modulo the span (no pivot words left).
  NCPolynomial reduce(const NCPolynomial& p) const;
  /// Rows in descending order of leading word.
  std::vector<NCPolynomial> rows() const;
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(const Word& w) const { return rows_.count(w) != 0; }

private:
  std::map<Word, NCPolynomial, GradedLess> rows_;
};

/// Orients relations (each meaning p = 0) into a rewrite system via reduced
/// row echelon form: the leading word of each echelon row becomes a head.
RewriteSystem orient_polynomials(const Alphabet& alphabet, const std::vector<NCPolynomial>& relations);

} // namespace qgauss
