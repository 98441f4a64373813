#include "qgauss/rewrite.hpp"
#include "qgauss/parallel.hpp"

#include <algorithm>
#include <set>

namespace qgauss {

RewriteSystem::RewriteSystem(Alphabet alphabet, std::vector<RewriteRule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  const std::size_t n = alphabet_.size();
  pair_index_.assign(n * n, -1);
  GradedLess less;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& r = rules_[i];
    if (r.head.empty()) throw RewriteError("rule with empty head");
    for (const auto& [w, c] : r.replacement.terms()) {
      if (!less(w, r.head))
        throw RewriteError("rule " + word_str(r.head, alphabet_) + " is not decreasing: " + word_str(w, alphabet_));
    }
    if (!by_head_.emplace(r.head, static_cast<int>(i)).second)
      throw RewriteError("duplicate head " + word_str(r.head, alphabet_));
    if (r.head.size() == 2) pair_index_[r.head[0] * n + r.head[1]] = static_cast<int>(i);
    max_head_ = std::max(max_head_, r.head.size());
  }
}

int RewriteSystem::find(const Word& w) const {
  auto it = by_head_.find(w);
  return it == by_head_.end() ? -1 : it->second;
}

std::vector<Word> RewriteSystem::uncovered_pairs() const {
  std::vector<Word> out;
  const std::size_t n = alphabet_.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const bool must = a > b || (a == b && alphabet_[static_cast<Symbol>(a)].parity == 1);
      if (!must) continue;
      Word w{static_cast<Symbol>(a), static_cast<Symbol>(b)};
      bool covered = find(w) >= 0 || find(Word(1, w[0])) >= 0 || find(Word(1, w[1])) >= 0;
      if (!covered) out.push_back(w);
    }
  }
  return out;
}

RewriteSystem RewriteSystem::with_replacement(std::size_t rule_index, NCPolynomial replacement) const {
  auto rules = rules_;
  rules.at(rule_index).replacement = std::move(replacement);
  return RewriteSystem(alphabet_, std::move(rules));
}

// -------------------------------------------------------------------- Reducer

Reducer::Reducer(std::shared_ptr<const RewriteSystem> sys, std::uint64_t step_budget)
    : sys_(std::move(sys)), budget_(step_budget) {}

void Reducer::charge() {
  if (++steps_ > budget_)
    throw BudgetExceeded("normal form exceeded step budget of " + std::to_string(budget_) + " rewrites");
}

bool Reducer::is_normal(const Word& w) const {
  const std::size_t maxl = sys_->max_head_length();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t len = 1; len <= maxl && i + len <= w.size(); ++len)
      if (sys_->find(w.substr(i, len)) >= 0) return false;
  return true;
}

// normal form of (normal_word * x); only suffixes of the new word can match.
const NCPolynomial& Reducer::append(const Word& normal_word, Symbol x) {
  Word w = normal_word;
  w.push_back(x);
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;

  int rule = -1;
  std::size_t len = 0;
  if (w.size() >= 2) {
    rule = sys_->pair_rule(w[w.size() - 2], x);
    len = 2;
  }
  if (rule < 0) {
    const std::size_t maxl = std::min(sys_->max_head_length(), w.size());
    for (std::size_t l = 1; l <= maxl; ++l) {
      if (l == 2) continue;
      rule = sys_->find(w.substr(w.size() - l));
      if (rule >= 0) {
        len = l;
        break;
      }
    }
  }
  NCPolynomial result;
  if (rule < 0) {
    result = NCPolynomial::word(w);
  } else {
    charge();
    const Word prefix = w.substr(0, w.size() - len);
    for (const auto& [v, c] : sys_->rules()[static_cast<std::size_t>(rule)].replacement.terms()) {
      NCPolynomial acc = NCPolynomial::word(prefix);
      for (Symbol y : v) acc = append_poly(acc, y);
      acc *= c;
      result += acc;
    }
  }
  return memo_.emplace(std::move(w), std::move(result)).first->second;
}

NCPolynomial Reducer::append_poly(const NCPolynomial& normal, Symbol x) {
  NCPolynomial out;
  for (const auto& [u, c] : normal.terms()) {
    const NCPolynomial& r = append(u, x);
    for (const auto& [v, d] : r.terms()) out.add_term(v, c * d);
  }
  return out;
}

NCPolynomial Reducer::normal_form(const Word& w) {
  NCPolynomial acc(1);
  for (Symbol x : w) acc = append_poly(acc, x);
  return acc;
}

NCPolynomial Reducer::normal_form(const NCPolynomial& p) {
  NCPolynomial out;
  for (const auto& [w, c] : p.terms()) {
    NCPolynomial r = normal_form(w);
    r *= c;
    out += r;
  }
  return out;
}

NCPolynomial Reducer::product(const NCPolynomial& a, const NCPolynomial& b) {
  // a is reduced first so that each append starts from a normal word.
  NCPolynomial left = normal_form(a);
  NCPolynomial out;
  for (const auto& [wb, cb] : b.terms()) {
    NCPolynomial acc = left;
    for (Symbol x : wb) acc = append_poly(acc, x);
    acc *= cb;
    out += acc;
  }
  return out;
}

NCPolynomial normal_form(const NCPolynomial& p, Reducer& reducer) { return reducer.normal_form(p); }

// ----------------------------------------------------------------- confluence

namespace {

struct Overlap {
  std::size_t left_rule;
  std::size_t right_rule;
  std::size_t shared; // letters shared between the two heads
  Word word;
};

std::vector<Overlap> enumerate_overlaps(const RewriteSystem& sys, std::size_t max_degree) {
  std::vector<Overlap> out;
  const auto& rules = sys.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& a = rules[i].head;
      const Word& b = rules[j].head;
      for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
        if (a.size() + b.size() - k > max_degree) continue;
        if (a.compare(a.size() - k, k, b, 0, k) != 0) continue;
        out.push_back({i, j, k, a + b.substr(k)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Overlap& x, const Overlap& y) {
    if (x.word != y.word) return GradedLess{}(x.word, y.word);
    return std::tie(x.left_rule, x.right_rule) < std::tie(y.left_rule, y.right_rule);
  });
  return out;
}

std::optional<CriticalPair> resolve(const RewriteSystem& sys, const Overlap& o, Reducer& red) {
  const auto& ra = sys.rules()[o.left_rule];
  const auto& rb = sys.rules()[o.right_rule];
  const Word tail = o.word.substr(ra.head.size());
  const Word head = o.word.substr(0, o.word.size() - rb.head.size());
  NCPolynomial left = red.product(ra.replacement, NCPolynomial::word(tail));
  NCPolynomial right = red.product(NCPolynomial::word(head), rb.replacement);
  if (left == right) return std::nullopt;
  return CriticalPair{o.word, std::move(left), std::move(right)};
}

} // namespace

std::vector<CriticalPair> check_confluence_serial(const RewriteSystem& sys, std::size_t max_degree,
                                                  std::uint64_t step_budget) {
  auto overlaps = enumerate_overlaps(sys, max_degree);
  auto shared = std::make_shared<const RewriteSystem>(sys);
  Reducer red(shared, step_budget);
  std::vector<CriticalPair> out;
  for (const auto& o : overlaps) {
    red.reset_steps();
    if (auto cp = resolve(sys, o, red)) out.push_back(std::move(*cp));
  }
  return out;
}

std::vector<CriticalPair> check_confluence(const RewriteSystem& sys, std::size_t max_degree,
                                           std::uint64_t step_budget) {
  auto overlaps = enumerate_overlaps(sys, max_degree);
  auto shared = std::make_shared<const RewriteSystem>(sys);
  auto results = parallel_map<std::optional<CriticalPair>>(
      overlaps.size(), [&] { return Reducer(shared, step_budget); },
      [&](Reducer& red, std::size_t i) {
        red.reset_steps();
        return resolve(sys, overlaps[i], red);
      });
  std::vector<CriticalPair> out;
  for (auto& r : results)
    if (r) out.push_back(std::move(*r));
  return out;
}

CompletionResult complete_system(const RewriteSystem& sys, std::size_t max_degree, std::uint64_t step_budget,
                                 int max_rounds) {
  CompletionResult res;
  auto cur = std::make_shared<const RewriteSystem>(sys);
  for (int round = 0; round < max_rounds; ++round) {
    auto pairs = check_confluence(*cur, max_degree, step_budget);
    if (pairs.empty()) {
      res.complete = true;
      break;
    }
    const std::size_t deg = pairs.front().word.size();
    Reducer red(cur, step_budget);
    Echelon ech;
    for (const auto& cp : pairs)
      if (cp.word.size() == deg) ech.insert(red.normal_form(cp.via_left - cp.via_right));
    auto rules = cur->rules();
    for (const auto& row : ech.rows()) {
      RewriteRule rule;
      rule.head = row.leading_word();
      rule.replacement = -(row - NCPolynomial::word(rule.head));
      for (const auto& old : rules)
        if (old.head.size() > rule.head.size() && old.head.find(rule.head) != Word::npos)
          throw RewriteError("completion produced an inclusion ambiguity at " + word_str(old.head, sys.alphabet()));
      rules.push_back(std::move(rule));
      ++res.rules_added;
    }
    cur = std::make_shared<const RewriteSystem>(sys.alphabet(), std::move(rules));
  }
  res.system = cur;
  return res;
}

QScalar graded_sign(int p1, int p2) {
  if (p1 < 0 || p1 > 1 || p2 < 0 || p2 > 1) throw std::invalid_argument("parity must be 0 or 1");
  return (p1 == 1 && p2 == 1) ? QScalar(-1) : QScalar(1);
}

// -------------------------------------------------------------------- Echelon

NCPolynomial Echelon::reduce(const NCPolynomial& p) const {
  // Rows are fully reduced, so subtracting one never introduces another pivot.
  NCPolynomial r = p;
  for (const auto& [w, c] : p.terms()) {
    auto it = rows_.find(w);
    if (it != rows_.end()) r -= it->second * c;
  }
  return r;
}

bool Echelon::insert(const NCPolynomial& p) {
  NCPolynomial r = reduce(p);
  if (r.is_zero()) return false;
  r *= r.leading_coeff().inverse();
  const Word pivot = r.leading_word();
  for (auto& [w, row] : rows_) {
    QScalar c = row.coeff(pivot);
    if (!c.is_zero()) row -= r * c;
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<NCPolynomial> Echelon::rows() const {
  std::vector<NCPolynomial> out;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) out.push_back(it->second);
  return out;
}

RewriteSystem orient_polynomials(const Alphabet& alphabet, const std::vector<NCPolynomial>& relations) {
  Echelon ech;
  for (const auto& r : relations) ech.insert(r);
  std::vector<RewriteRule> rules;
  for (const auto& row : ech.rows()) {
    RewriteRule rule;
    rule.head = row.leading_word();
    rule.replacement = -(row - NCPolynomial::word(rule.head));
    rules.push_back(std::move(rule));
  }
  return RewriteSystem(alphabet, std::move(rules));
}

} // namespace qgauss
