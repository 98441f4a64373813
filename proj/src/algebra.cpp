#include "qgauss/algebra.hpp"

#include <stdexcept>

namespace qgauss {

bool TaggedEchelon::insert(const NCPolynomial& v, const NCPolynomial& tag) {
  auto [r, t] = reduce(v);
  if (r.is_zero()) return false;
  // r = v - sum c_i v_i pairs with tag - sum c_i tag_i
  NCPolynomial rt = tag - t;
  const QScalar inv = r.leading_coeff().inverse();
  r *= inv;
  rt *= inv;
  const Word pivot = r.leading_word();
  for (auto& [w, row] : rows_) {
    QScalar c = row.first.coeff(pivot);
    if (c.is_zero()) continue;
    row.first -= r * c;
    row.second -= rt * c;
  }
  rows_.emplace(pivot, std::make_pair(std::move(r), std::move(rt)));
  return true;
}

std::pair<NCPolynomial, NCPolynomial> TaggedEchelon::reduce(const NCPolynomial& p) const {
  NCPolynomial r = p, acc;
  for (const auto& [w, c] : p.terms()) {
    auto it = rows_.find(w);
    if (it == rows_.end()) continue;
    r -= it->second.first * c;
    acc += it->second.second * c;
  }
  return {std::move(r), std::move(acc)};
}

Algebra::Algebra(std::shared_ptr<const RewriteSystem> sys, std::vector<Weight> letter_weights,
                 std::uint64_t step_budget)
    : sys_(sys), letter_weights_(std::move(letter_weights)), reducer_(sys, step_budget) {
  if (letter_weights_.size() != sys_->alphabet().size())
    throw std::invalid_argument("one weight per generator required");
}

Algebra Algebra::clone() const {
  Algebra a(sys_, letter_weights_, reducer_.budget());
  a.central_ = central_;
  return a;
}

void Algebra::set_central_unit(const NCPolynomial& q_element) {
  NCPolynomial nf = normal_form(q_element);
  if (nf.is_zero() || !nf.is_homogeneous() || nf.degree() != 2)
    throw std::invalid_argument("central unit must be homogeneous of degree 2");
  if (weight(nf) != Weight(letter_weights_.front().size(), 0))
    throw std::invalid_argument("central unit must have weight zero");
  for (std::size_t s = 0; s < alphabet().size(); ++s) {
    NCPolynomial t = NCPolynomial::letter(static_cast<Symbol>(s));
    if (!normal_form(nf * t - t * nf).is_zero())
      throw std::invalid_argument("element is not central (fails against " + alphabet()[static_cast<Symbol>(s)].name +
                                  ")");
  }
  central_ = std::move(nf);
  qech_.clear();
}

NCPolynomial Algebra::normal_form(const NCPolynomial& p) {
  reducer_.reset_steps();
  return reducer_.normal_form(p);
}

NCPolynomial Algebra::canon(const NCPolynomial& p) {
  NCPolynomial f = normal_form(p);
  if (!central_) return f;
  NCPolynomial result;
  while (!f.is_zero()) {
    const std::size_t d = f.degree();
    NCPolynomial top = f.component(d);
    f -= top;
    if (d < 2) {
      result += top;
      continue;
    }
    for (const auto& [w, g] : split_by_weight(top)) {
      auto [r, y] = quotient_echelon(d, w).reduce(g);
      result += r;
      f += y;
    }
  }
  return result;
}

NCPolynomial Algebra::mul(const NCPolynomial& a, const NCPolynomial& b) { return canon(a * b); }

Weight Algebra::weight(const Word& w) const {
  Weight out(letter_weights_.front().size(), 0);
  for (Symbol s : w)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += letter_weights_[s][i];
  return out;
}

Weight Algebra::weight(const NCPolynomial& p) const {
  if (p.is_zero()) return Weight(letter_weights_.front().size(), 0);
  Weight w = weight(p.terms().begin()->first);
  for (const auto& [u, c] : p.terms())
    if (weight(u) != w) throw std::invalid_argument("polynomial is not weight-homogeneous");
  return w;
}

std::map<Weight, NCPolynomial> Algebra::split_by_weight(const NCPolynomial& p) const {
  std::map<Weight, NCPolynomial> out;
  for (const auto& [u, c] : p.terms()) out[weight(u)].add_term(u, c);
  return out;
}

const std::vector<Word>& Algebra::normal_words(std::size_t degree, const Weight& w) {
  static const std::vector<Word> kEmpty;
  auto it = words_.find(degree);
  if (it == words_.end()) {
    std::map<Weight, std::vector<Word>> level;
    if (degree == 0) {
      level[weight(Word{})].push_back(Word{});
    } else {
      normal_words(degree - 1, w); // make sure the previous level exists
      const std::size_t maxl = sys_->max_head_length();
      for (const auto& [pw, words] : words_.at(degree - 1))
        for (const Word& u : words)
          for (std::size_t s = 0; s < alphabet().size(); ++s) {
            Word v = u;
            v.push_back(static_cast<Symbol>(s));
            bool normal = true;
            for (std::size_t l = 1; l <= maxl && l <= v.size() && normal; ++l)
              normal = sys_->find(v.substr(v.size() - l)) < 0;
            if (normal) level[weight(v)].push_back(std::move(v));
          }
    }
    it = words_.emplace(degree, std::move(level)).first;
  }
  auto jt = it->second.find(w);
  return jt == it->second.end() ? kEmpty : jt->second;
}

const TaggedEchelon& Algebra::quotient_echelon(std::size_t degree, const Weight& w) {
  auto key = std::make_pair(degree, w);
  auto it = qech_.find(key);
  if (it != qech_.end()) return it->second;
  TaggedEchelon e;
  if (degree >= 2)
    for (const Word& u : normal_words(degree - 2, w)) {
      NCPolynomial tag = NCPolynomial::word(u);
      e.insert(normal_form(*central_ * tag), tag);
    }
  return qech_.emplace(std::move(key), std::move(e)).first->second;
}

std::vector<Word> Algebra::basis_words(std::size_t degree, const Weight& w) {
  const auto& words = normal_words(degree, w);
  if (!central_ || degree < 2) return words;
  const TaggedEchelon& e = quotient_echelon(degree, w);
  std::vector<Word> out;
  for (const Word& u : words)
    if (!e.is_pivot(u)) out.push_back(u);
  return out;
}

std::optional<NCPolynomial> Algebra::solve_component(const NCPolynomial& left, const NCPolynomial& right,
                                                     const NCPolynomial& target,
                                                     const std::vector<std::size_t>& degrees, const Weight& w) {
  TaggedEchelon e;
  for (std::size_t d : degrees)
    for (const Word& u : basis_words(d, w)) {
      NCPolynomial y = NCPolynomial::word(u);
      e.insert(canon(left * y * right), y);
    }
  auto [r, y] = e.reduce(target);
  if (!r.is_zero()) return std::nullopt;
  return y;
}

std::optional<NCPolynomial> Algebra::solve(const NCPolynomial& left, const NCPolynomial& right,
                                           const NCPolynomial& target, std::size_t extra_degree) {
  const NCPolynomial t = canon(target);
  if (t.is_zero()) return NCPolynomial();
  const NCPolynomial l = canon(left), r = canon(right);
  if (l.is_zero() || r.is_zero()) return std::nullopt;
  const Weight wl = weight(l), wr = weight(r);
  const std::size_t dl = l.degree(), dr = r.degree();
  if (!central_ && (!l.is_homogeneous() || !r.is_homogeneous()))
    throw std::invalid_argument("solve needs homogeneous factors");

  // group target terms by (weight, degree) or, in the quotient, (weight, degree parity)
  std::map<std::pair<Weight, std::size_t>, NCPolynomial> parts;
  for (const auto& [u, c] : t.terms()) {
    Weight wu = weight(u);
    for (std::size_t i = 0; i < wu.size(); ++i) wu[i] -= wl[i] + wr[i];
    const std::size_t key = central_ ? u.size() % 2 : u.size();
    parts[{wu, key}].add_term(u, c);
  }
  NCPolynomial out;
  for (const auto& [key, g] : parts) {
    const std::size_t top = g.degree();
    std::vector<std::size_t> degrees;
    if (!central_) {
      if (top < dl + dr) return std::nullopt;
      degrees.push_back(top - dl - dr);
    } else {
      const long hi = static_cast<long>(top) - static_cast<long>(dl + dr) + static_cast<long>(extra_degree);
      const long par = (static_cast<long>(top) - static_cast<long>(dl + dr)) & 1L;
      for (long d = par; d <= hi; d += 2) degrees.push_back(static_cast<std::size_t>(d));
      if (degrees.empty()) return std::nullopt;
    }
    auto y = solve_component(l, r, g, degrees, key.first);
    if (!y) return std::nullopt;
    out += *y;
  }
  return out;
}

} // namespace qgauss
