#include "qgauss/ncpoly.hpp"

#include <stdexcept>

namespace qgauss {

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  if (gens_.size() > 255) throw std::invalid_argument("alphabet too large");
  for (std::size_t i = 1; i < gens_.size(); ++i) {
    const auto& a = gens_[i - 1];
    const auto& b = gens_[i];
    if (a.row > b.row || (a.row == b.row && a.col >= b.col))
      throw std::invalid_argument("alphabet must be sorted by (row, col)");
  }
}

Symbol Alphabet::at(int row, int col) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].row == row && gens_[i].col == col) return static_cast<Symbol>(i);
  throw std::out_of_range("no generator t" + std::to_string(row) + std::to_string(col));
}

Symbol Alphabet::by_name(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<Symbol>(i);
  throw std::out_of_range("no generator named " + std::string(name));
}

bool Alphabet::has_name(std::string_view name) const {
  for (const auto& g : gens_)
    if (g.name == name) return true;
  return false;
}

int word_parity(const Word& w, const Alphabet& alpha) {
  int p = 0;
  for (Symbol s : w) p ^= alpha[s].parity;
  return p;
}

std::string word_str(const Word& w, const Alphabet& alpha) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alpha[w[i]].name;
  }
  return out;
}

NCPolynomial::NCPolynomial(QScalar c) {
  if (!c.is_zero()) terms_.emplace(Word{}, std::move(c));
}

NCPolynomial NCPolynomial::word(Word w, QScalar c) {
  NCPolynomial p;
  if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
  return p;
}

QScalar NCPolynomial::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QScalar() : it->second;
}

void NCPolynomial::add_term(const Word& w, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPolynomial& NCPolynomial::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
  NCPolynomial r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
  return r;
}

NCPolynomial NCPolynomial::component(std::size_t deg) const {
  NCPolynomial r;
  for (const auto& [w, c] : terms_)
    if (w.size() == deg) r.terms_.emplace(w, c);
  return r;
}

std::string format_term(const QScalar& c, const std::string& body, bool first) {
  bool negative = false;
  QScalar mag = c;
  const LaurentPoly& num = c.num();
  if (!num.is_zero() && num.leading() < 0) {
    negative = true;
    mag = -c;
  }
  std::string coef;
  if (mag.is_one()) {
    coef = body.empty() ? "1" : "";
  } else if (mag.is_laurent() && mag.num().term_count() == 1) {
    coef = mag.str();
  } else {
    coef = "(" + mag.str() + ")";
  }
  std::string out;
  if (first) {
    out = negative ? "-" : "";
  } else {
    out = negative ? " - " : " + ";
  }
  out += coef;
  if (!body.empty()) {
    if (!coef.empty()) out += ' ';
    out += body;
  }
  return out;
}

std::string NCPolynomial::str(const Alphabet& alpha) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    out += format_term(it->second, word_str(it->first, alpha), first);
    first = false;
  }
  return out;
}

} // namespace qgauss
