#include "qgauss/localize.hpp"

namespace qgauss {

namespace {

// d t = r t d with r = q^m, |m| <= 4
std::optional<int> exchange_exponent(Algebra& alg, const NCPolynomial& d, const NCPolynomial& t) {
  NCPolynomial a = alg.canon(d * t);
  NCPolynomial b = alg.canon(t * d);
  if (a.is_zero() && b.is_zero()) return 0;
  if (a.is_zero() || b.is_zero() || a.leading_word() != b.leading_word()) return std::nullopt;
  QScalar r = a.leading_coeff() / b.leading_coeff();
  int sign = 0;
  auto m = r.unit_exponent(&sign);
  if (!m || sign != 1 || *m < -4 || *m > 4) return std::nullopt;
  if (!(a == b * r)) return std::nullopt;
  return m;
}

} // namespace

int derive_exchange(Algebra& alg, const NCPolynomial& d, Symbol t) {
  auto m = exchange_exponent(alg, d, NCPolynomial::letter(t));
  if (!m)
    throw LocalizationRefused("element is not quasi-commuting with " + alg.alphabet()[t].name +
                              " for any q^m, |m| <= 4");
  return *m;
}

std::optional<int> Localizer::find(const NCPolynomial& d) {
  NCPolynomial p = alg_.canon(d);
  for (std::size_t i = 0; i < minors_.size(); ++i)
    if (minors_[i].poly == p) return static_cast<int>(i);
  return std::nullopt;
}

int Localizer::register_minor(const std::string& name, const NCPolynomial& d) {
  NCPolynomial p = alg_.canon(d);
  if (p.is_zero()) throw LocalizationRefused("cannot invert zero");
  if (auto id = find(p)) return *id;
  if (p.degree() == 0) throw LocalizationRefused("scalars are inverted directly, not registered");
  MinorInfo info;
  info.name = name;
  info.weight = alg_.weight(p);
  for (const auto& other : minors_)
    if (!alg_.is_zero(p * other.poly - other.poly * p))
      throw LocalizationRefused(name + " does not commute with " + other.name);
  for (std::size_t s = 0; s < alg_.alphabet().size(); ++s)
    info.exchange.push_back(exchange_exponent(alg_, p, NCPolynomial::letter(static_cast<Symbol>(s))));
  info.poly = std::move(p);
  minors_.push_back(std::move(info));
  return static_cast<int>(minors_.size() - 1);
}

bool Localizer::denominators_commute() {
  for (std::size_t i = 0; i < minors_.size(); ++i)
    for (std::size_t j = i + 1; j < minors_.size(); ++j)
      if (!alg_.is_zero(minors_[i].poly * minors_[j].poly - minors_[j].poly * minors_[i].poly)) return false;
  return true;
}

NCPolynomial Localizer::power(int id, int e) {
  NCPolynomial out(1);
  for (int i = 0; i < e; ++i) out = alg_.canon(out * minor(id).poly);
  return out;
}

std::pair<int, NCPolynomial> Localizer::move_left(const NCPolynomial& n0, int id) {
  const NCPolynomial n = alg_.canon(n0);
  if (n.is_zero()) return {0, n};
  const MinorInfo& info = minor(id);

  // every letter quasi-commutes: word-by-word
  bool letters = true;
  for (const auto& [w, c] : n.terms())
    for (Symbol s : w) letters = letters && info.exchange[s].has_value();
  if (letters) {
    NCPolynomial y;
    for (const auto& [w, c] : n.terms()) {
      int m = 0;
      for (Symbol s : w) m += *info.exchange[s];
      y.add_term(w, c * QScalar::q(m));
    }
    return {1, y};
  }

  // each (weight, degree) piece quasi-commutes as a whole
  std::map<std::pair<Weight, std::size_t>, NCPolynomial> pieces;
  for (const auto& [w, c] : n.terms()) pieces[{alg_.weight(w), w.size()}].add_term(w, c);
  NCPolynomial y;
  bool ok = true;
  for (const auto& [key, piece] : pieces) {
    auto m = exchange_exponent(alg_, info.poly, piece);
    if (!m) {
      ok = false;
      break;
    }
    y += piece * QScalar::q(*m);
  }
  if (ok) return {1, y};

  // general: find y with y D = D^k n
  for (int k = 1; k <= 3; ++k) {
    auto sol = alg_.solve(NCPolynomial(1), info.poly, power(id, k) * n);
    if (sol) return {k, *sol};
  }
  throw LocalizationRefused("cannot move " + info.name + "^-1 to the left");
}

LocalizedElement Localizer::with_den(const LocalizedElement& x, const std::map<int, int>& target) {
  NCPolynomial pre(1);
  for (const auto& [id, e] : target) {
    auto it = x.den.find(id);
    const int have = it == x.den.end() ? 0 : it->second;
    if (e > have) pre = alg_.canon(pre * power(id, e - have));
  }
  return LocalizedElement(target, alg_.canon(pre * x.num));
}

LocalizedElement Localizer::add(const LocalizedElement& x, const LocalizedElement& y) {
  if (x.den == y.den) return LocalizedElement(x.den, alg_.canon(x.num + y.num));
  std::map<int, int> target = x.den;
  for (const auto& [id, e] : y.den) target[id] = std::max(target[id], e);
  LocalizedElement a = with_den(x, target), b = with_den(y, target);
  return LocalizedElement(target, alg_.canon(a.num + b.num));
}

LocalizedElement Localizer::neg(const LocalizedElement& x) const { return LocalizedElement(x.den, -x.num); }

LocalizedElement Localizer::scale(const LocalizedElement& x, const QScalar& c) const {
  return LocalizedElement(x.den, x.num * c);
}

LocalizedElement Localizer::sub(const LocalizedElement& x, const LocalizedElement& y) { return add(x, neg(y)); }

LocalizedElement Localizer::mul(const LocalizedElement& x, const LocalizedElement& y) {
  std::map<int, int> den = x.den;
  NCPolynomial n = x.num;
  for (const auto& [id, e] : y.den)
    for (int i = 0; i < e; ++i) {
      auto [k, moved] = move_left(n, id);
      den[id] += k;
      n = std::move(moved);
    }
  LocalizedElement out(den, alg_.canon(n * y.num));
  if (out.num.is_zero()) out.den.clear();
  return out;
}

bool Localizer::is_zero(const LocalizedElement& x) { return alg_.is_zero(x.num); }

bool Localizer::equal(const LocalizedElement& x, const LocalizedElement& y) { return is_zero(sub(x, y)); }

LocalizedElement Localizer::simplify(const LocalizedElement& x) {
  LocalizedElement out(x.den, alg_.canon(x.num));
  if (out.num.is_zero()) return LocalizedElement();
  for (auto& [id, e] : out.den) {
    while (e > 0) {
      auto y = alg_.solve(minor(id).poly, NCPolynomial(1), out.num);
      if (!y) break;
      out.num = std::move(*y);
      --e;
    }
  }
  for (auto it = out.den.begin(); it != out.den.end();) it = it->second == 0 ? out.den.erase(it) : std::next(it);
  return out;
}

LocalizedElement Localizer::invert(const LocalizedElement& x, const std::string& new_name) {
  LocalizedElement s = simplify(x);
  if (s.num.is_zero()) throw LocalizationRefused("cannot invert zero");
  NCPolynomial dens(1);
  for (const auto& [id, e] : s.den) dens = alg_.canon(dens * power(id, e));
  if (s.num.degree() == 0) return LocalizedElement(dens * s.num.constant().inverse());
  const int id = register_minor(new_name, s.num);
  return LocalizedElement({{id, 1}}, dens);
}

std::string Localizer::str(const LocalizedElement& x) const {
  const std::string body = x.num.str(alphabet());
  if (x.den.empty()) return body;
  std::string out;
  for (const auto& [id, e] : x.den) {
    if (!out.empty()) out += ' ';
    out += "[" + minor(id).name + "]^-" + std::to_string(e);
  }
  if (x.num.degree() == 0 && x.num.constant().is_one()) return out;
  if (x.num.size() == 1 && x.num.terms().begin()->second.is_one()) return out + " " + body;
  return out + " (" + body + ")";
}

} // namespace qgauss
