#include "qgauss/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace qgauss {

namespace {

using Dense = std::vector<BigInt>; // index = degree, trailing exponent 0

void trim_dense(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt dense_content(const Dense& a) {
  BigInt g = 0;
  for (const auto& c : a) {
    if (c == 0) continue;
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

void make_primitive(Dense& a) {
  if (a.empty()) return;
  BigInt c = dense_content(a);
  if (a.back() < 0) c = -c;
  if (c != 1) {
    for (auto& x : a) x /= c;
  }
}

// Pseudo-remainder of a by b (deg b >= 0, b nonzero).
Dense prem(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    BigInt la = a.back();
    for (auto& x : a) x *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim_dense(a);
    make_primitive(a);
  }
  return a;
}

Dense dense_gcd(Dense a, Dense b) {
  trim_dense(a);
  trim_dense(b);
  if (a.empty()) {
    make_primitive(b);
    return b;
  }
  if (b.empty()) {
    make_primitive(a);
    return a;
  }
  BigInt c = boost::multiprecision::gcd(dense_content(a), dense_content(b));
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = prem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  for (auto& x : a) x *= c;
  return a;
}

// Exact quotient a / b in Z[q]; nullopt if the division is not exact.
std::optional<Dense> dense_div_exact(const Dense& a, const Dense& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.empty()) return Dense{};
  if (a.size() < b.size()) return std::nullopt;
  Dense r = a;
  Dense out(a.size() - b.size() + 1);
  const BigInt& lb = b.back();
  for (std::size_t i = out.size(); i-- > 0;) {
    const BigInt& top = r[i + b.size() - 1];
    if (top == 0) continue;
    BigInt quot, rem;
    boost::multiprecision::divide_qr(top, lb, quot, rem);
    if (rem != 0) return std::nullopt;
    out[i] = quot;
    for (std::size_t k = 0; k < b.size(); ++k) r[i + k] -= quot * b[k];
  }
  for (const auto& x : r)
    if (x != 0) return std::nullopt;
  trim_dense(out);
  return out;
}

std::string term_str(const BigInt& absc, int e) {
  std::string out;
  if (e == 0) return absc.str();
  if (absc != 1) out += absc.str();
  out += "q";
  if (e != 1) out += "^" + std::to_string(e);
  return out;
}

Rational rational_pow(const Rational& x, int e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (x == 0) throw PoleError("negative power of zero");
    return rational_pow(1 / x, -e);
  }
  Rational r = 1, b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

} // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(BigInt c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

LaurentPoly LaurentPoly::monomial(BigInt c, int exponent) {
  LaurentPoly p(std::move(c));
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

bool LaurentPoly::is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

BigInt LaurentPoly::coeff(int exponent) const {
  if (exponent < low_ || exponent > high() || coeffs_.empty()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

BigInt LaurentPoly::content() const { return dense_content(coeffs_); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), BigInt(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[static_cast<std::size_t>(o.low_ - lo) + k] += o.coeffs_[k];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::divided_exact(const BigInt& c) const {
  LaurentPoly r = *this;
  for (auto& x : r.coeffs_) {
    BigInt quot, rem;
    boost::multiprecision::divide_qr(x, c, quot, rem);
    if (rem != 0) throw std::logic_error("inexact coefficient division");
    x = quot;
  }
  return r;
}

Rational LaurentPoly::eval(const Rational& q0) const {
  if (is_zero()) return 0;
  // Horner in q0, then scale by q0^low.
  Rational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * q0 + Rational(coeffs_[k]);
  return acc * rational_pow(q0, low_);
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(k);
    const BigInt a = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += term_str(a, e);
    first = false;
  }
  return out;
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = std::hash<int>{}(low_);
  for (const auto& c : coeffs_) {
    const std::size_t hc = std::hash<std::string>{}(c.str());
    h ^= hc + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  r.coeffs_ = dense_gcd(a.coeffs_, b.coeffs_);
  r.low_ = 0;
  r.trim();
  return r;
}

LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto d = dense_div_exact(a.coeffs_, b.coeffs_);
  if (!d) throw std::logic_error("poly_div_exact: not divisible");
  LaurentPoly r;
  r.coeffs_ = std::move(*d);
  r.low_ = a.low_ - b.low_;
  r.trim();
  return r;
}

// -------------------------------------------------------------------- QScalar

QScalar::QScalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QScalar with zero denominator");
  normalize();
}

QScalar QScalar::lambda() { return QScalar(LaurentPoly::q(1) - LaurentPoly::q(-1)); }

QScalar QScalar::q_int2() { return QScalar(LaurentPoly::q(1) + LaurentPoly::q(-1)); }

void QScalar::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (!den_.is_monomial()) {
    LaurentPoly g = poly_gcd(num_, den_);
    if (!(g.size() == 1 && g.coeffs_[0] == 1)) {
      num_ = poly_div_exact(num_, g);
      den_ = poly_div_exact(den_, g);
    }
  } else {
    BigInt g = boost::multiprecision::gcd(num_.content(), den_.coeffs_[0]);
    if (g != 1) {
      num_ = num_.divided_exact(g);
      den_ = den_.divided_exact(g);
    }
  }
  const int s = den_.low_;
  if (s != 0) {
    num_.low_ -= s;
    den_.low_ = 0;
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool QScalar::is_unit_monomial() const { return unit_exponent().has_value(); }

std::optional<int> QScalar::unit_exponent(int* sign) const {
  if (!den_.is_one() || !num_.is_monomial()) return std::nullopt;
  const BigInt& c = num_.coeffs()[0];
  if (c != 1 && c != -1) return std::nullopt;
  if (sign) *sign = c > 0 ? 1 : -1;
  return num_.low();
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

QScalar operator+(const QScalar& a, const QScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) {
    QScalar r;
    r.num_ = a.num_ + b.num_;
    return r;
  }
  if (a.den_ == b.den_) return QScalar(a.num_ + b.num_, a.den_);
  return QScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }

QScalar operator*(const QScalar& a, const QScalar& b) {
  if (a.is_zero() || b.is_zero()) return QScalar();
  if (a.den_.is_one() && b.den_.is_one()) {
    QScalar r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  return QScalar(a.num_ * b.num_, a.den_ * b.den_);
}

QScalar operator/(const QScalar& a, const QScalar& b) { return a * b.inverse(); }

QScalar QScalar::inverse() const {
  if (is_zero()) throw std::domain_error("QScalar: inverse of zero");
  return QScalar(den_, num_);
}

QScalar QScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QScalar r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational QScalar::eval(const Rational& q0) const {
  if (q0 == 0) throw PoleError("q0 = 0 is not in the domain of a Laurent polynomial");
  Rational d = den_.eval(q0);
  if (d == 0) throw PoleError("denominator " + den_.str() + " vanishes at q0");
  return num_.eval(q0) / d;
}

std::string QScalar::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::string QScalar::str_atomic() const {
  if (den_.is_one() && num_.term_count() <= 1) return num_.str();
  if (den_.is_one()) return "(" + num_.str() + ")";
  return "(" + str() + ")";
}

std::size_t QScalar::hash() const { return num_.hash() * 31 + den_.hash(); }

QScalar qs_add(const QScalar& a, const QScalar& b) { return a + b; }
QScalar qs_mul(const QScalar& a, const QScalar& b) { return a * b; }
Rational qs_eval(const QScalar& a, const Rational& q0) { return a.eval(q0); }

// -------------------------------------------------------------------- parsing

namespace {

struct ScalarParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse scalar '" + s + "': " + what);
  }
  BigInt integer() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return BigInt(s.substr(start, pos - start));
  }
  int exponent() {
    skip();
    bool neg = false;
    if (pos < s.size() && s[pos] == '-') {
      neg = true;
      ++pos;
    }
    BigInt e = integer();
    return neg ? -static_cast<int>(e) : static_cast<int>(e);
  }
  LaurentPoly poly() {
    LaurentPoly out;
    bool first = true;
    while (true) {
      skip();
      if (pos >= s.size() || s[pos] == ')') break;
      int sign = 1;
      if (eat('-')) sign = -1;
      else if (!first && !eat('+')) fail("expected + or -");
      skip();
      BigInt c = 1;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) c = integer();
      int e = 0;
      skip();
      if (pos < s.size() && s[pos] == 'q') {
        ++pos;
        e = 1;
        if (eat('^')) e = exponent();
      }
      out += LaurentPoly::monomial(sign * c, e);
      first = false;
    }
    if (first) fail("empty");
    return out;
  }
};

} // namespace

QScalar parse_qscalar(const std::string& text) {
  ScalarParser p{text};
  p.skip();
  if (p.eat('(')) {
    // Either "(num)/(den)" or a parenthesized polynomial.
    LaurentPoly num = p.poly();
    if (!p.eat(')')) p.fail("expected )");
    if (p.eat('/')) {
      if (!p.eat('(')) p.fail("expected (");
      LaurentPoly den = p.poly();
      if (!p.eat(')')) p.fail("expected )");
      return QScalar(num, den);
    }
    return QScalar(num);
  }
  LaurentPoly num = p.poly();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing characters");
  return QScalar(num);
}

} // namespace qgauss
