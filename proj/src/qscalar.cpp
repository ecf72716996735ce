#include "suq2/qscalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace suq2 {

LaurentPoly::LaurentPoly(const BigInt& constant) {
  if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) coeffs_[0] = BigInt(constant);
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int deg) {
  LaurentPoly p;
  if (c != 0) p.coeffs_[deg] = c;
  return p;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.count(0) && coeffs_.at(0) == 1;
}

int LaurentPoly::min_degree() const {
  if (is_zero()) throw std::logic_error("min_degree of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (is_zero()) throw std::logic_error("max_degree of zero polynomial");
  return coeffs_.rbegin()->first;
}

void LaurentPoly::set_coeff(int deg, const BigInt& c) {
  if (c == 0)
    coeffs_.erase(deg);
  else
    coeffs_[deg] = c;
}

BigInt LaurentPoly::coeff(int deg) const {
  auto it = coeffs_.find(deg);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [d, c] : o.coeffs_) r.set_coeff(d, r.coeff(d) + c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [d, c] : o.coeffs_) r.set_coeff(d, r.coeff(d) - c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [d1, c1] : coeffs_)
    for (const auto& [d2, c2] : o.coeffs_)
      r.set_coeff(d1 + d2, r.coeff(d1 + d2) + c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [d, c] : coeffs_) r.coeffs_[d] = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int deg) const {
  LaurentPoly r;
  for (const auto& [d, c] : coeffs_) r.coeffs_[d + deg] = c;
  return r;
}

BigInt LaurentPoly::content() const {
  BigInt g = 0;
  for (const auto& [d, c] : coeffs_) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? BigInt(-g) : g;
}

LaurentPoly LaurentPoly::divided_by_content(const BigInt& c) const {
  if (c == 0 || c == 1) return *this;
  LaurentPoly r;
  for (const auto& [d, co] : coeffs_) r.coeffs_[d] = co / c;
  return r;
}

LaurentPoly LaurentPoly::divided_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return LaurentPoly();
  // Shift both to ordinary polynomials; track the net Laurent shift.
  int shift = min_degree() - d.min_degree();
  LaurentPoly a = shifted(-min_degree());
  LaurentPoly b = d.shifted(-d.min_degree());
  LaurentPoly quot;
  while (!a.is_zero() && a.max_degree() >= b.max_degree()) {
    int deg = a.max_degree() - b.max_degree();
    BigInt lcA = a.coeff(a.max_degree());
    BigInt lcB = b.coeff(b.max_degree());
    if (lcA % lcB != 0)
      throw std::logic_error("divided_exact: inexact leading coefficient");
    LaurentPoly term = monomial(lcA / lcB, deg);
    quot = quot + term;
    a = a - term * b;
  }
  if (!a.is_zero()) throw std::logic_error("divided_exact: nonzero remainder");
  return quot.shifted(shift);
}

std::complex<double> LaurentPoly::eval(std::complex<double> q) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [d, c] : coeffs_)
    acc += c.convert_to<double>() * std::pow(q, d);
  return acc;
}

double LaurentPoly::eval(double q) const {
  double acc = 0.0;
  for (const auto& [d, c] : coeffs_)
    acc += c.convert_to<double>() * std::pow(q, d);
  return acc;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first, matching how the identities are usually written.
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    BigInt c = it->second;
    int d = it->first;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    BigInt ac = c < 0 ? BigInt(-c) : c;
    if (d == 0) {
      os << ac;
    } else {
      if (ac != 1) os << ac << "*";
      os << "q";
      if (d != 1) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

namespace {

// Primitive ordinary polynomial (min degree 0, content 1, positive leading
// coefficient) associated to a nonzero Laurent polynomial.
LaurentPoly primitive_part(const LaurentPoly& p) {
  LaurentPoly r = p.shifted(-p.min_degree());
  r = r.divided_by_content(r.content());
  if (r.coeff(r.max_degree()) < 0) r = -r;
  return r;
}

// Pseudo-remainder of a by b (both ordinary, b nonzero).
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
  BigInt lcB = b.coeff(b.max_degree());
  while (!a.is_zero() && a.max_degree() >= b.max_degree()) {
    int deg = a.max_degree() - b.max_degree();
    BigInt lcA = a.coeff(a.max_degree());
    // Scale so the leading terms cancel exactly.
    LaurentPoly scaledA;
    for (const auto& [d, c] : a.coeffs())
      scaledA.set_coeff(d, c * lcB);
    a = scaledA - LaurentPoly::monomial(lcA, deg) * b;
  }
  return a;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  LaurentPoly x = primitive_part(a);
  LaurentPoly y = primitive_part(b);
  if (x.max_degree() < y.max_degree()) std::swap(x, y);
  while (!y.is_zero()) {
    LaurentPoly r = pseudo_rem(x, y);
    x = y;
    y = r.is_zero() ? LaurentPoly() : primitive_part(r);
  }
  return x;
}

QScalar::QScalar(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QScalar: zero denominator");
  canonicalize();
}

void QScalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Push all powers of q into the numerator; q is a unit.
  int dshift = den_.min_degree();
  den_ = den_.shifted(-dshift);
  num_ = num_.shifted(-dshift);
  // Cancel the polynomial gcd.
  LaurentPoly g = laurent_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divided_exact(g);
    den_ = den_.divided_exact(g);
  }
  // Cancel the integer content shared by numerator and denominator.
  BigInt cg = boost::multiprecision::gcd(num_.content(), den_.content());
  if (cg > 1) {
    num_ = num_.divided_by_content(cg);
    den_ = den_.divided_by_content(cg);
  }
  // Fix sign: positive leading denominator coefficient.
  if (den_.coeff(den_.max_degree()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QScalar QScalar::operator+(const QScalar& o) const {
  return QScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator-(const QScalar& o) const {
  return QScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator*(const QScalar& o) const {
  return QScalar(num_ * o.num_, den_ * o.den_);
}

QScalar QScalar::operator/(const QScalar& o) const {
  if (o.is_zero()) throw std::domain_error("QScalar: division by zero");
  return QScalar(num_ * o.den_, den_ * o.num_);
}

QScalar QScalar::operator-() const { return QScalar(-num_, den_); }

QScalar QScalar::from_dyadic(double v) {
  if (!std::isfinite(v))
    throw std::invalid_argument("from_dyadic: non-finite value");
  int exp = 0;
  double mant = std::frexp(v, &exp);
  // Scale the mantissa to an exact 53-bit integer.
  long long m = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  BigInt num(m), den(1);
  if (exp >= 0)
    num <<= exp;
  else
    den <<= -exp;
  return QScalar(LaurentPoly(num), LaurentPoly(den));
}

bool QScalar::operator<(const QScalar& o) const {
  auto key = [](const QScalar& s) {
    return std::make_pair(s.num_.coeffs(), s.den_.coeffs());
  };
  return key(*this) < key(o);
}

std::complex<double> QScalar::eval(std::complex<double> q) const {
  return num_.eval(q) / den_.eval(q);
}

double QScalar::eval(double q) const {
  double d = den_.eval(q);
  if (d == 0.0) throw std::domain_error("QScalar: denominator vanishes at q");
  return num_.eval(q) / d;
}

std::string QScalar::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str();
  if (num_.coeffs().size() > 1) n = "(" + n + ")";
  std::string d = den_.str();
  if (den_.coeffs().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

namespace {

// Recursive-descent parser for the exact scalar grammar. Works over
// QScalar so decimal literals stay exact fractions.
struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  BigInt integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected integer");
    return BigInt(s.substr(start, pos - start));
  }

  int signed_int() {
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    return sign * integer().convert_to<int>();
  }

  QScalar atom() {
    skip_ws();
    if (accept('(')) {
      QScalar v = sum();
      if (!accept(')')) fail("expected ')'");
      return maybe_power_of(v);
    }
    if (pos < s.size() && (s[pos] == 'q' || s[pos] == 'Q')) {
      ++pos;
      int deg = 1;
      if (accept('^')) deg = signed_int();
      return QScalar::q_power(deg);
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      BigInt c = integer();
      if (pos < s.size() && s[pos] == '.') {
        ++pos;
        BigInt den = 1;
        while (pos < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[pos]))) {
          c = c * 10 + (s[pos] - '0');
          den *= 10;
          ++pos;
        }
        return QScalar(LaurentPoly(c), LaurentPoly(den));
      }
      return QScalar(c);
    }
    fail("expected term");
  }

  QScalar maybe_power_of(const QScalar& v) {
    if (accept('^')) {
      int n = signed_int();
      QScalar r(1);
      for (int i = 0; i < std::abs(n); ++i) r = r * v;
      return n < 0 ? QScalar(1) / r : r;
    }
    return v;
  }

  QScalar product() {
    QScalar v = atom();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        v = v * atom();
      } else if (pos < s.size() && s[pos] == '/') {
        ++pos;
        v = v / atom();
      } else if (pos < s.size() &&
                 (s[pos] == 'q' || s[pos] == 'Q' || s[pos] == '(')) {
        v = v * atom();  // implicit multiplication, e.g. "3q^2"
      } else {
        return v;
      }
    }
  }

  QScalar sum() {
    skip_ws();
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    QScalar v = product();
    if (sign < 0) v = -v;
    for (;;) {
      skip_ws();
      if (accept('+'))
        v = v + product();
      else if (accept('-'))
        v = v - product();
      else
        return v;
    }
  }
};

}  // namespace

QScalar parse_qscalar(const std::string& text) {
  Parser p(text);
  QScalar v = p.sum();
  p.skip_ws();
  if (p.pos != text.size())
    throw std::invalid_argument("parse error at position " +
                                std::to_string(p.pos) + ": trailing input");
  return v;
}

}  // namespace suq2
