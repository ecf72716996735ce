#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace suq2 {

using BigInt = boost::multiprecision::cpp_int;

/// Integer-coefficient Laurent polynomial in the deformation parameter q.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const BigInt& constant);
  explicit LaurentPoly(long long constant);

  // Monomial c * q^deg.
  static LaurentPoly monomial(const BigInt& c, int deg);
  static LaurentPoly q_power(int deg) { return monomial(1, deg); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  int min_degree() const;  // throws on zero
  int max_degree() const;  // throws on zero

  const std::map<int, BigInt>& coeffs() const { return coeffs_; }
  void set_coeff(int deg, const BigInt& c);
  BigInt coeff(int deg) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Multiply by q^deg (Laurent shift).
  LaurentPoly shifted(int deg) const;

  // GCD of all coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const;
  LaurentPoly divided_by_content(const BigInt& c) const;

  // Exact division; throws if the division leaves a remainder.
  LaurentPoly divided_exact(const LaurentPoly& d) const;

  std::complex<double> eval(std::complex<double> q) const;
  double eval(double q) const;

  std::string str() const;

 private:
  std::map<int, BigInt> coeffs_;
};

// GCD up to sign of two Laurent polynomials, as a primitive ordinary
// polynomial with nonzero constant term (powers of q are units).
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact scalar: quotient of integer-coefficient Laurent polynomials in q,
/// kept in canonical lowest terms. Immutable value type.
class QScalar {
 public:
  QScalar() : num_(), den_(LaurentPoly(1)) {}
  QScalar(long long n) : num_(LaurentPoly(n)), den_(LaurentPoly(1)) {}
  QScalar(const BigInt& n) : num_(LaurentPoly(n)), den_(LaurentPoly(1)) {}
  QScalar(LaurentPoly num, LaurentPoly den);

  static QScalar q_power(int deg) {
    return QScalar(LaurentPoly::q_power(deg), LaurentPoly(1));
  }
  static QScalar from_ratio(long long n, long long d) {
    return QScalar(LaurentPoly(n), LaurentPoly(d));
  }
  // Exact conversion of a (dyadic) double; throws on non-finite input.
  static QScalar from_dyadic(double v);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  QScalar operator+(const QScalar& o) const;
  QScalar operator-(const QScalar& o) const;
  QScalar operator*(const QScalar& o) const;
  QScalar operator/(const QScalar& o) const;  // throws on division by zero
  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }

  bool operator==(const QScalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const QScalar& o) const { return !(*this == o); }
  bool operator<(const QScalar& o) const;  // arbitrary total order for maps

  std::complex<double> eval(std::complex<double> q) const;
  double eval(double q) const;  // throws if the denominator vanishes at q

  std::string str() const;

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

// Parses the exact scalar grammar used by the CLI and the serializers:
// integer-coefficient Laurent polynomials in q with +, -, *, ^ and
// parentheses, optionally as a quotient p(q)/r(q).
QScalar parse_qscalar(const std::string& text);

}  // namespace suq2
