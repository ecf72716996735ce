#pragma once

#include <map>

#include "suq2/qscalar.hpp"

namespace suq2 {

/// Polynomial in one auxiliary commuting variable (used for polynomials in
/// the central-ish combination gamma^* gamma) with exact QScalar coefficients.
class QPolynomial1Var {
 public:
  QPolynomial1Var() = default;
  explicit QPolynomial1Var(const QScalar& constant);

  static QPolynomial1Var variable();  // the monomial x

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, QScalar>& coeffs() const { return coeffs_; }
  QScalar coeff(int deg) const;
  void set_coeff(int deg, const QScalar& c);
  int degree() const;  // throws on zero

  QPolynomial1Var operator+(const QPolynomial1Var& o) const;
  QPolynomial1Var operator-(const QPolynomial1Var& o) const;
  QPolynomial1Var operator*(const QPolynomial1Var& o) const;
  QPolynomial1Var operator*(const QScalar& s) const;
  bool operator==(const QPolynomial1Var& o) const {
    return coeffs_ == o.coeffs_;
  }
  bool operator!=(const QPolynomial1Var& o) const { return !(*this == o); }

  // Substitute x -> s*x (scales the degree-n coefficient by s^n).
  QPolynomial1Var scaled_variable(const QScalar& s) const;

 private:
  std::map<int, QScalar> coeffs_;  // degree -> coefficient, no zeros stored
};

// prod_{j=0}^{k-1} (1 - base^j * x), expanded; the empty product is 1.
QPolynomial1Var q_pochhammer(const QPolynomial1Var& x, const QScalar& base,
                             int k);

// Gaussian binomial coefficient [n choose i]_base via the q-Pascal
// recurrence [n,i]_t = [n-1,i-1]_t + t^i [n-1,i]_t.
QScalar q_binomial(int n, int i, const QScalar& base);

}  // namespace suq2
