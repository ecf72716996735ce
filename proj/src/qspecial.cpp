#include "suq2/qspecial.hpp"

#include <stdexcept>
#include <vector>

namespace suq2 {

QPolynomial1Var::QPolynomial1Var(const QScalar& constant) {
  if (!constant.is_zero()) coeffs_[0] = constant;
}

QPolynomial1Var QPolynomial1Var::variable() {
  QPolynomial1Var p;
  p.coeffs_[1] = QScalar(1);
  return p;
}

QScalar QPolynomial1Var::coeff(int deg) const {
  auto it = coeffs_.find(deg);
  return it == coeffs_.end() ? QScalar() : it->second;
}

void QPolynomial1Var::set_coeff(int deg, const QScalar& c) {
  if (deg < 0) throw std::invalid_argument("negative degree");
  if (c.is_zero())
    coeffs_.erase(deg);
  else
    coeffs_[deg] = c;
}

int QPolynomial1Var::degree() const {
  if (is_zero()) throw std::logic_error("degree of zero polynomial");
  return coeffs_.rbegin()->first;
}

QPolynomial1Var QPolynomial1Var::operator+(const QPolynomial1Var& o) const {
  QPolynomial1Var r = *this;
  for (const auto& [d, c] : o.coeffs_) r.set_coeff(d, r.coeff(d) + c);
  return r;
}

QPolynomial1Var QPolynomial1Var::operator-(const QPolynomial1Var& o) const {
  QPolynomial1Var r = *this;
  for (const auto& [d, c] : o.coeffs_) r.set_coeff(d, r.coeff(d) - c);
  return r;
}

QPolynomial1Var QPolynomial1Var::operator*(const QPolynomial1Var& o) const {
  QPolynomial1Var r;
  for (const auto& [d1, c1] : coeffs_)
    for (const auto& [d2, c2] : o.coeffs_)
      r.set_coeff(d1 + d2, r.coeff(d1 + d2) + c1 * c2);
  return r;
}

QPolynomial1Var QPolynomial1Var::operator*(const QScalar& s) const {
  QPolynomial1Var r;
  if (s.is_zero()) return r;
  for (const auto& [d, c] : coeffs_) r.coeffs_[d] = c * s;
  return r;
}

QPolynomial1Var QPolynomial1Var::scaled_variable(const QScalar& s) const {
  QPolynomial1Var r;
  QScalar pw(1);
  // Walk degrees in order; powers of s computed incrementally.
  int last = 0;
  for (const auto& [d, c] : coeffs_) {
    for (; last < d; ++last) pw *= s;
    r.set_coeff(d, c * pw);
  }
  return r;
}

QPolynomial1Var q_pochhammer(const QPolynomial1Var& x, const QScalar& base,
                             int k) {
  if (k < 0) throw std::invalid_argument("q_pochhammer: negative length");
  QPolynomial1Var one{QScalar(1)};
  QPolynomial1Var acc = one;
  QScalar bj(1);
  for (int j = 0; j < k; ++j) {
    acc = acc * (one - x * bj);
    bj *= base;
  }
  return acc;
}

QScalar q_binomial(int n, int i, const QScalar& base) {
  if (n < 0 || i < 0 || i > n)
    throw std::invalid_argument("q_binomial: need 0 <= i <= n");
  // Row-by-row q-Pascal triangle.
  std::vector<QScalar> row{QScalar(1)};
  for (int r = 1; r <= n; ++r) {
    std::vector<QScalar> next(r + 1, QScalar(0));
    QScalar tpow(1);
    for (int j = 0; j <= r; ++j) {
      QScalar v = j > 0 ? row[j - 1] : QScalar(0);
      if (j < r) v += tpow * row[j];
      next[j] = v;
      tpow *= base;
    }
    row = std::move(next);
  }
  return row[i];
}

}  // namespace suq2
