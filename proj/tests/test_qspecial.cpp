#include <doctest.h>

#include "suq2/qspecial.hpp"

using namespace suq2;

namespace {
QScalar qq() { return QScalar::q_power(1); }
}  // namespace

TEST_CASE("Gaussian binomials via the q-binomial theorem") {
  // prod_{j=0}^{n-1} (1 + q^j x) = sum_i q^{i(i-1)/2} [n choose i]_q x^i.
  // The left side is computed by the Pochhammer expansion with x -> -x,
  // which is an independent route from the q-Pascal recurrence.
  for (int n = 0; n <= 6; ++n) {
    QPolynomial1Var minus_x = QPolynomial1Var::variable() * QScalar(-1);
    QPolynomial1Var lhs = q_pochhammer(minus_x, qq(), n);
    for (int i = 0; i <= n; ++i) {
      QScalar expect = QScalar::q_power(i * (i - 1) / 2) * q_binomial(n, i, qq());
      CHECK(lhs.coeff(i) == expect);
    }
    if (n > 0) CHECK(lhs.degree() == n);
  }
}

TEST_CASE("q-binomial symmetry and classical limit") {
  for (int n = 0; n <= 7; ++n)
    for (int i = 0; i <= n; ++i) {
      QScalar b = q_binomial(n, i, qq());
      CHECK(b == q_binomial(n, n - i, qq()));
      // q = 1 recovers the ordinary binomial coefficient.
      double classical = 1.0;
      for (int j = 0; j < i; ++j) classical = classical * (n - j) / (j + 1);
      CHECK(b.eval(1.0) == doctest::Approx(classical));
    }
  CHECK(q_binomial(5, 2, qq()) ==
        parse_qscalar("(1-q^5)*(1-q^4)/((1-q^2)*(1-q))"));
}

TEST_CASE("polynomial ring operations") {
  QPolynomial1Var x = QPolynomial1Var::variable();
  QPolynomial1Var p = x * x + x * QScalar(3) + QPolynomial1Var(QScalar(2));
  QPolynomial1Var r = x - QPolynomial1Var(QScalar(1));
  QPolynomial1Var prod = p * r;
  CHECK(prod.coeff(3) == QScalar(1));
  CHECK(prod.coeff(0) == QScalar(-2));
  CHECK((p - p).is_zero());
  // scaled_variable substitutes x -> s x.
  QPolynomial1Var scaled = p.scaled_variable(QScalar::q_power(2));
  CHECK(scaled.coeff(2) == QScalar::q_power(4));
  CHECK(scaled.coeff(1) == QScalar(3) * QScalar::q_power(2));
  CHECK(scaled.coeff(0) == QScalar(2));
}

TEST_CASE("Pochhammer telescoping") {
  // (x; b)_{k+1} = (x; b)_k * (1 - b^k x).
  QPolynomial1Var x = QPolynomial1Var::variable();
  QScalar b = qq();
  for (int k = 0; k < 5; ++k) {
    QPolynomial1Var step =
        QPolynomial1Var(QScalar(1)) - x.scaled_variable(QScalar::q_power(k));
    CHECK(q_pochhammer(x, b, k + 1) == q_pochhammer(x, b, k) * step);
  }
  CHECK(q_pochhammer(x, b, 0) == QPolynomial1Var(QScalar(1)));
}
