#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "suq2/qscalar.hpp"

namespace suq2::polalg {

/// Normal-form basis monomial alpha^k gamma^l (gamma^*)^m of Pol(SU_q(2)),
/// with alpha^k meaning (alpha^*)^{|k|} for k < 0.
struct Monomial {
  int k = 0;
  int l = 0;
  int m = 0;

  auto operator<=>(const Monomial&) const = default;
};

// One reduced term of a monomial product, before coefficient scaling.
template <typename Scalar>
using TermList = std::vector<std::pair<Monomial, Scalar>>;

/// Element of Pol(SU_q(2)) with exact QScalar coefficients (symbolic q).
class PolElement {
 public:
  PolElement() = default;
  static PolElement zero() { return {}; }
  static PolElement one() { return monomial({0, 0, 0}); }
  static PolElement monomial(Monomial mo, QScalar c = QScalar(1));
  static PolElement alpha() { return monomial({1, 0, 0}); }
  static PolElement alpha_star() { return monomial({-1, 0, 0}); }
  static PolElement gamma() { return monomial({0, 1, 0}); }
  static PolElement gamma_star() { return monomial({0, 0, 1}); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, QScalar>& terms() const { return terms_; }
  void add_term(Monomial mo, const QScalar& c);

  PolElement operator+(const PolElement& o) const;
  PolElement operator-(const PolElement& o) const;
  PolElement operator-() const;
  PolElement operator*(const QScalar& s) const;
  bool operator==(const PolElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const PolElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::map<Monomial, QScalar> terms_;
};

/// Element with complex double coefficients at a fixed numeric q. Activated
/// whenever an operation introduces factors that are not Laurent in q
/// (modular phases, heat weights).
class NumPolElement {
 public:
  explicit NumPolElement(double q) : q_(q) {}
  NumPolElement(double q, const PolElement& exact);

  double q() const { return q_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, std::complex<double>>& terms() const {
    return terms_;
  }
  void add_term(Monomial mo, std::complex<double> c, double drop_tol = 0.0);

  NumPolElement operator+(const NumPolElement& o) const;
  NumPolElement operator-(const NumPolElement& o) const;
  NumPolElement operator*(std::complex<double> s) const;

 private:
  double q_;
  std::map<Monomial, std::complex<double>> terms_;
};

// --- core operations -------------------------------------------------------

PolElement mul(const PolElement& x, const PolElement& y);
NumPolElement mul(const NumPolElement& x, const NumPolElement& y);

PolElement adjoint(const PolElement& x);
NumPolElement adjoint(const NumPolElement& x);

// Haar state; exactly (1-q^2)/(1-q^{2(l+1)}) on k=0, l=m monomials.
QScalar haar(const PolElement& x);
std::complex<double> haar(const NumPolElement& x);

// GNS inner product <x,y> = haar(x^* y).
QScalar gns_inner(const PolElement& x, const PolElement& y);
std::complex<double> gns_inner(const NumPolElement& x, const NumPolElement& y);

// Modular group sigma_t: coefficient of the k-stratum scaled by q^{-itk}.
// Only defined for numeric q > 0 (the phase needs log q).
NumPolElement modular_sigma(double t, const NumPolElement& x);

// Heat semigroup Phi_t: k-stratum scaled by e^{-t k^2}; t >= 0.
NumPolElement heat_phi(double t, const NumPolElement& x);

// Fourier-Schur multiplier: k-stratum scaled by symbol(k).
PolElement fourier_schur(const std::function<QScalar(int)>& symbol,
                         const PolElement& x);
NumPolElement fourier_schur(
    const std::function<std::complex<double>(int)>& symbol,
    const NumPolElement& x);

/// Element of Pol(SU_q(2)) (x) Pol(SU_q(2)), both legs in normal form.
class PolTensor {
 public:
  using Key = std::pair<Monomial, Monomial>;

  PolTensor() = default;
  static PolTensor one();
  static PolTensor simple(const PolElement& a, const PolElement& b);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, QScalar>& terms() const { return terms_; }
  void add_term(const Key& key, const QScalar& c);

  PolTensor operator+(const PolTensor& o) const;
  PolTensor operator-(const PolTensor& o) const;

 private:
  std::map<Key, QScalar> terms_;
};

PolTensor mul(const PolTensor& x, const PolTensor& y);

// Comultiplication, the *-homomorphism with
//   Delta(alpha) = alpha (x) alpha - q gamma^* (x) gamma,
//   Delta(gamma) = gamma (x) alpha + alpha^* (x) gamma.
PolTensor comultiply(const PolElement& x);

// Apply Delta to one leg of a tensor ((Delta (x) id) or (id (x) Delta)).
PolTensor comultiply_leg(const PolTensor& x, int leg);

/// Tensors with three legs, only needed for the coassociativity checks.
class PolTensor3 {
 public:
  using Key = std::tuple<Monomial, Monomial, Monomial>;
  const std::map<Key, QScalar>& terms() const { return terms_; }
  void add_term(const Key& key, const QScalar& c);
  bool operator==(const PolTensor3& o) const { return terms_ == o.terms_; }

 private:
  std::map<Key, QScalar> terms_;
};

PolTensor3 delta_left(const PolTensor& x);   // (Delta (x) id)
PolTensor3 delta_right(const PolTensor& x);  // (id (x) Delta)

// --- numeric conversion ----------------------------------------------------

NumPolElement to_numeric(const PolElement& x, double q);

// --- serialization ---------------------------------------------------------

// Line-based text form "k l m : coeff", one term per line, exact round trip.
std::string to_text(const PolElement& x);
PolElement from_text(const std::string& text);

// JSON form: array of {"k":..,"l":..,"m":..,"coeff":"..."}.
std::string to_json(const PolElement& x);
PolElement from_json(const std::string& json_text);

// CLI element micro-grammar: "c1 * k1 l1 m1 + c2 * k2 l2 m2 + ...", where a
// bare "k l m" triple means coefficient 1.
PolElement parse_element(const std::string& spec);

}  // namespace suq2::polalg
