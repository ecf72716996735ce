#include "suq2/polalg.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace suq2::polalg {

namespace {

struct ExactRing {
  using Scalar = QScalar;
  QScalar q_power(int n) const { return QScalar::q_power(n); }
  QScalar conj(const QScalar& s) const { return s; }
  QScalar one() const { return QScalar(1); }
};

struct NumericRing {
  using Scalar = std::complex<double>;
  double q;
  Scalar q_power(int n) const { return {std::pow(q, n), 0.0}; }
  Scalar conj(const Scalar& s) const { return std::conj(s); }
  Scalar one() const { return {1.0, 0.0}; }
};

// Normal-ordered product of two basis monomials.
//
// Step 1: commute gamma^{l1}(gamma^*)^{m1} past alpha^{k2}, which costs the
// scalar q^{-(l1+m1) k2}.
// Step 2: contract the merged alpha-run alpha^{k1} alpha^{k2}. Runs of equal
// sign concatenate; mixed runs contract via alpha alpha^* = 1 - q^2 g and
// alpha^* alpha = 1 - g with g = gamma^* gamma, whose whole-run closed forms
// are the Pochhammer products below. Commuting the leftover alpha-power to
// the front substitutes g -> q^{+-2c} g.
// Step 3: attach the gamma letters; g^n contributes gamma^n (gamma^*)^n.
template <typename Ring>
TermList<typename Ring::Scalar> monomial_product(const Ring& ring, Monomial a,
                                                 Monomial b) {
  using Scalar = typename Ring::Scalar;
  Scalar factor = ring.q_power(-(a.l + a.m) * b.k);

  int alpha_power = 0;
  // Polynomial in g = gamma^* gamma: degree -> coefficient.
  std::map<int, Scalar> poly;
  poly[0] = ring.one();

  auto mul_factor = [&](const Scalar& c0, const Scalar& c1) {
    // poly *= (c0 + c1 * g)
    std::map<int, Scalar> next;
    for (const auto& [d, c] : poly) {
      next[d] = next.count(d) ? Scalar(next[d] + c * c0) : c * c0;
      next[d + 1] = next.count(d + 1) ? Scalar(next[d + 1] + c * c1) : c * c1;
    }
    poly = std::move(next);
  };
  auto scale_variable = [&](int qexp_per_degree) {
    // g -> q^{qexp_per_degree} g
    std::map<int, Scalar> next;
    for (const auto& [d, c] : poly)
      next[d] = c * ring.q_power(qexp_per_degree * d);
    poly = std::move(next);
  };

  if (a.k == 0 || b.k == 0 || (a.k > 0) == (b.k > 0)) {
    alpha_power = a.k + b.k;
  } else if (a.k > 0) {
    int bneg = -b.k;
    if (a.k >= bneg) {
      // alpha^{a.k} (alpha^*)^{bneg} = alpha^{a.k-bneg} (q^2 g; q^2)_{bneg}
      alpha_power = a.k - bneg;
      for (int j = 1; j <= bneg; ++j)
        mul_factor(ring.one(), Scalar(-ring.q_power(2 * j)));
    } else {
      // (q^2 g; q^2)_{a.k} (alpha^*)^{c}; then move (alpha^*)^c left.
      int c = bneg - a.k;
      alpha_power = -c;
      for (int j = 1; j <= a.k; ++j)
        mul_factor(ring.one(), Scalar(-ring.q_power(2 * j)));
      scale_variable(2 * c);
    }
  } else {
    int aneg = -a.k;
    if (b.k >= aneg) {
      // prod_{j=0}^{aneg-1} (1 - q^{-2j} g) alpha^{c}; move alpha^c left.
      int c = b.k - aneg;
      alpha_power = c;
      for (int j = 0; j < aneg; ++j)
        mul_factor(ring.one(), Scalar(-ring.q_power(-2 * j)));
      scale_variable(-2 * c);
    } else {
      alpha_power = -(aneg - b.k);
      for (int j = 0; j < b.k; ++j)
        mul_factor(ring.one(), Scalar(-ring.q_power(-2 * j)));
    }
  }

  TermList<Scalar> out;
  out.reserve(poly.size());
  for (const auto& [d, c] : poly)
    out.push_back({Monomial{alpha_power, a.l + b.l + d, a.m + b.m + d},
                   Scalar(factor * c)});
  return out;
}

template <typename Ring>
std::pair<Monomial, typename Ring::Scalar> monomial_adjoint(const Ring& ring,
                                                            Monomial mo) {
  // (alpha^k gamma^l (gamma^*)^m)^* = q^{(l+m)k} alpha^{-k} gamma^m (gamma^*)^l
  return {Monomial{-mo.k, mo.m, mo.l}, ring.q_power((mo.l + mo.m) * mo.k)};
}

}  // namespace

PolElement PolElement::monomial(Monomial mo, QScalar c) {
  PolElement e;
  e.add_term(mo, c);
  return e;
}

void PolElement::add_term(Monomial mo, const QScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mo);
  if (it == terms_.end()) {
    terms_[mo] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolElement PolElement::operator+(const PolElement& o) const {
  PolElement r = *this;
  for (const auto& [mo, c] : o.terms_) r.add_term(mo, c);
  return r;
}

PolElement PolElement::operator-(const PolElement& o) const {
  PolElement r = *this;
  for (const auto& [mo, c] : o.terms_) r.add_term(mo, -c);
  return r;
}

PolElement PolElement::operator-() const {
  PolElement r;
  for (const auto& [mo, c] : terms_) r.terms_[mo] = -c;
  return r;
}

PolElement PolElement::operator*(const QScalar& s) const {
  PolElement r;
  if (s.is_zero()) return r;
  for (const auto& [mo, c] : terms_) r.terms_[mo] = c * s;
  return r;
}

std::string PolElement::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mo, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    if (mo.k > 0) os << " a^" << mo.k;
    if (mo.k < 0) os << " a*^" << -mo.k;
    if (mo.l > 0) os << " g^" << mo.l;
    if (mo.m > 0) os << " g*^" << mo.m;
    first = false;
  }
  return os.str();
}

NumPolElement::NumPolElement(double q, const PolElement& exact) : q_(q) {
  for (const auto& [mo, c] : exact.terms()) add_term(mo, c.eval(q));
}

void NumPolElement::add_term(Monomial mo, std::complex<double> c,
                             double drop_tol) {
  auto it = terms_.find(mo);
  std::complex<double> v = c + (it == terms_.end() ? 0.0 : it->second);
  if (std::abs(v) <= drop_tol)
    terms_.erase(mo);
  else
    terms_[mo] = v;
}

NumPolElement NumPolElement::operator+(const NumPolElement& o) const {
  NumPolElement r = *this;
  for (const auto& [mo, c] : o.terms_) r.add_term(mo, c);
  return r;
}

NumPolElement NumPolElement::operator-(const NumPolElement& o) const {
  NumPolElement r = *this;
  for (const auto& [mo, c] : o.terms_) r.add_term(mo, -c);
  return r;
}

NumPolElement NumPolElement::operator*(std::complex<double> s) const {
  NumPolElement r(q_);
  for (const auto& [mo, c] : terms_) r.add_term(mo, c * s);
  return r;
}

PolElement mul(const PolElement& x, const PolElement& y) {
  ExactRing ring;
  PolElement r;
  for (const auto& [ma, ca] : x.terms())
    for (const auto& [mb, cb] : y.terms()) {
      QScalar c = ca * cb;
      for (const auto& [mo, w] : monomial_product(ring, ma, mb))
        r.add_term(mo, c * w);
    }
  return r;
}

NumPolElement mul(const NumPolElement& x, const NumPolElement& y) {
  NumericRing ring{x.q()};
  NumPolElement r(x.q());
  for (const auto& [ma, ca] : x.terms())
    for (const auto& [mb, cb] : y.terms()) {
      std::complex<double> c = ca * cb;
      for (const auto& [mo, w] : monomial_product(ring, ma, mb))
        r.add_term(mo, c * w);
    }
  return r;
}

PolElement adjoint(const PolElement& x) {
  ExactRing ring;
  PolElement r;
  for (const auto& [mo, c] : x.terms()) {
    auto [amo, w] = monomial_adjoint(ring, mo);
    r.add_term(amo, ring.conj(c) * w);
  }
  return r;
}

NumPolElement adjoint(const NumPolElement& x) {
  NumericRing ring{x.q()};
  NumPolElement r(x.q());
  for (const auto& [mo, c] : x.terms()) {
    auto [amo, w] = monomial_adjoint(ring, mo);
    r.add_term(amo, std::conj(c) * w);
  }
  return r;
}

QScalar haar(const PolElement& x) {
  QScalar acc;
  QScalar one(1);
  for (const auto& [mo, c] : x.terms()) {
    if (mo.k != 0 || mo.l != mo.m) continue;
    // (1-q^2)/(1-q^{2(l+1)})
    QScalar v = (one - QScalar::q_power(2)) /
                (one - QScalar::q_power(2 * (mo.l + 1)));
    acc += c * v;
  }
  return acc;
}

std::complex<double> haar(const NumPolElement& x) {
  std::complex<double> acc = 0.0;
  double q2 = x.q() * x.q();
  for (const auto& [mo, c] : x.terms()) {
    if (mo.k != 0 || mo.l != mo.m) continue;
    acc += c * ((1.0 - q2) / (1.0 - std::pow(q2, mo.l + 1)));
  }
  return acc;
}

QScalar gns_inner(const PolElement& x, const PolElement& y) {
  // haar(x^* y) without materializing the full product: only k = 0, l = m
  // terms of the product survive.
  ExactRing ring;
  QScalar acc;
  QScalar one(1);
  for (const auto& [ma, ca] : x.terms()) {
    auto [sma, sw] = monomial_adjoint(ring, ma);
    for (const auto& [mb, cb] : y.terms()) {
      if (sma.k + mb.k != 0) continue;  // product stays in one alpha-stratum
      QScalar c = ca * cb * sw;
      for (const auto& [mo, w] : monomial_product(ring, sma, mb)) {
        if (mo.k != 0 || mo.l != mo.m) continue;
        QScalar v = (one - QScalar::q_power(2)) /
                    (one - QScalar::q_power(2 * (mo.l + 1)));
        acc += c * w * v;
      }
    }
  }
  return acc;
}

std::complex<double> gns_inner(const NumPolElement& x, const NumPolElement& y) {
  return haar(mul(adjoint(x), y));
}

NumPolElement modular_sigma(double t, const NumPolElement& x) {
  if (x.q() <= 0.0)
    throw std::domain_error(
        "modular_sigma: q^{-itk} needs a branch choice for q <= 0; only "
        "q > 0 is supported");
  NumPolElement r(x.q());
  double lnq = std::log(x.q());
  for (const auto& [mo, c] : x.terms()) {
    // q^{-itk} = e^{-itk ln q}
    std::complex<double> phase = std::exp(std::complex<double>(0.0, -t * mo.k * lnq));
    r.add_term(mo, c * phase);
  }
  return r;
}

NumPolElement heat_phi(double t, const NumPolElement& x) {
  if (t < 0.0) throw std::domain_error("heat_phi: t must be nonnegative");
  NumPolElement r(x.q());
  for (const auto& [mo, c] : x.terms())
    r.add_term(mo, c * std::exp(-t * double(mo.k) * double(mo.k)));
  return r;
}

PolElement fourier_schur(const std::function<QScalar(int)>& symbol,
                         const PolElement& x) {
  PolElement r;
  for (const auto& [mo, c] : x.terms()) r.add_term(mo, c * symbol(mo.k));
  return r;
}

NumPolElement fourier_schur(
    const std::function<std::complex<double>(int)>& symbol,
    const NumPolElement& x) {
  NumPolElement r(x.q());
  for (const auto& [mo, c] : x.terms()) r.add_term(mo, c * symbol(mo.k));
  return r;
}

PolTensor PolTensor::one() {
  PolTensor t;
  t.terms_[{Monomial{}, Monomial{}}] = QScalar(1);
  return t;
}

PolTensor PolTensor::simple(const PolElement& a, const PolElement& b) {
  PolTensor t;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) t.add_term({ma, mb}, ca * cb);
  return t;
}

void PolTensor::add_term(const Key& key, const QScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_[key] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolTensor PolTensor::operator+(const PolTensor& o) const {
  PolTensor r = *this;
  for (const auto& [key, c] : o.terms_) r.add_term(key, c);
  return r;
}

PolTensor PolTensor::operator-(const PolTensor& o) const {
  PolTensor r = *this;
  for (const auto& [key, c] : o.terms_) r.add_term(key, -c);
  return r;
}

PolTensor mul(const PolTensor& x, const PolTensor& y) {
  ExactRing ring;
  PolTensor r;
  for (const auto& [ka, ca] : x.terms())
    for (const auto& [kb, cb] : y.terms()) {
      QScalar c = ca * cb;
      for (const auto& [m1, w1] : monomial_product(ring, ka.first, kb.first))
        for (const auto& [m2, w2] :
             monomial_product(ring, ka.second, kb.second))
          r.add_term({m1, m2}, c * w1 * w2);
    }
  return r;
}

namespace {

PolTensor delta_alpha() {
  PolTensor t;
  t.add_term({Monomial{1, 0, 0}, Monomial{1, 0, 0}}, QScalar(1));
  t.add_term({Monomial{0, 0, 1}, Monomial{0, 1, 0}}, -QScalar::q_power(1));
  return t;
}

PolTensor delta_gamma() {
  PolTensor t;
  t.add_term({Monomial{0, 1, 0}, Monomial{1, 0, 0}}, QScalar(1));
  t.add_term({Monomial{-1, 0, 0}, Monomial{0, 1, 0}}, QScalar(1));
  return t;
}

PolTensor tensor_adjoint(const PolTensor& x) {
  ExactRing ring;
  PolTensor r;
  for (const auto& [key, c] : x.terms()) {
    auto [m1, w1] = monomial_adjoint(ring, key.first);
    auto [m2, w2] = monomial_adjoint(ring, key.second);
    r.add_term({m1, m2}, c * w1 * w2);
  }
  return r;
}

PolTensor tensor_pow(const PolTensor& base, int n) {
  PolTensor acc = PolTensor::one();
  for (int i = 0; i < n; ++i) acc = mul(acc, base);
  return acc;
}

}  // namespace

PolTensor comultiply(const PolElement& x) {
  PolTensor da = delta_alpha();
  PolTensor das = tensor_adjoint(da);
  PolTensor dg = delta_gamma();
  PolTensor dgs = tensor_adjoint(dg);

  PolTensor r;
  for (const auto& [mo, c] : x.terms()) {
    PolTensor term =
        mul(mo.k >= 0 ? tensor_pow(da, mo.k) : tensor_pow(das, -mo.k),
            mul(tensor_pow(dg, mo.l), tensor_pow(dgs, mo.m)));
    for (const auto& [key, w] : term.terms()) r.add_term(key, c * w);
  }
  return r;
}

void PolTensor3::add_term(const Key& key, const QScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_[key] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolTensor3 delta_left(const PolTensor& x) {
  PolTensor3 r;
  for (const auto& [key, c] : x.terms()) {
    PolTensor d = comultiply(PolElement::monomial(key.first));
    for (const auto& [dkey, w] : d.terms())
      r.add_term({dkey.first, dkey.second, key.second}, c * w);
  }
  return r;
}

PolTensor3 delta_right(const PolTensor& x) {
  PolTensor3 r;
  for (const auto& [key, c] : x.terms()) {
    PolTensor d = comultiply(PolElement::monomial(key.second));
    for (const auto& [dkey, w] : d.terms())
      r.add_term({key.first, dkey.first, dkey.second}, c * w);
  }
  return r;
}

NumPolElement to_numeric(const PolElement& x, double q) {
  return NumPolElement(q, x);
}

std::string to_text(const PolElement& x) {
  std::ostringstream os;
  for (const auto& [mo, c] : x.terms())
    os << mo.k << " " << mo.l << " " << mo.m << " : " << c.str() << "\n";
  return os.str();
}

PolElement from_text(const std::string& text) {
  PolElement r;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int k, l, m;
    char colon;
    if (!(ls >> k >> l >> m >> colon) || colon != ':')
      throw std::invalid_argument("bad element line: " + line);
    std::string coeff;
    std::getline(ls, coeff);
    r.add_term(Monomial{k, l, m}, parse_qscalar(coeff));
  }
  return r;
}

std::string to_json(const PolElement& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [mo, c] : x.terms())
    arr.push_back({{"k", mo.k}, {"l", mo.l}, {"m", mo.m}, {"coeff", c.str()}});
  return arr.dump();
}

PolElement from_json(const std::string& json_text) {
  PolElement r;
  nlohmann::json arr = nlohmann::json::parse(json_text);
  for (const auto& t : arr)
    r.add_term(Monomial{t.at("k").get<int>(), t.at("l").get<int>(),
                        t.at("m").get<int>()},
               parse_qscalar(t.at("coeff").get<std::string>()));
  return r;
}

PolElement parse_element(const std::string& spec) {
  // Terms separated by '+' at top level; each term is "coeff * k l m" or a
  // bare "k l m" triple.
  PolElement r;
  size_t pos = 0;
  int depth = 0;
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : spec) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '+' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  (void)pos;
  for (const std::string& part : parts) {
    std::string coeff = "1";
    std::string triple = part;
    size_t star = part.rfind('*');
    // A '*' separates coefficient and triple only if followed by a triple of
    // integers; powers inside the coefficient use '^' so a bare rfind works.
    if (star != std::string::npos) {
      coeff = part.substr(0, star);
      triple = part.substr(star + 1);
    }
    std::istringstream ts(triple);
    int k, l, m;
    if (!(ts >> k >> l >> m))
      throw std::invalid_argument("bad element term: " + part);
    std::string rest;
    if (ts >> rest) throw std::invalid_argument("bad element term: " + part);
    r.add_term(Monomial{k, l, m}, parse_qscalar(coeff));
  }
  return r;
}

}  // namespace suq2::polalg
