#include "suq2/trunc.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>

#include "suq2/peterweyl.hpp"

namespace suq2::trunc {

using polalg::Monomial;
using polalg::NumPolElement;

TruncRep::TruncRep(int n, int m, double q_) : N(n), M(m), q(q_) {
  if (n < 2 || m < 1) throw std::invalid_argument("TruncRep: N >= 2, M >= 1");
  if (std::abs(q_) >= 1.0 || q_ == 0.0)
    throw std::invalid_argument("TruncRep: q in (-1,1) \\ {0}");
  int d = dim();
  alpha_m = Mat::Zero(d, d);
  gamma_m = Mat::Zero(d, d);
  for (int i = 0; i < N; ++i) {
    double w_alpha = std::sqrt(1.0 - std::pow(q * q, i));
    double w_gamma = std::pow(q, i);
    for (int j = -M; j <= M; ++j) {
      if (i >= 1) alpha_m(idx(i - 1, j), idx(i, j)) = w_alpha;
      if (j + 1 <= M) gamma_m(idx(i, j + 1), idx(i, j)) = w_gamma;
    }
  }
}

Mat TruncRep::interior_projector(int layers) const {
  Mat p = Mat::Zero(dim(), dim());
  for (int i = 0; i + layers <= N - 1; ++i)
    for (int j = -M + layers; j <= M - layers; ++j) p(idx(i, j), idx(i, j)) = 1.0;
  return p;
}

namespace {
Mat evaluate_monomial(const TruncRep& rep, const Monomial& mo) {
  int d = rep.dim();
  Mat acc = Mat::Identity(d, d);
  if (mo.k >= 0)
    for (int r = 0; r < mo.k; ++r) acc = rep.alpha_m * acc;
  else
    for (int r = 0; r < -mo.k; ++r) acc = Mat(rep.alpha_m.adjoint()) * acc;
  for (int r = 0; r < mo.l; ++r) acc = acc * rep.gamma_m;
  for (int r = 0; r < mo.m; ++r) acc = acc * rep.gamma_m.adjoint();
  return acc;
}
}  // namespace

Mat evaluate(const TruncRep& rep, const NumPolElement& x) {
  if (std::abs(x.q() - rep.q) > 1e-14)
    throw std::invalid_argument("evaluate: q mismatch");
  Mat acc = Mat::Zero(rep.dim(), rep.dim());
  for (const auto& [mo, c] : x.terms()) acc += c * evaluate_monomial(rep, mo);
  return acc;
}

Mat evaluate(const TruncRep& rep, const polalg::PolElement& x) {
  return evaluate(rep, polalg::to_numeric(x, rep.q));
}

RelationDefect relation_defect(const TruncRep& rep) {
  const Mat& a = rep.alpha_m;
  const Mat& g = rep.gamma_m;
  Mat as = a.adjoint(), gs = g.adjoint();
  Mat id = Mat::Identity(rep.dim(), rep.dim());
  double q = rep.q;
  std::vector<Mat> rels = {
      gs * g - g * gs,
      a * g - q * g * a,
      a * gs - q * gs * a,
      as * a + gs * g - id,
      a * as + q * q * gs * g - id,
  };
  Mat p = rep.interior_projector(1);
  RelationDefect d;
  for (const Mat& r : rels) {
    d.full = std::max(d.full, op_norm(r));
    d.interior = std::max(d.interior, op_norm(p * r * p));
  }
  return d;
}

std::vector<std::complex<double>> TorusSample::points() const {
  if (S < 256 || (S & (S - 1)) != 0)
    throw std::invalid_argument("TorusSample: S a power of two >= 256");
  std::vector<std::complex<double>> z(S);
  for (int s = 0; s < S; ++s) {
    double th = 2.0 * std::numbers::pi * s / S;
    z[s] = {std::cos(th), std::sin(th)};
  }
  return z;
}

Mat field_at(const OperatorField& f, std::complex<double> z) {
  Mat acc;
  for (const auto& [k, mat] : f) {
    std::complex<double> w = std::pow(z, k);
    if (acc.rows() == 0)
      acc = w * mat;
    else
      acc += w * mat;
  }
  return acc;
}

TransferenceReport transference_map(const TruncRep& rep,
                                    const TorusSample& sample,
                                    const NumPolElement& x) {
  TransferenceReport rep_out;
  for (const auto& [mo, c] : x.terms()) {
    Mat m = c * evaluate_monomial(rep, mo);
    auto it = rep_out.field.find(mo.k);
    if (it == rep_out.field.end())
      rep_out.field[mo.k] = m;
    else
      it->second += m;
  }
  // Second route: U(z)* (x (x) 1) U(z), U(z) = diag(z^i) on the N leg.
  // Diagonal conjugation scales entry (r,c) by z^{i_c - i_r}, so the whole
  // comparison stays entrywise; the Frobenius norm of the interior block
  // dominates its spectral norm.
  Mat xm = evaluate(rep, x);
  int d = rep.dim();
  Eigen::VectorXd mask(d);
  {
    Mat p = rep.interior_projector(1);
    for (int r = 0; r < d; ++r) mask(r) = p(r, r).real();
  }
  std::vector<int> nleg(d);
  for (int i = 0; i < rep.N; ++i)
    for (int j = -rep.M; j <= rep.M; ++j) nleg[rep.idx(i, j)] = i;
  for (auto z : sample.points()) {
    Mat direct = field_at(rep_out.field, z);
    double frob2 = 0.0;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        if (mask(r) == 0.0 || mask(c) == 0.0) continue;
        std::complex<double> conj = xm(r, c) * std::pow(z, nleg[c] - nleg[r]);
        frob2 += std::norm(direct(r, c) - conj);
      }
    rep_out.route_defect = std::max(rep_out.route_defect, std::sqrt(frob2));
  }
  return rep_out;
}

OperatorField dft_coefficients(const TorusSample& sample,
                               const std::vector<Mat>& samples,
                               int max_degree) {
  if (int(samples.size()) != sample.S)
    throw std::invalid_argument("dft: sample count mismatch");
  if (max_degree >= sample.S / 2)
    throw std::invalid_argument("dft: z-degree exceeds S/2 (aliasing)");
  auto z = sample.points();
  OperatorField out;
  for (int k = -max_degree; k <= max_degree; ++k) {
    Mat acc = Mat::Zero(samples[0].rows(), samples[0].cols());
    for (int s = 0; s < sample.S; ++s) acc += samples[s] * std::pow(z[s], -k);
    acc /= double(sample.S);
    if (acc.norm() > 1e-14) out[k] = acc;
  }
  return out;
}

OperatorField torus_multiply(const TorusSample& sample,
                             const std::function<std::complex<double>(int)>& m,
                             const OperatorField& f) {
  int max_degree = 0;
  for (const auto& [k, mat] : f) max_degree = std::max(max_degree, std::abs(k));
  auto z = sample.points();
  std::vector<Mat> samples(sample.S);
  for (int s = 0; s < sample.S; ++s) samples[s] = field_at(f, z[s]);
  OperatorField coeffs = dft_coefficients(sample, samples, max_degree);
  OperatorField out;
  for (auto& [k, mat] : coeffs) {
    std::complex<double> w = m(k);
    if (std::abs(w) > 0.0) out[k] = w * mat;
  }
  return out;
}

IntertwineReport transference_intertwine(
    const TruncRep& rep, const TorusSample& sample,
    const std::function<std::complex<double>(int)>& m,
    const NumPolElement& x) {
  TransferenceReport tr = transference_map(rep, sample, x);
  OperatorField lhs = torus_multiply(sample, m, tr.field);
  // pi(T~_m x): each stratum of the field scaled by m(k).
  OperatorField rhs;
  for (const auto& [k, mat] : tr.field) rhs[k] = m(k) * mat;
  Mat p = rep.interior_projector(1);
  IntertwineReport out;
  std::set<int> keys;
  for (auto& [k, v] : lhs) keys.insert(k);
  for (auto& [k, v] : rhs) keys.insert(k);
  Mat zero = Mat::Zero(rep.dim(), rep.dim());
  for (int k : keys) {
    const Mat& a = lhs.count(k) ? lhs.at(k) : zero;
    const Mat& b = rhs.count(k) ? rhs.at(k) : zero;
    out.defect = std::max(out.defect, Mat(p * (a - b) * p).norm());
  }
  out.defect = std::max(out.defect, tr.route_defect);
  return out;
}

PolField pi_field(const NumPolElement& x) {
  PolField f;
  for (const auto& [mo, c] : x.terms()) {
    auto [it, fresh] = f.try_emplace(mo.k, x.q());
    it->second.add_term(mo, c);
  }
  return f;
}

namespace {
PolField field_scale(const PolField& f,
                     const std::function<std::complex<double>(int)>& w) {
  PolField out;
  for (const auto& [k, e] : f) {
    std::complex<double> c = w(k);
    if (std::abs(c) > 0.0) out.emplace(k, e * c);
  }
  return out;
}

PolField field_sub(const PolField& a, const PolField& b, double q) {
  PolField out = a;
  for (const auto& [k, e] : b) {
    auto [it, fresh] = out.try_emplace(k, q);
    it->second = it->second - e;
    if (it->second.is_zero()) out.erase(k);
  }
  return out;
}

PolField field_adjoint(const PolField& f) {
  PolField out;
  for (const auto& [k, e] : f) out.emplace(-k, polalg::adjoint(e));
  return out;
}

PolField field_mul(const PolField& a, const PolField& b, double q) {
  PolField out;
  for (const auto& [k1, e1] : a)
    for (const auto& [k2, e2] : b) {
      polalg::NumPolElement prod = polalg::mul(e1, e2);
      if (prod.is_zero()) continue;
      auto [it, fresh] = out.try_emplace(k1 + k2, q);
      it->second = it->second + prod;
    }
  return out;
}

// sup_z of the fiber operator norm, skipping the z loop for single strata.
double field_sup_norm(const TruncRep& rep, const TorusSample& sample,
                      const PolField& f) {
  if (f.empty()) return 0.0;
  std::vector<std::pair<int, Mat>> mats;
  for (const auto& [k, e] : f) mats.emplace_back(k, evaluate(rep, e));
  if (mats.size() == 1) return op_norm(mats[0].second);
  double best = 0.0;
  for (auto z : sample.points()) {
    Mat acc = Mat::Zero(rep.dim(), rep.dim());
    for (auto& [k, m] : mats) acc += std::pow(z, k) * m;
    best = std::max(best, op_norm(acc));
  }
  return best;
}

double bmo_s_col_sq(const TruncRep& rep, const TorusSample& sample,
                    const std::vector<double>& tgrid, const PolField& x0,
                    double* argmax_t) {
  double q = rep.q;
  double best = 0.0;
  for (double t : tgrid) {
    auto h = [t](int k) {
      return std::complex<double>(std::exp(-t * double(k) * double(k)), 0.0);
    };
    PolField d = field_sub(x0, field_scale(x0, h), q);
    PolField w = field_mul(field_adjoint(d), d, q);
    double v = field_sup_norm(rep, sample, field_scale(w, h));
    if (v > best) {
      best = v;
      if (argmax_t) *argmax_t = t;
    }
  }
  // t -> infinity endpoint: heat kills every stratum but k = 0, and the
  // pre-projected x0 has none there, so the limit is the k = 0 part of x*x.
  PolField w = field_mul(field_adjoint(x0), x0, q);
  auto it = w.find(0);
  if (it != w.end()) {
    double v = op_norm(evaluate(rep, it->second));
    if (v > best) {
      best = v;
      if (argmax_t) *argmax_t = std::numeric_limits<double>::infinity();
    }
  }
  return best;
}
}  // namespace

BmoSReport bmo_s_norm(const TruncRep& rep, const TorusSample& sample,
                      const std::vector<double>& tgrid, const PolField& X) {
  PolField x0 = X;
  if (x0.erase(0) > 0)
    throw std::invalid_argument(
        "bmo_s_norm: k = 0 torus stratum present; pre-project first");
  BmoSReport out;
  out.col = std::sqrt(bmo_s_col_sq(rep, sample, tgrid, x0, &out.argmax_t));
  out.row =
      std::sqrt(bmo_s_col_sq(rep, sample, tgrid, field_adjoint(x0), nullptr));
  out.norm = std::max(out.col, out.row);
  return out;
}

L2BoundReport l2_multiplier_bound(const std::function<double(int)>& m,
                                  int twol_max, double q) {
  if (twol_max > 6)
    throw std::invalid_argument("l2_multiplier_bound: l <= 3 required");
  // Gather the corepresentation entries, their strata, and their squared
  // GNS norms. Cross-orthogonality makes the operator norm on the span the
  // max of per-element Rayleigh quotients. The inner products are computed
  // in exact coefficient arithmetic (the double symbol values embed exactly
  // as dyadic rationals) because the degree-6 products cancel too violently
  // for a plain floating-point accumulation.
  std::vector<polalg::PolElement> fam;
  std::vector<int> strata;
  for (int twol = 0; twol <= twol_max; ++twol) {
    auto u = peterweyl::corep_matrix(twol);
    for (int twoi = -twol; twoi <= twol; twoi += 2)
      for (int twoj = -twol; twoj <= twol; twoj += 2) {
        fam.push_back(u.at(twoi, twoj));
        strata.push_back(-(twoi + twoj) / 2);
      }
  }
  int n = int(fam.size());
  L2BoundReport rep;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QScalar cross = polalg::gns_inner(fam[i], fam[j]);
      if (!cross.is_zero())
        rep.max_cross = std::max(rep.max_cross, std::abs(cross.eval(q)));
    }
  auto symbol = [&m](int k) { return QScalar::from_dyadic(m(k)); };
  std::set<int> used;
  for (int i = 0; i < n; ++i) {
    polalg::PolElement img = polalg::fourier_schur(symbol, fam[i]);
    QScalar num = polalg::gns_inner(img, img);
    QScalar den = polalg::gns_inner(fam[i], fam[i]);
    rep.norm = std::max(rep.norm, std::sqrt((num / den).eval(q)));
    used.insert(strata[i]);
  }
  for (int k : used) rep.sup_symbol = std::max(rep.sup_symbol, std::abs(m(k)));
  rep.bounded = rep.norm <= rep.sup_symbol + 1e-10 && rep.max_cross <= 1e-10;
  return rep;
}

}  // namespace suq2::trunc
