#include "suq2/dilation.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace suq2::dilation {

namespace {
Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

Mat collapse_legs(const std::vector<Mat>& legs) {
  Mat acc = Mat::Identity(1, 1);
  for (const Mat& l : legs) acc = kron(acc, l);
  return acc;
}
}  // namespace

GramKernel GramKernel::gaussian(int n, double eps) {
  if (n < 1 || eps <= 0)
    throw std::invalid_argument("GramKernel: n >= 1, eps > 0");
  GramKernel k;
  k.n = n;
  k.eps = eps;
  k.G = Eigen::MatrixXd(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      k.G(i, j) = std::exp(-eps * double((i - j) * (i - j)));
  return k;
}

FockRep build_fields(const GramKernel& kernel) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(kernel.G);
  if (es.eigenvalues().minCoeff() <= 1e-12)
    throw std::invalid_argument("build_fields: kernel not positive definite");
  Eigen::MatrixXd L = kernel.G.llt().matrixL();
  int n = kernel.n;
  int dim = 1 << n;
  // Standard anticommuting self-adjoint generators w_r (X with a Z string):
  // w_r w_s + w_s w_r = 2 delta_{rs}, <Omega, w_r w_s Omega> = delta_{rs}.
  Mat x2(2, 2), z2(2, 2), id2 = Mat::Identity(2, 2);
  x2 << 0, 1, 1, 0;
  z2 << 1, 0, 0, -1;
  std::vector<Mat> w(n);
  for (int r = 0; r < n; ++r) {
    Mat acc = Mat::Identity(1, 1);
    for (int site = 0; site < n; ++site)
      acc = kron(acc, site < r ? z2 : (site == r ? x2 : id2));
    w[r] = acc;
  }
  FockRep fock;
  fock.n = n;
  fock.eps = kernel.eps;
  fock.G = kernel.G;
  fock.s.assign(n, Mat::Zero(dim, dim));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r <= i; ++r) fock.s[i] += L(i, r) * w[r];
  return fock;
}

CarDefects car_defects(const FockRep& fock) {
  CarDefects d;
  int dim = fock.fock_dim();
  Mat id = Mat::Identity(dim, dim);
  for (int i = 0; i < fock.n; ++i) {
    d.squares = std::max(d.squares, op_norm(fock.s[i] * fock.s[i] - id));
    for (int j = 0; j < fock.n; ++j) {
      Mat ac = fock.s[i] * fock.s[j] + fock.s[j] * fock.s[i];
      d.anticommutation =
          std::max(d.anticommutation, op_norm(ac - 2.0 * fock.G(i, j) * id));
      std::complex<double> cov = (fock.s[i] * fock.s[j])(0, 0);
      d.covariance = std::max(d.covariance, std::abs(cov - fock.G(i, j)));
    }
  }
  return d;
}

DilationState::DilationState(const trunc::TruncRep& rep, double eps, int d)
    : base(rep), depth(d) {
  if (d < 1) throw std::invalid_argument("DilationState: depth >= 1");
  // Refuse the budget before any Fock-space allocation happens.
  double total = double(rep.dim()) * std::pow(std::ldexp(1.0, rep.N), d);
  if (total > 2e4)
    throw std::invalid_argument(
        "DilationState: budget exceeded (base * fock^depth too large)");
  fock = build_fields(GramKernel::gaussian(rep.N, eps));
}

DilOp DilOp::operator-(const DilOp& o) const {
  DilOp r = *this;
  for (const Term& t : o.terms) {
    Term neg = t;
    neg.base = -neg.base;
    r.terms.push_back(std::move(neg));
  }
  return r;
}

double dil_norm(const DilOp& y, int iters, double tol) {
  if (y.terms.empty()) return 0.0;
  int b = y.base_dim;
  long f = 1;
  for (int i = 0; i < y.depth; ++i) f *= y.fock_dim;
  std::vector<std::pair<Mat, Mat>> parts;  // (base, collapsed fock)
  for (const auto& t : y.terms)
    parts.emplace_back(t.base, collapse_legs(t.legs));
  auto apply = [&](const Mat& v, bool adj) {
    Mat out = Mat::Zero(b, f);
    for (auto& [bm, km] : parts)
      out += adj ? Mat(bm.adjoint() * v * km.conjugate())
                 : Mat(bm * v * km.transpose());
    return out;
  };
  std::mt19937_64 gen(12345);
  std::normal_distribution<double> nd;
  Mat v(b, f);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < f; ++j) v(i, j) = std::complex<double>(nd(gen), nd(gen));
  v /= v.norm();
  double lam = 0.0;
  for (int it = 0; it < iters; ++it) {
    Mat w = apply(apply(v, false), true);
    double nw = w.norm();
    if (nw == 0.0) return 0.0;
    w /= nw;
    if (std::abs(nw - lam) <= tol * std::max(1.0, nw)) {
      lam = nw;
      break;
    }
    lam = nw;
    v = w;
  }
  return std::sqrt(lam);
}

DilOp interior_clip(const DilationState& st, const DilOp& y, int layers) {
  Mat p = st.base.interior_projector(layers);
  DilOp r = y;
  for (auto& t : r.terms) t.base = p * t.base * p;
  return r;
}

DilOp dilation_pi(const DilationState& st, int k,
                  const polalg::NumPolElement& x) {
  if (k > st.depth)
    throw std::invalid_argument("dilation_pi: step index exceeds depth");
  Mat xm = evaluate(st.base, x);
  DilOp out;
  out.base_dim = st.base.dim();
  out.fock_dim = st.fock.fock_dim();
  out.depth = st.depth;
  Mat fid = Mat::Identity(out.fock_dim, out.fock_dim);
  if (k == 0) {
    DilOp::Term t;
    t.base = xm;
    t.legs.assign(st.depth, fid);
    out.terms.push_back(std::move(t));
    return out;
  }
  for (int i = 0; i < st.base.N; ++i)
    for (int j = 0; j < st.base.N; ++j) {
      // e_ii x e_jj: select the N-leg block (i, j) of the truncation.
      Mat b = Mat::Zero(out.base_dim, out.base_dim);
      bool nonzero = false;
      for (int ji = -st.base.M; ji <= st.base.M; ++ji)
        for (int jj = -st.base.M; jj <= st.base.M; ++jj) {
          auto v = xm(st.base.idx(i, ji), st.base.idx(j, jj));
          if (v != std::complex<double>(0.0)) nonzero = true;
          b(st.base.idx(i, ji), st.base.idx(j, jj)) = v;
        }
      if (!nonzero) continue;
      DilOp::Term t;
      t.base = std::move(b);
      Mat sij = st.fock.s[i] * st.fock.s[j];
      for (int leg = 0; leg < st.depth; ++leg)
        t.legs.push_back(leg < k ? sij : fid);
      out.terms.push_back(std::move(t));
    }
  return out;
}

DilOp cond_exp_E(const DilationState& st, int m, const DilOp& y) {
  if (m > y.depth) throw std::invalid_argument("cond_exp_E: m exceeds depth");
  Mat fid = Mat::Identity(y.fock_dim, y.fock_dim);
  DilOp out = y;
  for (auto& t : out.terms)
    for (int leg = m; leg < y.depth; ++leg) {
      // Vacuum contraction: the leg collapses to <Omega, leg Omega> I.
      t.base *= t.legs[leg](0, 0);
      t.legs[leg] = fid;
    }
  return out;
}

DilationIdentityReport dilation_identity_check(const DilationState& st, int m,
                                               int k,
                                               const polalg::NumPolElement& x,
                                               double tol) {
  if (!(0 <= m && m < k && k <= st.depth))
    throw std::invalid_argument("dilation_identity_check: need 0 <= m < k <= d");
  DilOp lhs = cond_exp_E(st, m, dilation_pi(st, k, x));
  double t = st.fock.eps * double(k - m);
  DilOp rhs = dilation_pi(st, m, polalg::heat_phi(t, x));
  DilationIdentityReport rep;
  rep.interior_defect = dil_norm(interior_clip(st, lhs - rhs));
  rep.holds = rep.interior_defect <= tol;
  return rep;
}

SchurFormReport schur_form_check(const trunc::TruncRep& rep, double t,
                                 const polalg::NumPolElement& x, double tol) {
  Mat xm = evaluate(rep, x);
  Mat schur = xm;
  for (int i = 0; i < rep.N; ++i)
    for (int j = 0; j < rep.N; ++j) {
      double w = std::exp(-t * double((i - j) * (i - j)));
      for (int ji = -rep.M; ji <= rep.M; ++ji)
        for (int jj = -rep.M; jj <= rep.M; ++jj)
          schur(rep.idx(i, ji), rep.idx(j, jj)) *= w;
    }
  Mat heat = evaluate(rep, polalg::heat_phi(t, x));
  Mat p = rep.interior_projector(1);
  SchurFormReport out;
  out.interior_defect = op_norm(p * (schur - heat) * p);
  out.holds = out.interior_defect <= tol;
  return out;
}

std::complex<double> phi_trunc(const trunc::TruncRep& rep, const Mat& x) {
  std::complex<double> acc = 0.0;
  double q2 = rep.q * rep.q;
  for (int i = 0; i < rep.N; ++i)
    acc += std::pow(q2, i) * x(rep.idx(i, 0), rep.idx(i, 0));
  return (1.0 - q2) * acc;
}

std::complex<double> phi_dilation(const DilationState& st, const DilOp& y) {
  std::complex<double> acc = 0.0;
  for (const auto& t : y.terms) {
    std::complex<double> v = phi_trunc(st.base, t.base);
    for (const Mat& l : t.legs) v *= l(0, 0);
    acc += v;
  }
  return acc;
}

}  // namespace suq2::dilation
