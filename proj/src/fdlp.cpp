#include "suq2/fdlp.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace suq2::fdlp {

FdAlgebra FdAlgebra::tracial(int n) {
  FdAlgebra a;
  a.n = n;
  a.D = Mat::Identity(n, n) / double(n);
  return a;
}

FdAlgebra FdAlgebra::with_density(const Mat& d) {
  if (d.rows() != d.cols()) throw std::invalid_argument("density not square");
  Mat h = (d + Mat(d.adjoint())) / 2.0;
  if (op_norm(d - h) > 1e-10 * std::max(1.0, op_norm(d)))
    throw std::invalid_argument("density not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  if (es.eigenvalues().minCoeff() < 1e-13)
    throw std::invalid_argument("density not faithful (eigenvalue floor)");
  FdAlgebra a;
  a.n = int(d.rows());
  a.D = h / h.trace().real();
  return a;
}

LpVector embed(const FdAlgebra& alg, const Mat& a, double p, double z) {
  if (!(p >= 0.5)) throw std::invalid_argument("embed: p >= 1/2 required");
  if (z < -1.0 || z > 1.0) throw std::invalid_argument("embed: |z| <= 1");
  if (std::isinf(p)) return {a, p, z};
  Mat left = herm_power(alg.D, (1.0 - z) / (2.0 * p));
  Mat right = herm_power(alg.D, (1.0 + z) / (2.0 * p));
  return {left * a * right, p, z};
}

double lp_norm(const LpVector& v) { return schatten_norm(v.x, v.p); }

HolderReport holder_check(const LpVector& a, const LpVector& c, double slack) {
  double inv_r = 1.0 / a.p + 1.0 / c.p;
  if (inv_r > 1.0 + 1e-12)
    throw std::invalid_argument("holder_check: 1/p + 1/q must be <= 1");
  double r = inv_r < 1e-15 ? kPInf : 1.0 / inv_r;
  HolderReport rep;
  rep.lhs = schatten_norm(a.x * c.x, r);
  rep.rhs = lp_norm(a) * lp_norm(c);
  rep.holds = rep.lhs <= rep.rhs + slack * (1.0 + rep.rhs);
  return rep;
}

Mat modular_group(const FdAlgebra& alg, double t, const Mat& x) {
  Mat u = herm_cpower(alg.D, std::complex<double>(0, t));
  return u * x * u.adjoint();
}

int BlockTarget::dim() const {
  int d = 0;
  for (int b : blocks) d += b * b;
  return d;
}

bool BlockTarget::contains(const Mat& x, double tol) const {
  return op_norm(x - clip(x)) <= tol * std::max(1.0, op_norm(x));
}

Mat BlockTarget::clip(const Mat& x) const {
  Mat r = Mat::Zero(x.rows(), x.cols());
  int off = 0;
  for (int b : blocks) {
    r.block(off, off, b, b) = x.block(off, off, b, b);
    off += b;
  }
  if (off != x.rows()) throw std::invalid_argument("block sizes mismatch");
  return r;
}

std::vector<Mat> BlockTarget::basis(int n) const {
  std::vector<Mat> out;
  int off = 0;
  for (int b : blocks) {
    for (int r = 0; r < b; ++r)
      for (int c = 0; c < b; ++c) {
        Mat e = Mat::Zero(n, n);
        e(off + r, off + c) = 1.0;
        out.push_back(e);
      }
    off += b;
  }
  if (off != n) throw std::invalid_argument("block sizes mismatch");
  return out;
}

void require_modular_invariance(const FdAlgebra& alg, const BlockTarget& tgt,
                                double tol) {
  for (double t : {0.3, 1.1})
    for (const Mat& b : tgt.basis(alg.n))
      if (!tgt.contains(modular_group(alg, t, b), tol))
        throw std::invalid_argument(
            "conditional expectation target not modular-invariant");
}

Mat conditional_expectation(const FdAlgebra& alg, const BlockTarget& tgt,
                            const Mat& x) {
  require_modular_invariance(alg, tgt);
  // GNS-orthogonal projection: minimize ||x - a||_phi over the target span.
  std::vector<Mat> basis = tgt.basis(alg.n);
  int d = int(basis.size());
  Mat gram(d, d);
  Vec rhs(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j)
      gram(i, j) = (alg.D * basis[i].adjoint() * basis[j]).trace();
    rhs(i) = (alg.D * basis[i].adjoint() * x).trace();
  }
  Vec coef = gram.ldlt().solve(rhs);
  Mat out = Mat::Zero(alg.n, alg.n);
  for (int i = 0; i < d; ++i) out += coef(i) * basis[i];
  return out;
}

double kadison_schwarz_gap(const FdAlgebra& alg, const BlockTarget& tgt,
                           const Mat& a) {
  Mat dhalf = herm_power(alg.D, 0.5);
  Mat dmhalf = herm_power(alg.D, -0.5);
  // x = kappa^{(1)}_{inf,2}(a) = a D^{1/2}; x x* = a D a* in L_1.
  Mat e2 = conditional_expectation(alg, tgt, a) * dhalf;
  Mat lhs2 = e2 * e2.adjoint();
  // E^{(1)} through the symmetric kappa at p = 1 (Hermitian carrier).
  Mat c = dmhalf * a * alg.D * a.adjoint() * dmhalf;
  Mat lhs1 = dhalf * conditional_expectation(alg, tgt, c) * dhalf;
  return min_eig_herm(lhs1 - lhs2, 1e-8);
}

ComparisonReport comparison_factor(const FdAlgebra& alg, const Mat& d_omega,
                                   double tol) {
  if (min_eig_herm(d_omega) < -tol)
    throw std::invalid_argument("comparison_factor: D_omega not PSD");
  Mat dmhalf = herm_power(alg.D, -0.5);
  ComparisonReport rep;
  rep.x = dmhalf * d_omega * dmhalf;
  rep.min_eig_x = min_eig_herm(rep.x, 1e-8);
  Eigen::SelfAdjointEigenSolver<Mat> es((rep.x + Mat(rep.x.adjoint())) / 2.0);
  rep.max_eig_x = es.eigenvalues().maxCoeff();
  rep.factor_in_unit_interval =
      rep.min_eig_x >= -tol && rep.max_eig_x <= 1.0 + tol;
  rep.directly_dominated = min_eig_herm(alg.D - d_omega, 1e-8) >= -tol;
  return rep;
}

MajorizeReport majorize_factor(const FdAlgebra& alg, const Mat& a,
                               const Mat& x_b, double tol) {
  Mat dhalf = herm_power(alg.D, 0.5);
  Mat b = dhalf * x_b * dhalf;
  if (min_eig_herm(a) < -tol || min_eig_herm(b - a, 1e-8) < -tol)
    throw std::invalid_argument("majorize_factor: need 0 <= a <= b");
  Mat dmhalf = herm_power(alg.D, -0.5);
  MajorizeReport rep;
  rep.x_a = dmhalf * a * dmhalf;
  rep.min_eig_gap = min_eig_herm(x_b - rep.x_a, 1e-8);
  rep.order_preserved =
      min_eig_herm(rep.x_a, 1e-8) >= -tol && rep.min_eig_gap >= -tol;
  return rep;
}

}  // namespace suq2::fdlp
