#include "suq2/gnsmod.hpp"

#include <cmath>
#include <stdexcept>

namespace suq2::gnsmod {

UcpMap UcpMap::registered(const fdlp::FdAlgebra& alg,
                          std::function<Mat(const Mat&)> map, double tol) {
  int n = alg.n;
  Mat id = Mat::Identity(n, n);
  if (op_norm(map(id) - id) > tol)
    throw std::invalid_argument("UcpMap: not unital");
  // Choi matrix of the map must be PSD.
  Mat choi(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat e = Mat::Zero(n, n);
      e(i, j) = 1.0;
      choi.block(i * n, j * n, n, n) = map(e);
    }
  if (min_eig_herm(choi, 1e-7) < -tol)
    throw std::invalid_argument("UcpMap: not completely positive");
  // State preservation and modularity.
  double dev = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat e = Mat::Zero(n, n);
      e(i, j) = 1.0;
      dev = std::max(dev, std::abs(alg.phi(map(e)) - alg.phi(e)));
      for (double t : {0.7}) {
        Mat lhs = map(fdlp::modular_group(alg, t, e));
        Mat rhs = fdlp::modular_group(alg, t, map(e));
        dev = std::max(dev, op_norm(lhs - rhs));
      }
    }
  if (dev > tol)
    throw std::invalid_argument("UcpMap: not state-preserving modular");
  return {alg, std::move(map)};
}

GnsElement GnsElement::simple(const Mat& a, const Mat& b) {
  GnsElement z;
  z.terms.emplace_back(a, b);
  return z;
}

GnsElement GnsElement::unit(int n) {
  return simple(Mat::Identity(n, n), Mat::Identity(n, n));
}

GnsElement GnsElement::acted(const fdlp::FdAlgebra& alg, const Mat& a,
                             double p) const {
  Mat dp = herm_power(alg.D, 1.0 / p);
  Mat dm = herm_power(alg.D, -1.0 / p);
  Mat c = dp * a * dm;  // sigma_{-i/p}(a)
  GnsElement out;
  for (auto& [ai, bi] : terms) out.terms.emplace_back(ai, bi * c);
  return out;
}

Mat gns_bracket_inf(const UcpMap& phi, const GnsElement& z,
                    const GnsElement& zp) {
  int n = phi.alg.n;
  Mat acc = Mat::Zero(n, n);
  for (auto& [ai, bi] : z.terms)
    for (auto& [aj, bj] : zp.terms)
      acc += bi.adjoint() * phi.map(ai.adjoint() * aj) * bj;
  return acc;
}

Mat gns_bracket(const UcpMap& phi, const GnsElement& z, const GnsElement& zp,
                double p) {
  Mat b = gns_bracket_inf(phi, z, zp);
  if (std::isinf(p)) return b;
  Mat w = herm_power(phi.alg.D, 1.0 / p);
  return w * b * w;
}

double module_norm(const UcpMap& phi, const GnsElement& z, double p) {
  return std::sqrt(schatten_norm(gns_bracket(phi, z, z, p),
                                 std::isinf(p) ? p : p / 2.0));
}

namespace {
// PSD square root and its pseudo-inverse with support projection.
struct SqrtParts {
  Mat root, pinv_root, support;
  bool deficient = false;
};

SqrtParts psd_sqrt(const Mat& x, double floor_ = 1e-12) {
  Eigen::SelfAdjointEigenSolver<Mat> es((x + Mat(x.adjoint())) / 2.0);
  Eigen::VectorXd lam = es.eigenvalues();
  int n = int(lam.size());
  Eigen::VectorXd r(n), ri(n), s(n);
  SqrtParts out;
  double top = std::max(lam.maxCoeff(), 0.0);
  for (int i = 0; i < n; ++i) {
    if (lam(i) > floor_ * std::max(1.0, top)) {
      r(i) = std::sqrt(lam(i));
      ri(i) = 1.0 / r(i);
      s(i) = 1.0;
    } else {
      r(i) = ri(i) = s(i) = 0.0;
      out.deficient = true;
    }
  }
  const Mat& u = es.eigenvectors();
  auto assemble = [&](const Eigen::VectorXd& d) {
    return Mat(u * d.cast<std::complex<double>>().asDiagonal() * u.adjoint());
  };
  out.root = assemble(r);
  out.pinv_root = assemble(ri);
  out.support = assemble(s);
  return out;
}
}  // namespace

CauchySchwarzReport cauchy_schwarz_factor(const UcpMap& phi,
                                          const GnsElement& z,
                                          const GnsElement& zp, double p,
                                          double slack) {
  double half = std::isinf(p) ? p : p / 2.0;
  Mat mzz = gns_bracket(phi, z, z, p);
  Mat mpp = gns_bracket(phi, zp, zp, p);
  Mat mix = gns_bracket(phi, z, zp, p);
  CauchySchwarzReport rep;
  rep.lhs = schatten_norm(mix, half);
  rep.rhs = std::sqrt(schatten_norm(mzz, half)) *
            std::sqrt(schatten_norm(mpp, half));
  SqrtParts a = psd_sqrt(mzz), b = psd_sqrt(mpp);
  rep.rank_deficient = a.deficient || b.deficient;
  Mat t = a.support * (a.pinv_root * mix * b.pinv_root) * b.support;
  rep.t_norm = op_norm(t);
  rep.factorization_defect = op_norm(a.root * t * b.root - mix);
  rep.holds = rep.lhs <= rep.rhs + slack * (1.0 + rep.rhs) &&
              rep.t_norm <= 1.0 + 1e-8 &&
              rep.factorization_defect <= 1e-8 * (1.0 + rep.lhs);
  return rep;
}

PsiReport psi_embedding_check(const UcpMap& phi, const Mat& a, const Mat& b,
                              const GnsElement& z, double p, double tol) {
  const fdlp::FdAlgebra& alg = phi.alg;
  Mat dp = herm_power(alg.D, 1.0 / p);
  // Psi_p(kappa^{(1)}(a)) = a (x) 1 at the dense level.
  GnsElement pa = GnsElement::simple(a, Mat::Identity(alg.n, alg.n));
  GnsElement pb = GnsElement::simple(b, Mat::Identity(alg.n, alg.n));
  // First identity: <Psi(x), Psi(y)>_{p/2} = Phi^{(p/2)}(x* y), where
  // x* y = D^{1/p} a* b D^{1/p} is the symmetric p/2 embedding of a*b and
  // Phi^{(p/2)} acts by kappa-conjugation.
  Mat lhs1 = gns_bracket(phi, pa, pb, p);
  Mat rhs1 = dp * phi.map(a.adjoint() * b) * dp;
  PsiReport rep;
  rep.first_defect = op_norm(lhs1 - rhs1);
  // Second identity: <Psi(x), z>_{p/2} = sum_j Phi^{(p)}(x* a_j) b_j D^{1/p}
  // with x* a_j = D^{1/p}(a* a_j) the left embedding at p.
  Mat lhs2 = gns_bracket(phi, pa, z, p);
  Mat rhs2 = Mat::Zero(alg.n, alg.n);
  for (auto& [aj, bj] : z.terms)
    rhs2 += dp * phi.map(a.adjoint() * aj) * bj * dp;
  rep.second_defect = op_norm(lhs2 - rhs2);
  double scale = 1.0 + std::max(op_norm(lhs1), op_norm(lhs2));
  rep.holds = rep.first_defect <= tol * scale && rep.second_defect <= tol * scale;
  return rep;
}

DualityReport duality_pair(const UcpMap& phi, const GnsElement& z, double p,
                           const GnsElement& w, double q, double slack) {
  if (std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12)
    throw std::invalid_argument("duality_pair: conjugate exponents required");
  Mat b = gns_bracket_inf(phi, z, w);
  Mat left = herm_power(phi.alg.D, 1.0 / p);
  Mat right = herm_power(phi.alg.D, 1.0 / q);
  DualityReport rep;
  rep.pair = (left * b * right).trace();
  rep.bound = module_norm(phi, z, p) * module_norm(phi, w, q);
  rep.holds = std::abs(rep.pair) <= rep.bound + slack * (1.0 + rep.bound);
  return rep;
}

}  // namespace suq2::gnsmod
