#include "suq2/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace suq2 {

double op_norm(const Mat& x) {
  if (x.rows() == 0) return 0.0;
  // Largest singular value via the Gram matrix; much cheaper than a full
  // SVD for the matrix sizes used here.
  Eigen::SelfAdjointEigenSolver<Mat> es(Mat(x.adjoint() * x));
  double top = es.eigenvalues().maxCoeff();
  return top <= 0.0 ? 0.0 : std::sqrt(top);
}

double schatten_norm(const Mat& x, double p) {
  if (x.rows() == 0) return 0.0;
  if (std::isinf(p)) return op_norm(x);
  if (p < 0.5) throw std::invalid_argument("schatten_norm: p >= 1/2 required");
  Eigen::JacobiSVD<Mat> svd(x);
  double acc = 0.0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    acc += std::pow(svd.singularValues()(i), p);
  return std::pow(acc, 1.0 / p);
}

double min_eig_herm(const Mat& x, double herm_tol) {
  double dev = op_norm(x - x.adjoint());
  double scale = std::max(1.0, op_norm(x));
  if (dev > herm_tol * scale)
    throw std::invalid_argument("min_eig_herm: matrix not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es((x + Mat(x.adjoint())) / 2.0);
  return es.eigenvalues().minCoeff();
}

namespace {
Eigen::SelfAdjointEigenSolver<Mat> decompose(const Mat& d) {
  Eigen::SelfAdjointEigenSolver<Mat> es(d);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  return es;
}
}  // namespace

Mat herm_power(const Mat& d, double s, double floor_) {
  auto es = decompose(d);
  Eigen::VectorXd lam = es.eigenvalues();
  Eigen::VectorXd w(lam.size());
  for (int i = 0; i < lam.size(); ++i) {
    if (lam(i) < floor_) {
      if (s < 0.0)
        throw std::invalid_argument(
            "herm_power: eigenvalue below faithfulness floor");
      w(i) = lam(i) <= 0.0 ? 0.0 : std::pow(lam(i), s);
    } else {
      w(i) = std::pow(lam(i), s);
    }
  }
  return es.eigenvectors() * w.asDiagonal().toDenseMatrix().cast<std::complex<double>>() *
         es.eigenvectors().adjoint();
}

Mat herm_cpower(const Mat& d, std::complex<double> w, double floor_) {
  auto es = decompose(d);
  Eigen::VectorXd lam = es.eigenvalues();
  Vec z(lam.size());
  for (int i = 0; i < lam.size(); ++i) {
    if (lam(i) < floor_)
      throw std::invalid_argument(
          "herm_cpower: eigenvalue below faithfulness floor");
    z(i) = std::exp(w * std::log(lam(i)));
  }
  return es.eigenvectors() * z.asDiagonal() * es.eigenvectors().adjoint();
}

double Rng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(gen);
}

std::complex<double> Rng::cgauss() {
  std::normal_distribution<double> nd;
  return {nd(gen), nd(gen)};
}

Mat Rng::matrix(int n) {
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cgauss();
  return a;
}

Mat Rng::hermitian(int n) {
  Mat a = matrix(n);
  return (a + Mat(a.adjoint())) / 2.0;
}

Mat Rng::psd(int n) {
  Mat a = matrix(n);
  return a * a.adjoint();
}

Mat Rng::density(int n, double eig_floor) {
  Mat d = psd(n) + eig_floor * double(n) * Mat::Identity(n, n);
  return d / d.trace().real();
}

Mat Rng::contraction_psd(int n) {
  Mat p = psd(n);
  Eigen::SelfAdjointEigenSolver<Mat> es(p);
  Eigen::VectorXd lam = es.eigenvalues();
  double top = lam.maxCoeff();
  if (top <= 0) return Mat::Zero(n, n);
  return p / (top * uniform(1.0, 2.0));
}

}  // namespace suq2
