#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

namespace suq2 {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Spectral norm (largest singular value).
double op_norm(const Mat& x);

// Schatten-p quasi-norm, p >= 1/2; p = infinity() means spectral norm.
double schatten_norm(const Mat& x, double p);

// Smallest eigenvalue of the Hermitian part guard: requires x Hermitian to
// tolerance herm_tol (throws otherwise), then returns min eigenvalue.
double min_eig_herm(const Mat& x, double herm_tol = 1e-9);

// f(D) for Hermitian positive semidefinite D via eigendecomposition:
// real power with eigenvalue floor (throws below floor when require_pos),
// and complex power lambda^w = exp(w log lambda) for lambda > 0.
Mat herm_power(const Mat& d, double s, double floor_ = 1e-13);
Mat herm_cpower(const Mat& d, std::complex<double> w, double floor_ = 1e-13);

// --- deterministic random instances for property suites ------------------

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi);
  std::complex<double> cgauss();
  Mat matrix(int n);           // iid complex Gaussian entries
  Mat hermitian(int n);        // (A + A*)/2
  Mat psd(int n);              // A A*
  Mat density(int n, double eig_floor = 0.05);  // faithful, unit trace
  Mat contraction_psd(int n);  // 0 <= c <= 1
};

}  // namespace suq2
