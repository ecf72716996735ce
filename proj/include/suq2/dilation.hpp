#pragma once

#include <vector>

#include "suq2/linalg.hpp"
#include "suq2/polalg.hpp"
#include "suq2/trunc.hpp"

namespace suq2::dilation {

/// Gaussian kernel G_{ij} = e^{-eps (i-j)^2} on n sites.
struct GramKernel {
  double eps = 1.0;
  int n = 0;
  Eigen::MatrixXd G;

  static GramKernel gaussian(int n, double eps);
};

/// Self-adjoint fermionic fields over the kernel on a 2^n Fock space:
/// s_i s_j + s_j s_i = 2 G_{ij}, <Omega, s_i s_j Omega> = G_{ij}, s_i^2 = I.
/// Realized by a Cholesky change of basis applied to standard anticommuting
/// generators; the vacuum is the first basis vector.
struct FockRep {
  int n = 0;
  double eps = 0;
  Eigen::MatrixXd G;
  std::vector<Mat> s;  // 2^n x 2^n fields

  int fock_dim() const { return 1 << n; }
};

FockRep build_fields(const GramKernel& kernel);

struct CarDefects {
  double anticommutation = 0;
  double covariance = 0;
  double squares = 0;
};
CarDefects car_defects(const FockRep& fock);

/// Base truncation tensor d Fock legs; the remaining legs of the infinite
/// tensor product are virtual (identity) and never materialized.
struct DilationState {
  trunc::TruncRep base;
  FockRep fock;
  int depth = 2;

  DilationState(const trunc::TruncRep& rep, double eps, int d);
};

/// Operator on base (x) Fock^{(x)d}, kept as a sum of Kronecker terms so the
/// full matrix is never assembled.
struct DilOp {
  int base_dim = 0, fock_dim = 1, depth = 0;
  struct Term {
    Mat base;
    std::vector<Mat> legs;  // one factor per tensor position
  };
  std::vector<Term> terms;

  DilOp operator-(const DilOp& o) const;
};

// Spectral norm by power iteration on the structured form.
double dil_norm(const DilOp& y, int iters = 200, double tol = 1e-11);

// Compress the base leg by the interior projector of the truncation.
DilOp interior_clip(const DilationState& st, const DilOp& y, int layers = 1);

// pi_k(x) = sum_{ij} e_ii x e_jj (x) (s_i s_j)^{(x)k} (x) 1.
DilOp dilation_pi(const DilationState& st, int k,
                  const polalg::NumPolElement& x);

// E_m: vacuum-contract every tensor leg beyond position m.
DilOp cond_exp_E(const DilationState& st, int m, const DilOp& y);

struct DilationIdentityReport {
  double interior_defect = 0;
  bool holds = false;
};
// (E_m o pi_k)(x) = pi_m(Phi_{eps(k-m)}(x)).
DilationIdentityReport dilation_identity_check(const DilationState& st, int m,
                                               int k,
                                               const polalg::NumPolElement& x,
                                               double tol = 1e-8);

struct SchurFormReport {
  double interior_defect = 0;
  bool holds = false;
};
// The N-leg Schur multiplier with symbol e^{-t(i-j)^2} equals Phi_t.
SchurFormReport schur_form_check(const trunc::TruncRep& rep, double t,
                                 const polalg::NumPolElement& x,
                                 double tol = 1e-10);

// Truncated Haar functional (1-q^2) sum_{i<N} q^{2i} <e_i (x) f_0, . >.
std::complex<double> phi_trunc(const trunc::TruncRep& rep, const Mat& x);

// (phi_trunc (x) tau_Omega^{(x)d}) of a structured operator.
std::complex<double> phi_dilation(const DilationState& st, const DilOp& y);

}  // namespace suq2::dilation
