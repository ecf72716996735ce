#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "suq2/fdlp.hpp"

namespace suq2::gnsmod {

/// A ucp map on a finite-dimensional algebra, validated at registration:
/// unital, completely positive (Choi matrix), state-preserving, and modular
/// (commutes with the modular group of the state).
struct UcpMap {
  fdlp::FdAlgebra alg;
  std::function<Mat(const Mat&)> map;

  static UcpMap registered(const fdlp::FdAlgebra& alg,
                           std::function<Mat(const Mat&)> map,
                           double tol = 1e-9);
};

/// Finite algebraic element sum a_i (x) b_i of the GNS module over Phi.
struct GnsElement {
  std::vector<std::pair<Mat, Mat>> terms;

  static GnsElement simple(const Mat& a, const Mat& b);
  static GnsElement unit(int n);  // 1 (x) 1

  // Right action z . a = z (1 (x) sigma_{-i/p}(a)).
  GnsElement acted(const fdlp::FdAlgebra& alg, const Mat& a, double p) const;
};

// <z, z'>_inf = sum_{i,j} b_i* Phi(a_i* a_j') b_j'.
Mat gns_bracket_inf(const UcpMap& phi, const GnsElement& z,
                    const GnsElement& zp);

// Symmetric L_{p/2} embedding of the inf-bracket: D^{1/p} <.,.>_inf D^{1/p}.
Mat gns_bracket(const UcpMap& phi, const GnsElement& z, const GnsElement& zp,
                double p);

// Module norm ||z||_{p,Phi} = || <z,z>_{p/2} ||_{p/2}^{1/2}.
double module_norm(const UcpMap& phi, const GnsElement& z, double p);

struct CauchySchwarzReport {
  double lhs = 0, rhs = 0;
  double t_norm = 0;              // contraction in the factorization
  double factorization_defect = 0;  // || A^{1/2} T B^{1/2} - <z,z'> ||
  bool rank_deficient = false;
  bool holds = false;
};
// ||<z,z'>||_{p/2} <= ||z|| ||z'|| with an exhibited contraction T such
// that <z,z'> = <z,z>^{1/2} T <z',z'>^{1/2} (pseudo-inverse solve).
CauchySchwarzReport cauchy_schwarz_factor(const UcpMap& phi,
                                          const GnsElement& z,
                                          const GnsElement& zp, double p,
                                          double slack = 1e-10);

struct PsiReport {
  double first_defect = 0;   // <Psi(x), Psi(y)> vs Phi^{(p/2)}(x*y)
  double second_defect = 0;  // <Psi(x), z> vs sum Phi^{(p)}(x* a_j) b_j D^{1/p}
  bool holds = false;
};
// x, y given as algebra elements a, b embedded through kappa^{(1)} at p;
// Psi_p sends such an embedded element to a (x) 1.
PsiReport psi_embedding_check(const UcpMap& phi, const Mat& a, const Mat& b,
                              const GnsElement& z, double p,
                              double tol = 1e-10);

// Tr(D^{1/p} <z, w>_inf D^{1/q}) with 1/p + 1/q = 1; reports the module
// Hoelder bound alongside.
struct DualityReport {
  std::complex<double> pair = 0;
  double bound = 0;  // ||z||_{p,Phi} ||w||_{q,Phi}
  bool holds = false;
};
DualityReport duality_pair(const UcpMap& phi, const GnsElement& z, double p,
                           const GnsElement& w, double q, double slack = 1e-10);

}  // namespace suq2::gnsmod
