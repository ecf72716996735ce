#pragma once

#include <limits>
#include <vector>

#include "suq2/linalg.hpp"

namespace suq2::fdlp {

inline constexpr double kPInf = std::numeric_limits<double>::infinity();

/// Finite-dimensional *-algebra M_n with a faithful state phi(x) = Tr(Dx).
/// The density matrix doubles as the spatial derivative, so the Kosaki
/// embeddings and the modular group are plain functional calculus in D.
struct FdAlgebra {
  int n = 0;
  Mat D;  // positive definite, unit trace

  static FdAlgebra tracial(int n);
  static FdAlgebra with_density(const Mat& d);  // validates and normalizes

  std::complex<double> phi(const Mat& x) const { return (D * x).trace(); }
};

/// A matrix living in L_p through a kappa^(z) embedding.
struct LpVector {
  Mat x;
  double p = kPInf;
  double z = 0.0;
};

// kappa^{(z)}: a -> D^{(1-z)/2p} a D^{(1+z)/2p}; p = inf returns a itself.
LpVector embed(const FdAlgebra& alg, const Mat& a, double p, double z);

double lp_norm(const LpVector& v);

struct HolderReport {
  double lhs = 0, rhs = 0;
  bool holds = false;
};
// ||ac||_r <= ||a||_p ||c||_q with 1/r = 1/p + 1/q.
HolderReport holder_check(const LpVector& a, const LpVector& c,
                          double slack = 1e-12);

// sigma_t(x) = D^{it} x D^{-it}.
Mat modular_group(const FdAlgebra& alg, double t, const Mat& x);

/// Block-diagonal *-subalgebra target for conditional expectations.
struct BlockTarget {
  std::vector<int> blocks;  // sizes, summing to n

  int dim() const;
  bool contains(const Mat& x, double tol = 1e-10) const;
  Mat clip(const Mat& x) const;  // entrywise restriction to the blocks
  std::vector<Mat> basis(int n) const;  // matrix units spanning the target
};

// Checks sigma_t-invariance of the target at t in {0.3, 1.1}; throws when
// it fails (no phi-preserving expectation exists).
void require_modular_invariance(const FdAlgebra& alg, const BlockTarget& tgt,
                                double tol = 1e-10);

// The unique phi-preserving conditional expectation: GNS-orthogonal
// projection onto the target, transported back to the algebra.
Mat conditional_expectation(const FdAlgebra& alg, const BlockTarget& tgt,
                            const Mat& x);

// min eig of E^{(1)}(x x*) - E^{(2)}(x) E^{(2)}(x)* with x = a D^{1/2}
// (right embedding at p = 2) and E^{(p)} realized by kappa-conjugation.
double kadison_schwarz_gap(const FdAlgebra& alg, const BlockTarget& tgt,
                           const Mat& a);

struct ComparisonReport {
  Mat x;  // D^{-1/2} D_omega D^{-1/2}
  bool factor_in_unit_interval = false;
  bool directly_dominated = false;  // min eig (D - D_omega) >= -tol
  double min_eig_x = 0, max_eig_x = 0;
};
ComparisonReport comparison_factor(const FdAlgebra& alg, const Mat& d_omega,
                                   double tol = 1e-10);

struct MajorizeReport {
  Mat x_a;
  bool order_preserved = false;  // 0 <= x_a <= x_b
  double min_eig_gap = 0;        // min eig of x_b - x_a
};
// a, b positive with a <= b and b = D^{1/2} x_b D^{1/2}; returns
// x_a = D^{-1/2} a D^{-1/2} and certifies x_a <= x_b.
MajorizeReport majorize_factor(const FdAlgebra& alg, const Mat& a,
                               const Mat& x_b, double tol = 1e-10);

}  // namespace suq2::fdlp
