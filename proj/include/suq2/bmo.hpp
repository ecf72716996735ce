#pragma once

#include <complex>
#include <map>
#include <vector>

#include "suq2/fdlp.hpp"
#include "suq2/trunc.hpp"

namespace suq2::bmo {

/// Log-spaced t-grid for the sup over t in (0, infinity); the endpoints
/// t = 0 and t -> infinity are handled analytically by the norms.
struct TGrid {
  double tmin = 1e-4, tmax = 50.0;
  std::vector<double> ts;

  static TGrid log_grid(double tmin = 1e-4, double tmax = 50.0, int k = 64);
  // Inserts log-midpoints between consecutive points (nested refinement,
  // so refining can only increase a grid sup).
  TGrid refined() const;
};

/// Markov semigroup on a finite-dimensional algebra. Two matrix kinds:
/// Schur multipliers x -> (e^{-t c_{ij}}) .* x and the depolarizing family
/// x -> e^{-t} x + (1 - e^{-t}) phi(x) I.
struct Semigroup {
  enum Kind { kSchur, kDepolarizing };
  Kind kind = kSchur;
  fdlp::FdAlgebra alg;
  Eigen::MatrixXd c;  // Schur exponents; c_{ij} = |i-j|^2 by default

  // Schur semigroup with c_{ij} = |i-j|^2; the density must be diagonal
  // (GNS symmetry of entrywise multipliers needs a diagonal state).
  static Semigroup schur(const Eigen::VectorXd& diag_density);
  static Semigroup depolarizing(const fdlp::FdAlgebra& alg);

  Mat apply(double t, const Mat& x) const;
  Mat fixed_point(const Mat& x) const;  // P(x) = lim_t Phi_t(x)
};

struct BmoReport {
  double norm = 0;
  double argmax_t = 0;  // infinity() when the analytic endpoint wins
  double endpoint = 0;  // the t -> infinity value of the inner sup
  bool stable = false;  // relative change under grid refinement <= 1e-4
};

// sqrt of sup_t ||Phi_t(|x - Phi_t(x)|^2)||; x is pre-projected to M°.
BmoReport bmo_col_norm(const Semigroup& sg, const Mat& x, const TGrid& grid);
BmoReport bmo_row_norm(const Semigroup& sg, const Mat& x, const TGrid& grid);
BmoReport bmo_norm(const Semigroup& sg, const Mat& x, const TGrid& grid);

struct DominationReport {
  double l2_col = 0, bmo_col = 0;
  double l2_row = 0, bmo_row = 0;
  bool holds = false;
};
// ||x||_2 <= ||x||_{BMO^c} (column, z = 1 embedding) and the row analogue.
DominationReport bmo_dominates_l2(const Semigroup& sg, const Mat& x,
                                  const TGrid& grid, double slack = 1e-8);

struct ContractionReport {
  double before_col = 0, after_col = 0;
  double before_row = 0, after_row = 0;
  bool semigroup_invariant = false;
  bool holds = false;
};
// BMO contraction of the phi-preserving conditional expectation; requires
// Phi_t to preserve the target subalgebra.
ContractionReport expectation_bmo_contraction(const Semigroup& sg,
                                              const fdlp::BlockTarget& tgt,
                                              const Mat& x, const TGrid& grid,
                                              double slack = 1e-8);

/// Trigonometric polynomial on the circle, coefficients over Z.
struct TrigPoly {
  std::map<int, std::complex<double>> coeffs;

  static TrigPoly zeta(int k);  // z -> z^k
  TrigPoly operator+(const TrigPoly& o) const;
  TrigPoly operator-(const TrigPoly& o) const;
  TrigPoly operator*(const TrigPoly& o) const;
  TrigPoly conj() const;  // pointwise conjugate: c_k -> conj(c_{-k})
  TrigPoly heat(double t) const;  // c_k -> e^{-t k^2} c_k
  std::complex<double> eval(std::complex<double> z) const;
  int degree() const;
  double sup_norm(int samples) const;  // dense-grid sup of |f|
};

struct TorusBmoReport {
  double norm = 0;
  double argmax_t = 0;
  double sampling_bound = 0;  // Bernstein bound on the grid-sup error factor
  bool stable = false;
};
// Commutative BMO^c over the circle heat semigroup; f must be mean-zero.
TorusBmoReport torus_bmo_norm(const TrigPoly& f, const TGrid& grid,
                              int circle_samples = 4096);

// Heat-semigroup BMO of an algebra element, with the uniform norm taken at
// the given truncation; row norm is the column norm of the adjoint.
BmoReport suq2_bmo_col_norm(const trunc::TruncRep& rep,
                            const polalg::NumPolElement& x, const TGrid& grid);
BmoReport suq2_bmo_norm(const trunc::TruncRep& rep,
                        const polalg::NumPolElement& x, const TGrid& grid);

/// Defects of the Markov-semigroup axioms for the registered families.
struct AxiomReport {
  double unitality = 0;
  double positivity = 0;   // most negative eigenvalue of amplified images
  double gns_symmetry = 0;
  double semigroup_law = 0;
  bool pass(double tol = 1e-10) const {
    return unitality <= tol && positivity >= -tol && gns_symmetry <= tol &&
           semigroup_law <= tol;
  }
};

AxiomReport check_axioms_fd(const Semigroup& sg, Rng& rng, int draws = 10);
AxiomReport check_axioms_torus(Rng& rng, int draws = 10, int samples = 512);
AxiomReport check_axioms_suq2(const trunc::TruncRep& rep, Rng& rng,
                              int draws = 5);

}  // namespace suq2::bmo
