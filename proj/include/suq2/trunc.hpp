#pragma once

#include <functional>
#include <map>
#include <vector>

#include "suq2/linalg.hpp"
#include "suq2/polalg.hpp"

namespace suq2::trunc {

/// Truncation of the defining representation on l_2(N) (x) l_2(Z):
/// N-cutoff on the first leg, symmetric cutoff [-M, M] on the second.
/// The Z-leg shift past M is dropped (Dirichlet), keeping contractivity
/// and exact interior relations.
struct TruncRep {
  int N = 0;
  int M = 0;
  double q = 0.0;
  Mat alpha_m, gamma_m;

  TruncRep(int n, int m, double q_);
  int dim() const { return N * (2 * M + 1); }
  int idx(int i, int j) const { return i * (2 * M + 1) + (j + M); }

  // Projection onto the interior subspace i <= N-1-layers, |j| <= M-layers,
  // where `layers` boundary layers are excluded per generator application.
  Mat interior_projector(int layers = 1) const;
};

Mat evaluate(const TruncRep& rep, const polalg::NumPolElement& x);
Mat evaluate(const TruncRep& rep, const polalg::PolElement& x);

struct RelationDefect {
  double interior = 0.0;  // max over the five relations, interior-compressed
  double full = 0.0;      // same on the full space (boundary included)
};
RelationDefect relation_defect(const TruncRep& rep);

/// Equispaced circle sample: z_s = exp(2 pi i s / S).
struct TorusSample {
  int S = 256;
  std::vector<std::complex<double>> points() const;
};

/// Operator-valued field on the circle, stored by torus stratum:
/// F(z) = sum_k coeff[k] z^k with matrix coefficients.
using OperatorField = std::map<int, Mat>;

Mat field_at(const OperatorField& f, std::complex<double> z);

struct TransferenceReport {
  OperatorField field;     // pi(x) by the stratum formula
  double route_defect = 0; // interior defect vs the U-conjugation route
};
// pi(alpha^k gamma^l gamma*^m) = (monomial) (x) zeta_k, extended linearly;
// cross-checked against U(z)* (x (x) 1) U(z) with U(z) = diag(z^i) (x) I.
TransferenceReport transference_map(const TruncRep& rep,
                                    const TorusSample& sample,
                                    const polalg::NumPolElement& x);

// Fiberwise torus Fourier multiplier by DFT coefficient extraction over the
// sample grid (exact below the aliasing degree S/2).
OperatorField torus_multiply(const TorusSample& sample,
                             const std::function<std::complex<double>(int)>& m,
                             const OperatorField& f);

struct IntertwineReport {
  double defect = 0.0;  // interior norm of (id (x) T_m) pi(x) - pi(T~_m x)
};
IntertwineReport transference_intertwine(
    const TruncRep& rep, const TorusSample& sample,
    const std::function<std::complex<double>(int)>& m,
    const polalg::NumPolElement& x);

/// Polynomial field over Pol(G_q) (x) Pol(T): torus stratum -> algebra part.
using PolField = std::map<int, polalg::NumPolElement>;

PolField pi_field(const polalg::NumPolElement& x);  // monomial -> stratum k

struct BmoSReport {
  double col = 0, row = 0, norm = 0;
  double argmax_t = 0;
};
// BMO_S with S_t = id (x) T_{h_t}: the |.|^2 expansion is done exactly at
// the coefficient level, fibers evaluated through the truncation.
BmoSReport bmo_s_norm(const TruncRep& rep, const TorusSample& sample,
                      const std::vector<double>& tgrid, const PolField& X);

struct L2BoundReport {
  double norm = 0;        // operator norm of the multiplier on the span
  double sup_symbol = 0;  // max |m(k)| over represented strata
  double max_cross = 0;   // largest off-diagonal GNS inner product
  bool bounded = false;   // norm <= sup_symbol and family orthogonal
};
L2BoundReport l2_multiplier_bound(const std::function<double(int)>& m,
                                  int twol_max, double q = 0.5);

}  // namespace suq2::trunc
