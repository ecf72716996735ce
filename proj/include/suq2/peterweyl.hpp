#pragma once

#include <functional>
#include <vector>

#include "suq2/polalg.hpp"

namespace suq2::peterweyl {

using polalg::Monomial;
using polalg::PolElement;

/// Irreducible corepresentation matrix u^(l), l a half-integer stored as 2l.
/// Entries are indexed by i,j in {-l,...,l}; entry (i,j) sits at
/// [i+l][j+l] and is a single alpha-stratum element with k = -(i+j).
struct CorepMatrix {
  int twol = 0;
  std::vector<std::vector<PolElement>> entries;

  int size() const { return twol + 1; }
  // i2, j2 are twice the half-integer indices (so in {-2l,-2l+2,...,2l}).
  const PolElement& at(int i2, int j2) const {
    return entries[(i2 + twol) / 2][(j2 + twol) / 2];
  }
};

// g^{(l)}_k = alpha^{l-k} gamma^{l+k} with C_{l,k,q} := 1; arguments are
// twice the half-integers.
PolElement basis_vector(int twol, int twok);

// Builds u^(l) by expanding Delta(g^{(l)}_i) and collecting coefficients
// against the second-leg basis monomials alpha^{l-j} gamma^{l+j}. Throws if
// a second-leg monomial falls outside the expected homogeneous span.
CorepMatrix corep_matrix(int twol);

/// Gram matrix of the GNS inner products between entries of u^(l), u^(l').
struct OrthogonalityReport {
  int twol = 0;
  int twolp = 0;
  std::vector<std::vector<QScalar>> gram;  // rows: (i,j) of l; cols: (r,s)
  bool delta_pattern_holds = false;  // off-pattern entries exactly zero
  bool diagonal_depends_only_on_i = false;
  std::vector<std::vector<QScalar>> diagonal_constants;  // [i][j] = C(l,i)
};

OrthogonalityReport orthogonality_gram(int twol, int twolp);

/// Eigenvalue table for a Fourier-Schur multiplier on u^(l).
struct EigenvalueReport {
  int twol = 0;
  std::vector<std::vector<int>> k_values;  // [i][j] = -(i+j)
  bool all_match = false;
  int bad_i2 = 0, bad_j2 = 0;  // first offending entry when !all_match
};

// Checks fourier_schur(m, u_{i,j}) == m(-i-j) u_{i,j} exactly for all i,j.
EigenvalueReport eigenvalue_check(int twol,
                                  const std::function<QScalar(int)>& symbol);

}  // namespace suq2::peterweyl
