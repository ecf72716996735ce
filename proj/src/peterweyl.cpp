#include "suq2/peterweyl.hpp"

#include <stdexcept>

namespace suq2::peterweyl {

using polalg::PolTensor;

PolElement basis_vector(int twol, int twok) {
  if (twol < 0 || twok < -twol || twok > twol || (twol + twok) % 2 != 0)
    throw std::invalid_argument("basis_vector: need -l <= k <= l, l-k integer");
  Monomial mo{(twol - twok) / 2, (twol + twok) / 2, 0};
  return PolElement::monomial(mo);
}

CorepMatrix corep_matrix(int twol) {
  if (twol < 0) throw std::invalid_argument("corep_matrix: negative label");
  CorepMatrix u;
  u.twol = twol;
  u.entries.assign(twol + 1, std::vector<PolElement>(twol + 1));
  for (int twoi = -twol; twoi <= twol; twoi += 2) {
    PolTensor dg = polalg::comultiply(basis_vector(twol, twoi));
    for (const auto& [key, c] : dg.terms()) {
      const Monomial& second = key.second;
      // Second leg must be a basis monomial alpha^{l-j} gamma^{l+j}.
      if (second.m != 0 || second.k < 0 || second.k + second.l != twol)
        throw std::logic_error("corep_matrix: second leg outside basis span");
      int twoj = second.l - second.k;
      u.entries[(twoi + twol) / 2][(twoj + twol) / 2].add_term(key.first, c);
    }
  }
  return u;
}

OrthogonalityReport orthogonality_gram(int twol, int twolp) {
  if (twol > 6 || twolp > 6)
    throw std::invalid_argument("orthogonality_gram: l, l' <= 3 required");
  CorepMatrix u = corep_matrix(twol);
  CorepMatrix v = corep_matrix(twolp);
  int nl = twol + 1, np = twolp + 1;

  OrthogonalityReport rep;
  rep.twol = twol;
  rep.twolp = twolp;
  rep.gram.assign(nl * nl, std::vector<QScalar>(np * np));
  rep.delta_pattern_holds = true;

  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nl; ++j)
      for (int r = 0; r < np; ++r)
        for (int s = 0; s < np; ++s) {
          QScalar g = polalg::gns_inner(u.entries[i][j], v.entries[r][s]);
          rep.gram[i * nl + j][r * np + s] = g;
          bool on_pattern = (twol == twolp && i == r && j == s);
          if (!on_pattern && !g.is_zero()) rep.delta_pattern_holds = false;
        }

  if (twol == twolp) {
    // With the C_{l,k} := 1 basis scaling, the raw diagonal entries factor
    // as (row constant) * (column factor); the column factor only reflects
    // the norms of the chosen basis vectors g_j. Dividing by the top row
    // (exact arithmetic, entries nonzero) removes that basis artifact and
    // leaves the constants C(l, i), which must be column-independent.
    rep.diagonal_constants.assign(nl, std::vector<QScalar>(nl));
    rep.diagonal_depends_only_on_i = true;
    for (int i = 0; i < nl; ++i) {
      for (int j = 0; j < nl; ++j) {
        QScalar raw = rep.gram[i * nl + j][i * nl + j];
        QScalar top = rep.gram[j][j];          // row 0, column j
        QScalar anchor = rep.gram[0][0];       // row 0, column 0
        rep.diagonal_constants[i][j] = raw * anchor / top;
        if (rep.diagonal_constants[i][j] != rep.diagonal_constants[i][0])
          rep.diagonal_depends_only_on_i = false;
      }
    }
  }
  return rep;
}

EigenvalueReport eigenvalue_check(int twol,
                                  const std::function<QScalar(int)>& symbol) {
  CorepMatrix u = corep_matrix(twol);
  EigenvalueReport rep;
  rep.twol = twol;
  rep.all_match = true;
  int n = twol + 1;
  rep.k_values.assign(n, std::vector<int>(n, 0));
  for (int twoi = -twol; twoi <= twol; twoi += 2)
    for (int twoj = -twol; twoj <= twol; twoj += 2) {
      int i = (twoi + twol) / 2, j = (twoj + twol) / 2;
      int k = -(twoi + twoj) / 2;
      rep.k_values[i][j] = k;
      const PolElement& e = u.entries[i][j];
      PolElement lhs = polalg::fourier_schur(symbol, e);
      PolElement rhs = e * symbol(k);
      if (lhs != rhs && rep.all_match) {
        rep.all_match = false;
        rep.bad_i2 = twoi;
        rep.bad_j2 = twoj;
      }
    }
  return rep;
}

}  // namespace suq2::peterweyl
