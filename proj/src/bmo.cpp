#include "suq2/bmo.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace suq2::bmo {

static constexpr double kInf = std::numeric_limits<double>::infinity();

TGrid TGrid::log_grid(double tmin, double tmax, int k) {
  if (!(tmin > 0) || !(tmax > tmin) || k < 2)
    throw std::invalid_argument("log_grid: need 0 < tmin < tmax, k >= 2");
  TGrid g;
  g.tmin = tmin;
  g.tmax = tmax;
  double l0 = std::log(tmin), l1 = std::log(tmax);
  for (int i = 0; i < k; ++i)
    g.ts.push_back(std::exp(l0 + (l1 - l0) * i / double(k - 1)));
  return g;
}

TGrid TGrid::refined() const {
  TGrid g;
  g.tmin = tmin;
  g.tmax = tmax;
  for (size_t i = 0; i < ts.size(); ++i) {
    g.ts.push_back(ts[i]);
    if (i + 1 < ts.size())
      g.ts.push_back(std::sqrt(ts[i] * ts[i + 1]));
  }
  return g;
}

Semigroup Semigroup::schur(const Eigen::VectorXd& diag_density) {
  int n = int(diag_density.size());
  Semigroup sg;
  sg.kind = kSchur;
  Mat d = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (diag_density(i) <= 0)
      throw std::invalid_argument("schur: density must be faithful");
    d(i, i) = diag_density(i);
  }
  sg.alg = fdlp::FdAlgebra::with_density(d);
  sg.c = Eigen::MatrixXd(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sg.c(i, j) = double((i - j) * (i - j));
  return sg;
}

Semigroup Semigroup::depolarizing(const fdlp::FdAlgebra& alg) {
  Semigroup sg;
  sg.kind = kDepolarizing;
  sg.alg = alg;
  return sg;
}

Mat Semigroup::apply(double t, const Mat& x) const {
  if (t < 0) throw std::invalid_argument("Semigroup: t >= 0");
  if (kind == kSchur) {
    Mat y = x;
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) y(i, j) *= std::exp(-t * c(i, j));
    return y;
  }
  double e = std::exp(-t);
  return e * x + (1.0 - e) * alg.phi(x) * Mat::Identity(x.rows(), x.cols());
}

Mat Semigroup::fixed_point(const Mat& x) const {
  if (kind == kSchur) {
    Mat y = Mat::Zero(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j)
        if (c(i, j) == 0.0) y(i, j) = x(i, j);
    return y;
  }
  return alg.phi(x) * Mat::Identity(x.rows(), x.cols());
}

namespace {
struct GridSup {
  double sup = 0, argmax = 0;
};

template <typename F>
GridSup grid_sup(const std::vector<double>& ts, F&& value) {
  GridSup g;
  for (double t : ts) {
    double v = value(t);
    if (v > g.sup) {
      g.sup = v;
      g.argmax = t;
    }
  }
  return g;
}

BmoReport finish_report(const TGrid& grid, double endpoint,
                        const std::function<double(double)>& value) {
  GridSup coarse = grid_sup(grid.ts, value);
  GridSup fine = grid_sup(grid.refined().ts, value);
  BmoReport rep;
  rep.endpoint = endpoint;
  double sup = fine.sup;
  rep.argmax_t = fine.argmax;
  if (endpoint > sup) {
    sup = endpoint;
    rep.argmax_t = kInf;
  }
  double coarse_sup = std::max(coarse.sup, endpoint);
  rep.stable = sup <= coarse_sup * (1.0 + 1e-4) + 1e-14 &&
               sup >= coarse_sup - 1e-14;
  rep.norm = std::sqrt(sup);
  return rep;
}
}  // namespace

BmoReport bmo_col_norm(const Semigroup& sg, const Mat& x, const TGrid& grid) {
  Mat x0 = x - sg.fixed_point(x);
  // t -> infinity: Phi_t(x0) -> 0 and Phi_t(|x0|^2) -> P(|x0|^2).
  double endpoint = op_norm(sg.fixed_point(Mat(x0.adjoint()) * x0));
  auto value = [&](double t) {
    Mat d = x0 - sg.apply(t, x0);
    return op_norm(sg.apply(t, Mat(d.adjoint()) * d));
  };
  return finish_report(grid, endpoint, value);
}

BmoReport bmo_row_norm(const Semigroup& sg, const Mat& x, const TGrid& grid) {
  return bmo_col_norm(sg, x.adjoint(), grid);
}

BmoReport bmo_norm(const Semigroup& sg, const Mat& x, const TGrid& grid) {
  BmoReport c = bmo_col_norm(sg, x, grid);
  BmoReport r = bmo_row_norm(sg, x, grid);
  return c.norm >= r.norm ? c : r;
}

DominationReport bmo_dominates_l2(const Semigroup& sg, const Mat& x,
                                  const TGrid& grid, double slack) {
  Mat x0 = x - sg.fixed_point(x);
  DominationReport rep;
  rep.l2_col = fdlp::lp_norm(fdlp::embed(sg.alg, x0, 2.0, 1.0));
  rep.bmo_col = bmo_col_norm(sg, x0, grid).norm;
  rep.l2_row = fdlp::lp_norm(fdlp::embed(sg.alg, x0, 2.0, -1.0));
  rep.bmo_row = bmo_row_norm(sg, x0, grid).norm;
  rep.holds = rep.l2_col <= rep.bmo_col + slack &&
              rep.l2_row <= rep.bmo_row + slack;
  return rep;
}

ContractionReport expectation_bmo_contraction(const Semigroup& sg,
                                              const fdlp::BlockTarget& tgt,
                                              const Mat& x, const TGrid& grid,
                                              double slack) {
  ContractionReport rep;
  rep.semigroup_invariant = true;
  for (double t : {0.2, 1.3})
    for (const Mat& b : tgt.basis(sg.alg.n))
      if (!tgt.contains(sg.apply(t, b))) rep.semigroup_invariant = false;
  if (!rep.semigroup_invariant)
    throw std::invalid_argument(
        "expectation_bmo_contraction: semigroup does not preserve target");
  Mat x0 = x - sg.fixed_point(x);
  Mat ex = fdlp::conditional_expectation(sg.alg, tgt, x0);
  Mat ex0 = ex - sg.fixed_point(ex);
  rep.before_col = bmo_col_norm(sg, x0, grid).norm;
  rep.after_col = bmo_col_norm(sg, ex0, grid).norm;
  rep.before_row = bmo_row_norm(sg, x0, grid).norm;
  rep.after_row = bmo_row_norm(sg, ex0, grid).norm;
  rep.holds = rep.after_col <= rep.before_col + slack &&
              rep.after_row <= rep.before_row + slack;
  return rep;
}

// --- torus ----------------------------------------------------------------

TrigPoly TrigPoly::zeta(int k) {
  TrigPoly f;
  f.coeffs[k] = 1.0;
  return f;
}

TrigPoly TrigPoly::operator+(const TrigPoly& o) const {
  TrigPoly r = *this;
  for (auto& [k, c] : o.coeffs) {
    auto& v = r.coeffs[k];
    v += c;
    if (std::abs(v) == 0.0) r.coeffs.erase(k);
  }
  return r;
}

TrigPoly TrigPoly::operator-(const TrigPoly& o) const {
  TrigPoly neg;
  for (auto& [k, c] : o.coeffs) neg.coeffs[k] = -c;
  return *this + neg;
}

TrigPoly TrigPoly::operator*(const TrigPoly& o) const {
  TrigPoly r;
  for (auto& [k1, c1] : coeffs)
    for (auto& [k2, c2] : o.coeffs) r.coeffs[k1 + k2] += c1 * c2;
  return r;
}

TrigPoly TrigPoly::conj() const {
  TrigPoly r;
  for (auto& [k, c] : coeffs) r.coeffs[-k] = std::conj(c);
  return r;
}

TrigPoly TrigPoly::heat(double t) const {
  TrigPoly r;
  for (auto& [k, c] : coeffs)
    r.coeffs[k] = c * std::exp(-t * double(k) * double(k));
  return r;
}

std::complex<double> TrigPoly::eval(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto& [k, c] : coeffs) acc += c * std::pow(z, k);
  return acc;
}

int TrigPoly::degree() const {
  int d = 0;
  for (auto& [k, c] : coeffs) d = std::max(d, std::abs(k));
  return d;
}

double TrigPoly::sup_norm(int samples) const {
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    double th = 2.0 * std::numbers::pi * s / samples;
    best = std::max(best, std::abs(eval({std::cos(th), std::sin(th)})));
  }
  return best;
}

TorusBmoReport torus_bmo_norm(const TrigPoly& f, const TGrid& grid,
                              int circle_samples) {
  TrigPoly f0 = f;
  f0.coeffs.erase(0);
  auto inner_sup = [&](double t) {
    TrigPoly d = f0 - f0.heat(t);
    TrigPoly sq = d.conj() * d;
    return sq.heat(t).sup_norm(circle_samples);
  };
  GridSup coarse = grid_sup(grid.ts, inner_sup);
  GridSup fine = grid_sup(grid.refined().ts, inner_sup);
  // t -> infinity: the mean of |f0|^2.
  TrigPoly sq = f0.conj() * f0;
  double endpoint = sq.coeffs.count(0) ? std::abs(sq.coeffs.at(0)) : 0.0;
  double sup = std::max(fine.sup, endpoint);
  TorusBmoReport rep;
  rep.argmax_t = fine.sup >= endpoint ? fine.argmax : kInf;
  rep.norm = std::sqrt(sup);
  double coarse_sup = std::max(coarse.sup, endpoint);
  rep.stable = sup <= coarse_sup * (1.0 + 1e-4) + 1e-14;
  // Bernstein: |p'| <= deg * ||p||, so the grid sup underestimates the true
  // sup by at most a factor 1/(1 - deg*pi/samples) when that is positive.
  int deg = 2 * f0.degree();
  double frac = double(deg) * std::numbers::pi / double(circle_samples);
  rep.sampling_bound = frac < 1.0 ? 1.0 / (1.0 - frac) : kInf;
  return rep;
}

// --- Markov axiom suites --------------------------------------------------

AxiomReport check_axioms_fd(const Semigroup& sg, Rng& rng, int draws) {
  AxiomReport rep;
  int n = sg.alg.n;
  Mat id = Mat::Identity(n, n);
  std::vector<double> tset = {0.1, 0.7, 2.0};
  for (double t : tset)
    rep.unitality = std::max(rep.unitality, op_norm(sg.apply(t, id) - id));
  rep.positivity = 0.0;
  for (int d = 0; d < draws; ++d) {
    Mat a = rng.matrix(2 * n);
    Mat x = a * a.adjoint();
    for (double t : tset) {
      Mat y(2 * n, 2 * n);
      for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj)
          y.block(bi * n, bj * n, n, n) =
              sg.apply(t, x.block(bi * n, bj * n, n, n));
      rep.positivity = std::min(rep.positivity, min_eig_herm(y, 1e-8));
    }
    Mat u = rng.matrix(n), v = rng.matrix(n);
    for (double t : tset) {
      std::complex<double> lhs = sg.alg.phi(sg.apply(t, u) * v);
      std::complex<double> rhs = sg.alg.phi(u * sg.apply(t, v));
      rep.gns_symmetry = std::max(rep.gns_symmetry, std::abs(lhs - rhs));
      double s = 0.4;
      rep.semigroup_law = std::max(
          rep.semigroup_law,
          op_norm(sg.apply(t + s, u) - sg.apply(s, sg.apply(t, u))));
    }
  }
  return rep;
}

namespace {
TrigPoly random_trig(Rng& rng, int deg) {
  TrigPoly f;
  for (int k = -deg; k <= deg; ++k) f.coeffs[k] = rng.cgauss();
  return f;
}
}  // namespace

AxiomReport check_axioms_torus(Rng& rng, int draws, int samples) {
  AxiomReport rep;
  std::vector<double> tset = {0.1, 0.7, 2.0};
  TrigPoly one = TrigPoly::zeta(0);
  for (double t : tset)
    rep.unitality = std::max(rep.unitality, (one.heat(t) - one).sup_norm(16));
  for (int d = 0; d < draws; ++d) {
    // Positivity through a 2x2 amplification: X = A* A entrywise heat.
    TrigPoly a[2][2], x[2][2];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) a[i][j] = random_trig(rng, 3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        x[i][j] = TrigPoly();
        for (int r = 0; r < 2; ++r)
          x[i][j] = x[i][j] + a[r][i].conj() * a[r][j];
      }
    for (double t : tset)
      for (int s = 0; s < samples; ++s) {
        double th = 2.0 * std::numbers::pi * s / samples;
        std::complex<double> z{std::cos(th), std::sin(th)};
        Mat m(2, 2);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) m(i, j) = x[i][j].heat(t).eval(z);
        rep.positivity = std::min(rep.positivity, min_eig_herm(m, 1e-7));
      }
    TrigPoly u = random_trig(rng, 4), v = random_trig(rng, 4);
    auto mean = [](const TrigPoly& p) {
      return p.coeffs.count(0) ? p.coeffs.at(0) : std::complex<double>(0);
    };
    for (double t : tset) {
      rep.gns_symmetry = std::max(
          rep.gns_symmetry, std::abs(mean(u.heat(t) * v) - mean(u * v.heat(t))));
      double s = 0.4;
      rep.semigroup_law =
          std::max(rep.semigroup_law,
                   (u.heat(t + s) - u.heat(t).heat(s)).sup_norm(64));
    }
  }
  return rep;
}

namespace {
polalg::NumPolElement random_element(Rng& rng, double q) {
  polalg::NumPolElement e(q);
  for (int k = -2; k <= 2; ++k)
    for (int l = 0; l <= 1; ++l)
      for (int m = 0; m <= 1; ++m) e.add_term({k, l, m}, rng.cgauss());
  return e;
}
}  // namespace

AxiomReport check_axioms_suq2(const trunc::TruncRep& rep_t, Rng& rng,
                              int draws) {
  AxiomReport rep;
  double q = rep_t.q;
  std::vector<double> tset = {0.1, 0.7, 2.0};
  // Unitality is exact: the unit sits in the k = 0 stratum.
  for (int d = 0; d < draws; ++d) {
    // 2x2 amplification, evaluated through the truncation.
    polalg::NumPolElement a00 = random_element(rng, q),
                          a01 = random_element(rng, q),
                          a10 = random_element(rng, q),
                          a11 = random_element(rng, q);
    polalg::NumPolElement x00 = polalg::mul(polalg::adjoint(a00), a00) +
                                polalg::mul(polalg::adjoint(a10), a10);
    polalg::NumPolElement x01 = polalg::mul(polalg::adjoint(a00), a01) +
                                polalg::mul(polalg::adjoint(a10), a11);
    polalg::NumPolElement x10 = polalg::adjoint(x01);
    polalg::NumPolElement x11 = polalg::mul(polalg::adjoint(a01), a01) +
                                polalg::mul(polalg::adjoint(a11), a11);
    // Positivity proxy through the GNS representation: for the amplified
    // positive element X = A^* A, the Gram matrix of <v_r, Phi_t(X_ij) v_s>
    // over a monomial vector family must be PSD. This works at the exact
    // coefficient level, so no truncation boundary enters.
    std::vector<polalg::NumPolElement> fam;
    for (int k = -1; k <= 1; ++k)
      for (int l = 0; l <= 1; ++l)
        for (int m = 0; m <= 1; ++m) {
          polalg::NumPolElement v(q);
          v.add_term({k, l, m}, 1.0);
          fam.push_back(v);
        }
    int nv = int(fam.size());
    for (double t : tset) {
      std::array<polalg::NumPolElement, 4> y = {
          polalg::heat_phi(t, x00), polalg::heat_phi(t, x01),
          polalg::heat_phi(t, x10), polalg::heat_phi(t, x11)};
      Mat gram(2 * nv, 2 * nv);
      for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj)
          for (int r = 0; r < nv; ++r)
            for (int s = 0; s < nv; ++s)
              gram(bi * nv + r, bj * nv + s) = polalg::haar(polalg::mul(
                  polalg::adjoint(fam[r]),
                  polalg::mul(y[bi * 2 + bj], fam[s])));
      rep.positivity = std::min(rep.positivity, min_eig_herm(gram, 1e-7));
    }
    polalg::NumPolElement u = random_element(rng, q),
                          v = random_element(rng, q);
    for (double t : tset) {
      std::complex<double> lhs =
          polalg::haar(polalg::mul(polalg::heat_phi(t, u), v));
      std::complex<double> rhs =
          polalg::haar(polalg::mul(u, polalg::heat_phi(t, v)));
      rep.gns_symmetry = std::max(rep.gns_symmetry, std::abs(lhs - rhs));
      double s = 0.4;
      polalg::NumPolElement diff =
          polalg::heat_phi(t + s, u) - polalg::heat_phi(s, polalg::heat_phi(t, u));
      double defect = 0;
      for (auto& [mo, c] : diff.terms()) defect = std::max(defect, std::abs(c));
      rep.semigroup_law = std::max(rep.semigroup_law, defect);
    }
  }
  return rep;
}

// --- heat semigroup BMO at truncation -------------------------------------

BmoReport suq2_bmo_col_norm(const trunc::TruncRep& rep_t,
                            const polalg::NumPolElement& x, const TGrid& grid) {
  // Pre-project: drop the k = 0 strata (heat fixed points).
  polalg::NumPolElement x0(rep_t.q);
  for (auto& [mo, c] : x.terms())
    if (mo.k != 0) x0.add_term(mo, c);
  polalg::NumPolElement sq = polalg::mul(polalg::adjoint(x0), x0);
  polalg::NumPolElement sq0(rep_t.q);  // k = 0 part, the t -> inf limit
  for (auto& [mo, c] : sq.terms())
    if (mo.k == 0) sq0.add_term(mo, c);
  double endpoint = op_norm(evaluate(rep_t, sq0));
  auto value = [&](double t) {
    polalg::NumPolElement d = x0 - polalg::heat_phi(t, x0);
    polalg::NumPolElement w =
        polalg::heat_phi(t, polalg::mul(polalg::adjoint(d), d));
    return op_norm(evaluate(rep_t, w));
  };
  return finish_report(grid, endpoint, value);
}

BmoReport suq2_bmo_norm(const trunc::TruncRep& rep_t,
                        const polalg::NumPolElement& x, const TGrid& grid) {
  BmoReport c = suq2_bmo_col_norm(rep_t, x, grid);
  BmoReport r = suq2_bmo_col_norm(rep_t, polalg::adjoint(x), grid);
  return c.norm >= r.norm ? c : r;
}

}  // namespace suq2::bmo
