// Acceptance gate: one line per criterion, exit nonzero when any fails.
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "suq2/bmo.hpp"
#include "suq2/dilation.hpp"
#include "suq2/fdlp.hpp"
#include "suq2/gnsmod.hpp"
#include "suq2/peterweyl.hpp"
#include "suq2/polalg.hpp"
#include "suq2/qspecial.hpp"
#include "suq2/trunc.hpp"

using namespace suq2;
using polalg::PolElement;
using polalg::NumPolElement;

namespace {

int failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
  std::printf("%s  criterion %2d  %-34s %s\n", pass ? "PASS" : "FAIL", idx,
              name, detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

// 1. Five algebra relations exact at symbolic q; interior truncation defect
//    <= 1e-12 at N = 16, M = 8 for q in {+-0.3, +-0.7}.
void criterion1() {
  auto a = PolElement::alpha(), as = PolElement::alpha_star(),
       g = PolElement::gamma(), gs = PolElement::gamma_star(),
       one = PolElement::one();
  QScalar q = parse_qscalar("q");
  bool exact = mul(gs, g) == mul(g, gs) && mul(a, g) == mul(g, a) * q &&
               mul(a, gs) == mul(gs, a) * q && mul(as, a) + mul(gs, g) == one &&
               mul(a, as) + mul(gs, g) * (q * q) == one;
  double defect = 0;
  for (double qq : {0.3, -0.3, 0.7, -0.7})
    defect = std::max(
        defect, trunc::relation_defect(trunc::TruncRep(16, 8, qq)).interior);
  report(1, "algebra relations", exact && defect <= 1e-12,
         "exact=" + std::string(exact ? "yes" : "no") +
             " interior_defect=" + fmt(defect) + " (tol 1e-12)");
}

// 2. Exact delta-diagonal Gram for all l, l' <= 3; diagonal constants depend
//    only on (l, i).
void criterion2() {
  bool ok = true;
  for (int twol = 0; twol <= 6 && ok; ++twol) {
    auto self = peterweyl::orthogonality_gram(twol, twol);
    ok = ok && self.delta_pattern_holds && self.diagonal_depends_only_on_i;
    for (int twolp = twol + 1; twolp <= 6 && ok; ++twolp) {
      auto cross = peterweyl::orthogonality_gram(twol, twolp);
      ok = ok && cross.delta_pattern_holds;
      for (const auto& row : cross.gram)
        for (const auto& e : row) ok = ok && e.is_zero();
    }
  }
  report(2, "Peter-Weyl orthogonality", ok,
         std::string("delta pattern + C(l,i) diagonal, all l,l' <= 3, exact"));
}

// 3. Eigenvalue law exact for all l <= 3 and 20 random bounded symbols.
void criterion3() {
  Rng rng(1234);
  bool ok = true;
  for (int s = 0; s < 20; ++s) {
    auto table = std::make_shared<std::map<int, QScalar>>();
    auto sym = [table, &rng](int k) {
      auto it = table->find(k);
      if (it == table->end())
        it = table->emplace(k, QScalar(int(rng.gen() % 11) - 5)).first;
      return it->second;
    };
    for (int twol = 0; twol <= 6; ++twol)
      ok = ok && peterweyl::eigenvalue_check(twol, sym).all_match;
  }
  report(3, "Fourier-Schur eigenvalue law", ok,
         "20 random symbols, l <= 3, exact");
}

// 4. L2 multiplier norm on span{u^(l): l <= 3} equals max_k |m(k)| over
//    represented strata and is bounded by sup |m|.
void criterion4() {
  Rng rng(77);
  double worst_eq = 0, worst_bound = -1;
  bool ok = true;
  for (int s = 0; s < 5; ++s) {
    auto table = std::make_shared<std::map<int, double>>();
    auto m = [table, &rng](int k) {
      auto it = table->find(k);
      if (it == table->end())
        it = table->emplace(k, rng.uniform(-2.0, 2.0)).first;
      return it->second;
    };
    auto rep = trunc::l2_multiplier_bound(m, 6, 0.5);
    ok = ok && rep.bounded;
    worst_eq = std::max(worst_eq, std::abs(rep.norm - rep.sup_symbol));
    worst_bound = std::max(worst_bound, rep.norm - rep.sup_symbol);
  }
  auto heat = trunc::l2_multiplier_bound(
      [](int k) { return std::exp(-double(k * k)); }, 6, 0.5);
  ok = ok && heat.bounded && heat.norm <= 1.0 + 1e-10;
  ok = ok && worst_eq <= 1e-8;
  report(4, "L2 multiplier bound", ok,
         "|norm - max|m(k)||=" + fmt(worst_eq) + " (tol 1e-8)");
}

// 5. Transference formula and intertwining, interior defect <= 1e-10 for all
//    monomials |k| <= 2, l, m <= 2 and t in {0.1, 1, 5}.
void criterion5() {
  double q = 0.5;
  trunc::TruncRep rep(12, 6, q);
  trunc::TorusSample sample{256};
  double route = 0, inter = 0;
  for (int k = -2; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l)
      for (int m = 0; m <= 2; ++m) {
        NumPolElement x(q);
        x.add_term({k, l, m}, 1.0);
        route = std::max(route,
                         trunc::transference_map(rep, sample, x).route_defect);
        for (double t : {0.1, 1.0, 5.0}) {
          auto h = [t](int kk) {
            return std::complex<double>(std::exp(-t * double(kk * kk)), 0.0);
          };
          inter = std::max(
              inter, trunc::transference_intertwine(rep, sample, h, x).defect);
        }
      }
  report(5, "transference intertwining", route <= 1e-10 && inter <= 1e-10,
         "route=" + fmt(route) + " intertwine=" + fmt(inter) + " (tol 1e-10)");
}

// 6. BMO isometry of the transference embedding for x in {alpha, alpha^2,
//    alpha gamma}, relative 1e-4 at matched truncation and grid.
void criterion6() {
  double q = 0.5;
  trunc::TruncRep rep(8, 4, q);
  trunc::TorusSample sample{128};
  bmo::TGrid grid = bmo::TGrid::log_grid(1e-4, 50.0, 64);
  double worst = 0;
  auto a = PolElement::alpha();
  for (const PolElement& e : {a, mul(a, a), mul(a, PolElement::gamma())}) {
    NumPolElement x = polalg::to_numeric(e, q);
    double lhs = bmo::suq2_bmo_norm(rep, x, grid).norm;
    double rhs =
        trunc::bmo_s_norm(rep, sample, grid.ts, trunc::pi_field(x)).norm;
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1e-12, rhs));
  }
  report(6, "BMO isometry of pi", worst <= 1e-4,
         "max relative gap=" + fmt(worst) + " (tol 1e-4)");
}

// 7. Markov-semigroup axioms at 1e-10 for the four registered families.
void criterion7() {
  Rng rng(1234);
  auto dep = bmo::Semigroup::depolarizing(fdlp::FdAlgebra::tracial(3));
  auto schur = bmo::Semigroup::schur(Eigen::VectorXd::Constant(4, 0.25));
  auto r1 = bmo::check_axioms_fd(dep, rng);
  auto r2 = bmo::check_axioms_fd(schur, rng);
  auto r3 = bmo::check_axioms_torus(rng);
  auto r4 = bmo::check_axioms_suq2(trunc::TruncRep(8, 4, 0.5), rng, 3);
  bool ok = r1.pass(1e-10) && r2.pass(1e-10) && r3.pass(1e-10) &&
            r4.pass(1e-10);
  auto worst = [](const bmo::AxiomReport& r) {
    return std::max(std::max(r.unitality, -r.positivity),
                    std::max(r.gns_symmetry, r.semigroup_law));
  };
  report(7, "Markov semigroup axioms", ok,
         "defects: dep=" + fmt(worst(r1)) + " schur=" + fmt(worst(r2)) +
             " torus=" + fmt(worst(r3)) + " heat=" + fmt(worst(r4)) +
             " (tol 1e-10)");
}

// 8. L2 <= BMO^c on 100 random M_3 instances; triangle and homogeneity at
//    1e-8; conditional-expectation BMO contraction on 100 seeded instances.
void criterion8() {
  Rng rng(1234);
  bmo::TGrid grid = bmo::TGrid::log_grid(1e-4, 50.0, 48);
  auto dep3 = bmo::Semigroup::depolarizing(fdlp::FdAlgebra::tracial(3));
  auto schur3 = bmo::Semigroup::schur(Eigen::VectorXd::Constant(3, 1.0 / 3.0));
  bool dom = true;
  for (int i = 0; i < 100; ++i) {
    const auto& sg = (i % 2 == 0) ? dep3 : schur3;
    dom = dom && bmo::bmo_dominates_l2(sg, rng.matrix(3), grid).holds;
  }
  double tri = 0, hom = 0;
  for (int i = 0; i < 20; ++i) {
    Mat x = rng.matrix(3), y = rng.matrix(3);
    double nx = bmo::bmo_norm(dep3, x, grid).norm;
    double ny = bmo::bmo_norm(dep3, y, grid).norm;
    tri = std::max(tri, bmo::bmo_norm(dep3, Mat(x + y), grid).norm - nx - ny);
    hom = std::max(hom, std::abs(bmo::bmo_norm(dep3, Mat(1.7 * x), grid).norm -
                                 1.7 * nx));
  }
  auto dep4 = bmo::Semigroup::depolarizing(fdlp::FdAlgebra::tracial(4));
  fdlp::BlockTarget tgt{{2, 2}};
  bool contract = true;
  for (int i = 0; i < 100; ++i)
    contract = contract &&
               bmo::expectation_bmo_contraction(dep4, tgt, rng.matrix(4), grid)
                   .holds;
  report(8, "BMO inequalities",
         dom && tri <= 1e-8 && hom <= 1e-8 && contract,
         std::string("domination=") + (dom ? "100/100" : "fail") +
             " triangle=" + fmt(tri) + " homogeneity=" + fmt(hom) +
             (contract ? " contraction=100/100" : " contraction=fail"));
}

// 9. Kadison-Schwarz gap >= -1e-10, comparison-factor round trip to 1e-12
//    with verdict equivalence, majorization order preserved; 100 instances.
void criterion9() {
  Rng rng(1234);
  double gap_min = 0, roundtrip = 0, majorize = 0;
  bool verdicts = true, order = true;
  for (int d = 0; d < 100; ++d) {
    int n = 4;
    Mat dm = Mat::Zero(n, n);
    double tr = 0;
    for (int i = 0; i < n; ++i) {
      dm(i, i) = rng.uniform(0.2, 1.0);
      tr += dm(i, i).real();
    }
    fdlp::FdAlgebra alg = fdlp::FdAlgebra::with_density(Mat(dm / tr));
    fdlp::BlockTarget tgt{{1, 1, 1, 1}};
    gap_min =
        std::min(gap_min, fdlp::kadison_schwarz_gap(alg, tgt, rng.matrix(n)));
    Mat dhalf = herm_power(alg.D, 0.5);
    Mat c = rng.contraction_psd(n);
    auto cr = fdlp::comparison_factor(alg, Mat(dhalf * c * dhalf));
    roundtrip = std::max(roundtrip, op_norm(cr.x - c));
    if (cr.factor_in_unit_interval != cr.directly_dominated) verdicts = false;
    Mat xb = rng.psd(n);
    Mat s = herm_power(xb, 0.5);
    Mat xa = s * rng.contraction_psd(n) * s;
    auto mr = fdlp::majorize_factor(alg, Mat(dhalf * xa * dhalf), xb);
    majorize = std::max(majorize, -mr.min_eig_gap);
    order = order && mr.order_preserved;
  }
  report(9, "Kadison-Schwarz and comparison",
         gap_min >= -1e-10 && roundtrip <= 1e-12 && verdicts &&
             majorize <= 1e-10 && order,
         "gap_min=" + fmt(gap_min) + " roundtrip=" + fmt(roundtrip) +
             " majorize=" + fmt(majorize) +
             (verdicts && order ? " verdicts=agree" : " verdicts=FAIL"));
}

// 10. GNS module axioms, Cauchy-Schwarz with contraction <= 1 + 1e-8, both
//     embedding identities to 1e-10, duality, p-monotonicity; 100 seeded
//     instances over M_2 and M_3 with two ucp maps.
void criterion10() {
  Rng rng(1234);
  double psd = 0, csk = 0, tnorm = 0, ident = 0, dual = 0, mono = 0;
  for (int d = 0; d < 100; ++d) {
    int n = 2 + d % 2;
    Mat dm = Mat::Zero(n, n);
    double tr = 0;
    for (int i = 0; i < n; ++i) {
      dm(i, i) = rng.uniform(0.2, 1.0);
      tr += dm(i, i).real();
    }
    fdlp::FdAlgebra alg = fdlp::FdAlgebra::with_density(Mat(dm / tr));
    gnsmod::UcpMap phi;
    if (d % 2 == 0) {
      auto copy = alg;
      phi = gnsmod::UcpMap::registered(alg, [copy](const Mat& x) {
        return Mat(0.5 * x +
                   0.5 * copy.phi(x) * Mat::Identity(x.rows(), x.cols()));
      });
    } else {
      Eigen::MatrixXd sy(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          sy(i, j) = std::exp(-0.5 * double((i - j) * (i - j)));
      phi = gnsmod::UcpMap::registered(alg, [sy](const Mat& x) {
        Mat y = x;
        for (int i = 0; i < x.rows(); ++i)
          for (int j = 0; j < x.cols(); ++j) y(i, j) *= sy(i, j);
        return y;
      });
    }
    gnsmod::GnsElement z, w;
    for (int t = 0; t < 2; ++t) {
      z.terms.emplace_back(rng.matrix(n), rng.matrix(n));
      w.terms.emplace_back(rng.matrix(n), rng.matrix(n));
    }
    double p = 2.0 + 2.0 * (d % 3);
    psd = std::max(psd, -min_eig_herm(gns_bracket_inf(phi, z, z), 1e-7));
    auto cs = gnsmod::cauchy_schwarz_factor(phi, z, w, p);
    csk = std::max(csk, cs.lhs - cs.rhs);
    tnorm = std::max(tnorm, cs.t_norm);
    auto pr = gnsmod::psi_embedding_check(phi, rng.matrix(n), rng.matrix(n),
                                          z, p);
    ident = std::max(ident, std::max(pr.first_defect, pr.second_defect));
    auto du = gnsmod::duality_pair(phi, z, 2.0, w, 2.0);
    dual = std::max(dual, std::abs(du.pair) - du.bound);
    double prev = -1;
    for (double pe : {2.0, 4.0, 8.0}) {
      double nv = gnsmod::module_norm(phi, z, pe);
      if (prev >= 0) mono = std::max(mono, prev - nv);
      prev = nv;
    }
  }
  bool ok = psd <= 1e-10 && csk <= 1e-10 && tnorm <= 1.0 + 1e-8 &&
            ident <= 1e-10 && dual <= 1e-10 && mono <= 1e-9;
  report(10, "GNS module layer", ok,
         "psd=" + fmt(psd) + " cs=" + fmt(csk) + " |T|=" + fmt(tnorm) +
             " identities=" + fmt(ident) + " duality=" + fmt(dual) +
             " monotone=" + fmt(mono));
}

// 11. Dilation identity interior defect <= 1e-8 for N = n = 4, d = 2, all
//     0 <= m < k <= 2, eps in {0.3, 0.7}, x in {alpha, gamma, alpha gamma,
//     gamma gamma*}; CAR at 1e-12; Schur form at 1e-10.
void criterion11() {
  double q = 0.5;
  trunc::TruncRep rep(4, 1, q);
  double identity = 0, car = 0, schur = 0;
  auto a = PolElement::alpha(), g = PolElement::gamma();
  std::vector<PolElement> xs = {a, g, mul(a, g), mul(g, PolElement::gamma_star())};
  for (double eps : {0.3, 0.7}) {
    dilation::DilationState st(rep, eps, 2);
    auto cd = dilation::car_defects(st.fock);
    car = std::max({car, cd.anticommutation, cd.covariance, cd.squares});
    for (const PolElement& e : xs) {
      NumPolElement x = polalg::to_numeric(e, q);
      for (int m = 0; m < 2; ++m)
        for (int k = m + 1; k <= 2; ++k)
          identity = std::max(identity,
                              dilation::dilation_identity_check(st, m, k, x)
                                  .interior_defect);
      schur = std::max(schur,
                       dilation::schur_form_check(rep, eps, x).interior_defect);
    }
  }
  report(11, "Markov dilation",
         identity <= 1e-8 && car <= 1e-12 && schur <= 1e-10,
         "identity=" + fmt(identity) + " car=" + fmt(car) +
             " schur_form=" + fmt(schur));
}

// 12. Kosaki layer: kappa identities and trace preservation to 1e-12,
//     contractivity in p, Hoelder on 200 random triples, log-convexity
//     probe at 1e-9.
void criterion12() {
  Rng rng(1234);
  double star = 0, product = 0, trace = 0, contract = 0, holder = 0,
         convex = 0;
  for (int d = 0; d < 200; ++d) {
    fdlp::FdAlgebra alg = fdlp::FdAlgebra::with_density(rng.density(4));
    Mat a = rng.matrix(4), b = rng.matrix(4);
    double p = 2.0 * rng.uniform(1.0, 3.0), z = rng.uniform(-1.0, 1.0);
    star = std::max(star, op_norm(Mat(fdlp::embed(alg, a, p, z).x.adjoint()) -
                                  fdlp::embed(alg, a.adjoint(), p, -z).x));
    product = std::max(
        product,
        op_norm(fdlp::embed(alg, a, p, -1).x * fdlp::embed(alg, b, p, 1).x -
                fdlp::embed(alg, a * b, p / 2.0, 0).x));
    trace = std::max(trace, std::abs(fdlp::embed(alg, a, 1.0, z).x.trace() -
                                     alg.phi(a)));
    double prev = -1.0;
    for (double pe : {fdlp::kPInf, 4.0, 2.0, 1.0}) {
      double nv = fdlp::lp_norm(fdlp::embed(alg, a, pe, 0.0));
      if (prev >= 0) contract = std::max(contract, nv - prev);
      prev = nv;
    }
    double hp = rng.uniform(1.5, 4.0);
    double hq = rng.uniform(std::max(1.0, hp / (hp - 1.0)), 6.0);
    auto h = fdlp::holder_check(fdlp::embed(alg, a, hp, -1.0),
                                fdlp::embed(alg, b, hq, 1.0));
    holder = std::max(holder, h.lhs - h.rhs);
    std::vector<double> f;
    for (double ip : {0.2, 0.35, 0.5, 0.65, 0.8})
      f.push_back(std::log(fdlp::lp_norm(fdlp::embed(alg, a, 1.0 / ip, 0.0))));
    for (size_t i = 1; i + 1 < f.size(); ++i)
      convex = std::max(convex, f[i] - (f[i - 1] + f[i + 1]) / 2.0);
  }
  bool ok = star <= 1e-12 && product <= 1e-11 && trace <= 1e-12 &&
            contract <= 1e-11 && holder <= 1e-10 && convex <= 1e-9;
  report(12, "Kosaki Lp layer", ok,
         "star=" + fmt(star) + " product=" + fmt(product) +
             " trace=" + fmt(trace) + " holder=" + fmt(holder) +
             " convexity=" + fmt(convex));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  if (failures == 0) {
    std::printf("ALL 12 ACCEPTANCE CRITERIA PASSED\n");
    return 0;
  }
  std::printf("%d criterion(s) FAILED\n", failures);
  return 1;
}
