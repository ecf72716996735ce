#include <doctest.h>

#include <cmath>
#include <complex>

#include "suq2/trunc.hpp"

using namespace suq2;
using namespace suq2::trunc;
using polalg::NumPolElement;
using polalg::PolElement;

namespace {
NumPolElement nmono(double q, int k, int l, int m,
                    std::complex<double> c = 1.0) {
  NumPolElement e(q);
  e.add_term({k, l, m}, c);
  return e;
}
}  // namespace

TEST_CASE("generator matrices act by the weighted shifts") {
  double q = 0.6;
  TruncRep rep(4, 2, q);
  CHECK(rep.dim() == 20);
  // alpha: e_i (x) f_j -> sqrt(1-q^{2i}) e_{i-1} (x) f_j; kills i = 0.
  for (int i = 0; i < 4; ++i)
    for (int j = -2; j <= 2; ++j) {
      Vec v = Vec::Zero(rep.dim());
      v(rep.idx(i, j)) = 1.0;
      Vec av = rep.alpha_m * v;
      if (i == 0) {
        CHECK(av.norm() <= 1e-15);
      } else {
        CHECK(std::abs(av(rep.idx(i - 1, j)) -
                       std::sqrt(1.0 - std::pow(q, 2 * i))) <= 1e-15);
        CHECK(av.norm() == doctest::Approx(std::sqrt(1.0 - std::pow(q, 2 * i)))
                               .epsilon(1e-14));
      }
      // gamma: e_i (x) f_j -> q^i e_i (x) f_{j+1}; Dirichlet drop at j = M.
      Vec gv = rep.gamma_m * v;
      if (j == 2) {
        CHECK(gv.norm() <= 1e-15);
      } else {
        CHECK(std::abs(gv(rep.idx(i, j + 1)) - std::pow(q, i)) <= 1e-15);
      }
    }
  CHECK(op_norm(rep.alpha_m) ==
        doctest::Approx(std::sqrt(1.0 - std::pow(q, 6.0))).epsilon(1e-14));
  CHECK(op_norm(rep.gamma_m) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("relations hold exactly on the interior") {
  for (double q : {0.3, -0.3, 0.7, -0.7}) {
    auto rd = relation_defect(TruncRep(10, 5, q));
    CHECK(rd.interior <= 1e-12);
    // The boundary genuinely breaks the relations, so the interior
    // compression is doing real work.
    CHECK(rd.full > 1e-3);
  }
}

TEST_CASE("evaluate is adjoint- and product-compatible") {
  double q = 0.5;
  TruncRep rep(8, 4, q);
  CHECK(op_norm(evaluate(rep, PolElement::alpha_star()) -
                Mat(rep.alpha_m.adjoint())) <= 1e-15);
  CHECK(op_norm(evaluate(rep, PolElement::gamma_star()) -
                Mat(rep.gamma_m.adjoint())) <= 1e-15);
  // Interior homomorphism property: P ev(xy) P = P ev(x) ev(y) P up to
  // boundary effects controlled by the excluded layers.
  PolElement x = polalg::mul(PolElement::alpha(), PolElement::gamma());
  PolElement y = polalg::mul(PolElement::gamma_star(), PolElement::alpha());
  Mat p = rep.interior_projector(3);
  Mat lhs = p * evaluate(rep, polalg::mul(x, y)) * p;
  Mat rhs = p * evaluate(rep, x) * evaluate(rep, y) * p;
  CHECK(op_norm(lhs - rhs) <= 1e-12);
}

TEST_CASE("transference field and the conjugation route agree") {
  double q = 0.5;
  TruncRep rep(8, 4, q);
  TorusSample sample{256};
  for (auto [k, l, m] : {std::tuple{1, 0, 0}, {0, 1, 1}, {-2, 1, 0}, {2, 0, 2}}) {
    auto tr = transference_map(rep, sample, nmono(q, k, l, m));
    CHECK(tr.field.size() == 1);
    CHECK(tr.field.begin()->first == k);
    CHECK(tr.route_defect <= 1e-10);
  }
  // Linear combinations spread over their strata.
  NumPolElement e = nmono(q, 1, 0, 0) + nmono(q, -1, 2, 0, {0.0, 2.0});
  auto tr = transference_map(rep, sample, e);
  CHECK(tr.field.size() == 2);
  CHECK(tr.route_defect <= 1e-10);
  // field_at reassembles the fiber sum.
  std::complex<double> z = std::polar(1.0, 1.1);
  Mat direct = field_at(tr.field, z);
  Mat expect = evaluate(rep, nmono(q, 1, 0, 0)) * z +
               evaluate(rep, nmono(q, -1, 2, 0, {0.0, 2.0})) / z;
  CHECK(op_norm(direct - expect) <= 1e-12);
}

TEST_CASE("torus multiplier by DFT is exact below aliasing") {
  double q = 0.4;
  TruncRep rep(4, 2, q);
  TorusSample sample{256};
  OperatorField f;
  Rng rng(77);
  for (int k : {-3, 0, 2}) f.emplace(k, rng.matrix(rep.dim()));
  auto m = [](int k) {
    return std::complex<double>(1.0 / (1.0 + k * k), 0.5 * k);
  };
  OperatorField g = torus_multiply(sample, m, f);
  for (int k : {-3, 0, 2}) {
    CHECK(g.count(k) == 1);
    CHECK(op_norm(g.at(k) - Mat(m(k) * f.at(k))) <= 1e-10);
  }
  // Strata at or beyond S/2 alias and must be refused.
  TorusSample tiny{256};
  (void)tiny;
  OperatorField bad;
  bad.emplace(128, Mat::Identity(2, 2));
  CHECK_THROWS(torus_multiply(sample, m, bad));
}

TEST_CASE("multiplier intertwines the transference map") {
  double q = 0.5;
  TruncRep rep(8, 4, q);
  TorusSample sample{256};
  for (double t : {0.1, 1.0, 5.0}) {
    auto h = [t](int k) {
      return std::complex<double>(std::exp(-t * double(k * k)), 0.0);
    };
    for (auto [k, l, m] : {std::tuple{1, 0, 0}, {-2, 1, 1}, {2, 2, 0}}) {
      auto r = transference_intertwine(rep, sample, h, nmono(q, k, l, m));
      CHECK(r.defect <= 1e-10);
    }
    NumPolElement e = nmono(q, 1, 1, 0) + nmono(q, -1, 0, 2, {0.3, -0.4});
    CHECK(transference_intertwine(rep, sample, h, e).defect <= 1e-10);
  }
}

TEST_CASE("fiberwise BMO of the transferred generator") {
  double q = 0.5;
  TruncRep rep(8, 4, q);
  TorusSample sample{128};
  std::vector<double> tgrid;
  for (int i = 0; i < 40; ++i)
    tgrid.push_back(1e-3 * std::pow(40.0 / 1e-3, i / 39.0));
  PolField X = pi_field(nmono(q, 1, 0, 0));
  CHECK(X.size() == 1);
  CHECK(X.count(1) == 1);
  auto rep_bmo = bmo_s_norm(rep, sample, tgrid, X);
  // Same closed form as the heat BMO of alpha: the inner sup tends to
  // ||alpha^* alpha|| = 1 at the truncation.
  CHECK(rep_bmo.col == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep_bmo.row == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep_bmo.norm == doctest::Approx(1.0).epsilon(1e-9));
  // A fixed-point stratum is refused.
  PolField fixed = pi_field(nmono(q, 0, 1, 1));
  CHECK_THROWS(bmo_s_norm(rep, sample, tgrid, fixed));
}

TEST_CASE("L2 multiplier bound on the matrix-coefficient family") {
  auto heat = [](int k) { return std::exp(-double(k * k)); };
  auto rep = l2_multiplier_bound(heat, 4);
  CHECK(rep.bounded);
  CHECK(rep.sup_symbol == doctest::Approx(1.0));
  CHECK(rep.norm <= 1.0 + 1e-10);
  CHECK(rep.max_cross <= 1e-10);
  // Constant symbols act as the constant.
  auto two = [](int) { return 2.0; };
  auto r2 = l2_multiplier_bound(two, 3);
  CHECK(r2.bounded);
  CHECK(r2.norm == doctest::Approx(2.0).epsilon(1e-10));
}
