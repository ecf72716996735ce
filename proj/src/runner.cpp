#include "suq2/runner.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "suq2/bmo.hpp"
#include "suq2/dilation.hpp"
#include "suq2/fdlp.hpp"
#include "suq2/gnsmod.hpp"
#include "suq2/peterweyl.hpp"
#include "suq2/polalg.hpp"
#include "suq2/trunc.hpp"

namespace suq2::runner {

RunConfig RunConfig::from_json(const json& j) {
  RunConfig c;
  if (j.contains("q")) c.q = j.at("q").get<double>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("trunc_n")) c.trunc_n = j.at("trunc_n").get<int>();
  if (j.contains("trunc_m")) c.trunc_m = j.at("trunc_m").get<int>();
  if (j.contains("torus_samples"))
    c.torus_samples = j.at("torus_samples").get<int>();
  if (j.contains("t_grid")) {
    std::string spec = j.at("t_grid").get<std::string>();
    std::istringstream ss(spec);
    char comma;
    if (!(ss >> c.t_min >> comma >> c.t_max >> comma >> c.t_count))
      throw std::invalid_argument("t_grid: expected \"min,max,count\"");
  }
  if (!(c.q > -1.0 && c.q < 1.0) || c.q == 0.0)
    throw std::invalid_argument("config: q must lie in (-1,1) \\ {0}");
  return c;
}

json RunConfig::to_json() const {
  return {{"q", q},
          {"seed", seed},
          {"trunc_n", trunc_n},
          {"trunc_m", trunc_m},
          {"torus_samples", torus_samples},
          {"t_grid", std::to_string(t_min) + "," + std::to_string(t_max) +
                         "," + std::to_string(t_count)}};
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

bmo::TGrid grid_of(const RunConfig& cfg) {
  return bmo::TGrid::log_grid(cfg.t_min, cfg.t_max, cfg.t_count);
}

trunc::TruncRep rep_of(const RunConfig& cfg) {
  return trunc::TruncRep(cfg.trunc_n, cfg.trunc_m, cfg.q);
}

Mat parse_matrix(const json& j) {
  int n = int(j.size());
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    if (int(j.at(i).size()) != n)
      throw std::invalid_argument("matrix: rows must be square");
    for (int k = 0; k < n; ++k) {
      const json& e = j.at(i).at(k);
      if (e.is_number())
        m(i, k) = e.get<double>();
      else
        m(i, k) = std::complex<double>(e.at(0).get<double>(),
                                       e.at(1).get<double>());
    }
  }
  return m;
}

// Symbol given as {"k": value} pairs; absent strata map to zero.
std::function<double(int)> parse_symbol(const json& j) {
  auto table = std::make_shared<std::map<int, double>>();
  for (auto it = j.begin(); it != j.end(); ++it)
    (*table)[std::stoi(it.key())] = it.value().get<double>();
  return [table](int k) {
    auto f = table->find(k);
    return f == table->end() ? 0.0 : f->second;
  };
}

// ---- subcommand bodies ---------------------------------------------------

json cmd_haar(const RunConfig& cfg, const json& params, bool& pass) {
  polalg::PolElement e =
      polalg::parse_element(params.at("element").get<std::string>());
  QScalar v = polalg::haar(e);
  auto numeric = polalg::haar(polalg::to_numeric(e, cfg.q));
  pass = true;
  return {{"exact", v.str()},
          {"numeric_re", numeric.real()},
          {"numeric_im", numeric.imag()}};
}

json cmd_peterweyl(const RunConfig& cfg, const json& params, bool& pass) {
  int twol = params.value("twol", 1);
  if (twol < 0 || twol > 6)
    throw std::invalid_argument(
        "peterweyl: 2l must lie in 0..6 (l <= 3 budget)");
  auto u = peterweyl::corep_matrix(twol);
  json matrix = json::array();
  for (auto& row : u.entries) {
    json r = json::array();
    for (auto& e : row) r.push_back(e.str());
    matrix.push_back(r);
  }
  auto gram = peterweyl::orthogonality_gram(twol, twol);
  int twol_other = params.value("twol_other", twol == 0 ? 2 : twol - 1);
  auto cross = peterweyl::orthogonality_gram(twol, twol_other);
  Rng rng(cfg.seed);
  std::map<int, QScalar> sym;
  auto symbol = [&sym, &rng](int k) {
    auto it = sym.find(k);
    if (it == sym.end())
      it = sym.emplace(k, QScalar(int(rng.gen() % 7) - 3)).first;
    return it->second;
  };
  auto ev = peterweyl::eigenvalue_check(twol, symbol);
  json diag = json::array();
  for (auto& row : gram.diagonal_constants) {
    json r = json::array();
    for (auto& c : row) r.push_back(c.str());
    diag.push_back(r);
  }
  pass = gram.delta_pattern_holds && gram.diagonal_depends_only_on_i &&
         cross.delta_pattern_holds && ev.all_match;
  return {{"matrix", matrix},
          {"delta_pattern", gram.delta_pattern_holds},
          {"diagonal_depends_only_on_i", gram.diagonal_depends_only_on_i},
          {"diagonal_constants", diag},
          {"cross_twol", twol_other},
          {"cross_orthogonal", cross.delta_pattern_holds},
          {"eigenvalue_law", ev.all_match}};
}

json cmd_multiplier(const RunConfig& cfg, const json& params, bool& pass) {
  auto m = parse_symbol(params.value("symbol", json{{"1", 1.0}}));
  int twol = params.value("twol_max", 4);
  auto rep = trunc::l2_multiplier_bound(m, twol, cfg.q);
  json out = {{"norm", rep.norm},
              {"sup_symbol", rep.sup_symbol},
              {"max_cross_inner", rep.max_cross},
              {"bounded", rep.bounded}};
  if (params.contains("element")) {
    auto e = polalg::parse_element(params.at("element").get<std::string>());
    auto img = polalg::fourier_schur(
        [&m](int k) { return QScalar::from_dyadic(m(k)); }, e);
    out["image"] = polalg::to_text(img);
  }
  pass = rep.bounded;
  return out;
}

json cmd_bmo(const RunConfig& cfg, const json& params, bool& pass) {
  std::string kind = params.value("semigroup", "depolarizing");
  bmo::TGrid grid = grid_of(cfg);
  if (kind == "torus") {
    bmo::TrigPoly f;
    for (auto it = params.at("coeffs").begin(); it != params.at("coeffs").end();
         ++it) {
      const json& v = it.value();
      f.coeffs[std::stoi(it.key())] =
          v.is_number() ? std::complex<double>(v.get<double>(), 0.0)
                        : std::complex<double>(v.at(0).get<double>(),
                                               v.at(1).get<double>());
    }
    if (f.coeffs.count(0) && std::abs(f.coeffs.at(0)) > 1e-12)
      throw std::invalid_argument(
          "bmo: nonzero mean; subtract the k = 0 coefficient first");
    auto rep = bmo::torus_bmo_norm(f, grid, cfg.torus_samples);
    pass = rep.stable;
    return {{"norm", rep.norm},
            {"argmax_t", rep.argmax_t},
            {"stable", rep.stable},
            {"sampling_bound", rep.sampling_bound}};
  }
  if (kind == "suq2") {
    auto e = polalg::parse_element(params.at("element").get<std::string>());
    for (auto& [mo, c] : e.terms())
      if (mo.k == 0)
        throw std::invalid_argument(
            "bmo: element has a k = 0 stratum (heat fixed point); "
            "subtract it first");
    trunc::TruncRep rep = rep_of(cfg);
    auto r = bmo::suq2_bmo_norm(rep, polalg::to_numeric(e, cfg.q), grid);
    pass = r.stable;
    return {{"norm", r.norm}, {"argmax_t", r.argmax_t}, {"stable", r.stable}};
  }
  Mat x;
  if (params.contains("diag")) {
    auto d = params.at("diag");
    x = Mat::Zero(int(d.size()), int(d.size()));
    for (int i = 0; i < int(d.size()); ++i) x(i, i) = d.at(i).get<double>();
  } else {
    x = parse_matrix(params.at("matrix"));
  }
  int n = int(x.rows());
  bmo::Semigroup sg;
  if (kind == "schur") {
    Eigen::VectorXd dens = Eigen::VectorXd::Constant(n, 1.0 / n);
    if (params.contains("density_diag"))
      for (int i = 0; i < n; ++i)
        dens(i) = params.at("density_diag").at(i).get<double>();
    sg = bmo::Semigroup::schur(dens);
  } else if (kind == "depolarizing") {
    sg = bmo::Semigroup::depolarizing(fdlp::FdAlgebra::tracial(n));
  } else {
    throw std::invalid_argument(
        "bmo: semigroup must be depolarizing|schur|torus|suq2");
  }
  if (op_norm(sg.fixed_point(x)) > 1e-12 * std::max(1.0, op_norm(x)))
    throw std::invalid_argument(
        "bmo: input has a fixed-point component; subtract the projection "
        "P(x) = lim_t Phi_t(x) first");
  auto rep = bmo::bmo_norm(sg, x, grid);
  pass = rep.stable;
  return {{"norm", rep.norm}, {"argmax_t", rep.argmax_t},
          {"stable", rep.stable}, {"endpoint", std::sqrt(rep.endpoint)}};
}

json lp_battery(const RunConfig& cfg, int n, int draws, bool& pass) {
  Rng rng(cfg.seed);
  double star = 0, product = 0, trace_pres = 0, contract = 0, holder = 0,
         convex = 0;
  for (int d = 0; d < draws; ++d) {
    fdlp::FdAlgebra alg = fdlp::FdAlgebra::with_density(rng.density(n));
    Mat a = rng.matrix(n), b = rng.matrix(n);
    double p = 2.0 * rng.uniform(1.0, 3.0), z = rng.uniform(-1.0, 1.0);
    // Star identity: kappa^{(z)}(a)* = kappa^{(-z)}(a*).
    star = std::max(star, op_norm(Mat(fdlp::embed(alg, a, p, z).x.adjoint()) -
                                  fdlp::embed(alg, a.adjoint(), p, -z).x));
    // Product identity: kappa^{(-1)}_p(a) kappa^{(1)}_p(b) = kappa^{(0)}_{p/2}(ab).
    product = std::max(
        product, op_norm(fdlp::embed(alg, a, p, -1).x *
                             fdlp::embed(alg, b, p, 1).x -
                         fdlp::embed(alg, a * b, p / 2.0, 0).x));
    trace_pres = std::max(
        trace_pres, std::abs(fdlp::embed(alg, a, 1.0, z).x.trace() -
                             alg.phi(a)));
    double prev = -1.0;
    for (double pe : {fdlp::kPInf, 4.0, 2.0, 1.0}) {
      double nv = fdlp::lp_norm(fdlp::embed(alg, a, pe, 0.0));
      if (prev >= 0) contract = std::max(contract, nv - prev - 1e-12);
      prev = nv;
    }
    auto h = fdlp::holder_check(fdlp::embed(alg, a, 2.0, 0.0),
                                fdlp::embed(alg, b, 2.0, 0.0));
    holder = std::max(holder, h.lhs - h.rhs);
    // Midpoint log-convexity of log||kappa^{(0)}_p(a)||_p in 1/p.
    std::vector<double> invp = {0.2, 0.35, 0.5, 0.65, 0.8};
    std::vector<double> f;
    for (double ip : invp)
      f.push_back(std::log(fdlp::lp_norm(fdlp::embed(alg, a, 1.0 / ip, 0.0))));
    for (size_t i = 1; i + 1 < f.size(); ++i)
      convex = std::max(convex, f[i] - (f[i - 1] + f[i + 1]) / 2.0);
  }
  pass = star <= 1e-12 && product <= 1e-11 && trace_pres <= 1e-12 &&
         contract <= 1e-12 && holder <= 1e-12 && convex <= 1e-9;
  return {{"star_identity", star},       {"product_identity", product},
          {"trace_preservation", trace_pres}, {"contractivity_slack", contract},
          {"holder_slack", holder},      {"log_convexity_defect", convex}};
}

json cmd_lp(const RunConfig& cfg, const json& params, bool& pass) {
  int n = params.value("n", 4);
  int draws = params.value("draws", 50);
  return lp_battery(cfg, n, draws, pass);
}

gnsmod::UcpMap make_ucp(const fdlp::FdAlgebra& alg, const std::string& kind) {
  if (kind == "depolarizing") {
    auto alg_copy = alg;
    return gnsmod::UcpMap::registered(alg, [alg_copy](const Mat& x) {
      return Mat(0.5 * x + 0.5 * alg_copy.phi(x) *
                             Mat::Identity(x.rows(), x.cols()));
    });
  }
  // Schur map with Gaussian symbol; needs a diagonal density for modularity.
  int n = alg.n;
  Eigen::MatrixXd s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s(i, j) = std::exp(-0.5 * double((i - j) * (i - j)));
  return gnsmod::UcpMap::registered(alg, [s](const Mat& x) {
    Mat y = x;
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) y(i, j) *= s(i, j);
    return y;
  });
}

fdlp::FdAlgebra diag_algebra(Rng& rng, int n) {
  Mat d = Mat::Zero(n, n);
  double tr = 0;
  for (int i = 0; i < n; ++i) {
    d(i, i) = rng.uniform(0.2, 1.0);
    tr += d(i, i).real();
  }
  return fdlp::FdAlgebra::with_density(d / tr);
}

json gnsmod_battery(const RunConfig& cfg, int draws, bool& pass) {
  Rng rng(cfg.seed);
  double psd = 0, adj_sym = 0, covariance = 0, cs_t = 0, cs_slack = 0,
         psi = 0, duality = 0, monotone = 0;
  for (int d = 0; d < draws; ++d) {
    int n = 2 + int(rng.gen() % 2);
    fdlp::FdAlgebra alg = diag_algebra(rng, n);
    auto phi = make_ucp(alg, d % 2 == 0 ? "depolarizing" : "schur");
    gnsmod::GnsElement z, w;
    for (int t = 0; t < 2; ++t) {
      z.terms.emplace_back(rng.matrix(n), rng.matrix(n));
      w.terms.emplace_back(rng.matrix(n), rng.matrix(n));
    }
    double p = 2.0 + 2.0 * double(d % 3);
    psd = std::max(psd, -min_eig_herm(gns_bracket_inf(phi, z, z), 1e-7));
    adj_sym = std::max(
        adj_sym, op_norm(gns_bracket_inf(phi, z, w) -
                         Mat(gns_bracket_inf(phi, w, z).adjoint())));
    Mat a = rng.matrix(n);
    covariance = std::max(
        covariance,
        op_norm(gns_bracket(phi, z, w.acted(alg, a, p), p) -
                gns_bracket(phi, z, w, p) * a));
    auto cs = gnsmod::cauchy_schwarz_factor(phi, z, w, p);
    cs_slack = std::max(cs_slack, cs.lhs - cs.rhs);
    cs_t = std::max(cs_t, std::max(cs.t_norm - 1.0, cs.factorization_defect));
    auto pr = gnsmod::psi_embedding_check(phi, rng.matrix(n), rng.matrix(n),
                                          z, p);
    psi = std::max(psi, std::max(pr.first_defect, pr.second_defect));
    auto du = gnsmod::duality_pair(phi, z, 2.0, w, 2.0);
    duality = std::max(duality, std::abs(du.pair) - du.bound);
    double np_prev = -1;
    for (double pe : {2.0, 4.0, 8.0}) {
      double nv = gnsmod::module_norm(phi, z, pe);
      if (np_prev >= 0) monotone = std::max(monotone, np_prev - nv);
      np_prev = nv;
    }
  }
  pass = psd <= 1e-10 && adj_sym <= 1e-10 && covariance <= 1e-9 &&
         cs_slack <= 1e-10 && cs_t <= 1e-7 && psi <= 1e-9 &&
         duality <= 1e-10 && monotone <= 1e-9;
  return {{"bracket_psd_defect", psd},
          {"adjoint_symmetry", adj_sym},
          {"module_covariance", covariance},
          {"cauchy_schwarz_slack", cs_slack},
          {"contraction_defect", cs_t},
          {"psi_identity_defect", psi},
          {"duality_slack", duality},
          {"p_monotonicity_defect", monotone}};
}

json cmd_gnsmod(const RunConfig& cfg, const json& params, bool& pass) {
  return gnsmod_battery(cfg, params.value("draws", 100), pass);
}

json transfer_battery(const RunConfig& cfg, bool& pass) {
  trunc::TruncRep rep = rep_of(cfg);
  trunc::TorusSample sample{256};
  auto rd = trunc::relation_defect(rep);
  double route = 0, intertwine = 0;
  for (int k = -2; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l)
      for (int m = 0; m <= 2; ++m) {
        polalg::NumPolElement x(cfg.q);
        x.add_term({k, l, m}, 1.0);
        route = std::max(route,
                         trunc::transference_map(rep, sample, x).route_defect);
        for (double t : {0.1, 1.0, 5.0}) {
          auto h = [t](int kk) {
            return std::complex<double>(std::exp(-t * double(kk) * double(kk)),
                                        0.0);
          };
          intertwine = std::max(
              intertwine,
              trunc::transference_intertwine(rep, sample, h, x).defect);
        }
      }
  pass = rd.interior <= 1e-12 && route <= 1e-10 && intertwine <= 1e-10;
  return {{"relation_interior_defect", rd.interior},
          {"relation_full_defect", rd.full},
          {"route_defect", route},
          {"intertwine_defect", intertwine}};
}

json cmd_transfer(const RunConfig& cfg, const json& params, bool& pass) {
  json out = transfer_battery(cfg, pass);
  if (params.contains("element")) {
    auto e = polalg::parse_element(params.at("element").get<std::string>());
    trunc::TruncRep rep = rep_of(cfg);
    trunc::TorusSample sample{256};
    auto tr =
        trunc::transference_map(rep, sample, polalg::to_numeric(e, cfg.q));
    json strata = json::array();
    for (auto& [k, m] : tr.field) strata.push_back(k);
    out["element_strata"] = strata;
    out["element_route_defect"] = tr.route_defect;
  }
  return out;
}

json cmd_dilate(const RunConfig& cfg, const json& params, bool& pass) {
  double eps = params.value("eps", 0.7);
  int steps = params.value("steps", 2);
  int filtration = params.value("filtration", 0);
  int n = params.value("n", 4);
  if (n > 4 || steps > 2)
    throw std::invalid_argument(
        "dilate: budget is n <= 4 sites and depth <= 2");
  trunc::TruncRep rep(n, 1, cfg.q);
  dilation::DilationState st(rep, eps, steps);
  auto car = dilation::car_defects(st.fock);
  polalg::PolElement e =
      params.contains("element")
          ? polalg::parse_element(params.at("element").get<std::string>())
          : polalg::PolElement::alpha();
  auto x = polalg::to_numeric(e, cfg.q);
  double identity = 0;
  for (int m = filtration; m < steps; ++m)
    identity = std::max(
        identity, dilation::dilation_identity_check(st, m, steps, x)
                      .interior_defect);
  auto sf = dilation::schur_form_check(rep, eps, x);
  pass = identity <= 1e-8 && sf.interior_defect <= 1e-10 &&
         car.anticommutation <= 1e-12 && car.covariance <= 1e-12 &&
         car.squares <= 1e-12;
  return {{"car_anticommutation", car.anticommutation},
          {"car_covariance", car.covariance},
          {"car_squares", car.squares},
          {"identity_interior_defect", identity},
          {"schur_form_defect", sf.interior_defect}};
}

json relations_battery(const RunConfig& cfg, bool& pass) {
  using polalg::PolElement;
  auto a = PolElement::alpha(), as = PolElement::alpha_star(),
       g = PolElement::gamma(), gs = PolElement::gamma_star(),
       one = PolElement::one();
  QScalar q = parse_qscalar("q");
  bool exact = mul(gs, g) == mul(g, gs) && mul(a, g) == mul(g, a) * q &&
               mul(a, gs) == mul(gs, a) * q &&
               mul(as, a) + mul(gs, g) == one &&
               mul(a, as) + mul(gs, g) * (q * q) == one;
  double defect = 0;
  for (double qq : {0.3, -0.3, 0.7, -0.7})
    defect = std::max(defect,
                      trunc::relation_defect(trunc::TruncRep(16, 8, qq)).interior);
  pass = exact && defect <= 1e-12;
  return {{"exact_relations", exact}, {"interior_defect", defect}};
}

json semigroup_battery(const RunConfig& cfg, bool& pass) {
  Rng rng(cfg.seed);
  auto dep = bmo::Semigroup::depolarizing(fdlp::FdAlgebra::tracial(3));
  auto schur = bmo::Semigroup::schur(Eigen::VectorXd::Constant(4, 0.25));
  auto r1 = bmo::check_axioms_fd(dep, rng);
  auto r2 = bmo::check_axioms_fd(schur, rng);
  auto r3 = bmo::check_axioms_torus(rng);
  trunc::TruncRep rep(8, 4, cfg.q);
  auto r4 = bmo::check_axioms_suq2(rep, rng, 3);
  auto dump = [](const bmo::AxiomReport& r) {
    return json{{"unitality", r.unitality},
                {"positivity_min_eig", r.positivity},
                {"gns_symmetry", r.gns_symmetry},
                {"semigroup_law", r.semigroup_law}};
  };
  pass = r1.pass() && r2.pass() && r3.pass(1e-9) && r4.pass(1e-9);
  return {{"depolarizing", dump(r1)},
          {"schur", dump(r2)},
          {"torus_heat", dump(r3)},
          {"suq2_heat", dump(r4)}};
}

json ks_battery(const RunConfig& cfg, bool& pass) {
  Rng rng(cfg.seed);
  double gap_min = 0, roundtrip = 0, majorize = 0;
  bool verdicts_agree = true;
  for (int d = 0; d < 100; ++d) {
    int n = 4;
    fdlp::FdAlgebra alg = diag_algebra(rng, n);
    fdlp::BlockTarget tgt{{1, 1, 1, 1}};
    gap_min = std::min(gap_min,
                       fdlp::kadison_schwarz_gap(alg, tgt, rng.matrix(n)));
    Mat c = rng.contraction_psd(n);
    Mat dhalf = herm_power(alg.D, 0.5);
    auto cr = fdlp::comparison_factor(alg, dhalf * c * dhalf);
    roundtrip = std::max(roundtrip, op_norm(cr.x - c));
    if (cr.factor_in_unit_interval != cr.directly_dominated)
      verdicts_agree = false;
    Mat xb = rng.psd(n);
    Mat xa_seed = rng.contraction_psd(n);
    // a <= b built in the D^{1/2} . D^{1/2} picture from x_a <= x_b.
    Mat xa = xa_seed * 0.0;
    {
      // shrink x_b by a random PSD contraction square to stay below it
      Mat s = herm_power(xb, 0.5);
      xa = s * xa_seed * s;
    }
    Mat a_mat = dhalf * xa * dhalf;
    auto mr = fdlp::majorize_factor(alg, a_mat, xb);
    majorize = std::max(majorize, -mr.min_eig_gap);
    if (!mr.order_preserved) verdicts_agree = false;
  }
  pass = gap_min >= -1e-10 && roundtrip <= 1e-12 && verdicts_agree &&
         majorize <= 1e-10;
  return {{"ks_gap_min", gap_min},
          {"comparison_roundtrip", roundtrip},
          {"verdicts_agree", verdicts_agree},
          {"majorize_defect", majorize}};
}

json cmd_verify(const RunConfig& cfg, const json& params, bool& pass) {
  std::string suite = params.value("suite", "");
  if (suite == "relations") return relations_battery(cfg, pass);
  if (suite == "semigroups") return semigroup_battery(cfg, pass);
  if (suite == "kadison-schwarz") return ks_battery(cfg, pass);
  if (suite == "holder") return lp_battery(cfg, 4, 100, pass);
  if (suite == "transference") return transfer_battery(cfg, pass);
  if (suite == "gnsmod") return gnsmod_battery(cfg, 50, pass);
  if (suite == "dilation") {
    json p = params;
    return cmd_dilate(cfg, p, pass);
  }
  throw std::invalid_argument(
      "verify: unknown suite \"" + suite +
      "\"; available: relations, semigroups, kadison-schwarz, holder, "
      "transference, gnsmod, dilation");
}

}  // namespace

json run_command(const RunConfig& cfg, const std::string& command,
                 const json& params) {
  bool pass = false;
  json results;
  if (command == "haar")
    results = cmd_haar(cfg, params, pass);
  else if (command == "peterweyl")
    results = cmd_peterweyl(cfg, params, pass);
  else if (command == "multiplier")
    results = cmd_multiplier(cfg, params, pass);
  else if (command == "bmo")
    results = cmd_bmo(cfg, params, pass);
  else if (command == "lp")
    results = cmd_lp(cfg, params, pass);
  else if (command == "gnsmod")
    results = cmd_gnsmod(cfg, params, pass);
  else if (command == "transfer")
    results = cmd_transfer(cfg, params, pass);
  else if (command == "dilate")
    results = cmd_dilate(cfg, params, pass);
  else if (command == "verify")
    results = cmd_verify(cfg, params, pass);
  else
    throw std::invalid_argument("unknown command: " + command);
  json report = {{"command", command},
                 {"config", cfg.to_json()},
                 {"params", params},
                 {"results", results},
                 {"pass", pass}};
  report["content_hash"] =
      fnv1a(cfg.to_json().dump() + command + params.dump());
  return report;
}

namespace {
void flatten(const json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
              out);
  } else if (j.is_array()) {
    int i = 0;
    for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", out);
  } else {
    out += prefix + "," + j.dump() + "\n";
  }
}
}  // namespace

std::string report_to_csv(const json& report) {
  std::string out = "key,value\n";
  flatten(report, "", out);
  return out;
}

}  // namespace suq2::runner
