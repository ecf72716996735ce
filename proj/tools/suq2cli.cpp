// Command-line driver over the C library interface. Builds a config and a
// params JSON object per subcommand, runs it, and prints the JSON (or CSV)
// report. Exit status: 0 all checks passed, 1 checks failed, 2 usage or
// runtime error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "suq2/suq2_c.h"

using nlohmann::json;

namespace {

constexpr const char* kElementHelp =
    "element in the micro-grammar \"c1 * k1 l1 m1 + c2 * k2 l2 m2 + ...\";\n"
    "a coefficient is a decimal or an exact p(q)/r(q) expression, a bare\n"
    "\"k l m\" triple means coefficient 1. Example: \"(1-q)/(1+q) * 1 0 2\"";

json parse_kv_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  json cfg = json::object();
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      auto e = s.find_last_not_of(" \t\r");
      s.erase(e == std::string::npos ? 0 : e + 1);
      return s;
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    if (key == "q") cfg["q"] = std::stod(value);
    else if (key == "seed") cfg["seed"] = std::stoull(value);
    else if (key == "trunc_n") cfg["trunc_n"] = std::stoi(value);
    else if (key == "trunc_m") cfg["trunc_m"] = std::stoi(value);
    else if (key == "torus_samples") cfg["torus_samples"] = std::stoi(value);
    else if (key == "t_grid") cfg["t_grid"] = value;
    else throw CLI::ValidationError("--config", "unknown key " + key);
  }
  return cfg;
}

// "1:0.5,2:-1" -> {"1":0.5,"2":-1}
json parse_symbol_spec(const std::string& spec) {
  json out = json::object();
  std::istringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("--symbol", "expected k:value pairs");
    out[item.substr(0, colon)] = std::stod(item.substr(colon + 1));
  }
  return out;
}

// Flatten a report to "key,value" lines.
void flatten_csv(const json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten_csv(it.value(),
                  prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    int i = 0;
    for (const auto& v : j)
      flatten_csv(v, prefix + "[" + std::to_string(i++) + "]", out);
  } else {
    out += prefix + "," + j.dump() + "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Verification toolkit for semigroup BMO spaces over SU_q(2): exact\n"
      "Haar/Peter-Weyl computations, Fourier-Schur multipliers, Kosaki L_p\n"
      "checks, BMO norms, transference, and the fermionic Markov dilation."};
  app.require_subcommand(1);

  double q = 0.5;
  std::uint64_t seed = 1234;
  std::string format = "json", out_path, config_path, t_grid;
  int trunc_n = -1, trunc_m = -1, torus_samples = -1;
  app.add_option("--q", q, "deformation parameter in (-1,1) \\ {0}");
  app.add_option("--seed", seed, "random seed for property batteries");
  app.add_option("--format", format, "report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "write the report to this path");
  app.add_option("--config", config_path,
                 "key=value file mirroring the global flags (flags win)");
  app.add_option("--trunc-n", trunc_n, "N-leg truncation size");
  app.add_option("--trunc-m", trunc_m, "Z-leg truncation half-width");
  app.add_option("--torus-samples", torus_samples,
                 "circle sample count (power of two)");
  app.add_option("--t-grid", t_grid, "log t-grid as \"min,max,count\"");

  json params = json::object();
  std::string command;

  std::string element, suite, semigroup = "depolarizing", symbol_spec,
                               diag_spec, coeff_spec;
  int twol = 1, twol_max = 4, n_arg = 4, draws = 50, steps = 2, filtration = 0;
  double eps = 0.7;

  auto* c_haar = app.add_subcommand("haar", "Haar state of an element");
  c_haar->add_option("element", element, kElementHelp)->required();

  auto* c_pw = app.add_subcommand(
      "peterweyl", "corepresentation matrix, orthogonality, eigenvalue law");
  c_pw->add_option("--twol", twol, "label 2l (0..6)");

  auto* c_mult = app.add_subcommand(
      "multiplier", "Fourier-Schur multiplier: L_2 bound and images");
  c_mult->add_option("--symbol", symbol_spec, "symbol as k:value,...");
  c_mult->add_option("--l-max", twol_max, "largest 2l in the span");
  c_mult->add_option("--element", element, kElementHelp);

  auto* c_bmo = app.add_subcommand("bmo", "semigroup BMO norm");
  c_bmo->add_option("--semigroup", semigroup,
                    "depolarizing | schur | torus | suq2");
  c_bmo->add_option("--element", element, kElementHelp);
  c_bmo->add_option("--diag", diag_spec, "diagonal matrix entries, comma list");
  c_bmo->add_option("--coeffs", coeff_spec, "trig poly as k:value,...");

  auto* c_lp = app.add_subcommand("lp", "Kosaki L_p property battery");
  c_lp->add_option("--n", n_arg, "matrix size");
  c_lp->add_option("--draws", draws, "random draws");

  auto* c_gns = app.add_subcommand("gnsmod", "GNS L_p-module battery");
  c_gns->add_option("--draws", draws, "random draws");

  auto* c_tr = app.add_subcommand("transfer",
                                  "truncation relations and transference");
  c_tr->add_option("--element", element, kElementHelp);

  auto* c_dil = app.add_subcommand("dilate", "fermionic Markov dilation");
  c_dil->add_option("--eps", eps, "time step");
  c_dil->add_option("--steps", steps, "dilation step index k (<= 2)");
  c_dil->add_option("--filtration", filtration, "filtration index m");
  c_dil->add_option("--element", element, kElementHelp);
  c_dil->add_option("--n", n_arg, "site count (<= 4)");

  auto* c_ver = app.add_subcommand("verify", "run a named property suite");
  c_ver->add_option("suite", suite,
                    "relations | semigroups | kadison-schwarz | holder | "
                    "transference | gnsmod | dilation")
      ->required();
  c_ver->add_option("--eps", eps, "time step (dilation suite)");

  CLI11_PARSE(app, argc, argv);

  try {
    json cfg = config_path.empty() ? json::object()
                                   : parse_kv_config(config_path);
    if (app.count("--q")) cfg["q"] = q;
    else if (!cfg.contains("q")) cfg["q"] = q;
    if (app.count("--seed") || !cfg.contains("seed")) cfg["seed"] = seed;
    if (trunc_n > 0) cfg["trunc_n"] = trunc_n;
    if (trunc_m > 0) cfg["trunc_m"] = trunc_m;
    if (torus_samples > 0) cfg["torus_samples"] = torus_samples;
    if (!t_grid.empty()) cfg["t_grid"] = t_grid;

    if (c_haar->parsed()) {
      command = "haar";
      params["element"] = element;
    } else if (c_pw->parsed()) {
      command = "peterweyl";
      params["twol"] = twol;
    } else if (c_mult->parsed()) {
      command = "multiplier";
      if (!symbol_spec.empty()) params["symbol"] = parse_symbol_spec(symbol_spec);
      params["twol_max"] = twol_max;
      if (!element.empty()) params["element"] = element;
    } else if (c_bmo->parsed()) {
      command = "bmo";
      params["semigroup"] = semigroup;
      if (!element.empty()) params["element"] = element;
      if (!diag_spec.empty()) {
        json d = json::array();
        std::istringstream ss(diag_spec);
        std::string item;
        while (std::getline(ss, item, ',')) d.push_back(std::stod(item));
        params["diag"] = d;
      }
      if (!coeff_spec.empty()) params["coeffs"] = parse_symbol_spec(coeff_spec);
    } else if (c_lp->parsed()) {
      command = "lp";
      params["n"] = n_arg;
      params["draws"] = draws;
    } else if (c_gns->parsed()) {
      command = "gnsmod";
      params["draws"] = draws;
    } else if (c_tr->parsed()) {
      command = "transfer";
      if (!element.empty()) params["element"] = element;
    } else if (c_dil->parsed()) {
      command = "dilate";
      params["eps"] = eps;
      params["steps"] = steps;
      params["filtration"] = filtration;
      params["n"] = n_arg;
      if (!element.empty()) params["element"] = element;
    } else if (c_ver->parsed()) {
      command = "verify";
      params["suite"] = suite;
      if (suite == "dilation") params["eps"] = eps;
    }

    suq2_ctx* ctx = nullptr;
    suq2_status st = suq2_ctx_create(cfg.dump().c_str(), &ctx);
    if (st != SUQ2_OK) {
      std::cerr << "error: invalid configuration\n";
      return 2;
    }
    char* report_c = nullptr;
    st = suq2_run(ctx, command.c_str(), params.dump().c_str(), &report_c);
    if (st != SUQ2_OK) {
      std::cerr << "error: " << suq2_last_error(ctx) << "\n";
      suq2_ctx_free(ctx);
      return 2;
    }
    json report = json::parse(report_c);
    suq2_string_free(report_c);
    std::string text;
    if (format == "csv") {
      text = "key,value\n";
      flatten_csv(report, "", text);
    } else {
      text = report.dump(2) + "\n";
    }
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      out << text;
    }
    int rc = suq2_last_pass(ctx) ? 0 : 1;
    suq2_ctx_free(ctx);
    return rc;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
