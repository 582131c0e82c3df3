#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ridgelab/best_approx.hpp"
#include "ridgelab/catalog.hpp"
#include "ridgelab/experiments.hpp"
#include "ridgelab/gliding_hump.hpp"
#include "ridgelab/rate_fit.hpp"
#include "ridgelab/report.hpp"
#include "ridgelab/shatter.hpp"
#include "ridgelab/smoothness.hpp"
#include "ridgelab/vc_chain.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ridgelab;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dotted-path override: --set solver.restarts=8. The value is parsed as JSON
// when possible, otherwise taken as a string.
void apply_override(ordered_json& config, const std::string& assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("override '" + assignment + "' is not of the form key=value");
  std::string path = assignment.substr(0, eq);
  std::string raw = assignment.substr(eq + 1);

  ordered_json value;
  try {
    value = ordered_json::parse(raw);
  } catch (const ordered_json::parse_error&) {
    value = raw;
  }

  ordered_json* node = &config;
  std::istringstream keys(path);
  std::string key, next;
  std::getline(keys, key, '.');
  while (std::getline(keys, next, '.')) {
    node = &(*node)[key];
    key = next;
  }
  (*node)[key] = value;
}

ordered_json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return ordered_json::parse(in);
  } catch (const ordered_json::parse_error& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
}

template <typename T>
T require(const ordered_json& config, const std::string& field) {
  if (!config.contains(field)) throw ConfigError("missing required field '" + field + "'");
  try {
    return config.at(field).get<T>();
  } catch (const ordered_json::exception&) {
    throw ConfigError("field '" + field + "' has the wrong type");
  }
}

template <typename T>
T value_or(const ordered_json& config, const std::string& field, T fallback) {
  if (!config.contains(field)) return fallback;
  try {
    return config.at(field).get<T>();
  } catch (const ordered_json::exception&) {
    throw ConfigError("field '" + field + "' has the wrong type");
  }
}

double parse_p(const ordered_json& config) {
  if (!config.contains("p")) return kSupNorm;
  const auto& p = config.at("p");
  if (p.is_string()) {
    if (p.get<std::string>() == "inf") return kSupNorm;
    throw ConfigError("field 'p' must be a number or \"inf\"");
  }
  return p.get<double>();
}

SolverConfig parse_solver(const ordered_json& config, unsigned seed, int jobs) {
  SolverConfig cfg;
  cfg.seed = seed;
  cfg.jobs = jobs;
  if (!config.contains("solver")) return cfg;
  const ordered_json& s = config.at("solver");
  cfg.restarts = value_or(s, "restarts", cfg.restarts);
  cfg.iterations = value_or(s, "iterations", cfg.iterations);
  cfg.step_size = value_or(s, "step_size", cfg.step_size);
  cfg.step_decay = value_or(s, "step_decay", cfg.step_decay);
  cfg.tolerance = value_or(s, "tolerance", cfg.tolerance);
  if (s.contains("temperatures")) cfg.temperatures = s.at("temperatures").get<std::vector<double>>();
  if (s.contains("resolution"))
    cfg.sampling = TensorGridSampling{s.at("resolution").get<int>()};
  return cfg;
}

ExperimentReport chain_to_report(const VCChainReport& chain) {
  ExperimentReport report;
  report.experiment = "verify-chain";
  report.input("c_d", format_double(chain.c_d));
  report.input("e", format_double(chain.e_constant));
  report.input("dimension", std::to_string(chain.dim));
  report.input("n_lo", std::to_string(chain.n_lo));
  report.input("n_hi", std::to_string(chain.n_hi));
  report.scalar("premise_lhs", chain.premise_lhs);
  report.scalar("premise_rhs", chain.premise_rhs);
  report.scalar("failures", static_cast<double>(chain.failures));
  if (chain.first_all_ok >= 0)
    report.scalar("first_all_ok", static_cast<double>(chain.first_all_ok));
  if (!chain.premise_ok)
    report.notes.push_back("premise 4 C_d [1 + log2 E] < E fails: " +
                           format_double(chain.premise_lhs) + " >= " +
                           format_double(chain.premise_rhs));

  ReportTable table;
  table.name = "chain";
  table.columns = {"n",       "vc_start", "split",    "rounded",  "grouped", "budget",
                   "grid_dim", "capacity", "tau_4n",   "tau_bound", "chain_ok", "tau_ok"};
  for (const ChainRow& row : chain.sample_rows)
    table.rows.push_back({static_cast<double>(row.n), row.vc_start, row.split, row.rounded,
                          row.grouped, row.budget, static_cast<double>(row.grid_dim),
                          row.grid_capacity, row.tau_4n, row.tau_bound,
                          row.chain_ok ? 1.0 : 0.0, row.tau_ok ? 1.0 : 0.0});
  report.tables.push_back(table);
  report.verdict = chain.pass ? "pass" : "fail";
  return report;
}

ExperimentReport run_verify_chain(const ordered_json& config) {
  const ordered_json chain = value_or(config, "chain", ordered_json::object());
  return chain_to_report(verify_corsharp_chain(
      value_or(chain, "c_d", 1.0), value_or(chain, "e", 64.0),
      value_or(chain, "n_lo", static_cast<long long>(2)),
      value_or(chain, "n_hi", static_cast<long long>(1000)), value_or(chain, "d", 1)));
}

ExperimentReport run_best_approx(const ordered_json& config, unsigned seed, int jobs) {
  const CatalogEntry& entry = catalog_lookup(require<std::string>(config, "function"));
  Activation sigma = activation_by_name(value_or<std::string>(config, "activation", "logistic"));
  std::vector<int> widths = value_or(config, "widths", std::vector<int>{1});
  double p = parse_p(config);
  SolverConfig cfg = parse_solver(config, seed, jobs);

  ExperimentReport report;
  report.experiment = "best-approx";
  report.input("function", entry.id);
  report.input("activation", sigma.name());
  report.input("p", std::isinf(p) ? "inf" : format_double(p));
  report.input("seed", std::to_string(seed));

  ReportTable table;
  table.name = "best-approx";
  table.columns = {"n", "error", "best_restart", "diverged_restarts"};
  for (const BestApproxResult& res :
       best_approx_chain(entry.fn, widths, sigma, p, entry.domain, cfg))
    table.rows.push_back({static_cast<double>(res.params.width()), res.error,
                          static_cast<double>(res.best_restart),
                          static_cast<double>(res.diverged_restarts)});
  report.tables.push_back(table);
  report.verdict = "pass";
  return report;
}

ExperimentReport run_modulus(const ordered_json& config) {
  const CatalogEntry& entry = catalog_lookup(require<std::string>(config, "function"));
  const int r = value_or(config, "order", 1);
  std::vector<double> deltas =
      value_or(config, "deltas", std::vector<double>{0.5, 0.25, 0.125, 0.0625});
  const double p = parse_p(config);

  ExperimentReport report;
  report.experiment = "modulus";
  report.input("function", entry.id);
  report.input("order", std::to_string(r));
  report.input("p", std::isinf(p) ? "inf" : format_double(p));

  ReportTable table;
  table.name = "modulus";
  table.columns = {"delta", "omega", "directions_admissible"};
  for (double delta : deltas) {
    ModulusQuery q;
    q.order = r;
    q.delta = delta;
    q.norm = NormQuery{p, TensorGridSampling{129}};
    if (entry.fn.dimension() > 1) q.directions = RandomDirections{8, 7};
    ModulusResult res = modulus(entry.fn, q, entry.domain);
    table.rows.push_back({delta, res.value, static_cast<double>(res.directions_admissible)});
  }
  report.tables.push_back(table);
  report.verdict = "pass";
  return report;
}

std::vector<int> parse_signs(const std::string& pattern, std::size_t count) {
  std::vector<int> signs;
  if (pattern == "alternating") {
    for (std::size_t i = 0; i < count; ++i) signs.push_back(i % 2 == 0 ? 1 : -1);
    return signs;
  }
  for (char c : pattern) {
    if (c == '+') signs.push_back(1);
    else if (c == '-') signs.push_back(-1);
    else throw ConfigError("field 'signs' must be \"alternating\" or a +/- pattern");
  }
  if (signs.size() != count)
    throw ConfigError("field 'signs' must give one sign per grid point (" +
                      std::to_string(count) + ")");
  return signs;
}

ExperimentReport run_resonance(const ordered_json& config) {
  const int d = value_or(config, "dimension", 1);
  const int tau = value_or(config, "tau", 4);
  GridSpec grid{Domain::unit_cube(d), tau};
  std::vector<Point> pts = grid_points(grid);
  std::vector<int> signs =
      parse_signs(value_or<std::string>(config, "signs", "alternating"), pts.size());
  ResonanceFunction h = resonance_function(SignedGrid{grid, signs});

  ExperimentReport report;
  report.experiment = "resonance";
  report.input("dimension", std::to_string(d));
  report.input("tau", std::to_string(tau));
  report.input("signs", value_or<std::string>(config, "signs", "alternating"));

  double max_defect = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    max_defect = std::max(max_defect, std::abs(h.eval(pts[i]) - signs[i]));
  double sup = norm(h.as_target(), grid.domain, NormQuery{kSupNorm, TensorGridSampling{129}});
  report.scalar("grid_defect", max_defect);
  report.scalar("sup_norm", sup);

  const int r = value_or(config, "order", 1);
  double two_tau = h.scale();
  ResonanceModulusReport mod = resonance_modulus_bound(
      h, r, {2.0 / two_tau, 1.0 / two_tau, 0.5 / two_tau, 0.25 / two_tau});
  ReportTable table;
  table.name = "resonance-modulus";
  table.columns = {"delta", "omega", "reference"};
  for (std::size_t i = 0; i < mod.deltas.size(); ++i)
    table.rows.push_back({mod.deltas[i], mod.moduli[i], mod.reference[i]});
  report.tables.push_back(table);
  report.scalar("implied_constant", mod.implied_constant);
  report.verdict = max_defect == 0.0 && sup <= 1.0 + 1e-12 ? "pass" : "fail";
  return report;
}

ExperimentReport run_shatter(const ordered_json& config, unsigned seed) {
  const int d = value_or(config, "dimension", 1);
  const int tau = value_or(config, "tau", 2);
  const int n = value_or(config, "n", 1);
  Activation sigma = activation_by_name(value_or<std::string>(config, "activation", "logistic"));
  GridSpec grid{Domain::unit_cube(d), tau};

  ShatterConfig cfg;
  cfg.seed = seed;
  cfg.restarts = value_or(config, "restarts", cfg.restarts);
  cfg.margin_target = value_or(config, "margin", cfg.margin_target);
  cfg.constant_term = value_or(config, "constant_term", false);

  ExperimentReport report;
  report.experiment = "shatter";
  report.input("dimension", std::to_string(d));
  report.input("tau", std::to_string(tau));
  report.input("n", std::to_string(n));
  report.input("activation", sigma.name());
  report.input("seed", std::to_string(seed));

  if (config.contains("signs")) {
    std::vector<Point> pts = grid_points(grid);
    std::vector<int> signs = parse_signs(config.at("signs").get<std::string>(), pts.size());
    ShatterFitResult fit = shatter_fit(n, sigma, pts, signs, cfg);
    report.scalar("fit", fit.fit ? 1.0 : 0.0);
    report.scalar("margin", fit.margin);
    report.verdict = "pass";
  } else {
    UnshatterableSearch search = find_unshatterable_signs(n, sigma, grid, cfg);
    report.scalar("found", search.result ? 1.0 : 0.0);
    report.scalar("proven", search.proven ? 1.0 : 0.0);
    if (search.result) {
      std::string pattern;
      for (int s : search.result->signs) pattern += s > 0 ? '+' : '-';
      report.input("unshatterable", pattern);
      report.notes.push_back(search.proven ? "structural certificate (monotone single ridge)"
                                           : "HEURISTIC certificate (optimizer failure)");
    }
    report.verdict = "pass";
  }
  return report;
}

ExperimentReport run_rates(const ordered_json& config) {
  std::vector<std::pair<double, double>> pairs;
  for (const auto& row : require<std::vector<std::vector<double>>>(config, "pairs")) {
    if (row.size() != 2) throw ConfigError("field 'pairs' must hold [n, error] rows");
    pairs.emplace_back(row[0], row[1]);
  }
  RateFit fit = rate_fit(pairs);

  ExperimentReport report;
  report.experiment = "rates";
  report.scalar("beta", fit.exponent);
  report.scalar("constant", fit.constant);
  report.scalar("residual", fit.residual);
  ReportTable table;
  table.name = "rates";
  table.columns = {"n", "error"};
  for (const auto& [n, e] : fit.pairs) table.rows.push_back({n, e});
  report.tables.push_back(table);
  report.verdict = "pass";
  return report;
}

ExperimentReport dispatch(const ordered_json& config, unsigned seed, int jobs) {
  const std::string kind = require<std::string>(config, "experiment");
  if (kind == "verify-chain") return run_verify_chain(config);
  if (kind == "best-approx") return run_best_approx(config, seed, jobs);
  if (kind == "modulus") return run_modulus(config);
  if (kind == "resonance") return run_resonance(config);
  if (kind == "shatter") return run_shatter(config, seed);
  if (kind == "rates") return run_rates(config);

  SolverConfig cfg = parse_solver(config, seed, jobs);
  if (kind == "direct-theorem") {
    const CatalogEntry& entry = catalog_lookup(require<std::string>(config, "function"));
    return direct_theorem_experiment(
        entry.fn, activation_by_name(value_or<std::string>(config, "activation", "logistic")),
        value_or(config, "order", 1), require<std::vector<int>>(config, "widths"),
        parse_p(config), entry.domain, cfg);
  }
  if (kind == "l2-relu") {
    const CatalogEntry& entry = catalog_lookup(require<std::string>(config, "function"));
    return l2_relu_experiment(entry.fn, value_or(config, "relu_power", 1),
                              value_or(config, "order", 1),
                              require<std::vector<int>>(config, "widths"),
                              value_or(config, "ball", true)
                                  ? Domain::unit_ball(entry.fn.dimension())
                                  : entry.domain,
                              cfg);
  }
  if (kind == "sharpness-gap") {
    return sharpness_gap_experiment(
        activation_by_name(value_or<std::string>(config, "activation", "logistic")),
        value_or(config, "order", 1), value_or(config, "dimension", 1),
        require<double>(config, "alpha"), value_or(config, "terms", 2), cfg);
  }
  if (kind == "synchronous-d1") {
    const CatalogEntry& entry = catalog_lookup(require<std::string>(config, "function"));
    return synchronous_error_experiment_d1(
        entry.fn, activation_by_name(value_or<std::string>(config, "activation", "logistic")),
        value_or(config, "max_order", 1), require<std::vector<int>>(config, "widths"),
        entry.domain, cfg);
  }
  throw ConfigError("unknown experiment kind '" + kind + "'");
}

void list_catalog() {
  std::cout << "functions:\n";
  for (const CatalogEntry& e : function_catalog())
    std::cout << "  " << e.id << "  (d=" << e.fn.dimension() << ")  " << e.summary << "\n";
  std::cout << "activations:\n";
  for (const std::string& a : activation_names()) std::cout << "  " << a << "\n";
  std::cout << "experiments:\n";
  for (const char* e : {"direct-theorem", "l2-relu", "sharpness-gap", "synchronous-d1",
                        "verify-chain", "best-approx", "modulus", "resonance", "shatter",
                        "rates"})
    std::cout << "  " << e << "\n";
}

int run_and_write(ordered_json config, const std::vector<std::string>& overrides,
                  unsigned seed, int jobs, const std::string& out_dir,
                  const std::string& forced_kind) {
  try {
    if (!forced_kind.empty()) config["experiment"] = forced_kind;
    for (const std::string& o : overrides) apply_override(config, o);
    if (config.contains("seed")) seed = config.at("seed").get<unsigned>();

    ExperimentReport report;
    try {
      report = dispatch(config, seed, jobs);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      ExperimentReport partial;
      partial.experiment = value_or<std::string>(config, "experiment", "unknown");
      partial.verdict = "fail";
      partial.notes.push_back(std::string("partial: experiment aborted: ") + e.what());
      write_report(partial, out_dir);
      std::cerr << "experiment error: " << e.what() << "\n";
      return 3;
    }
    auto files = write_report(report, out_dir);
    for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
    std::cout << "verdict: " << report.verdict << "\n";
    return report.verdict == "fail" ? 1 : 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for shallow-network approximation rates"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out";
  std::vector<std::string> overrides;
  unsigned seed = 1;
  int jobs = 0;
  if (const char* env = std::getenv("RIDGELAB_JOBS")) jobs = std::atoi(env);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--set", overrides, "override a config field, dotted path key=value");
    cmd->add_option("--seed", seed, "RNG seed");
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  };

  CLI::App* cmd_run = app.add_subcommand("run", "run an experiment described by a config file");
  add_common(cmd_run);
  CLI::App* cmd_list = app.add_subcommand("list-catalog", "list built-in functions and experiments");
  for (const char* name : {"verify-chain", "shatter", "modulus", "best-approx", "resonance",
                           "rates"})
    add_common(app.add_subcommand(name, std::string("shortcut for experiment kind ") + name));

  CLI11_PARSE(app, argc, argv);

  if (cmd_list->parsed()) {
    list_catalog();
    return 0;
  }

  ordered_json config = ordered_json::object();
  if (!config_path.empty()) {
    try {
      config = load_config(config_path);
    } catch (const ConfigError& e) {
      std::cerr << "config error: " << e.what() << "\n";
      return 2;
    }
  }

  std::string forced_kind;
  for (const auto* sub : app.get_subcommands())
    if (sub->get_name() != "run") forced_kind = sub->get_name();

  return run_and_write(std::move(config), overrides, seed, jobs, out_dir, forced_kind);
}
