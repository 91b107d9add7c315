// Command-line front end: solvers and simulations for the two stopping games,
// with reproducible seeds and json/csv output.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stopmax/bound.hpp"
#include "stopmax/distribution.hpp"
#include "stopmax/game_alpha.hpp"
#include "stopmax/game_max.hpp"
#include "stopmax/sim.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using nlohmann::ordered_json;
using namespace stopmax;

struct GlobalOpts {
  std::string out = "json";
  int precision = 6;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int threads = 0;
  long long samples = 1000000;
  int grid = 4096;
};

double roundp(double v, int p) {
  const double scale = std::pow(10.0, p);
  return std::round(v * scale) / scale;
}

std::string fmt(double v, int p) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", p, v);
  return buf;
}

void apply_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

std::uint64_t effective_seed(const GlobalOpts& g) {
  if (g.seed_given) return g.seed;
  if (const char* env = std::getenv("STOPMAX_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

void emit_rows(const GlobalOpts& g, const std::vector<std::string>& header,
               const std::vector<std::vector<ordered_json>>& rows) {
  if (g.out == "csv") {
    for (std::size_t i = 0; i < header.size(); ++i)
      std::cout << (i ? "," : "") << header[i];
    std::cout << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) std::cout << ",";
        if (row[i].is_number_float())
          std::cout << fmt(row[i].get<double>(), g.precision);
        else if (row[i].is_null())
          ;  // empty field
        else if (row[i].is_string())
          std::cout << row[i].get<std::string>();
        else
          std::cout << row[i].dump();
      }
      std::cout << "\n";
    }
    return;
  }
  ordered_json out = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json obj;
    for (std::size_t i = 0; i < header.size(); ++i) {
      ordered_json v = row[i];
      if (v.is_number_float()) v = roundp(v.get<double>(), g.precision);
      obj[header[i]] = v;
    }
    out.push_back(obj);
  }
  std::cout << out.dump(2) << "\n";
}

void emit_object(const GlobalOpts& g, const ordered_json& obj) {
  if (g.out == "csv") {
    std::vector<std::string> header;
    std::vector<ordered_json> row;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      header.push_back(it.key());
      row.push_back(it.value());
    }
    emit_rows(g, header, {row});
    return;
  }
  ordered_json rounded;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    ordered_json v = it.value();
    if (v.is_number_float()) v = roundp(v.get<double>(), g.precision);
    rounded[it.key()] = v;
  }
  std::cout << rounded.dump(2) << "\n";
}

ordered_json report_json(const SimulationReport& r) {
  ordered_json j;
  j["game"] = r.game == Game::Max ? "max" : "alpha";
  if (r.game == Game::Alpha) j["alpha"] = r.alpha;
  j["estimate"] = r.estimate;
  j["stderr"] = r.std_error;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  return j;
}

struct AlphaGrid {
  double start = 0.1, stop = 0.9, step = 0.1;
};

AlphaGrid parse_alpha_grid(const std::string& s) {
  AlphaGrid g;
  if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &g.start, &g.stop, &g.step) != 3 ||
      !(g.step > 0.0))
    throw std::invalid_argument("alpha grid must be 'start:stop:step'");
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal stopping games: stop at the maximum, or within a "
               "proportion of it"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--out", g.out, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--precision", g.precision, "Decimal places in output")
      ->check(CLI::Range(0, 17));
  auto* seed_opt = app.add_option("--seed", g.seed, "Master RNG seed");
  app.add_option("--threads", g.threads, "Worker thread cap (0 = default)");
  app.add_option("--samples", g.samples, "Monte Carlo sample count");
  app.add_option("--grid", g.grid, "DP grid size for continuous solvers");

  // gm-table
  int max_n = 10, gm_grid = 8192;
  auto* gm_table = app.add_subcommand(
      "gm-table", "Optimal win probabilities for the stop-at-the-maximum game");
  gm_table->add_option("--max-n", max_n, "Largest horizon")->check(CLI::PositiveNumber);
  gm_table->add_option("--gm-grid", gm_grid, "Quadrature grid");

  // solve
  std::string dist_spec;
  int n = 2;
  double alpha = 0.5;
  bool tables = false;
  auto* solve_cmd =
      app.add_subcommand("solve", "Optimal policy and value of the proportion game");
  solve_cmd->add_option("--dist", dist_spec, "Distribution spec")->required();
  solve_cmd->add_option("--n", n, "Horizon")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--alpha", alpha, "Proportion in (0,1)");
  solve_cmd->add_flag("--tables", tables, "Include full DP tables (json only)");

  // sweep
  std::string alpha_grid_str = "0.1:0.9:0.1";
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Optimal value across a grid of alpha");
  sweep_cmd->add_option("--dist", dist_spec, "Distribution spec")->required();
  sweep_cmd->add_option("--n", n, "Horizon")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--alpha-grid", alpha_grid_str, "start:stop:step");

  // simulate
  std::string game_str = "max", policy_str;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo policy evaluation");
  sim_cmd->add_option("--dist", dist_spec, "Distribution spec")->required();
  sim_cmd->add_option("--n", n, "Horizon")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--alpha", alpha, "Proportion in (0,1)");
  sim_cmd->add_option("--game", game_str, "Which game to score")
      ->check(CLI::IsMember({"max", "alpha"}));
  sim_cmd->add_option("--policy", policy_str,
                      "gm (decision numbers) or alpha-dp (DP optimal); "
                      "defaults to the game's own optimal rule")
      ->check(CLI::IsMember({"gm", "alpha-dp"}));

  // certainty
  auto* cert_cmd = app.add_subcommand(
      "certainty", "Can the proportion game be won with certainty?");
  cert_cmd->add_option("--dist", dist_spec, "Distribution spec")->required();
  cert_cmd->add_option("--alpha", alpha, "Proportion in (0,1)");

  // bound-demo
  double delta = 0.05;
  auto* bound_cmd = app.add_subcommand(
      "bound-demo", "Sharpness of the lower bound via the spread-out family");
  bound_cmd->add_option("--n", n, "Horizon")->check(CLI::PositiveNumber);
  bound_cmd->add_option("--alpha", alpha, "Proportion in (0,1)");
  bound_cmd->add_option("--delta", delta, "Gap target in (0,1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  apply_threads(g.threads);
  g.seed_given = seed_opt->count() > 0;
  const std::uint64_t seed = effective_seed(g);

  try {
    if (gm_table->parsed()) {
      const auto values = gm_values(max_n, gm_grid);
      const auto dn = decision_numbers(max_n);
      std::vector<std::vector<ordered_json>> rows;
      for (int i = 1; i <= max_n; ++i)
        rows.push_back({i, values[i - 1], dn.b[i - 1]});
      emit_rows(g, {"n", "value", "decision_number"}, rows);
    } else if (solve_cmd->parsed()) {
      const auto d = parse_dist_spec(dist_spec);
      const auto sol = solve(d, {n, alpha}, g.grid);
      ordered_json j;
      j["dist"] = dist_spec;
      j["n"] = n;
      j["alpha"] = alpha;
      j["solver"] = sol.continuous ? "continuous" : "discrete";
      if (sol.continuous) j["grid"] = g.grid;
      j["threshold"] = sol.first_step_threshold();
      j["optimal_value"] = sol.optimal_value;
      if (tables && g.out == "json") {
        j["state_grid"] = sol.state_grid;
        j["continue_value"] = sol.cont;
      }
      emit_object(g, j);
    } else if (sweep_cmd->parsed()) {
      const auto d = parse_dist_spec(dist_spec);
      const auto ag = parse_alpha_grid(alpha_grid_str);
      const bool closed_form = d.kind() == Distribution::Kind::Uniform &&
                               d.support_min() == 0.0 &&
                               d.support_max() == 1.0 && n == 2;
      std::vector<std::vector<ordered_json>> rows;
      for (double a = ag.start; a <= ag.stop + 1e-12; a += ag.step) {
        const auto sol = solve(d, {n, a}, g.grid);
        ordered_json cf;
        if (closed_form) cf = uniform_n2_closed_form(a).second;
        rows.push_back({a, sol.optimal_value, cf});
      }
      emit_rows(g, {"alpha", "value", "closed_form"}, rows);
    } else if (sim_cmd->parsed()) {
      const auto d = parse_dist_spec(dist_spec);
      const Game game = game_str == "max" ? Game::Max : Game::Alpha;
      if (policy_str.empty())
        policy_str = game == Game::Max ? "gm" : "alpha-dp";
      const StoppingPolicy pol = policy_str == "gm"
                                     ? gm_policy(n)
                                     : solve(d, {n, alpha}, g.grid).policy();
      const auto r = simulate(d, pol, game, alpha, g.samples, seed);
      ordered_json j = report_json(r);
      j["dist"] = dist_spec;
      j["n"] = n;
      j["policy"] = policy_str;
      emit_object(g, j);
    } else if (cert_cmd->parsed()) {
      const auto d = parse_dist_spec(dist_spec);
      const double m = d.support_min();
      const double M = d.support_max();
      ordered_json j;
      j["dist"] = dist_spec;
      j["alpha"] = alpha;
      const bool certain = certainty_condition(d, alpha);
      j["certain"] = certain;
      if (!(m > 0.0) || !std::isfinite(M)) {
        j["condition"] = nullptr;
        j["reason"] = "support must satisfy 0 < min <= max < inf";
      } else if (alpha * alpha <= m / M + 1e-12) {
        j["condition"] = "i";
      } else if (certain) {
        j["condition"] = "ii";
      } else {
        j["condition"] = nullptr;
        j["interval_lo"] = m / alpha;
        j["interval_hi"] = alpha * M;
        j["interval_mass"] = d.mass_between(m / alpha, alpha * M);
      }
      emit_object(g, j);
    } else if (bound_cmd->parsed()) {
      const auto r = gap_demo(n, alpha, delta, g.samples, seed, g.grid);
      ordered_json j;
      j["n"] = r.n;
      j["alpha"] = r.alpha;
      j["delta"] = r.delta;
      j["k_used"] = r.k_used;
      j["eps_used"] = r.eps_used;
      j["v_alpha_est"] = r.v_alpha_est;
      j["v_alpha_stderr"] = r.v_alpha_stderr;
      j["v_max_est"] = r.v_max_est;
      j["v_max_stderr"] = r.v_max_stderr;
      j["gap_est"] = r.gap_est;
      j["samples"] = r.samples;
      j["seed"] = r.seed;
      emit_object(g, j);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
