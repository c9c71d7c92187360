#include "cfdyn/experiment.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <sstream>

#include "cfdyn/mc.hpp"
#include "cfdyn/sweep.hpp"

namespace cfdyn {

std::string format_double(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, end);
}

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::Gradient: return "gradient";
    case Command::Stationary: return "stationary";
    case Command::CoopIndex: return "coop-index";
    case Command::SweepChi: return "sweep-chi";
    case Command::Simulate: return "simulate";
  }
  return "?";
}

bool needs_stationary(Command c) {
  return c == Command::Stationary || c == Command::CoopIndex || c == Command::SweepChi;
}

}  // namespace

ExperimentRequest parse_args(const std::vector<std::string>& argv) {
  ExperimentRequest req;
  auto& cfg = req.cfg;
  std::string mode = "sl";
  std::optional<std::int64_t> burn_in;
  std::optional<int> initial_k;

  CLI::App app{"Social learning vs counterfactual thinking in N-person stag-hunt populations", "cfdyn"};
  app.require_subcommand(1);
  app.add_option("--z", cfg.population_size, "population size Z");
  app.add_option("--n", cfg.game.group_size, "group size N");
  app.add_option("--f", cfg.game.enhancement, "enhancement factor F");
  app.add_option("--m", cfg.game.threshold, "coordination threshold M");
  app.add_option("--cost", cfg.game.cost, "cooperation cost c");
  app.add_option("--mu", cfg.mutation, "mutation (exploration) probability");
  app.add_option("--beta-sl", cfg.beta_sl, "social-learning selection intensity");
  app.add_option("--beta-ct", cfg.beta_ct, "counterfactual selection intensity");
  app.add_option("--chi", cfg.chi, "probability of social learning in mixed mode");
  app.add_option("--mode", mode, "update rule: sl, ct or mixed");
  app.add_flag("--exact-pairing", cfg.exact_pairing, "draw role models from the other Z-1 agents");
  app.add_option("--points", req.points, "sweep-chi grid size");
  app.add_option("--seed", req.seed, "simulate: RNG seed");
  app.add_option("--steps", req.steps, "simulate: total revisions");
  app.add_option("--burn-in", burn_in, "simulate: discarded revisions (default 10*Z)");
  app.add_option("--initial-k", initial_k, "simulate: initial cooperator count (default Z/2)");
  app.add_option("--out", req.out, "write CSV to this file instead of stdout");

  const std::pair<Command, const char*> commands[] = {
      {Command::Gradient, "transition probabilities and learning gradient per state"},
      {Command::Stationary, "stationary distribution of the birth-death chain"},
      {Command::CoopIndex, "stationary cooperation index"},
      {Command::SweepChi, "cooperation index over a grid of chi in [0, 1] (mixed mode)"},
      {Command::Simulate, "agent-based Monte Carlo visit frequencies"},
  };
  for (const auto& [cmd, help] : commands) {
    auto* sub = app.add_subcommand(command_name(cmd), help);
    sub->fallthrough();
    sub->callback([&req, cmd = cmd] { req.command = cmd; });
  }

  std::vector<const char*> raw{"cfdyn"};
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  try {
    cfg.mode = parse_update_mode(mode);
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (req.command == Command::SweepChi) {
    cfg.mode = UpdateMode::Mixed;
    if (req.points < 2) throw UsageError("--points must be >= 2 for a chi sweep over [0, 1]");
  }
  if (needs_stationary(req.command) && cfg.mutation <= 0.0)
    throw UsageError("--mu must be > 0: without mutation the chain is reducible and has no unique "
                     "stationary distribution (the monomorphic states absorb)");
  if (req.command == Command::Simulate) {
    req.burn_in = burn_in.value_or(default_burn_in(cfg));
    req.initial_k = initial_k.value_or(cfg.population_size / 2);
    if (req.burn_in < 0 || req.steps <= req.burn_in) throw UsageError("--steps must exceed --burn-in >= 0");
    if (req.initial_k < 0 || req.initial_k > cfg.population_size)
      throw UsageError("--initial-k must lie in [0, Z]");
  }
  return req;
}

namespace {

std::string metadata(const ExperimentRequest& req) {
  const auto& c = req.cfg;
  std::ostringstream os;
  os << "# command=" << command_name(req.command) << " Z=" << c.population_size << " N=" << c.game.group_size
     << " M=" << c.game.threshold << " F=" << format_double(c.game.enhancement)
     << " c=" << format_double(c.game.cost) << " mu=" << format_double(c.mutation)
     << " beta_sl=" << format_double(c.beta_sl) << " beta_ct=" << format_double(c.beta_ct)
     << " chi=" << format_double(c.chi) << " mode=" << to_string(c.mode)
     << " exact_pairing=" << (c.exact_pairing ? 1 : 0);
  if (req.command == Command::SweepChi) os << " points=" << req.points;
  if (req.command == Command::Simulate)
    os << " seed=" << req.seed << " steps=" << req.steps << " burn_in=" << req.burn_in
       << " initial_k=" << req.initial_k;
  return os.str();
}

}  // namespace

std::string run_experiment(const ExperimentRequest& req) {
  const auto& cfg = req.cfg;
  const int Z = cfg.population_size;
  std::ostringstream os;
  if (req.command != Command::Simulate) os << metadata(req) << '\n';
  auto ratio = [Z](int k) { return format_double(static_cast<double>(k) / Z); };

  switch (req.command) {
    case Command::Gradient: {
      const auto a = analyze(cfg);
      os << "k,k_over_Z,t_plus,t_minus,G\n";
      for (int k = 0; k <= Z; ++k)
        os << k << ',' << ratio(k) << ',' << format_double(a.kernel.t_plus[k]) << ','
           << format_double(a.kernel.t_minus[k]) << ',' << format_double(a.profile.g[k]) << '\n';
      break;
    }
    case Command::Stationary: {
      const auto dist = stationary_distribution(analyze(cfg).kernel);
      os << "k,k_over_Z,s_k\n";
      for (int k = 0; k <= Z; ++k) os << k << ',' << ratio(k) << ',' << format_double(dist.s[k]) << '\n';
      break;
    }
    case Command::CoopIndex: {
      const auto summary = solve_cooperation(cfg);
      os << "expected_cooperators,normalized_index\n"
         << format_double(summary.expected_cooperators) << ',' << format_double(summary.normalized_index) << '\n';
      break;
    }
    case Command::SweepChi: {
      const auto grid = linear_grid(0.0, 1.0, req.points);
      os << "chi,expected_cooperators,normalized_index\n";
      for (const auto& row : sweep_chi(cfg, grid))
        os << format_double(row.chi) << ',' << format_double(row.summary.expected_cooperators) << ','
           << format_double(row.summary.normalized_index) << '\n';
      break;
    }
    case Command::Simulate: {
      const auto report = Simulator(cfg).run(req.initial_k, req.steps, req.burn_in, req.seed);
      os << metadata(req) << " final_state=" << report.final_state << '\n';
      os << "k,empirical_frequency\n";
      for (int k = 0; k <= Z; ++k) os << k << ',' << format_double(report.empirical_distribution[k]) << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace cfdyn
