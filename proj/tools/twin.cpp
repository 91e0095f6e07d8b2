#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "twin/export.hpp"
#include "twin/format.hpp"
#include "twin/simulate.hpp"
#include "twin/verification.hpp"
#include "twin/window_game.hpp"

namespace {

using namespace twin;

constexpr int kError = 2;

Mode parse_mode(const std::string& s) { return s == "indirect" ? Mode::Indirect : Mode::Direct; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return Json::parse(in);
}

void print_path(const std::vector<int>& path, const RegionGraph& g, const TimedAutomaton& ta) {
  for (int v : path) std::cout << "    " << encode(g.vertices[v], ta) << "\n";
}

int cmd_verify(const std::string& model, const std::string& mode_name, bool json) {
  const ModelBundle b = load_model_file(model);
  const RegionGraph g = build_region_graph(b.automaton);
  const Mode mode = parse_mode(mode_name);
  const Verdict v = verify(b, g, mode);
  if (json) {
    std::cout << verdict_to_json(v, mode, g, b.automaton).dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < v.dimensions.size(); ++k) {
      const auto& w = v.dimensions[k];
      std::cout << "dimension " << k << ": " << (w ? "Violated" : "Holds") << "\n";
      if (!w) continue;
      std::cout << "  prefix (anchor at " << w->anchor_index << "):\n";
      print_path(w->prefix, g, b.automaton);
      std::cout << "  cycle:\n";
      print_path(w->cycle, g, b.automaton);
      if (w->indirect) {
        std::cout << "  return:\n";
        print_path(w->return_path, g, b.automaton);
      }
    }
  }
  return v.holds() ? 0 : 1;
}

int cmd_solve(const std::string& model, const std::string& mode_name, const std::string& strategy_out, bool json) {
  const ModelBundle b = load_model_file(model);
  const TimedGame game = game_of(b);
  const RegionGraph g = build_region_graph(b.automaton);
  const MoveTable table(game, g);
  const GameSolution s =
      parse_mode(mode_name) == Mode::Direct ? solve_direct(table, b.priorities) : solve_indirect(table, b.priorities);
  if (!strategy_out.empty()) write_file(strategy_out, strategy_to_json(*s.strategy).dump() + "\n");
  const bool wins = s.winning[g.initial];
  if (json) {
    std::cout << solution_to_json(s, g, b.automaton).dump(2) << "\n";
  } else {
    std::size_t count = 0;
    for (bool w : s.winning) count += w;
    std::cout << "initial region: " << (wins ? "winning" : "losing") << "\n"
              << "winning regions: " << count << " of " << g.size() << "\n"
              << "lambda bound: " << s.lambda << "\n"
              << "iterations: " << s.iterations << "\n";
    for (int r = 0; r < g.size(); ++r)
      if (s.winning[r]) std::cout << "  " << encode(g.vertices[r], b.automaton) << "\n";
  }
  return wins ? 0 : 1;
}

int cmd_regions(const std::string& model, const std::string& dot, bool count_only) {
  const ModelBundle b = load_model_file(model);
  const RegionGraph g = build_region_graph(b.automaton);
  if (!dot.empty()) write_file(dot, export_region_graph_dot(g, b.automaton));
  if (count_only) {
    std::cout << count_clock_regions(b.automaton) << "\n";
    return 0;
  }
  std::size_t delays = 0;
  for (const auto& e : g.edges) delays += e.kind() == StepKind::Delay;
  std::cout << "clock regions: " << count_clock_regions(b.automaton) << "\n"
            << "region bound: " << clock_region_bound(b.automaton) << "\n"
            << "reachable state regions: " << g.size() << "\n"
            << "edges: " << g.edges.size() << " (" << delays << " delay)\n";
  return 0;
}

void print_monitor(const Run& run, const PriorityFunction& pf, std::int64_t lambda) {
  const auto verdicts = check_prefix_direct(run, pf, lambda);
  for (std::size_t k = 0; k < verdicts.size(); ++k) {
    const auto& v = verdicts[k];
    std::cout << "dimension " << k << ": ";
    switch (v.kind) {
      case DirectKind::ViolatedAt: std::cout << "Violated (window from " << v.index << " broken)"; break;
      case DirectKind::PendingFrom: std::cout << "Pending (open since " << v.index << ")"; break;
      case DirectKind::ClearSoFar: std::cout << "ClearSoFar"; break;
    }
    std::cout << "\n";
  }
}

int cmd_simulate(const std::string& model, const std::string& strategy_path, std::uint64_t seed,
                 const std::string& horizon, const std::string& trace, std::int64_t lambda) {
  const ModelBundle b = load_model_file(model);
  const TimedGame game = game_of(b);
  const RegionGraph g = build_region_graph(b.automaton);
  const MoveTable table(game, g);
  const auto strategy = strategy_from_json(read_json(strategy_path), g, b.automaton);
  RandomAdversary adversary(seed);
  const Simulation sim = simulate(table, *strategy, adversary, parse_rational(horizon));
  if (!trace.empty()) write_file(trace, run_to_json(sim.run, b.automaton).dump(2) + "\n");
  if (lambda < 0) lambda = static_cast<std::int64_t>(lambda_bound(b.automaton, b.priorities));
  std::cout << "steps: " << sim.run.moves.size() << "\n"
            << "elapsed: " << to_string(sim.run.time(sim.run.states.size() - 1)) << "\n"
            << "reached horizon: " << (sim.reached_horizon ? "yes" : "no") << "\n"
            << "lambda: " << lambda << "\n";
  print_monitor(sim.run, b.priorities, lambda);
  return 0;
}

int cmd_monitor(const std::string& model, const std::string& trace, std::int64_t lambda) {
  const ModelBundle b = load_model_file(model);
  const Run run = run_from_json(read_json(trace), b.automaton);
  print_monitor(run, b.priorities, lambda);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded timed window objectives: verification and game solving"};
  app.require_subcommand(1);

  std::string model, mode = "direct", strategy_out, dot, strategy_in, horizon = "100", trace;
  bool json = false, count = false;
  std::uint64_t seed = 0;
  std::int64_t lambda = -1;

  auto* verify_cmd = app.add_subcommand("verify", "Check all time-divergent paths");
  verify_cmd->add_option("model", model, "Model file")->required();
  verify_cmd->add_option("--mode", mode)->check(CLI::IsMember({"direct", "indirect"}));
  verify_cmd->add_flag("--json", json);

  auto* solve_cmd = app.add_subcommand("solve", "Compute winning regions");
  solve_cmd->add_option("model", model, "Model file")->required();
  solve_cmd->add_option("--mode", mode)->check(CLI::IsMember({"direct", "indirect"}));
  solve_cmd->add_option("--strategy", strategy_out, "Write the strategy as JSON");
  solve_cmd->add_flag("--json", json);

  auto* regions_cmd = app.add_subcommand("regions", "Region graph statistics");
  regions_cmd->add_option("model", model, "Model file")->required();
  regions_cmd->add_option("--dot", dot, "Write the region graph as DOT");
  regions_cmd->add_flag("--count", count, "Print the clock region count only");

  auto* simulate_cmd = app.add_subcommand("simulate", "Play a strategy against a random adversary");
  simulate_cmd->add_option("model", model, "Model file")->required();
  simulate_cmd->add_option("--strategy", strategy_in, "Strategy JSON")->required();
  simulate_cmd->add_option("--seed", seed);
  simulate_cmd->add_option("--horizon", horizon, "Time horizon (rational)");
  simulate_cmd->add_option("--trace", trace, "Write the run as JSON");
  simulate_cmd->add_option("--lambda", lambda, "Window bound for the summary");

  auto* monitor_cmd = app.add_subcommand("monitor", "Window verdicts on a recorded run");
  monitor_cmd->add_option("model", model, "Model file")->required();
  monitor_cmd->add_option("--trace", trace, "Run JSON")->required();
  monitor_cmd->add_option("--lambda", lambda)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*verify_cmd) return cmd_verify(model, mode, json);
    if (*solve_cmd) return cmd_solve(model, mode, strategy_out, json);
    if (*regions_cmd) return cmd_regions(model, dot, count);
    if (*simulate_cmd) return cmd_simulate(model, strategy_in, seed, horizon, trace, lambda);
    if (*monitor_cmd) return cmd_monitor(model, trace, lambda);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
