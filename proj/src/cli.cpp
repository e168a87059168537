// Copyright 2026 The advgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "advgraph/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "advgraph/bounds.hpp"
#include "advgraph/errors.hpp"
#include "advgraph/generator.hpp"
#include "advgraph/io.hpp"
#include "advgraph/parallel.hpp"
#include "advgraph/rng.hpp"
#include "advgraph/simulator.hpp"
#include "advgraph/solver.hpp"

namespace advgraph {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Error raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

// The single-robot instance the solver works on, plus the start state.
struct Work {
  std::optional<JointInstance> joint;
  GameState s0;
  const Instance& instance() const { return joint->instance; }
};

Work make_work(const Instance& inst) {
  Work w;
  w.joint = build_joint(inst);
  w.s0 = initial_state(*w.joint);
  return w;
}

Solution run_solver(const Instance& inst, const SolveOptions& opts, bool subgame) {
  return subgame ? solve_by_subgames(inst, opts) : shapley_solve(inst, opts);
}

// Lifts a solution of the pruned instance back onto the original state space.
// States at removed nodes get NaN values and uniform policies.
Solution expand_pruned(const Solution& reduced, const PruneReport& report,
                       const Instance& original) {
  Solution sol = reduced;
  sol.space = enumerate_states(original);
  sol.value.assign(sol.space.size(), NAN);
  sol.blue_policy.assign(sol.space.size(), {});
  sol.red_policy.assign(sol.space.size(), {});
  for (std::size_t i = 0; i < sol.space.size(); ++i) {
    const GameState s = sol.space.state(i);
    const std::span<const int> blue = blue_actions(s, original);
    const std::vector<int> red = red_actions(s, original);
    const int q = report.relabeling.old_to_new[s.position - 1];
    if (q == 0) {
      sol.blue_policy[i].assign(blue.size(), 1.0 / blue.size());
      sol.red_policy[i].assign(red.size(), 1.0 / red.size());
      continue;
    }
    const GameState r{q, s.graph, s.ammo};
    sol.value[i] = reduced.value_at(r);
    sol.red_policy[i] = reduced.red_at(r);
    MixedStrategy& b = sol.blue_policy[i];
    b.assign(blue.size(), 0.0);
    const std::span<const int> reduced_blue = blue_actions(r, report.reduced);
    const MixedStrategy& rb = reduced.blue_at(r);
    for (std::size_t j = 0; j < reduced_blue.size(); ++j) {
      const int target = report.relabeling.new_to_old[reduced_blue[j] - 1];
      const auto it = std::find(blue.begin(), blue.end(), target);
      b[static_cast<std::size_t>(it - blue.begin())] = rb[j];
    }
  }
  return sol;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  GeneratorOptions gen;
  std::string out;
  bool no_self_loops = false;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  GeneratorOptions opts = a.gen;
  opts.sample_self_loops = !a.no_self_loops;
  const Instance inst = random_instance(opts);
  write_text_file(a.out, instance_to_json(inst).dump(2) + "\n");
  out << "wrote " << a.out << ": N=" << inst.node_count() << " K=" << inst.graph_count()
      << " edges=" << inst.graphs().graph(1).edges().size() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string instance;
  double gamma = 1.0 - 1e-9;
  double tol = 1e-8;
  int max_iter = 100000;
  std::string mode = "subgame";
  bool prune = false;
  bool warm_start = false;
  std::string out;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = instance_from_json(read_json_file(a.instance));
  const Work w = make_work(inst);
  SolveOptions opts;
  opts.gamma = a.gamma;
  opts.tol = a.tol;
  opts.max_iter = a.max_iter;
  opts.warm_start_upper = a.warm_start;
  const bool subgame = a.mode == "subgame";

  const auto start = Clock::now();
  Solution sol;
  nlohmann::json pruned = nlohmann::json::array();
  if (a.prune) {
    const PruneReport report = prune_dominated(w.instance(), a.gamma);
    if (!report.certified) {
      err << "warning: gamma " << num(a.gamma)
          << " is below the discount threshold; nothing pruned\n";
    }
    for (const RemovedEdge& e : report.removed) {
      pruned.push_back({{"edge", {e.edge.from, e.edge.to}},
                        {"dominated_by", e.dominated_by},
                        {"margin", e.margin}});
      out << "pruned " << e.edge.from << "->" << e.edge.to << " (dominated by "
          << e.dominated_by << ", margin " << num(e.margin) << ")\n";
    }
    sol = expand_pruned(run_solver(report.reduced, opts, subgame), report, w.instance());
  } else {
    sol = run_solver(w.instance(), opts, subgame);
  }
  const double wall = elapsed_ms(start);

  if (!a.out.empty()) {
    nlohmann::json j = solution_to_json(sol, w.instance());
    j["mode"] = a.mode;
    j["tol"] = a.tol;
    j["robots"] = w.joint->robots;
    if (w.joint->robots > 1) j["joint_nodes"] = w.joint->positions;
    if (a.prune) j["pruned_edges"] = std::move(pruned);
    write_text_file(a.out, j.dump(2) + "\n");
  }
  out << "value=" << num(sol.value_at(w.s0)) << " state=" << to_string(w.s0)
      << " residual=" << num(sol.residual) << " iterations=" << sol.iterations
      << " converged=" << (sol.converged ? "true" : "false") << " wall_ms=" << num(wall)
      << "\n";
  if (!sol.converged) {
    err << "error: value iteration did not converge within " << a.max_iter
        << " sweeps\n";
    return kExitNotConverged;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::string instance;
  double gamma = 1.0 - 1e-9;
  std::string out;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  const Instance inst = instance_from_json(read_json_file(a.instance));
  const Work w = make_work(inst);
  const double threshold = gamma_threshold(w.instance());
  const BoundTable table = bound_table(w.instance(), a.gamma);
  nlohmann::json j;
  j["gamma"] = a.gamma;
  j["gamma_threshold"] = threshold;
  j["certified"] = a.gamma >= threshold;
  j["heuristic"] = w.joint->robots > 1;
  nlohmann::json rows = nlohmann::json::object();
  for (std::size_t i = 0; i < table.space.size(); ++i) {
    rows[to_string(table.space.state(i))] = {table.bounds[i].lower, table.bounds[i].upper};
  }
  j["bounds"] = std::move(rows);
  emit(a.out, j.dump(2) + "\n", out);
  if (!a.out.empty()) {
    const BoundPair& b = table.at(w.s0);
    out << "gamma_threshold=" << num(threshold) << " state=" << to_string(w.s0)
        << " lower=" << num(b.lower) << " upper=" << num(b.upper) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string instance;
  std::string solution;
  std::string blue = "ne";
  std::string red = "ne";
  int rollouts = 1000;
  std::optional<int> horizon;
  std::optional<double> gamma;
  std::uint64_t seed = 0;
  bool exact = false;
  std::string out;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  if ((a.blue == "ne" || a.red == "ne") && a.solution.empty()) {
    throw UsageError("the ne policy needs --solution");
  }
  if (!a.exact && a.rollouts < 1) throw UsageError("--rollouts must be at least 1");
  const Instance inst = instance_from_json(read_json_file(a.instance));
  const Work w = make_work(inst);
  const Instance& g = w.instance();
  std::optional<Solution> sol;
  if (!a.solution.empty()) sol = solution_from_json(read_json_file(a.solution), g);
  const double gamma = a.gamma ? *a.gamma : sol ? sol->gamma : 1.0 - 1e-9;

  const Policy blue = a.blue == "ne"         ? Policy::equilibrium(*sol, Side::kBlue)
                      : a.blue == "security" ? Policy::blue_security(g)
                      : a.blue == "naive"    ? Policy::naive_best_case(g)
                                             : Policy::uniform_random(g, Side::kBlue);
  const Policy red = a.red == "ne"         ? Policy::equilibrium(*sol, Side::kRed)
                     : a.red == "security" ? Policy::red_security(g, gamma)
                     : a.red == "never"    ? Policy::red_never_switch(g)
                                           : Policy::uniform_random(g, Side::kRed);
  std::ostream& summary = a.out.empty() ? err : out;

  if (a.exact) {
    const std::vector<double> cost = exact_expected_cost(g, blue, red, gamma);
    const StateSpace space = enumerate_states(g);
    std::ostringstream csv;
    csv << "state,cost\n";
    for (std::size_t i = 0; i < space.size(); ++i) {
      csv << to_string(space.state(i)) << "," << num(cost[i]) << "\n";
    }
    emit(a.out, csv.str(), out);
    summary << "exact_cost=" << num(cost[space.index(w.s0)]) << " state=" << to_string(w.s0)
            << "\n";
    return kExitOk;
  }

  const int horizon = a.horizon ? *a.horizon : default_horizon(g);
  const auto n = static_cast<std::size_t>(a.rollouts);
  std::vector<Trajectory> runs(n);
  parallel_for(n, [&](std::size_t i) {
    runs[i] = rollout(g, blue, red, w.s0, gamma, horizon, a.seed, i);
    runs[i].states.clear();
  });
  std::ostringstream csv;
  csv << "rollout,cost,reached,length\n";
  double mean = 0.0;
  int reached = 0;
  for (std::size_t i = 0; i < n; ++i) {
    csv << i << "," << num(runs[i].discounted_total) << "," << (runs[i].reached_goal ? 1 : 0)
        << "," << runs[i].length << "\n";
    mean += runs[i].discounted_total;
    reached += runs[i].reached_goal ? 1 : 0;
  }
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (const Trajectory& t : runs) ss += (t.discounted_total - mean) * (t.discounted_total - mean);
  const double se = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
  emit(a.out, csv.str(), out);
  summary << "mean_cost=" << num(mean) << " std_error=" << num(se)
          << " goal_fraction=" << num(static_cast<double>(reached) / static_cast<double>(n))
          << " rollouts=" << n << " horizon=" << horizon << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string kind;
  int n_min = 4;
  int n_max = 6;
  int samples = 20;
  int k = 3;
  double edge_prob = 0.5;
  int ammo = 6;
  std::vector<int> robots;
  double gamma = 0.99;
  double tol = 1e-8;
  int max_iter = 100000;
  int max_joint_nodes = 200;
  std::uint64_t seed = 0;
  std::string out;
};

struct SweepRow {
  std::uint64_t seed = 0;
  int n_max = 0;
  int nodes = 0;
  int robots = 1;
  int ammo = 0;
  double gamma = 0.0;
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double normalized = 0.0;
  std::string policy;
  double runtime_ms = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool generated = true;
  bool trivial = false;
  bool converged = true;
};

double normalize(double v, const BoundPair& b) { return (v - b.lower) / (b.upper - b.lower); }

SweepResult sweep_instance(const SweepArgs& a, int n_max, std::uint64_t seed) {
  SweepResult res;
  GeneratorOptions gen;
  gen.n_max = n_max;
  gen.k = a.k;
  gen.edge_prob = a.edge_prob;
  gen.max_ammo = a.ammo;
  gen.seed = seed;
  std::optional<Instance> base;
  try {
    base = random_instance(gen);
  } catch (const InvalidInstance&) {
    res.generated = false;
    return res;
  }
  const double gamma = std::max(a.gamma, gamma_threshold(*base));
  if (is_trivial(*base, gamma)) {
    res.trivial = true;
    return res;
  }
  const BoundTable bounds = bound_table(*base, gamma);
  SolveOptions opts;
  opts.gamma = gamma;
  opts.tol = a.tol;
  opts.max_iter = a.max_iter;
  const GameState start{1, 1, a.ammo};

  SweepRow proto;
  proto.seed = seed;
  proto.n_max = n_max;
  proto.nodes = base->node_count();
  proto.gamma = gamma;

  auto add = [&](int m, int ammo, double value, const std::string& policy, double ms) {
    SweepRow r = proto;
    r.robots = m;
    r.ammo = ammo;
    r.value = value;
    const BoundPair& b = bounds.at(GameState{1, 1, ammo});
    r.lower = b.lower;
    r.upper = b.upper;
    r.normalized = normalize(value, b);
    r.policy = policy;
    r.runtime_ms = ms;
    res.rows.push_back(r);
  };

  for (int m : a.robots) {
    const Instance inst(base->graphs(), base->red_graph(), m, a.ammo);
    const auto t0 = Clock::now();
    const JointInstance joint = build_joint(inst);
    if (joint.instance.node_count() > a.max_joint_nodes) continue;
    const Solution sol = solve_by_subgames(joint.instance, opts);
    const double ms = elapsed_ms(t0);
    res.converged = res.converged && sol.converged;
    const GameState s0 = initial_state(joint);
    if (a.kind == "ammo") {
      for (int alpha = 0; alpha <= a.ammo; ++alpha) {
        add(m, alpha, sol.value_at(GameState{s0.position, 1, alpha}) / m, "ne", ms);
      }
    } else {
      add(m, a.ammo, sol.value_at(s0) / m, "ne", ms);
    }
    if (a.kind == "nodes" && m == 1) {
      const Policy red = Policy::equilibrium(sol, Side::kRed);
      const auto t1 = Clock::now();
      const double security = exact_expected_cost(
          inst, Policy::blue_security(inst), red, gamma)[sol.space.index(start)];
      add(1, a.ammo, security, "security", elapsed_ms(t1));
      const auto t2 = Clock::now();
      const double naive = exact_expected_cost(
          inst, Policy::naive_best_case(inst), red, gamma)[sol.space.index(start)];
      add(1, a.ammo, naive, "naive", elapsed_ms(t2));
    }
  }
  return res;
}

int cmd_sweep(SweepArgs a, std::ostream& out, std::ostream& err) {
  if (a.n_min < 2 || a.n_max < a.n_min) throw UsageError("need 2 <= --n-min <= --n-max");
  if (a.samples < 1) throw UsageError("--samples must be at least 1");
  if (a.robots.empty()) {
    a.robots = a.kind == "robots" ? std::vector<int>{1, 2, 3} : std::vector<int>{1};
  }
  for (int m : a.robots) {
    if (m < 1) throw UsageError("--robots entries must be positive");
  }
  struct Job {
    int n_max;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (int n = a.n_min; n <= a.n_max; ++n) {
    for (int i = 0; i < a.samples; ++i) {
      jobs.push_back({n, keyed_bits(a.seed, static_cast<std::uint64_t>(n),
                                    static_cast<std::uint64_t>(i))});
    }
  }
  std::vector<SweepResult> results(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    results[i] = sweep_instance(a, jobs[i].n_max, jobs[i].seed);
  });

  std::ostringstream csv;
  csv << "seed,n_max,N,M,ammo,gamma,value,lower,upper,normalized,policy,runtime_ms\n";
  int kept = 0, trivial = 0, failed = 0;
  bool converged = true;
  for (const SweepResult& r : results) {
    if (!r.generated) ++failed;
    if (r.trivial) ++trivial;
    if (!r.rows.empty()) ++kept;
    converged = converged && r.converged;
    for (const SweepRow& row : r.rows) {
      csv << row.seed << "," << row.n_max << "," << row.nodes << "," << row.robots << ","
          << row.ammo << "," << num(row.gamma) << "," << num(row.value) << ","
          << num(row.lower) << "," << num(row.upper) << "," << num(row.normalized) << ","
          << row.policy << "," << num(row.runtime_ms) << "\n";
    }
  }
  write_text_file(a.out, csv.str());
  out << "instances=" << jobs.size() << " kept=" << kept << " trivial=" << trivial
      << " generation_failures=" << failed << "\n";
  if (kept == 0) err << "warning: every instance was trivial; dataset is empty\n";

  if (a.kind == "ammo" && kept > 0) {
    out << "M,ammo,mean,std_error,count\n";
    for (int m : a.robots) {
      for (int alpha = 0; alpha <= a.ammo; ++alpha) {
        std::vector<double> xs;
        for (const SweepResult& r : results) {
          for (const SweepRow& row : r.rows) {
            if (row.robots == m && row.ammo == alpha) xs.push_back(row.normalized);
          }
        }
        if (xs.empty()) continue;
        double mean = 0.0;
        for (double x : xs) mean += x;
        mean /= static_cast<double>(xs.size());
        double ss = 0.0;
        for (double x : xs) ss += (x - mean) * (x - mean);
        const double n = static_cast<double>(xs.size());
        const double se = xs.size() > 1 ? std::sqrt(ss / (n - 1) / n) : 0.0;
        out << m << "," << alpha << "," << num(mean) << "," << num(se) << "," << xs.size()
            << "\n";
      }
    }
  }
  if (!converged) {
    err << "error: some instances did not converge\n";
    return kExitNotConverged;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adversarial graph traversal game solver"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* g = app.add_subcommand("gen", "Generate a random instance");
  g->add_option("--n-max", gen.gen.n_max, "Number of sampled nodes")->required()
      ->check(CLI::Range(2, 64));
  g->add_option("--k", gen.gen.k, "Number of graph variants")->check(CLI::Range(1, 16));
  g->add_option("--edge-prob", gen.gen.edge_prob, "Edge probability")->check(CLI::Range(0.0, 1.0));
  g->add_option("--ammo", gen.gen.max_ammo, "Red ammo")->check(CLI::NonNegativeNumber);
  g->add_option("--robots", gen.gen.robots, "Number of blue robots")->check(CLI::PositiveNumber);
  g->add_option("--seed", gen.gen.seed, "Random seed");
  g->add_flag("--no-self-loops", gen.no_self_loops, "Do not sample (i, i) pairs");
  g->add_option("--out", gen.out, "Output instance JSON")->required();

  SolveArgs solve;
  CLI::App* s = app.add_subcommand("solve", "Compute equilibrium policies");
  s->add_option("--instance", solve.instance, "Instance JSON")->required();
  s->add_option("--gamma", solve.gamma, "Discount factor")
      ->check(CLI::Range(std::nextafter(0.0, 1.0), 1.0));
  s->add_option("--tol", solve.tol, "Sup-norm stopping tolerance")->check(CLI::PositiveNumber);
  s->add_option("--max-iter", solve.max_iter, "Sweep limit")->check(CLI::PositiveNumber);
  s->add_option("--mode", solve.mode, "Solver mode")->check(CLI::IsMember({"full", "subgame"}));
  s->add_flag("--prune", solve.prune, "Remove dominated blue moves first");
  s->add_flag("--warm-start", solve.warm_start, "Start from the blue security bound");
  s->add_option("--out", solve.out, "Output solution JSON");

  BoundsArgs bounds;
  CLI::App* b = app.add_subcommand("bounds", "Tabulate security bounds");
  b->add_option("--instance", bounds.instance, "Instance JSON")->required();
  b->add_option("--gamma", bounds.gamma, "Discount factor")
      ->check(CLI::Range(std::nextafter(0.0, 1.0), 1.0));
  b->add_option("--out", bounds.out, "Output bounds JSON");

  SimulateArgs sim;
  CLI::App* m = app.add_subcommand("simulate", "Evaluate a policy pair");
  m->add_option("--instance", sim.instance, "Instance JSON")->required();
  m->add_option("--solution", sim.solution, "Solution JSON");
  m->add_option("--blue", sim.blue, "Blue policy")
      ->check(CLI::IsMember({"ne", "security", "naive", "uniform"}));
  m->add_option("--red", sim.red, "Red policy")
      ->check(CLI::IsMember({"ne", "security", "never", "uniform"}));
  m->add_option("--rollouts", sim.rollouts, "Number of rollouts");
  m->add_option("--horizon", sim.horizon, "Steps per rollout")->check(CLI::PositiveNumber);
  m->add_option("--gamma", sim.gamma, "Discount factor")
      ->check(CLI::Range(std::nextafter(0.0, 1.0), 1.0));
  m->add_option("--seed", sim.seed, "Random seed");
  m->add_flag("--exact", sim.exact, "Solve the induced chain instead of sampling");
  m->add_option("--out", sim.out, "Output CSV");

  SweepArgs sweep;
  CLI::App* w = app.add_subcommand("sweep", "Run an experiment sweep");
  w->add_option("kind", sweep.kind, "nodes, ammo or robots")->required()
      ->check(CLI::IsMember({"nodes", "ammo", "robots"}));
  w->add_option("--n-min", sweep.n_min, "Smallest n_max");
  w->add_option("--n-max", sweep.n_max, "Largest n_max");
  w->add_option("--samples", sweep.samples, "Instances per size");
  w->add_option("--k", sweep.k, "Number of graph variants")->check(CLI::Range(1, 16));
  w->add_option("--edge-prob", sweep.edge_prob, "Edge probability")->check(CLI::Range(0.0, 1.0));
  w->add_option("--ammo,--max-ammo", sweep.ammo, "Red ammo")->check(CLI::NonNegativeNumber);
  w->add_option("--robots", sweep.robots, "Robot counts")->delimiter(',');
  w->add_option("--gamma", sweep.gamma, "Discount floor; raised to the threshold per instance")
      ->check(CLI::Range(std::nextafter(0.0, 1.0), 1.0));
  w->add_option("--tol", sweep.tol, "Sup-norm stopping tolerance")->check(CLI::PositiveNumber);
  w->add_option("--max-iter", sweep.max_iter, "Sweep limit")->check(CLI::PositiveNumber);
  w->add_option("--max-joint-nodes", sweep.max_joint_nodes, "Skip larger joint graphs");
  w->add_option("--seed", sweep.seed, "Random seed");
  w->add_option("--out", sweep.out, "Output CSV")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (g->parsed()) return cmd_gen(gen, out);
    if (s->parsed()) return cmd_solve(solve, out, err);
    if (b->parsed()) return cmd_bounds(bounds, out);
    if (m->parsed()) return cmd_simulate(sim, out, err);
    return cmd_sweep(sweep, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInstance& e) {
    err << "invalid instance: " << e.what() << "\n";
    return kExitInvalidInstance;
  } catch (const InfeasibleCondition& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInvalidInstance;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace advgraph
