// domset: generate instances, solve, run batches, export LP bounds and
// dominance-drawing clusters.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "domset/clusters.h"
#include "domset/errors.h"
#include "domset/experiment.h"
#include "domset/generators.h"
#include "domset/greedy.h"
#include "domset/io.h"
#include "domset/lp_bounds.h"

namespace fs = std::filesystem;
using namespace domset;

namespace {

constexpr int kExitUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(path.string() + ": cannot open for writing");
  return out;
}

// Writes through a temporary buffer so that "-" means stdout.
template <typename F>
void emit(const std::string& target, F&& write) {
  if (target.empty() || target == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out = open_output(target);
  write(out);
  if (!out) throw Error(target + ": write failed");
}

struct StopFlags {
  double time_limit = 0.0;
  std::uint64_t max_iterations = 0;
  std::uint64_t max_evaluations = 0;
  std::optional<double> lower_bound;
  std::string lower_bound_file;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--time-limit", time_limit, "Wall-clock limit per run in seconds");
    cmd.add_option("--max-iterations", max_iterations, "Proposal cap (rlso, msrlso) or iteration cap (aco)");
    cmd.add_option("--max-evaluations", max_evaluations, "Constructed-solution cap (aco)");
    cmd.add_option("--lower-bound", lower_bound, "Stop once the best size reaches this bound");
    cmd.add_option("--lower-bound-file", lower_bound_file, "File holding the bound as a single real")
        ->check(CLI::ExistingFile);
  }

  void apply(SolverConfig& cfg) const {
    if (time_limit < 0.0) throw UsageError("--time-limit must be positive");
    if (time_limit > 0.0) cfg.time_limit = Seconds(time_limit);
    if (max_iterations > 0) cfg.max_iterations = max_iterations;
    if (max_evaluations > 0) cfg.max_evaluations = max_evaluations;
    if (lower_bound && !lower_bound_file.empty()) {
      throw UsageError("--lower-bound and --lower-bound-file are mutually exclusive");
    }
    const Problem problem = cfg.algorithm == Algorithm::kMsrlso ? Problem::kMwds : Problem::kMds;
    std::optional<double> raw = lower_bound;
    if (!lower_bound_file.empty()) raw = read_bound_file(lower_bound_file);
    if (raw) cfg.lower_bound = ingest_bound(*raw, problem);
    if (cfg.algorithm != Algorithm::kGreedy && !cfg.time_limit && !cfg.max_iterations &&
        !cfg.max_evaluations && !cfg.lower_bound) {
      cfg.time_limit = Seconds(10.0);
      std::cerr << "domset: no stopping criterion given, using --time-limit 10\n";
    }
  }
};

Algorithm algorithm_flag(const std::string& name) {
  try {
    return parse_algorithm(name);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

int cmd_generate(const std::string& type, std::size_t n, std::size_t w, double side, double range,
                 std::size_t m, double lo, double hi, const std::string& scheme, std::size_t count,
                 std::uint64_t seed, const std::string& out_dir, std::string prefix) {
  if (count < 1) throw UsageError("--count must be >= 1");
  if (prefix.empty()) prefix = type;
  const fs::path dir(out_dir);
  fs::create_directories(dir);
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t s = mix_seed(seed, k);
    const fs::path base = dir / (prefix + "_" + std::to_string(k));
    Graph g;
    if (type == "ba") {
      g = gen_ba({n, w, s});
    } else if (type == "udg") {
      UnitDiskGraph u = gen_unit_disk({n, side, range, s});
      std::ofstream coords = open_output(base.string() + ".coords");
      write_coordinates(coords, u.points);
      g = std::move(u.graph);
    } else if (type == "wrand") {
      WeightedRandomParams p;
      p.n = n;
      p.m = m;
      p.lo = lo;
      p.hi = hi;
      p.seed = s;
      if (scheme == "uniform") {
        p.scheme = WeightScheme::kUniform;
      } else if (scheme == "degsq") {
        p.scheme = WeightScheme::kDegreeSquared;
      } else {
        throw UsageError("--scheme must be uniform or degsq");
      }
      g = gen_weighted_random(p);
    } else {
      throw UsageError("--type must be ba, udg or wrand");
    }
    const fs::path file = base.string() + ".txt";
    std::ofstream out = open_output(file);
    if (g.weighted()) {
      write_weighted_instance(out, g);
    } else {
      write_edge_list(out, g);
    }
    if (!out) throw Error(file.string() + ": write failed");
    std::cout << file.string() << " n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
  }
  return 0;
}

int cmd_solve(const std::string& instance, const std::string& format, const std::string& algo,
              std::uint64_t seed, std::size_t repeats, const StopFlags& stops, const std::string& out) {
  const Graph g = load_graph_file(instance, parse_graph_format(format));
  SolverConfig cfg;
  cfg.algorithm = algorithm_flag(algo);
  cfg.seed = seed;
  stops.apply(cfg);
  if (repeats < 1) throw UsageError("--repeats must be >= 1");

  std::optional<SolveResult> best;
  std::uint64_t best_seed = seed;
  for (std::size_t k = 0; k < repeats; ++k) {
    cfg.seed = repeats == 1 ? seed : mix_seed(seed, k);
    SolveResult r = solve(g, cfg);
    if (!best || r.value < best->value) {
      best = std::move(r);
      best_seed = cfg.seed;
    }
  }

  const bool valid = is_dominating_set(g, best->members);
  std::ostringstream summary;
  summary << "instance=" << fs::path(instance).filename().string() << " algo=" << algo << " seed=" << best_seed
          << " evals=" << best->evaluations << " stop=" << best->stop_reason
          << " elapsed_ms=" << static_cast<long long>(std::llround(best->elapsed_ms));
  emit(out, [&](std::ostream& os) { write_solution(os, g, best->members, summary.str()); });
  std::cerr << summary.str() << " size=" << best->members.size() << " value=" << format_real(best->value)
            << (valid ? "" : " INVALID") << '\n';
  return valid ? 0 : 1;
}

int cmd_experiment(const std::vector<std::string>& entries, const std::string& algo, std::size_t repeats,
                   std::uint64_t seed, std::size_t threads, const StopFlags& stops, const std::string& out,
                   const std::string& aggregate_out, bool no_timing) {
  if (entries.empty()) throw UsageError("experiment: instance list is empty");
  ExperimentSpec spec;
  try {
    spec.instances = expand_instances(entries);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  spec.solver.algorithm = algorithm_flag(algo);
  stops.apply(spec.solver);
  if (repeats < 1) throw UsageError("--repeats must be >= 1");
  spec.repeats = repeats;
  spec.base_seed = seed;
  spec.threads = threads;

  const ExperimentResult result = run_experiment(spec, [](const RunRecord& rec) {
    if (!rec.error.empty()) std::cerr << "domset: " << rec.instance << " seed " << rec.seed << ": " << rec.error << '\n';
  });
  emit(out, [&](std::ostream& os) { write_runs_csv(os, result.records, {.timing = !no_timing}); });
  if (!aggregate_out.empty()) {
    emit(aggregate_out, [&](std::ostream& os) { write_aggregate_csv(os, result.aggregates); });
  } else {
    write_aggregate_csv(std::cerr, result.aggregates);
  }
  for (const auto& row : result.aggregates) {
    if (row.failures > 0) return 1;
  }
  return 0;
}

int cmd_lowerbound(const std::string& instance, const std::string& format, const std::string& out,
                   std::optional<double> value, const std::string& from, const std::string& problem) {
  Problem p;
  if (problem == "mds") {
    p = Problem::kMds;
  } else if (problem == "mwds") {
    p = Problem::kMwds;
  } else {
    throw UsageError("--problem must be mds or mwds");
  }
  if (value || !from.empty()) {
    if (value && !from.empty()) throw UsageError("--value and --from are mutually exclusive");
    const double raw = value ? *value : read_bound_file(from);
    std::cout << format_real(ingest_bound(raw, p)) << '\n';
    return 0;
  }
  if (instance.empty()) throw UsageError("lowerbound: give an instance to export, or --value/--from to ingest");
  const Graph g = load_graph_file(instance, parse_graph_format(format));
  std::string target = out;
  if (target.empty()) target = (fs::path(instance).parent_path() / fs::path(instance).stem()).string() + ".lp";
  emit(target, [&](std::ostream& os) { write_lp(os, g); });
  if (target != "-") std::cerr << "wrote " << target << '\n';
  return 0;
}

int cmd_clusters(const std::string& instance, const std::string& format, const std::string& solution,
                 const std::string& out) {
  const Graph g = load_graph_file(instance, parse_graph_format(format));
  const std::vector<Vertex> members = read_solution_file(solution, g);
  const ClusterAssignment clusters = assign_clusters(g, members);
  if (!out.empty()) {
    emit(out, [&](std::ostream& os) { write_cluster_dot(os, g, clusters); });
  }
  std::cout << "# clusters " << clusters.heads.size() << '\n';
  for (std::size_t i = 0; i < clusters.heads.size(); ++i) {
    std::cout << g.label(clusters.heads[i]) << ':';
    for (Vertex v : clusters.clusters[i]) std::cout << ' ' << g.label(v);
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dominating set toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write generated instances (edge list, weighted instance, coordinates)");
  std::string gen_type = "ba";
  std::size_t gen_n = 0, gen_w = 2, gen_m = 0, gen_count = 1;
  double gen_side = 1000.0, gen_range = 150.0, gen_lo = 20.0, gen_hi = 70.0;
  std::string gen_scheme = "uniform", gen_out = ".", gen_prefix;
  std::uint64_t gen_seed = 0;
  gen->add_option("--type", gen_type, "ba, udg or wrand")->check(CLI::IsMember({"ba", "udg", "wrand"}));
  gen->add_option("-n,--vertices", gen_n, "Vertex count")->required();
  gen->add_option("-w,--edges-per-vertex", gen_w, "BA attachment count");
  gen->add_option("--side", gen_side, "Unit disk square side");
  gen->add_option("--range", gen_range, "Unit disk range");
  gen->add_option("-m,--edges", gen_m, "Edge count (wrand)");
  gen->add_option("--lo", gen_lo, "Lowest weight (wrand uniform)");
  gen->add_option("--hi", gen_hi, "Highest weight (wrand uniform)");
  gen->add_option("--scheme", gen_scheme, "uniform or degsq");
  gen->add_option("--count", gen_count, "Number of instances");
  gen->add_option("--seed", gen_seed, "Base seed; instance k uses mix_seed(seed, k)");
  gen->add_option("--out", gen_out, "Output directory");
  gen->add_option("--prefix", gen_prefix, "File name prefix (default: the type)");

  // solve
  auto* sol = app.add_subcommand("solve", "Solve one instance and write the solution file");
  std::string sol_instance, sol_format = "auto", sol_algo = "rlso", sol_out = "-";
  std::uint64_t sol_seed = 0;
  std::size_t sol_repeats = 1;
  StopFlags sol_stops;
  sol->add_option("instance", sol_instance, "Graph file")->required()->check(CLI::ExistingFile);
  sol->add_option("--format", sol_format, "auto, edgelist, dimacs or weighted");
  sol->add_option("--algo", sol_algo, "greedy, rlso, msrlso, aco-ls, aco-pp-ls, aco-ls-s");
  sol->add_option("--seed", sol_seed, "Seed");
  sol->add_option("--repeats", sol_repeats, "Independent runs; the best is written");
  sol->add_option("--out", sol_out, "Solution file ('-' for stdout)");
  sol_stops.add_to(*sol);

  // experiment
  auto* exp = app.add_subcommand("experiment", "Run repeated trials over instances and write the runs CSV");
  std::vector<std::string> exp_entries;
  std::string exp_algo = "rlso", exp_out = "-", exp_aggregate;
  std::size_t exp_repeats = 1, exp_threads = 0;
  std::uint64_t exp_seed = 0;
  bool exp_no_timing = false;
  StopFlags exp_stops;
  exp->add_option("instances", exp_entries, "Files, directories or gen:<type>:k=v,... entries");
  exp->add_option("--algo", exp_algo, "Algorithm");
  exp->add_option("--repeats", exp_repeats, "Runs per instance");
  exp->add_option("--seed", exp_seed, "Base seed; run k uses mix_seed(seed, k)");
  exp->add_option("--threads", exp_threads, "Worker threads (0 = hardware parallelism)");
  exp->add_option("--out", exp_out, "Runs CSV ('-' for stdout)");
  exp->add_option("--aggregate", exp_aggregate, "Aggregate CSV (default: stderr)");
  exp->add_flag("--no-timing", exp_no_timing, "Write '-' in the elapsed_ms column");
  exp_stops.add_to(*exp);

  // lowerbound
  auto* lb = app.add_subcommand("lowerbound", "Export the LP relaxation, or turn an LP optimum into a bound");
  std::string lb_instance, lb_format = "auto", lb_out, lb_from, lb_problem = "mds";
  std::optional<double> lb_value;
  lb->add_option("instance", lb_instance, "Graph file to export")->check(CLI::ExistingFile);
  lb->add_option("--format", lb_format, "Input format");
  lb->add_option("--out", lb_out, "LP file (default: <instance>.lp, '-' for stdout)");
  lb->add_option("--value", lb_value, "LP optimum to ingest");
  lb->add_option("--from", lb_from, "File holding the LP optimum")->check(CLI::ExistingFile);
  lb->add_option("--problem", lb_problem, "mds (ceiling) or mwds (as is)");

  // clusters
  auto* cl = app.add_subcommand("clusters", "Group vertices around solution members and export DOT");
  std::string cl_instance, cl_solution, cl_format = "auto", cl_out;
  cl->add_option("instance", cl_instance, "Graph file")->required()->check(CLI::ExistingFile);
  cl->add_option("solution", cl_solution, "Solution file")->required()->check(CLI::ExistingFile);
  cl->add_option("--format", cl_format, "Input format");
  cl->add_option("--out", cl_out, "DOT file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      return cmd_generate(gen_type, gen_n, gen_w, gen_side, gen_range, gen_m, gen_lo, gen_hi, gen_scheme,
                          gen_count, gen_seed, gen_out, gen_prefix);
    }
    if (*sol) return cmd_solve(sol_instance, sol_format, sol_algo, sol_seed, sol_repeats, sol_stops, sol_out);
    if (*exp) {
      return cmd_experiment(exp_entries, exp_algo, exp_repeats, exp_seed, exp_threads, exp_stops, exp_out,
                            exp_aggregate, exp_no_timing);
    }
    if (*lb) return cmd_lowerbound(lb_instance, lb_format, lb_out, lb_value, lb_from, lb_problem);
    if (*cl) return cmd_clusters(cl_instance, cl_format, cl_solution, cl_out);
  } catch (const UsageError& e) {
    std::cerr << "domset: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "domset: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "domset: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
