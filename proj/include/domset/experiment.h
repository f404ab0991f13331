#pragma once

// Batch runs over instance lists and the CSV they produce.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domset/aco.h"
#include "domset/graph.h"
#include "domset/msrls.h"
#include "domset/order_search.h"

namespace domset {

enum class Algorithm { kGreedy, kRlso, kMsrlso, kAcoLs, kAcoPpLs, kAcoLsS };
/// Accepts greedy, rlso, msrlso, aco-ls, aco-pp-ls, aco-ls-s.
Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algo);

struct SolverConfig {
  Algorithm algorithm = Algorithm::kGreedy;
  std::uint64_t seed = 0;
  std::optional<Seconds> time_limit;
  std::optional<std::uint64_t> max_iterations;   // rlso, msrlso proposals; aco iterations
  std::optional<std::uint64_t> max_evaluations;  // aco constructed sets
  std::optional<double> lower_bound;             // rlso and aco stop at ceil(bound)
  MsrlsoConfig msrlso;  // cycle parameters; seed and stop fields are overwritten
  std::optional<AcoConfig> aco;  // variant defaults when empty
};

struct SolveResult {
  std::vector<Vertex> members;  // ascending
  double value = 0.0;           // weight for msrlso and for greedy on weighted graphs, size otherwise
  std::uint64_t evaluations = 0;
  std::string stop_reason;      // "complete" for greedy
  double elapsed_ms = 0.0;
};

/// One run of the chosen algorithm.
SolveResult solve(const Graph& g, const SolverConfig& cfg);

/// One instance of a batch. Either a file or a generator draw.
struct InstanceSpec {
  std::string id;
  std::string group;  // aggregate rows are per group
  std::optional<std::filesystem::path> path;
  std::string generator;  // "ba", "udg" or "wrand" when path is empty
  std::vector<std::pair<std::string, std::string>> params;
  std::uint64_t seed = 0;

  Graph load() const;
};

/// Expands instance entries:
///   <file>             one instance, its own group
///   <directory>        every regular file inside, sorted, one shared group
///   gen:ba:n=500,w=2,count=10,seed=1
///   gen:udg:n=50,side=1000,range=150,count=10,seed=1
///   gen:wrand:n=50,m=50,lo=20,hi=70,scheme=uniform|degsq,count=10,seed=1
/// Draw k of a generator entry uses mix_seed(seed, k). Throws InvalidArgument
/// on malformed entries.
std::vector<InstanceSpec> expand_instances(std::span<const std::string> entries);

struct ExperimentSpec {
  std::vector<InstanceSpec> instances;
  SolverConfig solver;  // seed is ignored; run k uses mix_seed(base_seed, k)
  std::size_t repeats = 1;
  std::uint64_t base_seed = 0;
  std::size_t threads = 0;  // 0 = hardware parallelism

  void validate() const;
};

struct RunRecord {
  std::string instance;
  std::string group;
  std::string algo;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
  std::uint64_t evaluations = 0;
  std::optional<double> best;  // empty when the run failed
  std::string stop_reason;     // "error" when the run failed
  std::string error;
};

struct AggregateRow {
  std::string group;
  std::string algo;
  std::size_t runs = 0;
  std::size_t failures = 0;
  double min = 0.0;
  double avg = 0.0;
  double max = 0.0;
  double evals_thousands = 0.0;  // mean evaluations / 1000
};

struct ExperimentResult {
  std::vector<RunRecord> records;  // instance-major, run order within an instance
  std::vector<AggregateRow> aggregates;  // groups in order of first appearance
};

/// Runs every (instance, repeat) pair on a worker pool. Load and solver
/// failures are recorded per row. Output order does not depend on scheduling.
ExperimentResult run_experiment(const ExperimentSpec& spec,
                                const std::function<void(const RunRecord&)>& on_record = {});

std::vector<AggregateRow> aggregate(std::span<const RunRecord> records);

struct CsvOptions {
  bool timing = true;  // false writes elapsed_ms as "-"
};

/// "# domset runs v1" then instance,algo,seed,elapsed_ms,evals,best,stop_reason.
void write_runs_csv(std::ostream& out, std::span<const RunRecord> records, CsvOptions options = {});
/// group,algo,runs,failures,min,avg,max,eval_1e3
void write_aggregate_csv(std::ostream& out, std::span<const AggregateRow> rows);

}  // namespace domset
