#include "domset/experiment.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

#include <omp.h>

#include "domset/errors.h"
#include "domset/generators.h"
#include "domset/greedy.h"
#include "domset/io.h"

namespace domset {
namespace {

std::size_t cardinality_bound(double bound) {
  return static_cast<std::size_t>(std::max(1.0, std::ceil(bound - 1e-9)));
}

std::uint64_t to_u64(std::string_view key, std::string_view text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("generator parameter " + std::string(key) + ": expected an integer, got '" +
                          std::string(text) + "'");
  }
  return value;
}

double to_real(std::string_view key, std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("generator parameter " + std::string(key) + ": expected a number, got '" +
                          std::string(text) + "'");
  }
  return value;
}

const std::vector<std::string_view>& generator_keys(std::string_view gen) {
  static const std::vector<std::string_view> ba{"n", "w"};
  static const std::vector<std::string_view> udg{"n", "side", "range"};
  static const std::vector<std::string_view> wrand{"n", "m", "lo", "hi", "scheme"};
  if (gen == "ba") return ba;
  if (gen == "udg") return udg;
  if (gen == "wrand") return wrand;
  throw InvalidArgument("unknown generator '" + std::string(gen) + "' (expected ba, udg or wrand)");
}

std::string param(const InstanceSpec& spec, std::string_view key, std::string_view fallback) {
  for (const auto& [k, v] : spec.params) {
    if (k == key) return v;
  }
  return std::string(fallback);
}

std::vector<InstanceSpec> expand_generator(std::string_view entry) {
  const std::string_view body = entry.substr(4);
  const auto colon = body.find(':');
  const std::string gen(body.substr(0, colon));
  const auto& keys = generator_keys(gen);
  std::vector<std::pair<std::string, std::string>> params;
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
  if (colon != std::string_view::npos) {
    std::string_view rest = body.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw InvalidArgument("generator entry '" + std::string(entry) + "': expected key=value, got '" +
                              std::string(item) + "'");
      }
      const std::string key(item.substr(0, eq));
      const std::string value(item.substr(eq + 1));
      if (key == "count") {
        count = to_u64(key, value);
      } else if (key == "seed") {
        seed = to_u64(key, value);
      } else if (std::find(keys.begin(), keys.end(), key) != keys.end()) {
        params.emplace_back(key, value);
      } else {
        throw InvalidArgument("generator '" + gen + "' has no parameter '" + key + "'");
      }
    }
  }
  if (count < 1) throw InvalidArgument("generator entry '" + std::string(entry) + "': count must be >= 1");

  std::string group = gen;
  for (const auto& [k, v] : params) group += "_" + k + v;
  std::vector<InstanceSpec> out;
  for (std::uint64_t k = 0; k < count; ++k) {
    InstanceSpec spec;
    spec.id = group + "_" + std::to_string(k);
    spec.group = group;
    spec.generator = gen;
    spec.params = params;
    spec.seed = mix_seed(seed, k);
    spec.load();  // validates parameters up front
    out.push_back(std::move(spec));
  }
  return out;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "rlso") return Algorithm::kRlso;
  if (name == "msrlso") return Algorithm::kMsrlso;
  if (name == "aco-ls") return Algorithm::kAcoLs;
  if (name == "aco-pp-ls") return Algorithm::kAcoPpLs;
  if (name == "aco-ls-s") return Algorithm::kAcoLsS;
  throw InvalidArgument("unknown algorithm '" + std::string(name) +
                        "' (expected greedy, rlso, msrlso, aco-ls, aco-pp-ls or aco-ls-s)");
}

std::string_view algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::kGreedy: return "greedy";
    case Algorithm::kRlso: return "rlso";
    case Algorithm::kMsrlso: return "msrlso";
    case Algorithm::kAcoLs: return "aco-ls";
    case Algorithm::kAcoPpLs: return "aco-pp-ls";
    case Algorithm::kAcoLsS: return "aco-ls-s";
  }
  return "unknown";
}

SolveResult solve(const Graph& g, const SolverConfig& cfg) {
  SolveResult result;
  auto take_trace = [&](RunTrace trace) {
    result.members = std::move(trace.best);
    result.value = trace.best_value;
    result.evaluations = trace.evaluations;
    result.stop_reason = std::string(stop_reason_name(trace.stop));
    result.elapsed_ms = trace.elapsed_ms;
  };

  switch (cfg.algorithm) {
    case Algorithm::kGreedy: {
      const auto start = Clock::now();
      Rng rng(cfg.seed);
      const Solution s = g.weighted() ? greedy_mwds(g, rng) : greedy_mds(g, rng);
      result.members = s.sorted_members();
      result.value = objective_value(g, s, g.weighted() ? Objective::kWeight : Objective::kCardinality);
      result.evaluations = 1;
      result.stop_reason = "complete";
      result.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      break;
    }
    case Algorithm::kRlso: {
      RlsoConfig rc;
      rc.seed = cfg.seed;
      rc.time_limit = cfg.time_limit;
      rc.max_iterations = cfg.max_iterations;
      if (cfg.lower_bound) rc.lower_bound = cardinality_bound(*cfg.lower_bound);
      take_trace(rlso_run(g, rc));
      break;
    }
    case Algorithm::kMsrlso: {
      MsrlsoConfig mc = cfg.msrlso;
      mc.seed = cfg.seed;
      mc.time_limit = cfg.time_limit;
      mc.max_iterations = cfg.max_iterations;
      take_trace(msrlso_run(g, mc));
      break;
    }
    case Algorithm::kAcoLs:
    case Algorithm::kAcoPpLs:
    case Algorithm::kAcoLsS: {
      const AcoVariant variant = cfg.algorithm == Algorithm::kAcoLs     ? AcoVariant::kLs
                                 : cfg.algorithm == Algorithm::kAcoPpLs ? AcoVariant::kPpLs
                                                                        : AcoVariant::kLsS;
      AcoConfig ac = cfg.aco ? *cfg.aco : AcoConfig::defaults(variant);
      ac.variant = variant;
      ac.seed = cfg.seed;
      if (cfg.time_limit) ac.time_limit = cfg.time_limit;
      if (cfg.max_iterations) ac.max_iterations = cfg.max_iterations;
      if (cfg.max_evaluations) ac.max_evaluations = cfg.max_evaluations;
      if (cfg.lower_bound) ac.lower_bound = cardinality_bound(*cfg.lower_bound);
      take_trace(aco_run(g, ac));
      break;
    }
  }
  return result;
}

Graph InstanceSpec::load() const {
  if (path) return load_graph_file(*path);
  const std::uint64_t n = to_u64("n", param(*this, "n", ""));
  if (generator == "ba") {
    BaParams p;
    p.n = n;
    p.edges_per_vertex = to_u64("w", param(*this, "w", "2"));
    p.seed = seed;
    return gen_ba(p);
  }
  if (generator == "udg") {
    UnitDiskParams p;
    p.n = n;
    p.grid_side = to_real("side", param(*this, "side", "1000"));
    p.range = to_real("range", param(*this, "range", "150"));
    p.seed = seed;
    return gen_unit_disk(p).graph;
  }
  if (generator == "wrand") {
    WeightedRandomParams p;
    p.n = n;
    p.m = to_u64("m", param(*this, "m", ""));
    p.lo = to_real("lo", param(*this, "lo", "20"));
    p.hi = to_real("hi", param(*this, "hi", "70"));
    const std::string scheme = param(*this, "scheme", "uniform");
    if (scheme == "uniform") {
      p.scheme = WeightScheme::kUniform;
    } else if (scheme == "degsq") {
      p.scheme = WeightScheme::kDegreeSquared;
    } else {
      throw InvalidArgument("wrand scheme must be uniform or degsq, got '" + scheme + "'");
    }
    p.seed = seed;
    return gen_weighted_random(p);
  }
  generator_keys(generator);  // throws for unknown generators
  throw InvalidArgument("instance '" + id + "' has neither a path nor a generator");
}

std::vector<InstanceSpec> expand_instances(std::span<const std::string> entries) {
  namespace fs = std::filesystem;
  std::vector<InstanceSpec> out;
  for (const std::string& entry : entries) {
    if (entry.rfind("gen:", 0) == 0) {
      auto specs = expand_generator(entry);
      out.insert(out.end(), std::make_move_iterator(specs.begin()), std::make_move_iterator(specs.end()));
      continue;
    }
    const fs::path path(entry);
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      std::vector<fs::path> files;
      for (const auto& item : fs::directory_iterator(path)) {
        const std::string name = item.path().filename().string();
        if (item.is_regular_file() && !name.empty() && name[0] != '.') files.push_back(item.path());
      }
      std::sort(files.begin(), files.end());
      if (files.empty()) throw InvalidArgument("instance directory '" + entry + "' is empty");
      const std::string group = path.filename().empty() ? path.parent_path().filename().string()
                                                         : path.filename().string();
      for (const auto& file : files) {
        InstanceSpec spec;
        spec.id = file.stem().string();
        spec.group = group;
        spec.path = file;
        out.push_back(std::move(spec));
      }
    } else {
      InstanceSpec spec;
      spec.id = path.stem().string();
      spec.group = spec.id;
      spec.path = path;
      out.push_back(std::move(spec));
    }
  }
  return out;
}

void ExperimentSpec::validate() const {
  if (instances.empty()) throw InvalidArgument("experiment: instance list is empty");
  if (repeats < 1) throw InvalidArgument("experiment: repeats must be >= 1");
  if (solver.time_limit && !(solver.time_limit->count() > 0.0)) {
    throw InvalidArgument("experiment: time limit must be positive");
  }
}

ExperimentResult run_experiment(const ExperimentSpec& spec,
                                const std::function<void(const RunRecord&)>& on_record) {
  spec.validate();
  const std::size_t count = spec.instances.size();
  std::vector<Graph> graphs(count);
  std::vector<std::string> load_errors(count);
  for (std::size_t i = 0; i < count; ++i) {
    try {
      graphs[i] = spec.instances[i].load();
    } catch (const std::exception& e) {
      load_errors[i] = e.what();
    }
  }

  const std::size_t repeats = spec.repeats;
  ExperimentResult result;
  result.records.resize(count * repeats);
  const auto tasks = static_cast<std::ptrdiff_t>(count * repeats);
  const int threads = spec.threads > 0 ? static_cast<int>(spec.threads) : omp_get_max_threads();
  const std::string algo(algorithm_name(spec.solver.algorithm));

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t t = 0; t < tasks; ++t) {
    const auto i = static_cast<std::size_t>(t) / repeats;
    const auto k = static_cast<std::size_t>(t) % repeats;
    RunRecord& rec = result.records[static_cast<std::size_t>(t)];
    rec.instance = spec.instances[i].id;
    rec.group = spec.instances[i].group;
    rec.algo = algo;
    rec.seed = mix_seed(spec.base_seed, k);
    if (!load_errors[i].empty()) {
      rec.stop_reason = "error";
      rec.error = load_errors[i];
    } else {
      try {
        SolverConfig cfg = spec.solver;
        cfg.seed = rec.seed;
        const SolveResult r = solve(graphs[i], cfg);
        rec.elapsed_ms = r.elapsed_ms;
        rec.evaluations = r.evaluations;
        rec.best = r.value;
        rec.stop_reason = r.stop_reason;
      } catch (const std::exception& e) {
        rec.stop_reason = "error";
        rec.error = e.what();
      }
    }
    if (on_record) {
#pragma omp critical(domset_experiment_progress)
      on_record(rec);
    }
  }

  result.aggregates = aggregate(result.records);
  return result;
}

std::vector<AggregateRow> aggregate(std::span<const RunRecord> records) {
  std::vector<AggregateRow> rows;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  std::vector<double> eval_sums;
  for (const RunRecord& rec : records) {
    const auto [it, inserted] = index.try_emplace({rec.group, rec.algo}, rows.size());
    if (inserted) {
      AggregateRow row;
      row.group = rec.group;
      row.algo = rec.algo;
      row.min = std::numeric_limits<double>::infinity();
      row.max = -std::numeric_limits<double>::infinity();
      rows.push_back(row);
      eval_sums.push_back(0.0);
    }
    AggregateRow& row = rows[it->second];
    ++row.runs;
    if (!rec.best) {
      ++row.failures;
      continue;
    }
    row.min = std::min(row.min, *rec.best);
    row.max = std::max(row.max, *rec.best);
    row.avg += *rec.best;
    eval_sums[it->second] += static_cast<double>(rec.evaluations);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    AggregateRow& row = rows[r];
    const std::size_t ok = row.runs - row.failures;
    if (ok == 0) {
      row.min = row.max = row.avg = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    row.avg /= static_cast<double>(ok);
    // Keep min <= avg <= max exact despite rounding in the running sum.
    row.avg = std::clamp(row.avg, row.min, row.max);
    row.evals_thousands = eval_sums[r] / static_cast<double>(ok) / 1000.0;
  }
  return rows;
}

void write_runs_csv(std::ostream& out, std::span<const RunRecord> records, CsvOptions options) {
  out << "# domset runs v1\n";
  out << "instance,algo,seed,elapsed_ms,evals,best,stop_reason\n";
  for (const RunRecord& rec : records) {
    out << csv_field(rec.instance) << ',' << csv_field(rec.algo) << ',' << rec.seed << ','
        << (options.timing ? fixed(rec.elapsed_ms, 3) : std::string("-")) << ',' << rec.evaluations << ','
        << (rec.best ? format_real(*rec.best) : std::string()) << ',' << csv_field(rec.stop_reason) << '\n';
  }
}

void write_aggregate_csv(std::ostream& out, std::span<const AggregateRow> rows) {
  out << "group,algo,runs,failures,min,avg,max,eval_1e3\n";
  for (const AggregateRow& row : rows) {
    const bool ok = row.runs > row.failures;
    out << csv_field(row.group) << ',' << csv_field(row.algo) << ',' << row.runs << ',' << row.failures << ','
        << (ok ? format_real(row.min) : "-") << ',' << (ok ? fixed(row.avg, 3) : "-") << ','
        << (ok ? format_real(row.max) : "-") << ',' << (ok ? fixed(row.evals_thousands, 3) : "-") << '\n';
  }
}

}  // namespace domset
