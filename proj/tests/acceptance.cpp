// Acceptance checks. One PASS/FAIL/SKIP line per criterion; exit 0 on pass,
// 1 on failure, 77 when the criterion cannot be evaluated on this machine.
//
//   domset_acceptance --criterion N     (N = 1..9; 0 runs all but 6)

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "domset/aco.h"
#include "domset/generators.h"
#include "domset/greedy.h"
#include "domset/io.h"
#include "domset/lp_bounds.h"
#include "domset/msrls.h"
#include "domset/oracle.h"
#include "domset/order_search.h"
#include "domset/solution.h"
#include "support.h"

using namespace domset;
namespace fs = std::filesystem;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kSkip = 77;

int report(int n, const std::string& title, int status, const std::string& detail) {
  const char* tag = status == kPass ? "PASS" : status == kSkip ? "SKIP" : "FAIL";
  std::printf("[%s] criterion %d, %s: %s\n", tag, n, title.c_str(), detail.c_str());
  std::fflush(stdout);
  return status;
}

void note(const std::string& line) {
  std::printf("    %s\n", line.c_str());
  std::fflush(stdout);
}

std::string fmt(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::optional<Graph> load_dataset(const std::string& name) {
  for (const char* ext : {".txt", ".col", ".edges", ".dimacs"}) {
    const fs::path p = fs::path(DOMSET_DATA_DIR) / (name + ext);
    if (fs::exists(p)) return load_graph_file(p);
  }
  return std::nullopt;
}

// The oracle test set: P_k, C_k, stars and 200 random graphs.
std::vector<std::pair<std::string, Graph>> oracle_instances() {
  std::vector<std::pair<std::string, Graph>> out;
  for (std::size_t k = 2; k <= 16; ++k) out.emplace_back("P" + std::to_string(k), testing::path(k));
  for (std::size_t k = 3; k <= 16; ++k) out.emplace_back("C" + std::to_string(k), testing::cycle(k));
  for (std::size_t k = 1; k <= 15; ++k) out.emplace_back("K1," + std::to_string(k), testing::star(k));
  Rng rng(20240601);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 8 + rng.below(9);
    const double density = 0.1 + 0.4 * rng.uniform();
    out.emplace_back("G" + std::to_string(t) + "(n=" + std::to_string(n) + ",p=" + fmt(density) + ")",
                     testing::random_graph(n, density, rng));
  }
  return out;
}

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("domset_acceptance_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// ---------------------------------------------------------------------------

int criterion1() {
  const std::map<std::string, std::size_t> gamma{{"zachary", 4}, {"lesmis", 10}, {"david", 2},
                                                  {"huck", 9},     {"anna", 12},   {"dolphins", 14}};
  const std::vector<std::string> greedy_names{"zachary", "lesmis", "david", "huck", "anna"};
  std::size_t checks = 0, passed = 0;
  std::vector<std::string> missing;
  for (const auto& [name, g_opt] : gamma) {
    const auto g = load_dataset(name);
    const bool want_greedy = std::find(greedy_names.begin(), greedy_names.end(), name) != greedy_names.end();
    if (!g) {
      missing.push_back(name);
      checks += 5 + (want_greedy ? 1 : 0);
      note(name + ": dataset file not found under data/");
      continue;
    }
    std::string sizes;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      RlsoConfig cfg;
      cfg.time_limit = Seconds(60);
      cfg.lower_bound = g_opt;
      cfg.seed = seed;
      const RunTrace tr = rlso_run(*g, cfg);
      ++checks;
      const bool ok = tr.best.size() == g_opt && is_dominating_set(*g, tr.best);
      passed += ok;
      sizes += " " + std::to_string(tr.best.size()) + "(" + fmt(tr.elapsed_ms / 1000.0, 3) + "s)";
    }
    std::string line = name + ": gamma " + std::to_string(g_opt) + ", RLS_o sizes" + sizes;
    if (want_greedy) {
      const GreedyStats st = repeated_greedy(*g, 1000, 7);
      ++checks;
      passed += st.min == static_cast<double>(g_opt);
      line += ", greedy best-of-1000 " + fmt(st.min, 0);
    }
    note(line);
  }
  std::string detail = std::to_string(passed) + "/" + std::to_string(checks) + " exact";
  if (!missing.empty()) {
    detail += "; missing datasets:";
    for (const auto& m : missing) detail += " " + m;
  }
  return report(1, "known optima", passed == checks ? kPass : kFail, detail);
}

int criterion2() {
  const std::map<std::string, std::size_t> gamma{{"gplus_500", 42}, {"pokec_500", 16}};
  std::vector<std::pair<std::string, Graph>> graphs;
  for (const auto& [name, g_opt] : gamma) {
    if (auto g = load_dataset(name)) graphs.emplace_back(name, std::move(*g));
  }
  if (graphs.size() != gamma.size()) {
    std::fprintf(stderr, "warning: gplus_500 / pokec_500 not present in data/; see scripts/fetch_datasets.sh\n");
    return report(2, "social samples", kSkip, "datasets not fetched");
  }
  std::size_t checks = 0, passed = 0;
  for (const auto& [name, g] : graphs) {
    const std::size_t target = gamma.at(name);
    RlsoConfig r;
    r.time_limit = Seconds(600);
    r.lower_bound = target;
    const RunTrace rt = rlso_run(g, r);
    ++checks;
    passed += rt.best.size() == target;
    std::string line = name + ": rlso " + std::to_string(rt.best.size());
    for (AcoVariant v : {AcoVariant::kLs, AcoVariant::kPpLs, AcoVariant::kLsS}) {
      AcoConfig a = AcoConfig::defaults(v);
      a.time_limit = Seconds(600);
      a.lower_bound = target;
      const RunTrace at = aco_run(g, a);
      ++checks;
      passed += at.best.size() == target;
      line += ", " + std::string(aco_variant_name(v)) + " " + std::to_string(at.best.size()) + " (" +
              fmt(at.elapsed_ms / 1000.0, 1) + "s)";
    }
    note(line);
  }
  return report(2, "social samples", passed == checks ? kPass : kFail,
                std::to_string(passed) + "/" + std::to_string(checks) + " reached gamma");
}

int criterion3() {
  const auto instances = oracle_instances();
  std::size_t rlso_ok = 0, greedy_ok = 0, oracle_agree = 0;
  std::map<AcoVariant, std::size_t> aco_ok;
  Rng rng(3);
  for (const auto& [name, g] : instances) {
    const std::size_t gamma = testing::exhaustive(g).gamma;
    oracle_agree += brute_force_mds(g).value == static_cast<double>(gamma);

    RlsoConfig r;
    r.max_iterations = 100000;
    r.seed = rng.next();
    const RunTrace rt = rlso_run(g, r);
    const bool r_ok = rt.best.size() == gamma && testing::dominates(g, rt.best);
    rlso_ok += r_ok;
    if (!r_ok) note(name + ": rlso " + std::to_string(rt.best.size()) + " vs gamma " + std::to_string(gamma));

    for (AcoVariant v : {AcoVariant::kLs, AcoVariant::kPpLs, AcoVariant::kLsS}) {
      AcoConfig a = AcoConfig::defaults(v);
      a.max_evaluations = 10000;
      a.seed = rng.next();
      const RunTrace at = aco_run(g, a);
      const bool a_ok = at.best.size() == gamma && testing::dominates(g, at.best);
      aco_ok[v] += a_ok;
      if (!a_ok) {
        note(name + ": " + std::string(aco_variant_name(v)) + " " + std::to_string(at.best.size()) +
             " vs gamma " + std::to_string(gamma));
      }
    }

    // H(0) = 0 would make the bound unsatisfiable on edgeless graphs, where
    // greedy is trivially exact; those use H(1).
    const double bound = testing::harmonic(std::max<std::size_t>(g.max_degree(), 1)) * static_cast<double>(gamma);
    const Solution s = greedy_mds(g, rng);
    const bool g_ok = static_cast<double>(s.size()) <= bound + 1e-9 && s.is_dominating();
    greedy_ok += g_ok;
    if (!g_ok) note(name + ": greedy " + std::to_string(s.size()) + " above H(D)*gamma = " + fmt(bound));
  }
  const std::size_t total = instances.size();
  bool ok = rlso_ok == total && greedy_ok == total && oracle_agree == total;
  std::string detail = std::to_string(total) + " instances; rlso " + std::to_string(rlso_ok);
  for (AcoVariant v : {AcoVariant::kLs, AcoVariant::kPpLs, AcoVariant::kLsS}) {
    ok = ok && aco_ok[v] == total;
    detail += ", " + std::string(aco_variant_name(v)) + " " + std::to_string(aco_ok[v]);
  }
  detail += ", greedy within H(D)*gamma " + std::to_string(greedy_ok) + ", oracle cross-check " +
            std::to_string(oracle_agree);
  return report(3, "oracle equivalence", ok ? kPass : kFail, detail);
}

int criterion4() {
  Rng rng(4);
  std::size_t ok = 0, non_minimal = 0;
  const std::size_t pairs = 1000;
  for (std::size_t t = 0; t < pairs; ++t) {
    const std::size_t n = 2 + rng.below(80);
    const Graph g = testing::random_graph(n, 0.02 + 0.3 * rng.uniform(), rng);
    const auto s = testing::random_dominating_set(g, rng.uniform(), rng);
    non_minimal += !redundant_vertices(g, Solution(g, s)).empty();
    const Solution mapped = greedy_map(g, set_to_permutation(g, s, rng));
    bool inside = true;
    for (Vertex v : mapped.members()) inside = inside && std::binary_search(s.begin(), s.end(), v);
    ok += inside && testing::dominates(g, mapped.sorted_members());
  }
  return report(4, "containment", ok == pairs ? kPass : kFail,
                std::to_string(ok) + "/" + std::to_string(pairs) + " pairs (" + std::to_string(non_minimal) +
                    " with a non-minimal S)");
}

Graph fuzz_graph(Rng& rng, std::size_t index) {
  const std::size_t n = 2 + rng.below(150);
  switch (index % 4) {
    case 0:
      return testing::random_graph(n, 0.01 + 0.2 * rng.uniform(), rng);
    case 1:
      return gen_ba({std::max<std::size_t>(n, 4), 1 + rng.below(3), rng.next()});
    case 2:
      return gen_unit_disk({n, 1000.0, 50.0 + 200.0 * rng.uniform(), rng.next()}).graph;
    default: {
      const std::size_t m = n - 1 + rng.below(2 * n);
      return gen_weighted_random({n, std::min(m, n * (n - 1) / 2), WeightScheme::kUniform, 20, 70, rng.next()});
    }
  }
}

int criterion5() {
  Rng rng(5);
  const std::size_t inputs = 40;
  std::size_t violations = 0;
  std::uint64_t rlso_steps = 0, msrlso_steps = 0, aco_sets = 0;
  for (std::size_t t = 0; t < inputs; ++t) {
    const Graph g = fuzz_graph(rng, t);

    RlsoConfig r;
    r.max_iterations = 10000;
    r.seed = rng.next();
    std::size_t prev = SIZE_MAX;
    bool mono = true;
    r.observer = [&](std::uint64_t, std::size_t size) {
      mono = mono && size <= prev;
      prev = size;
      ++rlso_steps;
    };
    const RunTrace rt = rlso_run(g, r);
    violations += !mono + !is_dominating_set(g, rt.best);

    MsrlsoConfig m;
    m.max_iterations = 10000;
    m.stall_cap = 200;
    m.extended_cap = 1000;
    m.seed = rng.next();
    double prev_best = INFINITY;
    bool best_mono = true;
    m.observer = [&](const MsrlsoConfig::Step& s) {
      best_mono = best_mono && s.global_best <= prev_best;
      prev_best = s.global_best;
      ++msrlso_steps;
    };
    const RunTrace mt = msrlso_run(g, m);
    violations += !best_mono + !is_dominating_set(g, mt.best);

    for (AcoVariant v : {AcoVariant::kLs, AcoVariant::kPpLs, AcoVariant::kLsS}) {
      AcoConfig a = AcoConfig::defaults(v);
      a.max_evaluations = 10000;
      a.seed = rng.next();
      bool clean = true;
      a.observer = [&](const AcoConfig::Step& s) {
        for (const auto& set : s.ant_sets) {
          const Solution sol(g, set);
          clean = clean && sol.is_dominating() && redundant_vertices(g, sol).empty();
          ++aco_sets;
        }
      };
      const RunTrace at = aco_run(g, a);
      violations += !clean + !is_dominating_set(g, at.best) +
                    !redundant_vertices(g, Solution(g, at.best)).empty();
    }

    Rng grng(rng.next());
    violations += !greedy_mds(g, grng).is_dominating() + !greedy_mwds(g, grng).is_dominating();
  }
  return report(5, "monotonicity and validity", violations == 0 ? kPass : kFail,
                std::to_string(inputs) + " fuzzed graphs, " + std::to_string(rlso_steps) + " rlso steps, " +
                    std::to_string(msrlso_steps) + " msrlso steps, " + std::to_string(aco_sets) +
                    " ant sets; violations " + std::to_string(violations));
}

int criterion6() {
  const Seconds limit(180);
  double ba_sum = 0.0;
  for (std::uint64_t k = 0; k < 10; ++k) {
    const Graph g = gen_ba({500, 2, mix_seed(600, k)});
    RlsoConfig r;
    r.time_limit = limit;
    r.seed = mix_seed(601, k);
    const RunTrace tr = rlso_run(g, r);
    ba_sum += static_cast<double>(tr.best.size());
    note("BA[500,2] #" + std::to_string(k) + ": rlso " + std::to_string(tr.best.size()) + " after " +
         std::to_string(tr.iterations) + " proposals");
  }
  const double ba_mean = ba_sum / 10.0;
  const bool ba_ok = std::abs(ba_mean - 93.7) <= 0.05 * 93.7;

  double udg_sum = 0.0, greedy_sum = 0.0;
  for (std::uint64_t k = 0; k < 10; ++k) {
    const Graph g = gen_unit_disk({1000, 2000.0, 150.0, mix_seed(602, k)}).graph;
    const GreedyStats st = repeated_greedy(g, 1000, mix_seed(603, k));
    RlsoConfig r;
    r.time_limit = limit;
    r.seed = mix_seed(604, k);
    const RunTrace tr = rlso_run(g, r);
    udg_sum += static_cast<double>(tr.best.size());
    greedy_sum += st.mean;
    note("UDG[1000,150] #" + std::to_string(k) + ": greedy mean " + fmt(st.mean) + ", rlso " +
         std::to_string(tr.best.size()));
  }
  const double udg_mean = udg_sum / 10.0;
  const double greedy_mean = greedy_sum / 10.0;
  const bool udg_ok = udg_mean >= 66.7 && udg_mean <= 85.0 && udg_mean <= greedy_mean;
  return report(6, "generator statistical bands", ba_ok && udg_ok ? kPass : kFail,
                "BA mean " + fmt(ba_mean) + " (target 93.7 +/- 5%), UDG rlso mean " + fmt(udg_mean) +
                    " in [66.7, 85.0], greedy mean " + fmt(greedy_mean));
}

int criterion7() {
  const fs::path smpi = fs::path(DOMSET_DATA_DIR) / "smpi" / "T1";
  std::vector<fs::path> files;
  if (fs::is_directory(smpi)) {
    for (const auto& e : fs::directory_iterator(smpi)) {
      const std::string f = e.path().filename().string();
      if (f.rfind("Problem.dat_50_50_", 0) == 0) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
  }
  if (!files.empty()) {
    double sum = 0.0;
    std::size_t runs = 0;
    for (const auto& f : files) {
      const Graph g = load_graph_file(f);
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        MsrlsoConfig m;
        m.time_limit = Seconds(600);
        m.seed = seed;
        sum += msrlso_run(g, m).best_value;
        ++runs;
      }
    }
    const double mean = sum / static_cast<double>(runs);
    return report(7, "weighted instances", std::abs(mean - 531.3) <= 0.01 * 531.3 ? kPass : kFail,
                  "T1 50_50 mean " + fmt(mean) + " over " + std::to_string(runs) + " runs (target 531.3 +/- 1%)");
  }

  note("T1 50_50 files absent; using the exact-oracle substitute");
  Rng rng(7);
  std::size_t ok = 0;
  const std::size_t graphs = 100;
  for (std::size_t t = 0; t < graphs; ++t) {
    const std::size_t n = 4 + rng.below(11);
    const std::size_t max_m = n * (n - 1) / 2;
    const std::size_t m = n - 1 + rng.below(max_m - (n - 1) + 1);
    const WeightScheme scheme = t % 2 == 0 ? WeightScheme::kUniform : WeightScheme::kDegreeSquared;
    const Graph g = gen_weighted_random({n, m, scheme, 20, 70, rng.next()});
    const double exact = brute_force_mwds(g).value;
    const double reference = testing::exhaustive(g).min_weight;
    // Default cycle parameters; the run ends after c_max cycles.
    MsrlsoConfig cfg;
    cfg.seed = rng.next();
    const RunTrace tr = msrlso_run(g, cfg);
    const bool match = std::abs(tr.best_value - exact) < 1e-9 && std::abs(exact - reference) < 1e-9 &&
                       is_dominating_set(g, tr.best);
    ok += match;
    if (!match) {
      note("n=" + std::to_string(n) + " m=" + std::to_string(m) + ": msrlso " + fmt(tr.best_value) +
           " vs optimum " + fmt(exact));
    }
  }
  return report(7, "weighted instances", ok == graphs ? kPass : kFail,
                "substitute: msrlso matched the exact MWDS on " + std::to_string(ok) + "/" +
                    std::to_string(graphs) + " weighted graphs (n <= 14)");
}

int criterion8() {
  const std::size_t ingested = static_cast<std::size_t>(ingest_bound(4.0 / 3.0, Problem::kMds));
  const std::size_t gamma_c4 = testing::exhaustive(testing::cycle(4)).gamma;
  if (ingested != 2 || gamma_c4 != 2) {
    return report(8, "LP bound", kFail, "ingest_bound(4/3) = " + std::to_string(ingested));
  }

  const fs::path dir = scratch_dir("lp");
  const auto instances = oracle_instances();
  std::vector<std::string> names;
  std::string files = (dir / "c4.lp").string();
  std::ofstream(dir / "c4.lp") << emit_lp(testing::cycle(4));
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const fs::path p = dir / ("g" + std::to_string(i) + ".lp");
    std::ofstream(p) << emit_lp(instances[i].second);
    files += " " + p.string();
  }
  const fs::path result = dir / "objectives.txt";
  const int rc = run_command("python3 " + std::string(DOMSET_SCRIPTS_DIR) + "/solve_lp.py " + files + " > " +
                             result.string() + " 2>/dev/null");
  if (rc == 3 || rc == 127) {
    fs::remove_all(dir);
    return report(8, "LP bound", kSkip, "ingest_bound(4/3) = 2 = gamma(C4); no LP solver available");
  }
  if (rc != 0) return report(8, "LP bound", kFail, "LP solver script exited with " + std::to_string(rc));

  std::map<std::string, double> objective;
  {
    std::ifstream in(result);
    std::string file;
    double value = 0.0;
    while (in >> file >> value) objective[fs::path(file).filename().string()] = value;
  }
  const auto c4 = objective.find("c4.lp");
  const bool c4_ok = c4 != objective.end() && std::abs(c4->second - 4.0 / 3.0) <= 1e-6;
  std::size_t bounded = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto it = objective.find("g" + std::to_string(i) + ".lp");
    if (it == objective.end()) continue;
    const double bound = ingest_bound(it->second, Problem::kMds);
    const auto gamma = static_cast<double>(testing::exhaustive(instances[i].second).gamma);
    if (bound <= gamma) {
      ++bounded;
    } else {
      note(instances[i].first + ": bound " + fmt(bound) + " > gamma " + fmt(gamma));
    }
  }
  fs::remove_all(dir);
  const bool ok = c4_ok && bounded == instances.size();
  return report(8, "LP bound", ok ? kPass : kFail,
                "C4 LP optimum " + (c4 == objective.end() ? std::string("missing") : fmt(c4->second, 6)) +
                    ", ingest_bound(4/3) = 2 = gamma(C4), bound <= gamma on " + std::to_string(bounded) + "/" +
                    std::to_string(instances.size()) + " oracle instances");
}

int criterion9() {
  const fs::path dir = scratch_dir("determinism");
  const std::string instances = std::string(DOMSET_DATA_DIR) + "/zachary.txt gen:ba:n=200,w=2,count=3,seed=11 " +
                                "gen:udg:n=150,side=1000,range=150,count=2 gen:wrand:n=40,m=80,count=2";
  struct Case {
    std::string algo;
    std::string stop;
  };
  const std::vector<Case> cases{{"greedy", ""},
                                {"rlso", "--max-iterations 3000"},
                                {"msrlso", "--max-iterations 3000"},
                                {"aco-ls", "--max-iterations 15"},
                                {"aco-pp-ls", "--max-iterations 15"},
                                {"aco-ls-s", "--max-iterations 15"}};
  std::size_t identical = 0;
  for (const Case& c : cases) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / (c.algo + "_" + std::to_string(run) + ".csv");
      // The second run uses a different worker count on purpose.
      const std::string cmd = std::string(DOMSET_CLI) + " experiment " + instances + " --algo " + c.algo + " " +
                              c.stop + " --repeats 4 --seed 123 --no-timing --threads " + (run ? "3" : "1") +
                              " --out " + out.string() + " --aggregate " + (dir / "agg.csv").string();
      if (run_command(cmd + " >/dev/null 2>&1") != 0) note(c.algo + ": experiment command failed");
      outputs[run] = slurp(out);
    }
    const bool same = !outputs[0].empty() && outputs[0] == outputs[1];
    identical += same;
    if (!same) note(c.algo + ": CSV differs between runs");
  }
  fs::remove_all(dir);
  return report(9, "determinism", identical == cases.size() ? kPass : kFail,
                std::to_string(identical) + "/" + std::to_string(cases.size()) +
                    " algorithms produced byte-identical runs CSV");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("domset acceptance checks");
  int criterion = 0;
  app.add_option("--criterion", criterion, "Criterion number (0 = all except 6)")->check(CLI::Range(0, 9));
  CLI11_PARSE(app, argc, argv);

  int (*const checks[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                             criterion6, criterion7, criterion8, criterion9};
  try {
    if (criterion != 0) return checks[criterion - 1]();
    int worst = kPass;
    for (int n = 1; n <= 9; ++n) {
      if (n == 6) continue;
      const int rc = checks[n - 1]();
      if (rc == kFail) worst = kFail;
    }
    return worst;
  } catch (const std::exception& e) {
    std::printf("[FAIL] criterion %d: exception: %s\n", criterion, e.what());
    return kFail;
  }
}
