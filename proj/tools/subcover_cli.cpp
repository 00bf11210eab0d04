// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// subcover: generate instances, run maximization / cover algorithms, and run
// the exact oracles. Runs are emitted as CSV.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "subcover/constraints.hpp"
#include "subcover/cover.hpp"
#include "subcover/errors.hpp"
#include "subcover/exact.hpp"
#include "subcover/instances.hpp"
#include "subcover/maximize.hpp"
#include "subcover/metrics.hpp"
#include "subcover/rng.hpp"

namespace {

using namespace subcover;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitViolated = 3;

const std::map<std::string, std::set<std::string>>& Registry() {
  static const std::map<std::string, std::set<std::string>> registry = {
      {"smp", {"greedy", "rg", "block-g", "block-g-gcd", "block-g-nonmono",
               "nonmono-bi", "block-g-aug"}},
      {"smkp", {"block-g", "greedy"}},
      {"smf", {"block-fair", "block-g", "greedy"}},
      {"scp", {"block-g", "rg"}},
      {"sckp", {"block-g", "greedy", "greedy-knapsack"}},
      {"scf", {"block-fair", "block-g", "greedy"}},
  };
  return registry;
}

std::string Num(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string JoinSet(const ElementSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidParameter, "bad integer list '" + text + "'");
    }
  }
  return out;
}

struct RunConfig {
  std::string problem;
  std::string alg;
  std::string instance;
  std::optional<double> tau;
  std::optional<double> v;
  std::vector<int> caps;
  std::vector<double> p;
  std::vector<double> p_lo;
  std::vector<double> p_hi;
  std::vector<int> fair_l;
  std::vector<int> fair_u;
  std::optional<int> rank;
  double eps = 0.05;
  double alpha = 0.2;
  double delta = 0.1;
  bool no_early_stop = false;
  std::uint64_t seed = 1;
  int repetitions = 1;
  int jobs = 1;
  std::string out;
};

struct Row {
  std::string tau, v;
  std::uint64_t seed = 0;
  RunMetrics metrics;
  int guesses = 0;
  std::string status;
  std::string message;
};

const char* kCsvHeader =
    "alg,problem,tau,v,eps,alpha,delta,seed,f_value,budget,solution_size,"
    "fairness_diff,queries,time_ms,guesses_tried,status";

std::string CsvLine(const RunConfig& cfg, const Row& r) {
  std::ostringstream os;
  os << cfg.alg << ',' << cfg.problem << ',' << r.tau << ',' << r.v << ','
     << Num(cfg.eps) << ',' << Num(cfg.alpha) << ',' << Num(cfg.delta) << ','
     << r.seed << ',' << Num(r.metrics.f_value) << ',' << Num(r.metrics.budget)
     << ',' << r.metrics.solution_size << ',' << Num(r.metrics.fairness_diff) << ','
     << r.metrics.queries << ',' << Num(r.metrics.time_ms) << ',' << r.guesses
     << ',' << r.status;
  return os.str();
}

// Everything a single run needs, loaded once and shared read-only.
struct Problem {
  InstanceFile inst;
  std::unique_ptr<Objective> f;
  PartitionedGroundSet ground;
  CostVector costs = CostVector::Unit(1);
  std::vector<double> p;  // proportions used by the budget metric
};

std::vector<int> ResolveCaps(const RunConfig& cfg, const Problem& pr) {
  if (!cfg.caps.empty()) return cfg.caps;
  if (cfg.v) {
    std::vector<int> caps;
    for (int j = 0; j < pr.ground.num_groups(); ++j) {
      caps.push_back(static_cast<int>(std::floor(pr.p[static_cast<size_t>(j)] * *cfg.v + 1e-9)));
    }
    return caps;
  }
  const auto it = pr.inst.params.find("k");
  if (it != pr.inst.params.end()) return ParseIntList(it->second);
  throw Error(ErrorCode::kInvalidParameter, "smp needs --k, --v, or an instance with default caps");
}

FairnessMatroid ResolveMatroid(const RunConfig& cfg, const Problem& pr) {
  if (!cfg.rank) throw Error(ErrorCode::kInvalidParameter, "smf needs --rank");
  if (!cfg.p_lo.empty() || !cfg.p_hi.empty()) {
    return fairness_from_proportions(cfg.p_lo, cfg.p_hi, *cfg.rank);
  }
  FairnessMatroid m;
  m.k = *cfg.rank;
  const auto groups = static_cast<size_t>(pr.ground.num_groups());
  m.l = cfg.fair_l.empty() ? std::vector<int>(groups, 0) : cfg.fair_l;
  if (cfg.fair_u.empty()) {
    for (size_t g = 0; g < groups; ++g) {
      m.u.push_back(static_cast<int>(pr.ground.members(static_cast<int>(g)).size()));
    }
  } else {
    m.u = cfg.fair_u;
  }
  m.Validate();
  if (m.l.size() != groups) throw Error(ErrorCode::kInvalidParameter, "need one l/u per group");
  return m;
}

double RequireTau(const RunConfig& cfg) {
  if (!cfg.tau) throw Error(ErrorCode::kInvalidParameter, cfg.problem + " needs --tau");
  return *cfg.tau;
}

// Runs one seeded repetition. Post-condition failures yield status "violated".
Row RunOnce(const RunConfig& cfg, const Problem& pr, std::uint64_t seed) {
  Row row;
  row.seed = seed;
  if (cfg.tau) row.tau = Num(*cfg.tau);
  QueryCountedOracle oracle(*pr.f);
  SeededRng rng(seed);
  const PartitionProportions p(pr.p);
  const auto t0 = std::chrono::steady_clock::now();
  ElementSet S;
  double f_value = 0.0;
  bool ok = true;

  const std::string& a = cfg.alg;
  if (cfg.problem == "smp") {
    const std::vector<int> caps = ResolveCaps(cfg, pr);
    const int total = std::accumulate(caps.begin(), caps.end(), 0);
    row.v = cfg.v ? Num(*cfg.v) : std::to_string(total);
    MaxResult res;
    if (a == "greedy") {
      PartitionCapsIndependence ind(pr.ground, caps);
      res = standard_greedy_matroid(oracle, pr.ground, ind);
    } else if (a == "rg") {
      res = random_greedy_cardinality(oracle, pr.ground, total, rng);
    } else if (a == "block-g") {
      res = block_greedy_mono(oracle, pr.ground, caps);
    } else if (a == "block-g-gcd") {
      res = block_greedy_gcd(oracle, pr.ground, caps);
    } else if (a == "block-g-nonmono") {
      res = block_greedy_nonmono(oracle, pr.ground, caps, rng);
    } else if (a == "block-g-aug") {
      const MaxResult first = block_greedy_mono(oracle, pr.ground, caps);
      res = greedy_augment(oracle, pr.ground, caps, first.S);
    } else {  // nonmono-bi
      std::vector<double> q;
      for (int k : caps) q.push_back(static_cast<double>(k) / total);
      const PartitionProportions pp = cfg.p.empty() ? PartitionProportions(q) : p;
      const double v = cfg.v ? *cfg.v : total;
      res = nonmono_bi(oracle, pr.ground, pp, v, cfg.eps, rng);
      const std::vector<int> counts = pr.ground.GroupCounts(res.S);
      for (int j = 0; j < pr.ground.num_groups(); ++j) {
        ok = ok && counts[static_cast<size_t>(j)] <=
                       nonmono_bi_rounds(cfg.eps) * nonmono_bi_steps(pp[j] * v);
      }
    }
    if (a == "rg") {
      ok = static_cast<int>(res.S.size()) <= total;
    } else if (a != "nonmono-bi") {
      const std::vector<int> counts = pr.ground.GroupCounts(res.S);
      for (size_t j = 0; j < caps.size(); ++j) ok = ok && counts[j] <= caps[j];
    }
    S = res.S;
    f_value = res.f_value;
  } else if (cfg.problem == "smkp") {
    if (!cfg.v) throw Error(ErrorCode::kInvalidParameter, "smkp needs --v");
    row.v = Num(*cfg.v);
    MaxResult res;
    if (a == "block-g") {
      res = greedy_knapsack_bi(oracle, pr.ground, pr.costs, p, *cfg.v, cfg.eps);
      ok = knapsack_partition_feasible(res.S, pr.ground, pr.costs, p,
                                       2.0 * halving_rounds(cfg.eps) * *cfg.v);
    } else {
      res = greedy_density_knapsack(oracle, pr.ground, pr.costs, p, *cfg.v);
      ok = knapsack_partition_feasible(res.S, pr.ground, pr.costs, p, *cfg.v);
    }
    S = res.S;
    f_value = res.f_value;
  } else if (cfg.problem == "smf") {
    const FairnessMatroid m = ResolveMatroid(cfg, pr);
    row.v = std::to_string(m.k);
    MaxResult res;
    if (a == "greedy") {
      FairnessIndependence ind(pr.ground, m);
      res = standard_greedy_matroid(oracle, pr.ground, ind);
      ok = fairness_independent(res.S, pr.ground, m);
    } else {
      res = block_fair_bi(oracle, pr.ground, m, cfg.eps);
      ok = fairness_beta_member(res.S, pr.ground, m, halving_rounds(cfg.eps));
    }
    S = res.S;
    f_value = res.f_value;
  } else {
    const double tau = RequireTau(cfg);
    CoverResult res;
    if (cfg.problem == "scp") {
      const SmpMaximizer mx = a == "rg" ? random_greedy_maximizer(pr.ground, p)
                                        : nonmono_bi_maximizer(pr.ground, p, cfg.eps);
      res = convert_rand(mx, oracle, pr.ground, p, tau, cfg.eps, cfg.delta, cfg.alpha, rng,
                         !cfg.no_early_stop);
    } else if (cfg.problem == "sckp") {
      if (a == "greedy-knapsack") {
        res = greedy_knapsack_cover(oracle, pr.ground, pr.costs, p, tau, cfg.eps);
      } else {
        const SmkpMaximizer mx =
            a == "greedy" ? density_greedy_maximizer(pr.ground, pr.costs, p, 1.0 - cfg.eps)
                          : greedy_knapsack_bi_maximizer(pr.ground, pr.costs, p, cfg.eps);
        res = convert_knapsack(mx, oracle, pr.ground, pr.costs, p, tau, cfg.alpha, !cfg.no_early_stop);
      }
    } else {
      const SmfMaximizer mx = a == "greedy" ? fair_greedy_maximizer(pr.ground, 1.0 - cfg.eps)
                                            : block_fair_bi_maximizer(pr.ground, cfg.eps);
      res = convert_fair(mx, oracle, pr.ground, cfg.p_lo, cfg.p_hi, tau, cfg.alpha,
                         !cfg.no_early_stop);
    }
    row.v = Num(res.v_S);
    row.guesses = res.guesses_tried;
    ok = res.certified && res.f_value >= res.threshold;
    S = res.S;
    f_value = res.f_value;
  }

  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  row.metrics = compute_metrics(S, pr.ground, pr.costs.values(), pr.p, f_value,
                                oracle.queries(), ms);
  row.status = ok ? "ok" : "violated";
  return row;
}

Problem LoadProblem(const RunConfig& cfg) {
  Problem pr;
  pr.inst = load_instance(cfg.instance);
  pr.f = make_objective(pr.inst);
  pr.ground = make_ground(pr.inst);
  pr.costs = make_costs(pr.inst);
  const int groups = pr.ground.num_groups();
  if (!cfg.p.empty()) {
    pr.p = PartitionProportions(cfg.p).values();
    if (static_cast<int>(pr.p.size()) != groups) {
      throw Error(ErrorCode::kInvalidProportions, "need one proportion per group");
    }
  } else {
    pr.p = PartitionProportions::Uniform(groups).values();
  }
  if ((cfg.problem == "scf" || (cfg.problem == "smf" && !cfg.p_lo.empty())) &&
      (static_cast<int>(cfg.p_lo.size()) != groups ||
       static_cast<int>(cfg.p_hi.size()) != groups)) {
    throw Error(ErrorCode::kInvalidParameter, "need --p-lo and --p-hi with one entry per group");
  }
  return pr;
}

int CmdRun(RunConfig cfg) {
  const auto& reg = Registry();
  const auto it = reg.find(cfg.problem);
  if (it == reg.end()) {
    std::cerr << "error: unknown problem '" << cfg.problem << "'\n";
    return kExitError;
  }
  if (!it->second.count(cfg.alg)) {
    std::cerr << "error: algorithm '" << cfg.alg << "' is not available for " << cfg.problem
              << "\n";
    return kExitError;
  }
  if (!(cfg.eps > 0.0 && cfg.eps < 1.0) || !(cfg.alpha > 0.0) ||
      !(cfg.delta > 0.0 && cfg.delta < 1.0) || cfg.repetitions < 1 || cfg.jobs < 1) {
    std::cerr << "error: need eps, delta in (0, 1), alpha > 0, repetitions and jobs >= 1\n";
    return kExitError;
  }
  if (cfg.instance.empty()) {
    std::cerr << "error: no instance file given\n";
    return kExitError;
  }

  Problem pr;
  try {
    pr = LoadProblem(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  std::vector<Row> rows(static_cast<size_t>(cfg.repetitions));
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.jobs)
  for (int r = 0; r < cfg.repetitions; ++r) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(r);
    Row& row = rows[static_cast<size_t>(r)];
    try {
      row = RunOnce(cfg, pr, seed);
    } catch (const Error& e) {
      row.seed = seed;
      if (cfg.tau) row.tau = Num(*cfg.tau);
      row.status = e.code() == ErrorCode::kInfeasibleThreshold ? "infeasible" : "error";
      row.message = e.what();
    } catch (const std::exception& e) {
      row.seed = seed;
      row.status = "error";
      row.message = e.what();
    }
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  bool header = true;
  if (!cfg.out.empty()) {
    header = !std::filesystem::exists(cfg.out) || std::filesystem::file_size(cfg.out) == 0;
    file.open(cfg.out, std::ios::app);
    if (!file) {
      std::cerr << "error: cannot write '" << cfg.out << "'\n";
      return kExitError;
    }
    out = &file;
  }
  if (header) *out << kCsvHeader << '\n';
  int code = kExitOk;
  for (const Row& row : rows) {
    *out << CsvLine(cfg, row) << '\n';
    if (!row.message.empty()) std::cerr << "seed " << row.seed << ": " << row.message << "\n";
    if (row.status == "infeasible") code = std::max(code, kExitInfeasible);
    if (row.status == "violated") code = std::max(code, kExitViolated);
    if (row.status == "error") code = kExitError;
  }
  return code;
}

struct OracleConfig {
  std::string problem;
  std::string instance;
  std::vector<int> caps;
  std::vector<double> p, p_lo, p_hi;
  std::vector<int> fair_l, fair_u;
  std::optional<int> rank;
  std::optional<double> tau, v;
};

int CmdOracle(const OracleConfig& oc) {
  const InstanceFile inst = load_instance(oc.instance);
  if (inst.n > kMaxExactSize) {
    std::cerr << "error: instance-too-large: n = " << inst.n << " exceeds " << kMaxExactSize
              << "\n";
    return kExitError;
  }
  const auto f = make_objective(inst);
  const PartitionedGroundSet ground = make_ground(inst);
  const CostVector costs = make_costs(inst);
  const PartitionProportions p =
      oc.p.empty() ? PartitionProportions::Uniform(ground.num_groups()) : PartitionProportions(oc.p);
  QueryCountedOracle oracle(*f);
  auto need = [&](const std::optional<double>& x, const char* flag) {
    if (!x) throw Error(ErrorCode::kInvalidParameter, std::string("missing ") + flag);
    return *x;
  };

  ExactResult res;
  if (oc.problem == "smp") {
    std::vector<int> caps = oc.caps;
    if (caps.empty()) {
      const auto it = inst.params.find("k");
      if (it == inst.params.end()) throw Error(ErrorCode::kInvalidParameter, "missing --k");
      caps = ParseIntList(it->second);
    }
    res = brute_force_smp(oracle, ground, caps);
  } else if (oc.problem == "smkp") {
    res = brute_force_smkp(oracle, ground, costs, p, need(oc.v, "--v"));
  } else if (oc.problem == "scp") {
    res = brute_force_scp(oracle, ground, p, need(oc.tau, "--tau"));
  } else if (oc.problem == "sckp") {
    res = brute_force_sckp(oracle, ground, costs, p, need(oc.tau, "--tau"));
  } else if (oc.problem == "smf") {
    FairnessMatroid m;
    if (!oc.rank) throw Error(ErrorCode::kInvalidParameter, "missing --rank");
    if (!oc.p_lo.empty()) {
      m = fairness_from_proportions(oc.p_lo, oc.p_hi, *oc.rank);
    } else {
      m.k = *oc.rank;
      m.l = oc.fair_l.empty() ? std::vector<int>(static_cast<size_t>(ground.num_groups()), 0)
                              : oc.fair_l;
      if (oc.fair_u.empty()) {
        for (int g = 0; g < ground.num_groups(); ++g) {
          m.u.push_back(static_cast<int>(ground.members(g).size()));
        }
      } else {
        m.u = oc.fair_u;
      }
    }
    res = brute_force_smf(oracle, ground, m);
  } else if (oc.problem == "scf") {
    res = brute_force_scf(oracle, ground, oc.p_lo, oc.p_hi, need(oc.tau, "--tau"));
  } else {
    std::cerr << "error: unknown problem '" << oc.problem << "'\n";
    return kExitError;
  }
  std::cout << "value: " << Num(res.value) << "\n";
  std::cout << "set: " << JoinSet(res.S_opt) << "\n";
  std::cout << "enumerated: " << res.enumerated << "\n";
  if (res.p1_value) std::cout << "p1_value: " << Num(*res.p1_value) << "\n";
  return kExitOk;
}

int WriteInstance(const InstanceFile& inst, const std::string& out) {
  if (out.empty()) {
    std::cout << serialize_instance(inst);
    std::cerr << "n=" << inst.n << " N=" << make_ground(inst).num_groups()
              << " objective=" << ObjectiveKindName(inst.kind) << "\n";
  } else {
    save_instance(inst, out);
    std::cout << "n=" << inst.n << " N=" << make_ground(inst).num_groups()
              << " objective=" << ObjectiveKindName(inst.kind) << "\n";
  }
  return kExitOk;
}

int DefaultJobs() {
  if (const char* env = std::getenv("SUBCOVER_JOBS")) {
    const int jobs = std::atoi(env);
    if (jobs > 0) return jobs;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular cover and maximization under group constraints"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->require_subcommand(1);
  std::string out;
  std::string k_text;
  double h_eps = 0.1;
  auto* hard = gen->add_subcommand("hardness", "Greedy tightness family");
  hard->add_option("--k", k_text, "Caps k_1 <= ... <= k_N, comma separated")->required();
  hard->add_option("--eps", h_eps, "Gap in (0, 0.5)");
  hard->add_option("--out", out, "Output path (stdout when omitted)");

  auto* toy = gen->add_subcommand("toy", "The 8-element greedy counterexample");
  toy->add_option("--out", out);

  SetCoverParams sc;
  std::uint64_t gen_seed = 1;
  std::optional<std::uint64_t> cost_seed;
  double cost_lo = 0.001, cost_hi = 10.0;
  auto* setc = gen->add_subcommand("setcover", "Synthetic grouped set cover");
  setc->add_option("--seed", gen_seed);
  setc->add_option("--groups", sc.groups);
  setc->add_option("--base", sc.base_size, "Size of group 0");
  setc->add_option("--increment", sc.increment, "Extra elements per group index");
  setc->add_option("--shared", sc.shared_block, "Elements sharing one tag set per group");
  setc->add_option("--tags", sc.tags_per_element);
  setc->add_option("--out", out);

  int g_n = 10, g_m = 20, g_groups = 2;
  double w_lo = 1.0, w_hi = 1.0;
  std::string g_kind = "graph_cut";
  auto* graph = gen->add_subcommand("graph", "Random simple graph");
  graph->add_option("--n", g_n);
  graph->add_option("--m", g_m);
  graph->add_option("--groups", g_groups);
  graph->add_option("--seed", gen_seed);
  graph->add_option("--w-lo", w_lo);
  graph->add_option("--w-hi", w_hi);
  graph->add_option("--objective", g_kind)->check(CLI::IsMember({"graph_cut", "vertex_coverage"}));
  graph->add_option("--out", out);

  std::string edge_path;
  auto* edges = gen->add_subcommand("edgelist", "Ingest a SNAP-style edge list");
  edges->add_option("--input", edge_path)->required();
  edges->add_option("--groups", g_groups);
  edges->add_option("--seed", gen_seed);
  edges->add_option("--objective", g_kind)->check(CLI::IsMember({"graph_cut", "vertex_coverage"}));
  edges->add_option("--out", out);

  for (auto* sub : {setc, graph, edges}) {
    sub->add_option("--cost-seed", cost_seed, "Attach uniform costs drawn with this seed");
    sub->add_option("--cost-lo", cost_lo);
    sub->add_option("--cost-hi", cost_hi);
  }

  // run
  RunConfig cfg;
  cfg.jobs = DefaultJobs();
  std::string caps_text, p_text, plo_text, phi_text, l_text, u_text;
  auto* run = app.add_subcommand("run", "Run an algorithm and emit CSV");
  run->add_option("problem", cfg.problem, "smp | smkp | smf | scp | sckp | scf")->required();
  run->add_option("instance", cfg.instance, "Instance file");
  run->add_option("--alg", cfg.alg)->required();
  run->add_option("--tau", cfg.tau);
  run->add_option("--v", cfg.v);
  run->add_option("--k", caps_text, "Per-group caps");
  run->add_option("--p", p_text, "Group proportions (default uniform)");
  run->add_option("--p-lo", plo_text);
  run->add_option("--p-hi", phi_text);
  run->add_option("--l", l_text, "Fairness lower caps");
  run->add_option("--u", u_text, "Fairness upper caps");
  run->add_option("--rank", cfg.rank, "Fairness rank k");
  run->add_option("--eps", cfg.eps);
  run->add_option("--alpha", cfg.alpha);
  run->add_option("--delta", cfg.delta);
  run->add_flag("--no-early-stop", cfg.no_early_stop,
                "Run every maximizer call to completion instead of stopping at the threshold");
  run->add_option("--seed", cfg.seed);
  run->add_option("--repetitions", cfg.repetitions);
  run->add_option("--jobs", cfg.jobs, "Workers (default $SUBCOVER_JOBS or 1)");
  run->add_option("--out", cfg.out, "Append CSV here instead of stdout");

  // oracle
  OracleConfig oc;
  std::string o_caps, o_p, o_plo, o_phi, o_l, o_u;
  auto* orc = app.add_subcommand("oracle", "Exact optimum by enumeration (n <= 22)");
  orc->add_option("problem", oc.problem)->required();
  orc->add_option("instance", oc.instance)->required();
  orc->add_option("--k", o_caps);
  orc->add_option("--p", o_p);
  orc->add_option("--p-lo", o_plo);
  orc->add_option("--p-hi", o_phi);
  orc->add_option("--l", o_l);
  orc->add_option("--u", o_u);
  orc->add_option("--rank", oc.rank);
  orc->add_option("--tau", oc.tau);
  orc->add_option("--v", oc.v);

  CLI11_PARSE(app, argc, argv);

  auto doubles = [](const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kInvalidParameter, "bad number list '" + text + "'");
      }
    }
    return out;
  };

  try {
    if (*gen) {
      InstanceFile inst;
      if (*hard) {
        inst = gen_hardness(ParseIntList(k_text), h_eps);
      } else if (*toy) {
        inst = gen_toy_example();
      } else if (*setc) {
        inst = gen_synthetic_setcover(gen_seed, sc);
      } else if (*graph) {
        inst = gen_random_graph(gen_seed, g_n, g_m, g_groups, w_lo, w_hi,
                                ParseObjectiveKind(g_kind));
      } else {
        inst = load_edge_list(edge_path, ParseObjectiveKind(g_kind));
        if (g_groups > 1) inst = assign_random_groups(std::move(inst), gen_seed, g_groups);
      }
      if (cost_seed) inst = assign_costs(std::move(inst), *cost_seed, cost_lo, cost_hi);
      return WriteInstance(inst, out);
    }
    if (*run) {
      cfg.caps = caps_text.empty() ? std::vector<int>{} : ParseIntList(caps_text);
      cfg.p = p_text.empty() ? std::vector<double>{} : doubles(p_text);
      cfg.p_lo = plo_text.empty() ? std::vector<double>{} : doubles(plo_text);
      cfg.p_hi = phi_text.empty() ? std::vector<double>{} : doubles(phi_text);
      cfg.fair_l = l_text.empty() ? std::vector<int>{} : ParseIntList(l_text);
      cfg.fair_u = u_text.empty() ? std::vector<int>{} : ParseIntList(u_text);
      return CmdRun(cfg);
    }
    oc.caps = o_caps.empty() ? std::vector<int>{} : ParseIntList(o_caps);
    oc.p = o_p.empty() ? std::vector<double>{} : doubles(o_p);
    oc.p_lo = o_plo.empty() ? std::vector<double>{} : doubles(o_plo);
    oc.p_hi = o_phi.empty() ? std::vector<double>{} : doubles(o_phi);
    oc.fair_l = o_l.empty() ? std::vector<int>{} : ParseIntList(o_l);
    oc.fair_u = o_u.empty() ? std::vector<int>{} : ParseIntList(o_u);
    return CmdOracle(oc);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kInfeasibleThreshold ? kExitInfeasible : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
