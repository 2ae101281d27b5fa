#include "ghct/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "ghct/certifier.hpp"
#include "ghct/cuttree.hpp"

namespace ghct {

namespace {

BenchRow run_one(const BenchInstance& inst, const std::string& algo, int repeat,
                 const BenchOptions& opts) {
  const Graph& g = inst.graph;
  BenchRow row;
  row.instance = inst.id;
  row.n = g.node_count();
  row.m = static_cast<long>(g.total_capacity());
  row.algorithm = algo;
  row.repeat = repeat;

  BuildStats stats;
  const auto start = std::chrono::steady_clock::now();
  CutTree tree;
  if (algo == "gh") {
    tree = gomory_hu(g, &stats);
  } else if (algo == "gusfield") {
    tree = gusfield(g, &stats);
  } else if (algo == "hybrid") {
    tree = hybrid_cut_tree(g, opts.degree_threshold, &stats);
  } else {
    throw ContractError("bench: unknown algorithm '" + algo + "'");
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  row.flow_calls = stats.flow_calls;
  row.flow_value_sum = stats.flow_value_sum;
  row.stage2_calls = stats.stage2_calls;
  row.stage2_flow_sum = stats.stage2_flow_sum;
  row.high_degree_nodes = stats.high_degree_nodes;
  row.degree_threshold = stats.degree_threshold;
  row.stretch_ok = stretch_check(g, tree).ok;
  row.invariants_ok = row.stretch_ok;
  if (algo == "hybrid" && g.unit_capacities()) {
    row.invariants_ok = row.invariants_ok && row.stage2_calls <= row.high_degree_nodes &&
                        row.stage2_flow_sum <= 2 * row.m;
  }
  if (opts.audit) {
    const AuxSizeReport audit = aux_size_audit(g, tree, centroid_decompose(tree));
    row.aux_edges_per_depth = audit.per_depth;
    row.invariants_ok = row.invariants_ok && audit.ok;
  }
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& corpus, const BenchOptions& opts) {
  if (opts.repeats < 1) throw ContractError("bench: repeats must be positive");
  struct Task {
    std::size_t instance;
    std::size_t algo;
    int repeat;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t a = 0; a < opts.algorithms.size(); ++a) {
      for (int r = 0; r < opts.repeats; ++r) tasks.push_back({i, a, r});
    }
  }
  std::vector<BenchRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      try {
        const Task& t = tasks[k];
        rows[k] = run_one(corpus[t.instance], opts.algorithms[t.algo], t.repeat, opts);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int workers = std::max(1, opts.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string bench_row_json(const BenchRow& row, bool include_timing) {
  nlohmann::ordered_json j;
  j["schema"] = "ghct-bench/1";
  j["instance"] = row.instance;
  j["n"] = row.n;
  j["m"] = row.m;
  j["algorithm"] = row.algorithm;
  j["repeat"] = row.repeat;
  if (include_timing) j["wall_ms"] = row.wall_ms;
  j["flow_calls"] = row.flow_calls;
  j["flow_value_sum"] = row.flow_value_sum;
  if (row.algorithm == "hybrid") {
    j["d"] = row.degree_threshold;
    j["high_degree_nodes"] = row.high_degree_nodes;
    j["stage2_calls"] = row.stage2_calls;
    j["stage2_flow_sum"] = row.stage2_flow_sum;
  }
  j["aux_edges_per_depth"] = row.aux_edges_per_depth;
  j["stretch_ok"] = row.stretch_ok;
  j["invariants_ok"] = row.invariants_ok;
  return j.dump();
}

}  // namespace ghct
