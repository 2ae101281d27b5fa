#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghct/graph.hpp"

namespace ghct {

struct BenchInstance {
  std::string id;
  Graph graph;
};

struct BenchOptions {
  std::vector<std::string> algorithms{"gh", "gusfield", "hybrid"};
  int repeats = 1;
  int workers = 1;
  std::optional<Capacity> degree_threshold;  // hybrid d; default ceil(sqrt m)
  bool audit = true;                          // centroid aux-size audit per tree
};

/// One (instance, algorithm, repeat) run.
struct BenchRow {
  std::string instance;
  int n = 0;
  long m = 0;
  std::string algorithm;
  int repeat = 0;
  double wall_ms = 0;
  long flow_calls = 0;
  Capacity flow_value_sum = 0;
  long stage2_calls = 0;
  Capacity stage2_flow_sum = 0;
  long high_degree_nodes = 0;
  Capacity degree_threshold = 0;
  std::vector<long> aux_edges_per_depth;
  bool stretch_ok = false;
  bool invariants_ok = false;
};

/// Runs every algorithm on every instance `repeats` times. Rows come back in
/// (instance, algorithm, repeat) order regardless of the worker count.
std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& corpus, const BenchOptions& opts);

/// One newline-free JSON object; timing omitted when include_timing is false.
std::string bench_row_json(const BenchRow& row, bool include_timing);

}  // namespace ghct
