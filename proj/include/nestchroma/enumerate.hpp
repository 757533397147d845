#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nestchroma/graph.hpp"
#include "nestchroma/poset.hpp"

namespace nestchroma {

// upper-triangle bit string, column major as in graph6, packed MSB-first so that
// lexicographic word comparison equals lexicographic bit-string comparison
using GraphLabel = std::vector<uint64_t>;

GraphLabel canonical_label(const Graph& g);
Graph canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

struct GraphClassFilter {
  bool connected_only = false;
  bool bipartite_only = false;
  int min_vertices = 1;
  int max_vertices = 1;
};

// isomorph-free exhaustive generation by vertex extension + canonical dedup
class GraphGenerator {
 public:
  static constexpr int kMaxVertices = 9;

  // canonical representatives on exactly n vertices, in canonical-label order; memoized
  const std::vector<Graph>& graphs_on(int n);

  std::vector<Graph> generate(const GraphClassFilter& filter);
  void for_each(const GraphClassFilter& filter, const std::function<void(const Graph&)>& fn);

 private:
  std::vector<std::vector<Graph>> levels_;
};

bool filter_accepts(const GraphClassFilter& filter, const Graph& g);

struct TripleRecord {
  int n = 0;
  int chi = 0;
  int chi_nested = 0;
  std::string witness;  // graph6, first realizing graph in canonical order
};
struct TripleClassification {
  int n = 0;
  std::vector<TripleRecord> realizable;          // sorted by (chi, chi_nested)
  std::vector<std::pair<int, int>> gaps;         // pairs 1 <= c <= s <= n with no witness
};
TripleClassification classify_triples(int n, GraphGenerator& gen);

// duplicate-free G on exactly p.size() vertices with weak duplicate poset isomorphic to p
std::optional<Graph> poset_realizability(const Poset& p, int max_vertices, GraphGenerator& gen);

struct SlackRecord {
  int n = 0;
  int min_slack = 0;
  std::string witness;  // graph6 attaining the per-n minimum
};
struct ComplementScan {
  std::vector<SlackRecord> per_n;
  int min_slack = 0;
  std::vector<std::string> counterexamples;  // graphs with negative slack
};
ComplementScan complement_conjecture_scan(int max_n, GraphGenerator& gen);

struct BipartiteCount {
  int n = 0;
  long long connected_by_sequences = 0;  // sequence route, transpose-deduplicated
  long long connected_by_filter = 0;     // filter route over generated graphs
  long long duplicate_free_total = 0;    // connectivity not required
  long long connected_duplicate_free = 0;
};
BipartiteCount count_colour_nested_bipartite(int n, GraphGenerator& gen);

struct PlanarWitness {
  int k = 0;
  Graph graph;
  int chi_nested = 0;
};
// planar witnesses attaining every value 2..n on exactly n vertices
std::vector<PlanarWitness> planar_sweep(int n);

int worker_count();  // hardware concurrency capped by NESTCHROMA_THREADS

// order-preserving parallel evaluation
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t count, Fn fn);

}  // namespace nestchroma

#include "nestchroma/parallel_impl.hpp"
