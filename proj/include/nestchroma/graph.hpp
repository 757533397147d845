#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nestchroma/bitset.hpp"

namespace nestchroma {

// immutable finite simple graph on vertices 0..n-1, adjacency kept as bitset rows
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  // rows must be symmetric and loop-free; validated
  static Graph from_adjacency(std::vector<Bitset> rows);

  int vertex_count() const { return n_; }
  long long edge_count() const;
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return adj_[v].count(); }
  const Bitset& neighbourhood(int v) const { return adj_[v]; }  // open
  Bitset closed_neighbourhood(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

 private:
  int n_ = 0;
  std::vector<Bitset> adj_;
};

// N(u) subseteq N(v)
bool is_weak_duplicate(const Graph& g, int u, int v);
// N(u) == N(v)
bool are_duplicates(const Graph& g, int u, int v);

struct DedupMapping {
  std::vector<std::vector<int>> classes;  // ordered by smallest member, members ascending
  std::vector<int> class_of;              // vertex -> class index
  std::vector<int> representative;        // class -> smallest member
  Graph image;                            // the de-duplicate graph
};
DedupMapping dedup(const Graph& g);

Graph complement(const Graph& g);
// keep must be distinct in-range vertices; new index = position in keep
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);
Graph delete_vertex(const Graph& g, int v);

std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);
// side assignment per vertex, or nullopt when an odd cycle exists
std::optional<std::vector<int>> bipartition(const Graph& g);
std::optional<int> girth(const Graph& g);  // nullopt for forests
std::optional<int> regular_degree(const Graph& g);

std::vector<int> leaves(const Graph& g);  // degree-1 vertices
int leaf_class_count(const Graph& g);     // duplicate classes containing a leaf

// no induced diamond and no induced C4
bool is_diamond_c4_free(const Graph& g);

// no open neighbourhood contained in another (distinct vertices)
bool neighbourhoods_form_sperner_family(const Graph& g);

}  // namespace nestchroma
