#pragma once

#include <cstdint>
#include <vector>

#include "nestchroma/graph.hpp"

namespace nestchroma {

Graph complete(int n);
Graph complete_multipartite(const std::vector<int>& parts);
Graph turan(int n, int r);
Graph cycle(int n);  // n >= 3
Graph path(int n);   // n >= 1
Graph star(int n);   // K_{1,n}, centre = vertex 0
Graph wheel(int n);  // C_n plus hub = vertex n
Graph windmill(int k, int n);  // n copies of K_k plus hub = last vertex; k >= 2
Graph petersen();
Graph kneser(int n, int k);  // vertices = k-subsets in colex order; n >= 2k
Graph cube(int n);           // Q_n on bitmask vertices
Graph crown(int n);          // K_n x K_2: u_i ~ v_j iff i != j; n >= 2

// bipartite G_{a_1..a_r;s}: u_i ~ v_j iff j <= a_i (1-indexed); needs 1 <= a_r <= .. <= a_1 <= s
Graph nested_bipartite(const std::vector<int>& a, int s);

enum class ThresholdStep { isolated, dominating };
// grown from a single vertex, one vertex per step; script must be nonempty
Graph threshold_graph(const std::vector<ThresholdStep>& script);

Graph mycielski(const Graph& g);  // shadow v_i = n+i, apex w = 2n

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
// product vertex (x,y) -> x * |V(H)| + y
Graph direct_product(const Graph& g, const Graph& h);
Graph cartesian_product(const Graph& g, const Graph& h);
Graph strong_product(const Graph& g, const Graph& h);
Graph composition(const Graph& g, const Graph& h);  // G[H]

Graph erdos_renyi(int n, double p, uint64_t seed);

}  // namespace nestchroma
