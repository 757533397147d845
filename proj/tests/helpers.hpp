#pragma once

// test-side oracles, written independently of the library internals on purpose

#include <algorithm>
#include <random>
#include <vector>

#include "nestchroma/graph.hpp"
#include "nestchroma/poset.hpp"

namespace testutil {

inline nestchroma::Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution flip(density);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) edges.emplace_back(u, v);
  return nestchroma::Graph::from_edges(n, edges);
}

// maximum antichain by explicit subset enumeration; only sane for m <= ~20
inline int naive_width(const nestchroma::Poset& p) {
  const int m = p.size();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    bool antichain = true;
    for (int a = 0; a < m && antichain; ++a)
      for (int b = 0; b < m && antichain; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && p.less(a, b)) antichain = false;
    if (antichain) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

// pairwise re-check of the nesting condition, no bitsets involved
inline bool naive_is_nested_class(const nestchroma::Graph& g, const std::vector<int>& cls) {
  for (size_t i = 0; i < cls.size(); ++i)
    for (size_t j = i + 1; j < cls.size(); ++j) {
      int u = cls[i], v = cls[j];
      if (g.has_edge(u, v)) return false;
      std::vector<int> nu, nv;
      for (int w = 0; w < g.vertex_count(); ++w) {
        if (g.has_edge(u, w)) nu.push_back(w);
        if (g.has_edge(v, w)) nv.push_back(w);
      }
      bool uv = std::includes(nv.begin(), nv.end(), nu.begin(), nu.end());
      bool vu = std::includes(nu.begin(), nu.end(), nv.begin(), nv.end());
      if (!uv && !vu) return false;
    }
  return true;
}

// no induced diamond (4 vertices, 5 edges) and no induced C4 (4 vertices, 4 edges, 2-regular)
inline bool naive_diamond_c4_free(const nestchroma::Graph& g) {
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int quad[4] = {a, b, c, d};
          int edges = 0;
          int deg[4] = {0, 0, 0, 0};
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.has_edge(quad[i], quad[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          if (edges == 5) return false;  // diamond
          if (edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2)
            return false;  // C4
        }
  return true;
}

}  // namespace testutil
