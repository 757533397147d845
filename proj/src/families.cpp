#include "nestchroma/families.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace nestchroma {

Graph complete(int n) {
  if (n < 0) throw std::invalid_argument("complete: n must be >= 0");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("complete_multipartite: no parts");
  int n = 0;
  for (int p : parts) {
    if (p <= 0) throw std::invalid_argument("complete_multipartite: part sizes must be positive");
    n += p;
  }
  std::vector<int> part_of;
  for (size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph turan(int n, int r) {
  if (r < 1 || r > n) throw std::invalid_argument("turan: need 1 <= r <= n");
  std::vector<int> parts(r, n / r);
  for (int i = 0; i < n % r; ++i) ++parts[i];
  return complete_multipartite(parts);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph star(int n) {
  if (n < 1) throw std::invalid_argument("star: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(n + 1, edges);
}

Graph wheel(int n) {
  if (n < 3) throw std::invalid_argument("wheel: n must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n);
  }
  return Graph::from_edges(n + 1, edges);
}

Graph windmill(int k, int n) {
  if (k < 2) throw std::invalid_argument("windmill: blade order k must be >= 2");
  if (n < 1) throw std::invalid_argument("windmill: blade count must be >= 1");
  const int hub = n * k;
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < n; ++c)
    for (int u = c * k; u < (c + 1) * k; ++u) {
      for (int v = u + 1; v < (c + 1) * k; ++v) edges.emplace_back(u, v);
      edges.emplace_back(u, hub);
    }
  return Graph::from_edges(hub + 1, edges);
}

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph::from_edges(10, edges);
}

namespace {

std::vector<std::vector<int>> colex_subsets(int n, int k) {
  // increasing sequences, successor computed in colex order (largest element last to move)
  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    int i = 0;
    while (i < k) {
      ++idx[i];
      int limit = (i + 1 < k) ? idx[i + 1] : n;
      if (idx[i] < limit) break;
      ++i;
    }
    if (i == k) break;
    for (int j = 0; j < i; ++j) idx[j] = j;
  }
  return out;
}

}  // namespace

Graph kneser(int n, int k) {
  if (k < 1 || n < 2 * k) throw std::invalid_argument("kneser: need n >= 2k >= 2");
  auto subsets = colex_subsets(n, k);
  const int m = static_cast<int>(subsets.size());
  std::vector<Bitset> masks(m, Bitset(n));
  for (int i = 0; i < m; ++i)
    for (int e : subsets[i]) masks[i].set(e);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!masks[i].intersects(masks[j])) edges.emplace_back(i, j);
  return Graph::from_edges(m, edges);
}

Graph cube(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("cube: need 1 <= n <= 20");
  const int size = 1 << n;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < size; ++u)
    for (int b = 0; b < n; ++b) {
      int v = u ^ (1 << b);
      if (u < v) edges.emplace_back(u, v);
    }
  return Graph::from_edges(size, edges);
}

Graph crown(int n) {
  if (n < 2) throw std::invalid_argument("crown: n must be >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) edges.emplace_back(i, n + j);
  return Graph::from_edges(2 * n, edges);
}

Graph nested_bipartite(const std::vector<int>& a, int s) {
  const int r = static_cast<int>(a.size());
  if (r < 1 || s < 1) throw std::invalid_argument("nested_bipartite: need r >= 1 and s >= 1");
  for (int i = 0; i < r; ++i) {
    if (a[i] < 1 || a[i] > s)
      throw std::invalid_argument("nested_bipartite: a_" + std::to_string(i + 1) + " out of [1,s]");
    if (i > 0 && a[i] > a[i - 1])
      throw std::invalid_argument("nested_bipartite: sequence must be weakly decreasing");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < a[i]; ++j) edges.emplace_back(i, r + j);
  return Graph::from_edges(r + s, edges);
}

Graph threshold_graph(const std::vector<ThresholdStep>& script) {
  if (script.empty()) throw std::invalid_argument("threshold: script must be nonempty");
  const int n = static_cast<int>(script.size()) + 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(script.size()); ++i)
    if (script[i] == ThresholdStep::dominating)
      for (int u = 0; u <= i; ++u) edges.emplace_back(u, i + 1);
  return Graph::from_edges(n, edges);
}

Graph mycielski(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges = g.edges();
  for (int i = 0; i < n; ++i) {
    const Bitset& nb = g.neighbourhood(i);
    for (int j = nb.first(); j >= 0; j = nb.next(j + 1)) edges.emplace_back(i, n + j);
    edges.emplace_back(2 * n, n + i);
  }
  return Graph::from_edges(2 * n + 1, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  std::vector<std::pair<int, int>> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(ng + u, ng + v);
  return Graph::from_edges(ng + h.vertex_count(), edges);
}

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count();
  std::vector<std::pair<int, int>> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(ng + u, ng + v);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < h.vertex_count(); ++v) edges.emplace_back(u, ng + v);
  return Graph::from_edges(ng + h.vertex_count(), edges);
}

namespace {

template <typename Rule>
Graph product_graph(const Graph& g, const Graph& h, Rule adjacent) {
  const int ng = g.vertex_count(), nh = h.vertex_count();
  const int n = ng * nh;
  std::vector<std::pair<int, int>> edges;
  for (int x1 = 0; x1 < ng; ++x1)
    for (int y1 = 0; y1 < nh; ++y1)
      for (int x2 = x1; x2 < ng; ++x2)
        for (int y2 = (x2 == x1 ? y1 + 1 : 0); y2 < nh; ++y2)
          if (adjacent(x1, y1, x2, y2)) edges.emplace_back(x1 * nh + y1, x2 * nh + y2);
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph direct_product(const Graph& g, const Graph& h) {
  return product_graph(g, h, [&](int x1, int y1, int x2, int y2) {
    return g.has_edge(x1, x2) && h.has_edge(y1, y2);
  });
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  return product_graph(g, h, [&](int x1, int y1, int x2, int y2) {
    return (x1 == x2 && h.has_edge(y1, y2)) || (y1 == y2 && g.has_edge(x1, x2));
  });
}

Graph strong_product(const Graph& g, const Graph& h) {
  return product_graph(g, h, [&](int x1, int y1, int x2, int y2) {
    bool gx = x1 == x2 || g.has_edge(x1, x2);
    bool hy = y1 == y2 || h.has_edge(y1, y2);
    return gx && hy && !(x1 == x2 && y1 == y2);
  });
}

Graph composition(const Graph& g, const Graph& h) {
  return product_graph(g, h, [&](int x1, int y1, int x2, int y2) {
    return g.has_edge(x1, x2) || (x1 == x2 && h.has_edge(y1, y2));
  });
}

Graph erdos_renyi(int n, double p, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("erdos_renyi: n must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erdos_renyi: p must be in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace nestchroma
