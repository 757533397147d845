#include "nestchroma/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace nestchroma {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, Bitset(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw std::invalid_argument("loop edge rejected at vertex " + std::to_string(u));
    g.adj_[u].set(v);
    g.adj_[v].set(u);
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<Bitset> rows) {
  const int n = static_cast<int>(rows.size());
  for (int v = 0; v < n; ++v) {
    if (rows[v].capacity() != n) throw std::invalid_argument("adjacency row capacity mismatch");
    if (rows[v].test(v)) throw std::invalid_argument("loop edge rejected at vertex " + std::to_string(v));
    for (int u = rows[v].first(); u >= 0; u = rows[v].next(u + 1))
      if (!rows[u].test(v)) throw std::invalid_argument("adjacency not symmetric");
  }
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(rows);
  return g;
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (int v = 0; v < n_; ++v) twice += adj_[v].count();
  return twice / 2;
}

Bitset Graph::closed_neighbourhood(int v) const {
  Bitset b = adj_[v];
  b.set(v);
  return b;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1)) out.emplace_back(u, v);
  return out;
}

static void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("vertex out of range: " + std::to_string(v));
}

bool is_weak_duplicate(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  return g.neighbourhood(u).is_subset_of(g.neighbourhood(v));
}

bool are_duplicates(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  return g.neighbourhood(u) == g.neighbourhood(v);
}

DedupMapping dedup(const Graph& g) {
  const int n = g.vertex_count();
  DedupMapping m;
  m.class_of.assign(n, -1);
  std::map<Bitset, int> seen;  // neighbourhood row -> class id, first-seen order = smallest member
  for (int v = 0; v < n; ++v) {
    auto [it, fresh] = seen.try_emplace(g.neighbourhood(v), static_cast<int>(m.classes.size()));
    if (fresh) {
      m.classes.push_back({});
      m.representative.push_back(v);
    }
    m.class_of[v] = it->second;
    m.classes[it->second].push_back(v);
  }
  // classes are discovered in vertex order, hence ordered by smallest member already
  const int k = static_cast<int>(m.classes.size());
  std::vector<Bitset> rows(k, Bitset(k));
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.has_edge(m.representative[a], m.representative[b])) {
        rows[a].set(b);
        rows[b].set(a);
      }
  m.image = Graph::from_adjacency(std::move(rows));
  return m;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Bitset> rows(n, Bitset(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !g.has_edge(u, v)) rows[u].set(v);
  return Graph::from_adjacency(std::move(rows));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  const int k = static_cast<int>(keep.size());
  std::vector<int> pos(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i) {
    check_vertex(g, keep[i]);
    if (pos[keep[i]] != -1) throw std::invalid_argument("induced_subgraph: repeated vertex");
    pos[keep[i]] = i;
  }
  std::vector<Bitset> rows(k, Bitset(k));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(keep[i], keep[j])) {
        rows[i].set(j);
        rows[j].set(i);
      }
  return Graph::from_adjacency(std::move(rows));
}

Graph delete_vertex(const Graph& g, int v) {
  check_vertex(g, v);
  std::vector<int> keep;
  keep.reserve(g.vertex_count() - 1);
  for (int u = 0; u < g.vertex_count(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      const Bitset& nb = g.neighbourhood(u);
      for (int w = nb.first(); w >= 0; w = nb.next(w + 1))
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      const Bitset& nb = g.neighbourhood(u);
      for (int w = nb.first(); w >= 0; w = nb.next(w + 1)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          q.push(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      const Bitset& nb = g.neighbourhood(u);
      for (int w = nb.first(); w >= 0; w = nb.next(w + 1)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (w != parent[u]) {
          int len = dist[u] + dist[w] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

std::optional<int> regular_degree(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  int d = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

std::vector<int> leaves(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

int leaf_class_count(const Graph& g) {
  DedupMapping m = dedup(g);
  int count = 0;
  for (const auto& cls : m.classes) {
    bool has_leaf = false;
    for (int v : cls) has_leaf = has_leaf || g.degree(v) == 1;
    count += has_leaf ? 1 : 0;
  }
  return count;
}

bool is_diamond_c4_free(const Graph& g) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      Bitset common = g.neighbourhood(u) & g.neighbourhood(v);
      int c = common.count();
      if (c < 2) continue;
      if (!g.has_edge(u, v)) return false;  // induced C4 or diamond through u,v
      // adjacent pair: a nonadjacent pair of common neighbours closes a diamond
      auto cn = common.to_vector();
      for (size_t i = 0; i < cn.size(); ++i)
        for (size_t j = i + 1; j < cn.size(); ++j)
          if (!g.has_edge(cn[i], cn[j])) return false;
    }
  return true;
}

bool neighbourhoods_form_sperner_family(const Graph& g) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.neighbourhood(u).is_subset_of(g.neighbourhood(v))) return false;
  return true;
}

}  // namespace nestchroma
