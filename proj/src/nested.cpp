#include "nestchroma/nested.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nestchroma {

bool is_nested_independent(const Graph& g, const std::vector<int>& set) {
  const int n = g.vertex_count();
  Bitset members(n);
  for (int v : set) {
    if (v < 0 || v >= n) throw std::invalid_argument("set vertex out of range: " + std::to_string(v));
    if (members.test(v)) throw std::invalid_argument("set vertex repeated: " + std::to_string(v));
    members.set(v);
  }
  for (int v : set)
    if (g.neighbourhood(v).intersects(members)) return false;
  // a size-descending order realizes the containment chain whenever one exists
  std::vector<int> order = set;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int da = g.degree(a), db = g.degree(b);
    return da != db ? da > db : a < b;
  });
  for (size_t i = 1; i < order.size(); ++i)
    if (!g.neighbourhood(order[i]).is_subset_of(g.neighbourhood(order[i - 1]))) return false;
  return true;
}

NestedCheck is_nested_coloring(const Graph& g, const std::vector<std::vector<int>>& partition) {
  const int n = g.vertex_count();
  std::vector<int> times_seen(n, 0);
  for (const auto& cls : partition) {
    if (cls.empty()) throw std::invalid_argument("partition has an empty class");
    for (int v : cls) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("partition vertex out of range: " + std::to_string(v));
      ++times_seen[v];
    }
  }
  for (int v = 0; v < n; ++v)
    if (times_seen[v] != 1)
      throw std::invalid_argument("not a partition: vertex " + std::to_string(v) + " covered " +
                                  std::to_string(times_seen[v]) + " times");
  for (size_t c = 0; c < partition.size(); ++c)
    if (!is_nested_independent(g, partition[c])) return {false, static_cast<int>(c)};
  return {true, -1};
}

ChiNested nested_chromatic_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};

  std::vector<int> isolated, rest;
  for (int v = 0; v < n; ++v) (g.degree(v) == 0 ? isolated : rest).push_back(v);

  ChiNested result;
  if (rest.empty()) {  // edgeless: a single class
    result.chi_nested = 1;
    result.coloring.classes.push_back(isolated);
    return result;
  }

  Graph h = induced_subgraph(g, rest);
  DedupMapping dm = dedup(h);
  Poset po = weak_duplicate_poset(dm.image);
  ChainCover cover = min_chain_cover(po);

  for (const auto& chain : cover.chains) {
    std::vector<int> cls;
    for (int c : chain)
      for (int member : dm.classes[c]) cls.push_back(rest[member]);
    result.coloring.classes.push_back(std::move(cls));
  }
  result.chi_nested = static_cast<int>(result.coloring.classes.size());
  // isolated vertices nest at the end of any class; first class by convention
  for (int v : isolated) result.coloring.classes[0].push_back(v);
  return result;
}

namespace {

struct BruteForce {
  const Graph& g;
  int n;
  std::vector<Bitset> ok;            // ok[v] = vertices that may share a class with v
  std::vector<Bitset> class_allowed; // running intersection per open class
  std::vector<int> class_size;
  int best;

  explicit BruteForce(const Graph& graph) : g(graph), n(graph.vertex_count()), best(n) {
    ok.assign(n, Bitset(n));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        bool comparable = g.neighbourhood(u).is_subset_of(g.neighbourhood(v)) ||
                          g.neighbourhood(v).is_subset_of(g.neighbourhood(u));
        if (!g.has_edge(u, v) && comparable) ok[u].set(v);
      }
  }

  // restricted growth: vertex v may open class #used or join an earlier one
  void rec(int v, int used) {
    if (used >= best) return;
    if (v == n) {
      best = used;
      return;
    }
    for (int c = 0; c < used; ++c) {
      if (!class_allowed[c].test(v)) continue;
      Bitset saved = class_allowed[c];
      class_allowed[c] &= ok[v];
      ++class_size[c];
      rec(v + 1, used);
      --class_size[c];
      class_allowed[c] = std::move(saved);
    }
    if (used + 1 < best) {
      if (static_cast<int>(class_allowed.size()) <= used) {
        class_allowed.emplace_back();
        class_size.push_back(0);
      }
      class_allowed[used] = ok[v];
      class_size[used] = 1;
      rec(v + 1, used + 1);
    }
  }

  int solve() {
    if (n == 0) return 0;
    rec(0, 0);
    return best;
  }
};

}  // namespace

int brute_force_nested_chromatic(const Graph& g, int cap) {
  if (g.vertex_count() > cap)
    throw std::invalid_argument("brute force capped at " + std::to_string(cap) + " vertices");
  BruteForce bf(g);
  return bf.solve();
}

namespace {

struct ColorSearch {
  const Graph& g;
  std::vector<int> order;  // descending degree
  std::vector<int> color;
  int k = 0;

  explicit ColorSearch(const Graph& graph) : g(graph) {
    const int n = g.vertex_count();
    order.resize(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int da = g.degree(a), db = g.degree(b);
      return da != db ? da > db : a < b;
    });
    color.assign(n, -1);
  }

  bool place(int idx, int max_used) {
    if (idx == static_cast<int>(order.size())) return true;
    int v = order[idx];
    int limit = std::min(k - 1, max_used + 1);  // fresh colours in ascending order only
    for (int c = 0; c <= limit; ++c) {
      bool clash = false;
      const Bitset& nb = g.neighbourhood(v);
      for (int u = nb.first(); !clash && u >= 0; u = nb.next(u + 1)) clash = color[u] == c;
      if (clash) continue;
      color[v] = c;
      if (place(idx + 1, std::max(max_used, c))) return true;
      color[v] = -1;
    }
    return false;
  }

  bool colorable(int colors) {
    k = colors;
    std::fill(color.begin(), color.end(), -1);
    return place(0, -1);
  }
};

int greedy_bound(const Graph& g, const std::vector<int>& order) {
  std::vector<int> color(g.vertex_count(), -1);
  int used = 0;
  for (int v : order) {
    Bitset taken(g.vertex_count() + 1);
    const Bitset& nb = g.neighbourhood(v);
    for (int u = nb.first(); u >= 0; u = nb.next(u + 1))
      if (color[u] >= 0) taken.set(color[u]);
    int c = 0;
    while (taken.test(c)) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

int greedy_clique(const Graph& g, const std::vector<int>& order) {
  std::vector<int> clique;
  for (int v : order) {
    bool fits = true;
    for (int u : clique) fits = fits && g.has_edge(u, v);
    if (fits) clique.push_back(v);
  }
  return static_cast<int>(clique.size());
}

}  // namespace

int chromatic_number_exact(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  ColorSearch search(g);
  int ub = greedy_bound(g, search.order);
  int lb = std::max(1, greedy_clique(g, search.order));
  for (int k = lb; k < ub; ++k)
    if (search.colorable(k)) return k;
  return ub;
}

bool is_colour_nested(const Graph& g) {
  return nested_chromatic_number(g).chi_nested == chromatic_number_exact(g);
}

std::vector<int> critical_vertices(const Graph& g) {
  std::vector<int> out;
  int chi = chromatic_number_exact(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (chromatic_number_exact(delete_vertex(g, v)) < chi) out.push_back(v);
  return out;
}

bool is_vertex_critical(const Graph& g) {
  return static_cast<int>(critical_vertices(g).size()) == g.vertex_count();
}

bool is_nested_critical(const Graph& g) {
  int k = nested_chromatic_number(g).chi_nested;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (nested_chromatic_number(delete_vertex(g, v)).chi_nested >= k) return false;
  return true;
}

}  // namespace nestchroma
