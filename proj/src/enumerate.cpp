#include "nestchroma/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>

#include "nestchroma/families.hpp"
#include "nestchroma/io.hpp"
#include "nestchroma/nested.hpp"

namespace nestchroma {

namespace {

constexpr int kCanonMaxVertices = 32;  // 496 pair bits, fits the fixed buffer below
using LabelBuf = std::array<uint64_t, 8>;

int label_word_count(int n) { return (n * (n - 1) / 2 + 63) / 64; }

void assign_bit(LabelBuf& buf, int t, bool b) {
  uint64_t mask = uint64_t{1} << (63 - (t & 63));
  if (b)
    buf[t >> 6] |= mask;
  else
    buf[t >> 6] &= ~mask;
}

bool get_bit(const LabelBuf& buf, int t) { return buf[t >> 6] >> (63 - (t & 63)) & 1; }

// iterated neighbour-colour refinement; cell order is isomorphism-invariant
std::vector<std::vector<int>> refinement_cells(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n, 0);
  int colours = 1;
  for (;;) {
    std::vector<std::pair<std::pair<int, std::vector<int>>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      const Bitset& row = g.neighbourhood(v);
      for (int u = row.first(); u >= 0; u = row.next(u + 1)) nb.push_back(colour[u]);
      std::sort(nb.begin(), nb.end());
      sig[v] = {{colour[v], std::move(nb)}, v};
    }
    std::sort(sig.begin(), sig.end());
    int fresh = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++fresh;
      colour[sig[i].second] = fresh;
    }
    if (fresh + 1 == colours) break;  // refinement stalled
    colours = fresh + 1;
    if (colours == n) break;
  }
  std::vector<std::vector<int>> cells(colours);
  for (int v = 0; v < n; ++v) cells[colour[v]].push_back(v);
  return cells;
}

struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<int> pos_cell;  // position -> cell index
  std::vector<std::vector<int>> cells;
  LabelBuf best{}, cur{};
  bool have_best = false;
  std::vector<int> perm;
  std::vector<char> used;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {
    cells = refinement_cells(g);
    for (size_t c = 0; c < cells.size(); ++c)
      pos_cell.insert(pos_cell.end(), cells[c].size(), static_cast<int>(c));
    perm.assign(n, -1);
    used.assign(n, 0);
  }

  bool lex_less(const LabelBuf& a, const LabelBuf& b) const {
    for (int w = 0; w < label_word_count(n); ++w)
      if (a[w] != b[w]) return a[w] < b[w];
    return false;
  }

  void dfs(int pos, bool tight) {
    if (pos == n) {
      if (!have_best) {
        best = cur;
        have_best = true;
      } else if (!tight && lex_less(cur, best)) {
        best = cur;
      }
      return;
    }
    const int t0 = pos * (pos - 1) / 2;
    for (int v : cells[pos_cell[pos]]) {
      if (used[v]) continue;
      int cmp = 0;  // this column of cur vs best; valid only when comparing
      if (have_best && tight) {
        for (int i = 0; i < pos; ++i) {
          bool bit = g.has_edge(perm[i], v);
          assign_bit(cur, t0 + i, bit);
          if (cmp == 0 && bit != get_bit(best, t0 + i)) cmp = bit ? 1 : -1;
        }
        if (cmp > 0) continue;  // prefix already beaten
      } else {
        for (int i = 0; i < pos; ++i) assign_bit(cur, t0 + i, g.has_edge(perm[i], v));
      }
      perm[pos] = v;
      used[v] = 1;
      dfs(pos + 1, have_best ? (tight && cmp == 0) : true);
      used[v] = 0;
    }
  }
};

Graph graph_from_label(int n, const GraphLabel& label) {
  std::vector<Bitset> rows(n, Bitset(n));
  int t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if (label[t >> 6] >> (63 - (t & 63)) & 1) {
        rows[i].set(j);
        rows[j].set(i);
      }
  return Graph::from_adjacency(std::move(rows));
}

}  // namespace

GraphLabel canonical_label(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kCanonMaxVertices)
    throw std::invalid_argument("canonical_label capped at " + std::to_string(kCanonMaxVertices) +
                                " vertices");
  CanonSearch search(g);
  search.dfs(0, true);
  GraphLabel out(label_word_count(n), 0);
  for (int w = 0; w < label_word_count(n); ++w) out[w] = search.best[w];
  return out;
}

Graph canonical_form(const Graph& g) { return graph_from_label(g.vertex_count(), canonical_label(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_label(a) == canonical_label(b);
}

const std::vector<Graph>& GraphGenerator::graphs_on(int n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("generation capped at " + std::to_string(kMaxVertices) +
                                " vertices (supply an external graph6 stream beyond that)");
  if (levels_.empty()) levels_.resize(kMaxVertices + 1);
  if (!levels_[n].empty()) return levels_[n];
  if (n == 1) {
    levels_[1].push_back(Graph::from_edges(1, {}));
    return levels_[1];
  }
  const std::vector<Graph>& parents = graphs_on(n - 1);
  std::set<GraphLabel> labels;
  for (const Graph& parent : parents)
    for (uint32_t mask = 0; mask < (uint32_t{1} << (n - 1)); ++mask) {
      std::vector<Bitset> rows(n, Bitset(n));
      for (int v = 0; v < n - 1; ++v) {
        const Bitset& row = parent.neighbourhood(v);
        for (int u = row.first(); u >= 0; u = row.next(u + 1)) rows[v].set(u);
      }
      for (int v = 0; v < n - 1; ++v)
        if (mask >> v & 1) {
          rows[v].set(n - 1);
          rows[n - 1].set(v);
        }
      labels.insert(canonical_label(Graph::from_adjacency(std::move(rows))));
    }
  for (const GraphLabel& label : labels) levels_[n].push_back(graph_from_label(n, label));
  return levels_[n];
}

bool filter_accepts(const GraphClassFilter& filter, const Graph& g) {
  if (filter.connected_only && !is_connected(g)) return false;
  if (filter.bipartite_only && !bipartition(g)) return false;
  return true;
}

void GraphGenerator::for_each(const GraphClassFilter& filter,
                              const std::function<void(const Graph&)>& fn) {
  if (filter.min_vertices < 1 || filter.min_vertices > filter.max_vertices ||
      filter.max_vertices > kMaxVertices)
    throw std::invalid_argument("inconsistent vertex bounds in filter");
  for (int n = filter.min_vertices; n <= filter.max_vertices; ++n)
    for (const Graph& g : graphs_on(n))
      if (filter_accepts(filter, g)) fn(g);
}

std::vector<Graph> GraphGenerator::generate(const GraphClassFilter& filter) {
  std::vector<Graph> out;
  for_each(filter, [&](const Graph& g) { out.push_back(g); });
  return out;
}

TripleClassification classify_triples(int n, GraphGenerator& gen) {
  const std::vector<Graph>& graphs = gen.graphs_on(n);
  auto pairs = parallel_map<std::pair<int, int>>(graphs.size(), [&](std::size_t i) {
    return std::make_pair(chromatic_number_exact(graphs[i]),
                          nested_chromatic_number(graphs[i]).chi_nested);
  });
  TripleClassification out;
  out.n = n;
  std::vector<std::vector<int>> first(n + 1, std::vector<int>(n + 1, -1));
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto [c, s] = pairs[i];
    if (first[c][s] == -1) first[c][s] = static_cast<int>(i);
  }
  for (int c = 1; c <= n; ++c)
    for (int s = c; s <= n; ++s) {
      if (first[c][s] >= 0)
        out.realizable.push_back({n, c, s, write_graph6(graphs[first[c][s]])});
      else
        out.gaps.emplace_back(c, s);
    }
  return out;
}

std::optional<Graph> poset_realizability(const Poset& p, int max_vertices, GraphGenerator& gen) {
  if (max_vertices < 0 || max_vertices > GraphGenerator::kMaxVertices)
    throw std::invalid_argument("poset realizability search capped at " +
                                std::to_string(GraphGenerator::kMaxVertices) + " vertices");
  const int m = p.size();
  if (m == 0) return Graph::from_edges(0, {});
  if (m > max_vertices) return std::nullopt;  // P_G always has exactly #V(G) elements
  for (const Graph& g : gen.graphs_on(m)) {
    bool duplicate_free = true;
    for (int u = 0; duplicate_free && u < m; ++u)
      for (int v = u + 1; duplicate_free && v < m; ++v)
        duplicate_free = !(g.neighbourhood(u) == g.neighbourhood(v));
    if (!duplicate_free) continue;
    if (poset_isomorphic(weak_duplicate_poset(g), p)) return g;
  }
  return std::nullopt;
}

ComplementScan complement_conjecture_scan(int max_n, GraphGenerator& gen) {
  ComplementScan scan;
  scan.min_slack = 0;
  bool first_n = true;
  for (int n = 1; n <= max_n; ++n) {
    const std::vector<Graph>& graphs = gen.graphs_on(n);
    auto slack = parallel_map<int>(graphs.size(), [&](std::size_t i) {
      return nested_chromatic_number(graphs[i]).chi_nested +
             nested_chromatic_number(complement(graphs[i])).chi_nested - n;
    });
    SlackRecord rec;
    rec.n = n;
    rec.min_slack = slack[0];
    rec.witness = write_graph6(graphs[0]);
    for (std::size_t i = 1; i < graphs.size(); ++i)
      if (slack[i] < rec.min_slack) {
        rec.min_slack = slack[i];
        rec.witness = write_graph6(graphs[i]);
      }
    for (std::size_t i = 0; i < graphs.size(); ++i)
      if (slack[i] < 0) scan.counterexamples.push_back(write_graph6(graphs[i]));
    scan.per_n.push_back(rec);
    scan.min_slack = first_n ? rec.min_slack : std::min(scan.min_slack, rec.min_slack);
    first_n = false;
  }
  return scan;
}

namespace {

// weakly decreasing sequences over [1,s] of length r
void each_sequence(int r, int s, std::vector<int>& cur, const std::function<void()>& fn) {
  if (static_cast<int>(cur.size()) == r) {
    fn();
    return;
  }
  int hi = cur.empty() ? s : cur.back();
  for (int v = hi; v >= 1; --v) {
    cur.push_back(v);
    each_sequence(r, s, cur, fn);
    cur.pop_back();
  }
}

std::vector<int> transpose_sequence(const std::vector<int>& a, int s) {
  std::vector<int> b(s);
  for (int i = 1; i <= s; ++i) {
    int count = 0;
    for (int v : a) count += v >= i ? 1 : 0;
    b[i - 1] = count;
  }
  return b;
}

}  // namespace

BipartiteCount count_colour_nested_bipartite(int n, GraphGenerator& gen) {
  if (n < 2 || n > GraphGenerator::kMaxVertices)
    throw std::invalid_argument("count capped to 2.." + std::to_string(GraphGenerator::kMaxVertices));
  BipartiteCount out;
  out.n = n;

  // route (a): connected sequences (a_1 = s), one per transpose pair
  std::set<std::pair<int, std::vector<int>>> connected_keys;
  for (int r = 1; r < n; ++r) {
    int s = n - r;
    std::vector<int> cur{s};  // connectivity forces a_1 = s
    if (s >= 1)
      each_sequence(r, s, cur, [&] {
        std::pair<int, std::vector<int>> key{r, cur};
        std::pair<int, std::vector<int>> tkey{s, transpose_sequence(cur, s)};
        connected_keys.insert(std::min(key, tkey));
      });
  }
  out.connected_by_sequences = static_cast<long long>(connected_keys.size());

  // route (b): filter over exhaustive generation
  for (const Graph& g : gen.graphs_on(n))
    if (is_connected(g) && bipartition(g) &&
        nested_chromatic_number(g).chi_nested == chromatic_number_exact(g))
      ++out.connected_by_filter;

  // duplicate-free counts over all sequences, connectivity not required
  std::set<GraphLabel> dup_free, dup_free_connected;
  for (int r = 1; r < n; ++r) {
    int s = n - r;
    std::vector<int> cur;
    each_sequence(r, s, cur, [&] {
      Graph g = nested_bipartite(cur, s);
      bool duplicate_free = true;
      for (int u = 0; duplicate_free && u < n; ++u)
        for (int v = u + 1; duplicate_free && v < n; ++v)
          duplicate_free = !(g.neighbourhood(u) == g.neighbourhood(v));
      if (!duplicate_free) return;
      GraphLabel label = canonical_label(g);
      dup_free.insert(label);
      if (is_connected(g)) dup_free_connected.insert(label);
    });
  }
  out.duplicate_free_total = static_cast<long long>(dup_free.size());
  out.connected_duplicate_free = static_cast<long long>(dup_free_connected.size());
  return out;
}

std::vector<PlanarWitness> planar_sweep(int n) {
  if (n < 2) throw std::invalid_argument("planar sweep needs n >= 2");
  std::vector<PlanarWitness> out;
  for (int k = 2; k <= n; ++k) {
    std::vector<std::pair<int, int>> edges;
    if (k <= 4) {
      for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    } else {
      for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    }
    for (int leaf = k; leaf < n; ++leaf) edges.emplace_back(k - 2, leaf);
    PlanarWitness w;
    w.k = k;
    w.graph = Graph::from_edges(n, edges);
    w.chi_nested = nested_chromatic_number(w.graph).chi_nested;
    out.push_back(std::move(w));
  }
  return out;
}

int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  int workers = hw ? static_cast<int>(hw) : 1;
  if (const char* env = std::getenv("NESTCHROMA_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) workers = std::min(workers, cap);
  }
  return workers;
}

}  // namespace nestchroma
