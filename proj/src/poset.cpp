#include "nestchroma/poset.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace nestchroma {

Poset Poset::from_less(std::vector<Bitset> above) {
  const int m = static_cast<int>(above.size());
  for (int p = 0; p < m; ++p) {
    if (above[p].capacity() != m) throw std::invalid_argument("poset row capacity mismatch");
    if (above[p].test(p)) throw std::invalid_argument("poset not irreflexive");
    for (int q = above[p].first(); q >= 0; q = above[p].next(q + 1)) {
      if (above[q].test(p)) throw std::invalid_argument("poset not antisymmetric");
      if (!above[q].is_subset_of(above[p])) throw std::invalid_argument("poset not transitive");
    }
  }
  Poset po;
  po.m_ = m;
  po.above_ = std::move(above);
  return po;
}

Poset Poset::from_relations(int m, const std::vector<std::pair<int, int>>& relations) {
  if (m < 0) throw std::invalid_argument("poset size must be >= 0");
  std::vector<Bitset> direct(m, Bitset(m));
  for (auto [p, q] : relations) {
    if (p < 0 || p >= m || q < 0 || q >= m)
      throw std::invalid_argument("relation element out of range");
    direct[p].set(q);
  }
  // reachability closure, then validate
  std::vector<Bitset> closed(m, Bitset(m));
  for (int s = 0; s < m; ++s) {
    std::vector<int> stack{s};
    Bitset seen(m);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = direct[u].first(); v >= 0; v = direct[u].next(v + 1))
        if (!seen.test(v)) {
          seen.set(v);
          stack.push_back(v);
        }
    }
    if (seen.test(s)) throw std::invalid_argument("relations contain a cycle");
    closed[s] = seen;
  }
  return from_less(std::move(closed));
}

Poset Poset::dual() const {
  std::vector<Bitset> rows(m_, Bitset(m_));
  for (int p = 0; p < m_; ++p)
    for (int q = above_[p].first(); q >= 0; q = above_[p].next(q + 1)) rows[q].set(p);
  return from_less(std::move(rows));
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
  std::vector<std::pair<int, int>> covers;
  for (int p = 0; p < m_; ++p)
    for (int q = above_[p].first(); q >= 0; q = above_[p].next(q + 1)) {
      bool direct = true;
      for (int r = above_[p].first(); direct && r >= 0; r = above_[p].next(r + 1))
        if (r != q && above_[r].test(q)) direct = false;
      if (direct) covers.emplace_back(p, q);
    }
  return covers;
}

Poset weak_duplicate_poset(const Graph& g) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.neighbourhood(u) == g.neighbourhood(v))
        throw std::invalid_argument("graph has duplicate vertices (" + std::to_string(u) + "," +
                                    std::to_string(v) + "); dedup first");
  std::vector<Bitset> above(n, Bitset(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (p != q && g.neighbourhood(q).is_subset_of(g.neighbourhood(p))) above[p].set(q);
  return Poset::from_less(std::move(above));
}

SplitBipartite split_graph(const Poset& p) {
  SplitBipartite b;
  b.m = p.size();
  b.out_edges.resize(b.m);
  for (int u = 0; u < b.m; ++u) b.out_edges[u] = p.above(u).to_vector();
  return b;
}

namespace {

struct HopcroftKarp {
  const SplitBipartite& g;
  std::vector<int> match_l, match_r, level;
  static constexpr int kInf = 1 << 30;

  explicit HopcroftKarp(const SplitBipartite& b)
      : g(b), match_l(b.m, -1), match_r(b.m, -1), level(b.m) {}

  bool bfs() {
    std::queue<int> q;
    bool reachable_free = false;
    for (int u = 0; u < g.m; ++u) {
      if (match_l[u] == -1) {
        level[u] = 0;
        q.push(u);
      } else {
        level[u] = kInf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.out_edges[u]) {
        int w = match_r[v];
        if (w == -1) {
          reachable_free = true;
        } else if (level[w] == kInf) {
          level[w] = level[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(int u) {
    for (int v : g.out_edges[u]) {
      int w = match_r[v];
      if (w == -1 || (level[w] == level[u] + 1 && dfs(w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    level[u] = kInf;
    return false;
  }

  void run() {
    while (bfs())
      for (int u = 0; u < g.m; ++u)
        if (match_l[u] == -1) dfs(u);
  }
};

}  // namespace

Matching max_matching(const SplitBipartite& b) {
  HopcroftKarp hk(b);
  hk.run();
  Matching m;
  for (int u = 0; u < b.m; ++u)
    if (hk.match_l[u] != -1) m.pairs.emplace_back(u, hk.match_l[u]);
  return m;
}

Matching max_matching(const Poset& p) { return max_matching(split_graph(p)); }

ChainCover min_chain_cover(const Poset& p) {
  const int m = p.size();
  Matching match = max_matching(p);
  std::vector<int> succ(m, -1), pred(m, -1);
  for (auto [u, v] : match.pairs) {
    succ[u] = v;
    pred[v] = u;
  }
  ChainCover cover;
  for (int s = 0; s < m; ++s) {
    if (pred[s] != -1) continue;  // not a chain start
    std::vector<int> chain;
    for (int u = s; u != -1; u = succ[u]) chain.push_back(u);
    cover.chains.push_back(std::move(chain));
  }
  // starts are scanned ascending, so chains are already sorted by first element
  return cover;
}

WidthResult width(const Poset& p) {
  const int m = p.size();
  SplitBipartite b = split_graph(p);
  HopcroftKarp hk(b);
  hk.run();
  // Koenig: Z = alternating reachability from unmatched out-copies;
  // cover = (out not in Z) + (in in Z); witness = elements with both copies uncovered
  std::vector<char> z_out(m, 0), z_in(m, 0);
  std::queue<int> q;
  for (int u = 0; u < m; ++u)
    if (hk.match_l[u] == -1) {
      z_out[u] = 1;
      q.push(u);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : b.out_edges[u]) {
      if (z_in[v]) continue;
      z_in[v] = 1;
      int w = hk.match_r[v];
      if (w != -1 && !z_out[w]) {
        z_out[w] = 1;
        q.push(w);
      }
    }
  }
  WidthResult res;
  for (int e = 0; e < m; ++e)
    if (z_out[e] && !z_in[e]) res.antichain.push_back(e);
  int matched = 0;
  for (int u = 0; u < m; ++u) matched += hk.match_l[u] != -1 ? 1 : 0;
  res.width = m - matched;
  return res;
}

int height(const Poset& p) {
  const int m = p.size();
  std::vector<int> memo(m, -1);
  // longest descending run from p counted in edges; the order is acyclic
  auto longest = [&](auto&& self, int u) -> int {
    if (memo[u] != -1) return memo[u];
    int best = 0;
    const Bitset& up = p.above(u);
    for (int v = up.first(); v >= 0; v = up.next(v + 1)) best = std::max(best, 1 + self(self, v));
    return memo[u] = best;
  };
  int h = 0;
  for (int u = 0; u < m; ++u) h = std::max(h, longest(longest, u));
  return h;
}

namespace {

bool extend_iso(const Poset& a, const Poset& b, std::vector<int>& map, std::vector<char>& used,
                int next) {
  const int m = a.size();
  if (next == m) return true;
  for (int cand = 0; cand < m; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int prev = 0; ok && prev < next; ++prev) {
      if (a.less(next, prev) != b.less(cand, map[prev])) ok = false;
      if (a.less(prev, next) != b.less(map[prev], cand)) ok = false;
    }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = 1;
    if (extend_iso(a, b, map, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

bool poset_isomorphic(const Poset& a, const Poset& b) {
  const int m = a.size();
  if (m != b.size()) return false;
  // cheap invariant screen before the backtracking search
  auto profile = [](const Poset& p) {
    std::vector<std::pair<int, int>> prof(p.size());
    for (int u = 0; u < p.size(); ++u) {
      int below = 0;
      for (int v = 0; v < p.size(); ++v) below += p.less(v, u) ? 1 : 0;
      prof[u] = {p.above(u).count(), below};
    }
    std::sort(prof.begin(), prof.end());
    return prof;
  };
  if (profile(a) != profile(b)) return false;
  std::vector<int> map(m, -1);
  std::vector<char> used(m, 0);
  return extend_iso(a, b, map, used, 0);
}

}  // namespace nestchroma
