#pragma once

#include <utility>
#include <vector>

#include "nestchroma/graph.hpp"

namespace nestchroma {

// finite strict partial order on elements 0..m-1, kept as a full less-than matrix
class Poset {
 public:
  Poset() = default;

  // above[p] = { q : p < q }; validated irreflexive, antisymmetric, transitive
  static Poset from_less(std::vector<Bitset> above);
  // relations closed transitively; throws if a cycle appears
  static Poset from_relations(int m, const std::vector<std::pair<int, int>>& relations);

  int size() const { return m_; }
  bool less(int p, int q) const { return above_[p].test(q); }
  const Bitset& above(int p) const { return above_[p]; }
  Poset dual() const;
  std::vector<std::pair<int, int>> cover_relations() const;  // Hasse edges p -< q

 private:
  int m_ = 0;
  std::vector<Bitset> above_;
};

// p < q iff N(q) strictly contained in N(p); input must be duplicate-free
Poset weak_duplicate_poset(const Graph& g);

// Fulkerson split: out-copy p joined to in-copy q whenever p < q
struct SplitBipartite {
  int m = 0;
  std::vector<std::vector<int>> out_edges;  // out p -> list of in q, ascending
};
SplitBipartite split_graph(const Poset& p);

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (out p, in q)
};
Matching max_matching(const SplitBipartite& b);  // Hopcroft–Karp, deterministic
Matching max_matching(const Poset& p);

struct ChainCover {
  std::vector<std::vector<int>> chains;  // each ascending in the order; sorted by first element
};
ChainCover min_chain_cover(const Poset& p);

struct WidthResult {
  int width = 0;
  std::vector<int> antichain;  // witness, ascending
};
WidthResult width(const Poset& p);

int height(const Poset& p);  // longest chain, counted in edges

bool poset_isomorphic(const Poset& a, const Poset& b);

}  // namespace nestchroma
