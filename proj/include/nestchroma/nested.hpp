#pragma once

#include <vector>

#include "nestchroma/graph.hpp"
#include "nestchroma/poset.hpp"

namespace nestchroma {

// colour classes; inside a class, every later vertex is a weak duplicate of every earlier one
struct NestedColoring {
  std::vector<std::vector<int>> classes;
};

bool is_nested_independent(const Graph& g, const std::vector<int>& set);

struct NestedCheck {
  bool nested = false;
  int offending_class = -1;  // first class that fails, -1 when nested
};
// partition must cover every vertex exactly once with nonempty classes; throws otherwise
NestedCheck is_nested_coloring(const Graph& g, const std::vector<std::vector<int>>& partition);

struct ChiNested {
  int chi_nested = 0;
  NestedColoring coloring;
};
// exact, via de-duplication and a minimum chain cover of the weak duplicate poset
ChiNested nested_chromatic_number(const Graph& g);

// independent oracle: restricted-growth enumeration of set partitions
int brute_force_nested_chromatic(const Graph& g, int cap = 10);

int chromatic_number_exact(const Graph& g);

bool is_colour_nested(const Graph& g);  // chi_N == chi

std::vector<int> critical_vertices(const Graph& g);  // chi(G - v) < chi(G)
bool is_vertex_critical(const Graph& g);
bool is_nested_critical(const Graph& g);  // chi_N(G - v) < chi_N(G) for all v

}  // namespace nestchroma
