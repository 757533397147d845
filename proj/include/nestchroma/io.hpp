#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nestchroma/graph.hpp"
#include "nestchroma/poset.hpp"

namespace nestchroma {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_number(line) {}
  int line_number;
};

// header "n <count>", one "u v" token pair per line, '#' starts a comment;
// tokens become dense indices in first-seen order
struct GraphDocument {
  Graph graph;
  std::vector<std::string> labels;  // per vertex; defaults to the index as text
};

GraphDocument parse_edge_list(std::string_view text);
std::string write_edge_list(const GraphDocument& doc);

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Hasse diagram, cover relations only
std::string poset_hasse_dot(const Poset& p, const std::vector<std::string>& node_labels);

}  // namespace nestchroma
