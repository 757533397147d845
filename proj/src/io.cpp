#include "nestchroma/io.hpp"

#include <map>
#include <sstream>

namespace nestchroma {

GraphDocument parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  long long n = -1, declared_edges = -1;
  std::map<std::string, int> index_of;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;

  auto strip = [](std::string s) {
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    return s;
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(strip(line));
    std::string a, b, extra;
    if (!(row >> a)) continue;  // blank or comment
    if (n < 0) {
      if (a != "n") throw ParseError("expected header \"n <count>\"", line_no);
      if (!(row >> n) || n < 0) throw ParseError("bad vertex count in header", line_no);
      if (row >> declared_edges) {
      }  // edge total after the count is tolerated and ignored
      continue;
    }
    if (!(row >> b)) throw ParseError("expected two endpoints", line_no);
    if (row >> extra) throw ParseError("trailing token \"" + extra + "\"", line_no);
    auto intern = [&](const std::string& tok) {
      auto [it, fresh] = index_of.try_emplace(tok, static_cast<int>(labels.size()));
      if (fresh) {
        if (static_cast<long long>(labels.size()) == n)
          throw ParseError("more than " + std::to_string(n) + " distinct vertices", line_no);
        labels.push_back(tok);
      }
      return it->second;
    };
    int u = intern(a), v = intern(b);
    if (u == v) throw ParseError("loop edge \"" + a + " " + b + "\"", line_no);
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("empty input: missing \"n <count>\" header");
  while (static_cast<long long>(labels.size()) < n) {
    std::string fill = std::to_string(labels.size());
    while (index_of.count(fill)) fill.insert(fill.begin(), 'v');  // dodge user tokens
    index_of.emplace(fill, static_cast<int>(labels.size()));
    labels.push_back(fill);
  }

  GraphDocument doc;
  doc.graph = Graph::from_edges(static_cast<int>(n), edges);
  doc.labels = std::move(labels);
  return doc;
}

std::string write_edge_list(const GraphDocument& doc) {
  std::ostringstream out;
  out << "n " << doc.graph.vertex_count() << "\n";
  for (auto [u, v] : doc.graph.edges()) out << doc.labels[u] << " " << doc.labels[v] << "\n";
  return out.str();
}

namespace {

constexpr int kG6Offset = 63;

int g6_header(std::string_view s, size_t& pos) {
  if (pos >= s.size()) throw ParseError("graph6: empty input");
  unsigned c = static_cast<unsigned char>(s[pos]);
  if (c == 126) {  // long form, three bytes of 6 bits each
    if (pos + 3 >= s.size()) throw ParseError("graph6: truncated long-form header");
    long long n = 0;
    for (int i = 1; i <= 3; ++i) {
      unsigned d = static_cast<unsigned char>(s[pos + i]);
      if (d < 63 || d > 126) throw ParseError("graph6: byte out of range");
      n = (n << 6) | (d - kG6Offset);
    }
    pos += 4;
    if (n > 100000) throw ParseError("graph6: vertex count too large");
    return static_cast<int>(n);
  }
  if (c < 63 || c > 125) throw ParseError("graph6: bad header byte");
  pos += 1;
  return static_cast<int>(c) - kG6Offset;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.rfind(">>graph6<<", 0) == 0) line.remove_prefix(10);
  size_t pos = 0;
  const int n = g6_header(line, pos);
  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  const size_t need = static_cast<size_t>((bits + 5) / 6);
  if (line.size() - pos != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, found " +
                     std::to_string(line.size() - pos));
  std::vector<Bitset> rows(n, Bitset(n));
  long long t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t) {
      unsigned c = static_cast<unsigned char>(line[pos + t / 6]);
      if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
      if ((c - kG6Offset) >> (5 - t % 6) & 1) {
        rows[i].set(j);
        rows[j].set(i);
      }
    }
  return Graph::from_adjacency(std::move(rows));
}

std::string write_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kG6Offset));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
    out.push_back(static_cast<char>((n & 63) + kG6Offset));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kG6Offset));
        acc = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Offset));
  return out;
}

std::string poset_hasse_dot(const Poset& p, const std::vector<std::string>& node_labels) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (int e = 0; e < p.size(); ++e) {
    out << "  n" << e;
    if (e < static_cast<int>(node_labels.size())) out << " [label=\"" << node_labels[e] << "\"]";
    out << ";\n";
  }
  for (auto [lo, hi] : p.cover_relations()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace nestchroma
