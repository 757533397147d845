#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nestchroma/enumerate.hpp"
#include "nestchroma/families.hpp"
#include "nestchroma/io.hpp"
#include "nestchroma/nested.hpp"

using nlohmann::json;
using namespace nestchroma;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitOracle = 3;

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GraphDocument read_graph(const std::string& path, const std::string& format) {
  std::string text = slurp(path);
  std::string fmt = format;
  if (fmt == "auto") {
    std::istringstream probe(text);
    std::string first;
    probe >> first;
    fmt = first == "n" ? "edge-list" : "graph6";
  }
  if (fmt == "edge-list") return parse_edge_list(text);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line) && line.empty()) {
  }
  GraphDocument doc;
  doc.graph = parse_graph6(line);
  for (int v = 0; v < doc.graph.vertex_count(); ++v) doc.labels.push_back(std::to_string(v));
  return doc;
}

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + out_path + " for writing");
  out << payload;
}

std::string join_labels(const GraphDocument& doc, const std::vector<int>& vs, const char* sep) {
  std::string s;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += sep;
    s += doc.labels[vs[i]];
  }
  return s;
}

int run_solve(const std::string& input, const std::string& format, bool show_coloring,
              bool show_dedup, const std::string& poset_dot, bool oracle, int oracle_cap, bool chi,
              bool as_json) {
  auto t0 = std::chrono::steady_clock::now();
  GraphDocument doc = read_graph(input, format);
  double parse_ms = ms_since(t0);

  auto t1 = std::chrono::steady_clock::now();
  ChiNested result = nested_chromatic_number(doc.graph);
  double solve_ms = ms_since(t1);

  DedupMapping dm = dedup(doc.graph);
  std::optional<int> chi_exact;
  if (chi) chi_exact = chromatic_number_exact(doc.graph);

  std::optional<int> oracle_value;
  bool oracle_skipped = false;
  if (oracle) {
    if (doc.graph.vertex_count() <= oracle_cap)
      oracle_value = brute_force_nested_chromatic(doc.graph, oracle_cap);
    else
      oracle_skipped = true;
  }

  if (!poset_dot.empty()) {
    Poset po = weak_duplicate_poset(dm.image);
    std::vector<std::string> labels;
    for (const auto& cls : dm.classes) labels.push_back("{" + join_labels(doc, cls, ",") + "}");
    emit(poset_dot, poset_hasse_dot(po, labels));
  }

  if (as_json) {
    json j;
    j["n"] = doc.graph.vertex_count();
    j["chi_nested"] = result.chi_nested;
    if (chi_exact) j["chi"] = *chi_exact;
    j["classes"] = result.coloring.classes;
    j["duplicate_classes"] = dm.classes;
    bool default_labels = true;
    for (int v = 0; v < doc.graph.vertex_count(); ++v)
      default_labels = default_labels && doc.labels[v] == std::to_string(v);
    if (!default_labels) j["labels"] = doc.labels;
    j["timings_ms"] = {{"parse", parse_ms}, {"solve", solve_ms}};
    if (oracle_value) j["oracle"] = *oracle_value;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n = " << doc.graph.vertex_count() << "\n";
    std::cout << "chi_N = " << result.chi_nested << "\n";
    if (chi_exact) std::cout << "chi = " << *chi_exact << "\n";
    if (show_dedup) {
      std::cout << "duplicate classes (" << dm.classes.size() << "):";
      for (const auto& cls : dm.classes) std::cout << " {" << join_labels(doc, cls, ",") << "}";
      std::cout << "\n";
    }
    if (show_coloring) {
      std::cout << "classes (" << result.coloring.classes.size() << "):\n";
      for (size_t c = 0; c < result.coloring.classes.size(); ++c)
        std::cout << "  class " << c + 1 << ": "
                  << join_labels(doc, result.coloring.classes[c], " >= ") << "\n";
    }
    std::cout << "time_ms = " << parse_ms + solve_ms << "\n";
    if (oracle_skipped) std::cout << "oracle: skipped (n > " << oracle_cap << ")\n";
  }

  if (oracle_value && *oracle_value != result.chi_nested) {
    std::cerr << "oracle mismatch: solver " << result.chi_nested << " vs brute force "
              << *oracle_value << "\n";
    return kExitOracle;
  }
  if (oracle_value && !as_json) std::cout << "oracle: agree (" << *oracle_value << ")\n";
  return 0;
}

std::string format_graph(const Graph& g, const std::string& format) {
  if (format == "graph6") return write_graph6(g) + "\n";
  GraphDocument doc;
  doc.graph = g;
  for (int v = 0; v < g.vertex_count(); ++v) doc.labels.push_back(std::to_string(v));
  return write_edge_list(doc);
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

int run_enumerate(int n_exact, int min_n, int max_n, bool connected, bool bip,
                  const std::string& experiment, const std::string& format,
                  const std::string& out_path, const std::string& input) {
  GraphGenerator gen;
  std::vector<Graph> universe;
  bool external = !input.empty();
  if (external) {
    std::istringstream lines(slurp(input));
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      if (line.empty()) continue;
      try {
        universe.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(input + " line " + std::to_string(line_no) + ": " + e.what());
      }
    }
  } else {
    GraphClassFilter filter;
    filter.connected_only = connected;
    filter.bipartite_only = bip;
    if (n_exact > 0) {
      filter.min_vertices = filter.max_vertices = n_exact;
    } else {
      filter.min_vertices = min_n;
      filter.max_vertices = max_n;
    }
    universe = gen.generate(filter);
  }

  std::ostringstream out;
  if (experiment == "list") {
    if (format == "json") {
      json arr = json::array();
      for (const Graph& g : universe) arr.push_back(write_graph6(g));
      out << arr.dump(2) << "\n";
    } else {
      for (const Graph& g : universe) out << write_graph6(g) << "\n";
    }
    std::cerr << universe.size() << " graphs\n";
  } else if (experiment == "triples") {
    // group by vertex count, classify within each group
    std::map<int, std::vector<Graph>> by_n;
    for (const Graph& g : universe) by_n[g.vertex_count()].push_back(g);
    json jrows = json::array();
    if (format != "json") out << "n,chi,chi_nested,realizable,witness\n";
    std::string gap_summary;
    for (auto& [n, graphs] : by_n) {
      auto pairs = parallel_map<std::pair<int, int>>(graphs.size(), [&](std::size_t i) {
        return std::make_pair(chromatic_number_exact(graphs[i]),
                              nested_chromatic_number(graphs[i]).chi_nested);
      });
      std::vector<std::vector<int>> first(n + 1, std::vector<int>(n + 1, -1));
      for (std::size_t i = 0; i < graphs.size(); ++i)
        if (first[pairs[i].first][pairs[i].second] == -1)
          first[pairs[i].first][pairs[i].second] = static_cast<int>(i);
      for (int c = 1; c <= n; ++c)
        for (int s = c; s <= n; ++s) {
          bool ok = first[c][s] >= 0;
          std::string witness = ok ? write_graph6(graphs[first[c][s]]) : "";
          if (format == "json")
            jrows.push_back({{"n", n},
                             {"chi", c},
                             {"chi_nested", s},
                             {"realizable", ok},
                             {"witness", witness}});
          else
            out << n << "," << c << "," << s << "," << (ok ? 1 : 0) << "," << witness << "\n";
          if (!ok) gap_summary += " (" + std::to_string(c) + "," + std::to_string(s) + ")";
        }
    }
    if (format == "json") out << jrows.dump(2) << "\n";
    std::cerr << "gaps:" << (gap_summary.empty() ? " none" : gap_summary) << "\n";
  } else if (experiment == "complement") {
    int top = external ? 0 : (n_exact > 0 ? n_exact : max_n);
    if (external) {
      for (const Graph& g : universe) top = std::max(top, g.vertex_count());
      std::map<int, std::vector<Graph>> by_n;
      for (const Graph& g : universe) by_n[g.vertex_count()].push_back(g);
      if (format != "json") out << "n,min_slack,witness\n";
      json jrows = json::array();
      for (auto& [n, graphs] : by_n) {
        int best = 0;
        std::string witness;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          int slack = nested_chromatic_number(graphs[i]).chi_nested +
                      nested_chromatic_number(complement(graphs[i])).chi_nested - n;
          if (witness.empty() || slack < best) {
            best = slack;
            witness = write_graph6(graphs[i]);
          }
        }
        if (format == "json")
          jrows.push_back({{"n", n}, {"min_slack", best}, {"witness", witness}});
        else
          out << n << "," << best << "," << witness << "\n";
      }
      if (format == "json") out << jrows.dump(2) << "\n";
    } else {
      ComplementScan scan = complement_conjecture_scan(top, gen);
      if (format == "json") {
        json jrows = json::array();
        for (const auto& rec : scan.per_n)
          jrows.push_back({{"n", rec.n}, {"min_slack", rec.min_slack}, {"witness", rec.witness}});
        out << json{{"per_n", jrows},
                    {"min_slack", scan.min_slack},
                    {"counterexamples", scan.counterexamples}}
                   .dump(2)
            << "\n";
      } else {
        out << "n,min_slack,witness\n";
        for (const auto& rec : scan.per_n)
          out << rec.n << "," << rec.min_slack << "," << rec.witness << "\n";
      }
      std::cerr << "conjecture scan: min slack " << scan.min_slack << ", "
                << scan.counterexamples.size() << " counterexamples\n";
    }
  } else if (experiment == "bipartite-count") {
    int n = n_exact > 0 ? n_exact : max_n;
    BipartiteCount count = count_colour_nested_bipartite(n, gen);
    if (format == "json") {
      out << json{{"n", count.n},
                  {"connected_by_sequences", count.connected_by_sequences},
                  {"connected_by_filter", count.connected_by_filter},
                  {"duplicate_free_total", count.duplicate_free_total},
                  {"connected_duplicate_free", count.connected_duplicate_free}}
                 .dump(2)
          << "\n";
    } else {
      out << "n,connected_by_sequences,connected_by_filter,duplicate_free_total,connected_"
             "duplicate_free\n";
      out << count.n << "," << count.connected_by_sequences << "," << count.connected_by_filter
          << "," << count.duplicate_free_total << "," << count.connected_duplicate_free << "\n";
    }
  } else if (experiment == "planar") {
    int n = n_exact > 0 ? n_exact : max_n;
    auto witnesses = planar_sweep(n);
    if (format == "json") {
      json jrows = json::array();
      for (const auto& w : witnesses)
        jrows.push_back({{"n", n}, {"k", w.k}, {"chi_nested", w.chi_nested},
                         {"graph6", write_graph6(w.graph)}});
      out << jrows.dump(2) << "\n";
    } else {
      out << "n,k,chi_nested,graph6\n";
      for (const auto& w : witnesses)
        out << n << "," << w.k << "," << w.chi_nested << "," << write_graph6(w.graph) << "\n";
    }
  } else {
    throw CLI::ValidationError("unknown experiment: " + experiment);
  }
  emit(out_path, out.str());
  return 0;
}

int run_verify(const std::string& graph_path, const std::string& format,
               const std::string& partition_path) {
  GraphDocument doc = read_graph(graph_path, format);
  std::map<std::string, int> index_of;
  for (int v = 0; v < doc.graph.vertex_count(); ++v) index_of[doc.labels[v]] = v;

  std::vector<std::vector<int>> partition;
  std::istringstream lines(slurp(partition_path));
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::vector<int> cls;
    std::string tok;
    while (row >> tok) {
      auto it = index_of.find(tok);
      if (it == index_of.end())
        throw ParseError("unknown vertex \"" + tok + "\"", line_no);
      cls.push_back(it->second);
    }
    if (!cls.empty()) partition.push_back(std::move(cls));
  }

  NestedCheck check = is_nested_coloring(doc.graph, partition);
  if (check.nested)
    std::cout << "nested: yes (" << partition.size() << " classes)\n";
  else
    std::cout << "nested: no (first offending class: " << check.offending_class + 1 << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact nested chromatic number toolkit"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "compute chi_N of a graph");
  std::string in_path = "-", in_format = "auto", poset_dot, out_path;
  bool show_coloring = false, show_dedup = false, oracle = false, chi = false, as_json = false;
  int oracle_cap = 10;
  solve->add_option("input", in_path, "input file, - for stdin");
  solve->add_option("--format", in_format, "auto|graph6|edge-list")
      ->check(CLI::IsMember({"auto", "graph6", "edge-list"}));
  solve->add_flag("--coloring", show_coloring, "print an optimal nested colouring");
  solve->add_flag("--dedup", show_dedup, "print duplicate classes");
  solve->add_option("--poset-dot", poset_dot, "write the Hasse diagram of the weak duplicate poset");
  solve->add_flag("--oracle", oracle, "cross-check against brute force");
  solve->add_option("--oracle-cap", oracle_cap, "largest n the oracle will attempt");
  solve->add_flag("--chi", chi, "also compute the chromatic number");
  solve->add_flag("--json", as_json, "machine-readable output");

  // generate
  auto* generate = app.add_subcommand("generate", "build a named graph family");
  generate->require_subcommand(1);
  std::string gen_format = "graph6", gen_out;
  int p_n = 0, p_r = 0, p_k = 0, p_times = 1, p_s = 0;
  double p_prob = 0.5;
  uint64_t p_seed = 1;
  std::string p_list, p_script, p_g, p_h, p_kind, p_of;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", gen_format, "graph6|edge-list")
        ->check(CLI::IsMember({"graph6", "edge-list"}));
    cmd->add_option("-o,--output", gen_out, "output file, default stdout");
  };
  auto* g_complete = generate->add_subcommand("complete", "K_n");
  g_complete->add_option("-n", p_n)->required();
  auto* g_multi = generate->add_subcommand("complete-multipartite", "complete multipartite");
  g_multi->add_option("--parts", p_list, "comma separated part sizes")->required();
  auto* g_turan = generate->add_subcommand("turan", "Turan graph");
  g_turan->add_option("-n", p_n)->required();
  g_turan->add_option("-r", p_r)->required();
  auto* g_cycle = generate->add_subcommand("cycle", "C_n");
  g_cycle->add_option("-n", p_n)->required();
  auto* g_path = generate->add_subcommand("path", "P_n");
  g_path->add_option("-n", p_n)->required();
  auto* g_star = generate->add_subcommand("star", "K_{1,n}");
  g_star->add_option("-n", p_n)->required();
  auto* g_wheel = generate->add_subcommand("wheel", "C_n plus hub");
  g_wheel->add_option("-n", p_n)->required();
  auto* g_windmill = generate->add_subcommand("windmill", "n copies of K_k plus hub");
  g_windmill->add_option("-k", p_k)->required();
  g_windmill->add_option("-n", p_n)->required();
  auto* g_petersen = generate->add_subcommand("petersen", "the Petersen graph");
  auto* g_kneser = generate->add_subcommand("kneser", "Kneser graph");
  g_kneser->add_option("-n", p_n)->required();
  g_kneser->add_option("-k", p_k)->required();
  auto* g_cube = generate->add_subcommand("cube", "hypercube Q_n");
  g_cube->add_option("-n", p_n)->required();
  auto* g_crown = generate->add_subcommand("crown", "K_n x K_2");
  g_crown->add_option("-n", p_n)->required();
  auto* g_nb = generate->add_subcommand("nested-bipartite", "G_{a_1..a_r;s}");
  g_nb->add_option("--a", p_list, "comma separated weakly decreasing a_i")->required();
  g_nb->add_option("--s", p_s)->required();
  auto* g_thresh = generate->add_subcommand("threshold", "threshold graph from a script");
  g_thresh->add_option("--script", p_script, "characters i (isolated) and d (dominating)")
      ->required();
  auto* g_myc = generate->add_subcommand("mycielski", "Mycielskian of an input graph");
  g_myc->add_option("--of", p_of, "input graph file")->required();
  g_myc->add_option("--times", p_times, "apply repeatedly");
  auto* g_er = generate->add_subcommand("er", "Erdos-Renyi sample");
  g_er->add_option("-n", p_n)->required();
  g_er->add_option("--p", p_prob);
  g_er->add_option("--seed", p_seed);
  auto* g_prod = generate->add_subcommand("product", "binary graph operation");
  g_prod->add_option("--kind", p_kind, "direct|cartesian|strong|composition|union|join")
      ->required()
      ->check(CLI::IsMember({"direct", "cartesian", "strong", "composition", "union", "join"}));
  g_prod->add_option("--left", p_g, "left input graph file")->required();
  g_prod->add_option("--right", p_h, "right input graph file")->required();
  for (auto* cmd :
       {g_complete, g_multi, g_turan, g_cycle, g_path, g_star, g_wheel, g_windmill, g_petersen,
        g_kneser, g_cube, g_crown, g_nb, g_thresh, g_myc, g_er, g_prod})
    add_common(cmd);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "isomorph-free generation and surveys");
  int e_n = 0, e_min = 1, e_max = 0;
  bool e_conn = false, e_bip = false;
  std::string e_exp = "list", e_format = "csv", e_out, e_input;
  enumerate->add_option("--n", e_n, "exact vertex count");
  enumerate->add_option("--min-n", e_min, "smallest vertex count");
  enumerate->add_option("--max-n", e_max, "largest vertex count");
  enumerate->add_flag("--connected", e_conn, "connected graphs only");
  enumerate->add_flag("--bipartite", e_bip, "bipartite graphs only");
  enumerate->add_option("--experiment", e_exp,
                        "list|triples|complement|bipartite-count|planar");
  enumerate->add_option("--format", e_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  enumerate->add_option("-o,--output", e_out, "output file, default stdout");
  enumerate->add_option("--input", e_input, "externally supplied graph6 stream");

  // verify
  auto* verify = app.add_subcommand("verify", "check a nested colouring certificate");
  std::string v_graph, v_format = "auto", v_partition;
  verify->add_option("--graph", v_graph, "graph file")->required();
  verify->add_option("--format", v_format, "auto|graph6|edge-list")
      ->check(CLI::IsMember({"auto", "graph6", "edge-list"}));
  verify->add_option("partition", v_partition, "one class per line, '#' comments")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return run_solve(in_path, in_format, show_coloring, show_dedup, poset_dot, oracle, oracle_cap,
                       chi, as_json);
    if (generate->parsed()) {
      Graph g;
      if (g_complete->parsed()) g = complete(p_n);
      else if (g_multi->parsed()) g = complete_multipartite(parse_int_list(p_list));
      else if (g_turan->parsed()) g = turan(p_n, p_r);
      else if (g_cycle->parsed()) g = cycle(p_n);
      else if (g_path->parsed()) g = path(p_n);
      else if (g_star->parsed()) g = star(p_n);
      else if (g_wheel->parsed()) g = wheel(p_n);
      else if (g_windmill->parsed()) g = windmill(p_k, p_n);
      else if (g_petersen->parsed()) g = petersen();
      else if (g_kneser->parsed()) g = kneser(p_n, p_k);
      else if (g_cube->parsed()) g = cube(p_n);
      else if (g_crown->parsed()) g = crown(p_n);
      else if (g_nb->parsed()) g = nested_bipartite(parse_int_list(p_list), p_s);
      else if (g_thresh->parsed()) {
        std::vector<ThresholdStep> script;
        for (char c : p_script) {
          if (c == 'i') script.push_back(ThresholdStep::isolated);
          else if (c == 'd') script.push_back(ThresholdStep::dominating);
          else throw ParseError(std::string("bad script character '") + c + "'");
        }
        g = threshold_graph(script);
      } else if (g_myc->parsed()) {
        g = read_graph(p_of, "auto").graph;
        for (int i = 0; i < p_times; ++i) g = mycielski(g);
      } else if (g_er->parsed()) {
        g = erdos_renyi(p_n, p_prob, p_seed);
      } else if (g_prod->parsed()) {
        Graph a = read_graph(p_g, "auto").graph;
        Graph b = read_graph(p_h, "auto").graph;
        if (p_kind == "direct") g = direct_product(a, b);
        else if (p_kind == "cartesian") g = cartesian_product(a, b);
        else if (p_kind == "strong") g = strong_product(a, b);
        else if (p_kind == "composition") g = composition(a, b);
        else if (p_kind == "union") g = disjoint_union(a, b);
        else g = join(a, b);
      }
      emit(gen_out, format_graph(g, gen_format));
      return 0;
    }
    if (enumerate->parsed()) {
      if (e_max == 0) e_max = e_n > 0 ? e_n : 1;
      return run_enumerate(e_n, e_min, e_max, e_conn, e_bip, e_exp, e_format, e_out, e_input);
    }
    if (verify->parsed()) return run_verify(v_graph, v_format, v_partition);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
