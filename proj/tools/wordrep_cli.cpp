// Command-line front end for the wordrep library.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordrep/wordrep.hpp"

namespace {

using json = nlohmann::json;
using namespace wordrep;

enum Exit : int { ok = 0, failed = 1, input_error = 2, unsupported_case = 3, truncated_search = 4 };

struct Globals {
  bool json = false;
  unsigned threads = 1;
  std::size_t max_len = 0;
};

Graph read_graph(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot open graph file '" + path + "'");
  return parse_graph(in);
}

json edge_list(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back({g.label(u), g.label(v)});
  return out;
}

json count_value(const BigInt& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
  return n.str();
}

/// Builds the fixed-shape JSON document and prints either it or the text form.
class Output {
 public:
  Output(const Globals& g, std::string command) : globals_(g) {
    doc_ = {{"command", std::move(command)}, {"inputs", json::object()}, {"result", nullptr},
            {"words", json::array()},         {"ell", nullptr},             {"count", nullptr},
            {"truncated", false}};
  }

  json& operator[](const char* key) { return doc_[key]; }
  void text(const std::string& line) { lines_.push_back(line); }

  void words(const std::vector<Word>& ws, const LabelTable& labels, bool print = true) {
    for (const auto& w : ws) {
      doc_["words"].push_back(format_word(w, labels));
      if (print) lines_.push_back(format_word(w, labels));
    }
  }

  void flush() const {
    if (globals_.json) {
      std::cout << doc_.dump(2) << "\n";
    } else {
      for (const auto& l : lines_) std::cout << l << "\n";
    }
  }

 private:
  const Globals& globals_;
  json doc_;
  std::vector<std::string> lines_;
};

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string graph, word, pattern = "aa";
  bool kitaev = false;
};

int cmd_verify(const Globals& gl, const VerifyArgs& a) {
  const Graph g = read_graph(a.graph);
  const Word w = parse_word(a.word, g.labels());
  const Pattern t = Pattern::parse(a.pattern);
  const auto rep = a.kitaev ? kitaev_represents(w, g, t) : represents_t(w, g, t);

  Output out(gl, "verify");
  out["inputs"] = {{"graph", a.graph}, {"word", a.word}, {"pattern", t.spelling()}, {"kitaev", a.kitaev}};
  json missing = json::array();
  for (Vertex v : rep.missing_vertices) missing.push_back(g.label(v));
  json witnesses = json::array();
  for (const auto& wt : rep.witnesses) {
    witnesses.push_back({{"pair", {g.label(wt.x), g.label(wt.y)}},
                         {"restriction", format_word(wt.restriction, g.labels())},
                         {"factor", wt.factor ? json(*wt.factor) : json(nullptr)}});
  }
  out["result"] = {{"verdict", rep.ok() ? "verified" : "failed"},
                   {"spurious_edges", edge_list(g, rep.spurious_edges)},
                   {"missing_edges", edge_list(g, rep.missing_edges)},
                   {"missing_vertices", missing},
                   {"witnesses", witnesses}};
  out["words"].push_back(format_word(w, g.labels()));
  if (rep.ok()) {
    out.text("verified");
  } else {
    out.text("not a representant");
    if (!rep.missing_vertices.empty()) {
      std::string line = "missing vertices:";
      for (Vertex v : rep.missing_vertices) line += " " + g.label(v);
      out.text(line);
    }
    for (const auto& wt : rep.witnesses) {
      const bool spurious = std::ranges::find(rep.spurious_edges, std::pair{wt.x, wt.y}) != rep.spurious_edges.end();
      std::string line = (spurious ? "spurious edge " : "missing edge ") + g.label(wt.x) + " " + g.label(wt.y) +
                         ": restriction " + format_word(wt.restriction, g.labels());
      if (wt.factor) line += ", factor at " + std::to_string(*wt.factor);
      out.text(line);
    }
  }
  out.flush();
  return rep.ok() ? ok : failed;
}

struct InduceArgs {
  std::string word, pattern = "aa", graph;
  bool kitaev = false;
};

int cmd_induce(const Globals& gl, const InduceArgs& a) {
  std::optional<Graph> g;
  if (!a.graph.empty()) g = read_graph(a.graph);
  const LabelTable labels = g ? g->labels() : labels_of(a.word);
  const Word w = parse_word(a.word, labels);
  const Pattern t = Pattern::parse(a.pattern);
  const Graph h = a.kitaev ? kitaev_induced_graph(w, labels, t) : induced_graph_t(w, labels, t);

  Output out(gl, "induce");
  out["inputs"] = {{"word", a.word}, {"pattern", t.spelling()}, {"kitaev", a.kitaev}};
  if (g) out["inputs"]["graph"] = a.graph;
  json vertices = json::array();
  for (Vertex v : h.vertices()) vertices.push_back(h.label(v));
  out["result"] = {{"vertices", vertices}, {"edges", edge_list(h, h.edges())}};
  out["words"].push_back(format_word(w, labels));
  std::string text = format_graph(h);
  if (!text.empty()) text.pop_back();
  out.text(text);
  out.flush();
  return ok;
}

// ---------------------------------------------------------------------------

struct FamilyArgs {
  std::string family;
  std::string operand;  // graph file or size
};

std::size_t parse_size(const std::string& s, std::size_t min, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || pos == 0) throw Error(ErrorKind::invalid_input, std::string(what) + " must be an integer");
  if (v < min) throw Error(ErrorKind::invalid_input, std::string(what) + " must be at least " + std::to_string(min));
  if (v > 100000) throw Error(ErrorKind::invalid_input, std::string(what) + " is too large");
  return static_cast<std::size_t>(v);
}

Graph require_tree_graph(const std::string& path) {
  Graph g = read_graph(path);
  if (g.vertex_count() < 2 || !is_tree(g)) throw Error(ErrorKind::invalid_input, "graph is not a tree on at least two vertices");
  return g;
}

/// Minimal representant of every component, largest component last.
Word compose_graph(const Graph& g) {
  auto comps = connected_components(g);
  std::ranges::stable_sort(comps, {}, [](const auto& c) { return c.size(); });
  std::vector<Word> parts;
  for (const auto& comp : comps) {
    auto sorted = comp;
    std::ranges::sort(sorted);
    const Graph h = induced_subgraph(g, sorted);
    Word local;
    if (h.vertex_count() == 1) {
      local = {vertex(0)};
    } else if (is_tree(h)) {
      local = tree_min_representant(h);
    } else if (h.edge_count() == h.vertex_count() &&
               std::ranges::all_of(h.vertices(), [&](Vertex v) { return h.degree(v) == 2; })) {
      local = cycle_min_representant(h);
    } else {
      throw Error(ErrorKind::unsupported, "components must be trees, cycles or isolated vertices");
    }
    Word mapped;
    for (Vertex v : local) mapped.push_back(sorted[index(v)]);
    parts.push_back(std::move(mapped));
  }
  return compose_components(parts);
}

int cmd_construct(const Globals& gl, const FamilyArgs& a) {
  Output out(gl, "construct");
  out["inputs"] = {{"family", a.family}, {"argument", a.operand}};
  if (a.family == "tree") {
    const Graph g = require_tree_graph(a.operand);
    out.words({tree_min_representant(g)}, g.labels());
    out["ell"] = 2 * g.vertex_count() - 2;
  } else if (a.family == "cycle") {
    const std::size_t n = parse_size(a.operand, 3, "cycle length");
    const Graph g = cycle_graph(n);
    out.words({cycle_min_representant(n)}, g.labels());
    out["ell"] = ell_cycle(n);
  } else if (a.family == "star") {
    const std::size_t k = parse_size(a.operand, 1, "leaf count");
    if (k > 9) throw Error(ErrorKind::invalid_input, "star listings are limited to 9 leaves");
    const auto ws = star_min_representants(k);
    out.words(ws, star_graph(k).labels());
    out["ell"] = 2 * k;
    out["count"] = ws.size();
  } else if (a.family == "components") {
    const Graph g = read_graph(a.operand);
    if (g.vertex_count() == 0) throw Error(ErrorKind::invalid_input, "graph has no vertices");
    const Word w = compose_graph(g);
    out.words({w}, g.labels());
  } else {
    throw Error(ErrorKind::invalid_input, "unknown family '" + a.family + "'");
  }
  out.flush();
  return ok;
}

int cmd_enumerate(const Globals& gl, const FamilyArgs& a) {
  Output out(gl, "enumerate");
  out["inputs"] = {{"family", a.family}, {"argument", a.operand}};
  std::vector<Word> ws;
  Graph g;
  if (a.family == "tree") {
    g = require_tree_graph(a.operand);
    ws = enumerate_tree_min_representants(g);
  } else if (a.family == "cycle") {
    const std::size_t n = parse_size(a.operand, 3, "cycle length");
    g = cycle_graph(n);
    ws = enumerate_cycle_min_representants(n);
  } else if (a.family == "path") {
    const std::size_t k = parse_size(a.operand, 2, "path length");
    if (k > 14) throw Error(ErrorKind::invalid_input, "path listings are limited to 14 vertices");
    g = path_graph(k);
    ws = enumerate_tree_min_representants(g);
  } else if (a.family == "star") {
    const std::size_t k = parse_size(a.operand, 1, "leaf count");
    if (k > 9) throw Error(ErrorKind::invalid_input, "star listings are limited to 9 leaves");
    g = star_graph(k);
    ws = star_min_representants(k);
  } else {
    throw Error(ErrorKind::invalid_input, "unknown family '" + a.family + "'");
  }
  out.words(ws, g.labels());
  out["ell"] = ws.empty() ? json(nullptr) : json(ws.front().size());
  out["count"] = ws.size();
  out.flush();
  return ok;
}

int cmd_count(const Globals& gl, const FamilyArgs& a) {
  Output out(gl, "count");
  out["inputs"] = {{"family", a.family}, {"argument", a.operand}};
  BigInt n;
  std::size_t ell = 0;
  if (a.family == "tree") {
    const auto s = tree_min_summary(require_tree_graph(a.operand));
    n = s.count;
    ell = s.ell;
  } else if (a.family == "path") {
    const std::size_t k = parse_size(a.operand, 2, "path length");
    n = k == 2 ? BigInt(2) : count_path_min(k);
    ell = 2 * k - 2;
  } else if (a.family == "cycle") {
    const std::size_t k = parse_size(a.operand, 3, "cycle length");
    n = count_cycle_min(k);
    ell = ell_cycle(k);
  } else if (a.family == "star") {
    const std::size_t k = parse_size(a.operand, 1, "leaf count");
    n = 2 * factorial(k);
    ell = 2 * k;
  } else {
    throw Error(ErrorKind::invalid_input, "unknown family '" + a.family + "'");
  }
  out["count"] = count_value(n);
  out["ell"] = ell;
  out.text(n.str());
  out.flush();
  return ok;
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  std::string graph, pattern, rep;
  std::size_t max_vertices = 12;
  bool trace = false;
};

int cmd_build_t(const Globals& gl, const BuildArgs& a) {
  const Graph g = read_graph(a.graph);
  const Pattern t = Pattern::parse(a.pattern);
  BuildOptions opts;
  opts.max_vertices = a.max_vertices;
  if (!a.rep.empty()) opts.representant_11 = parse_word(a.rep, g.labels());
  const auto r = build_t_representant(g, t, opts);

  Output out(gl, "build-t");
  out["inputs"] = {{"graph", a.graph}, {"pattern", t.spelling()}};
  if (!a.rep.empty()) out["inputs"]["representant"] = a.rep;
  out.words({r.word}, g.labels());
  out["ell"] = r.word.size();
  json steps = json::array();
  for (const auto& s : r.trace.steps) {
    steps.push_back({{"edge", s.edge ? json{g.label(s.edge->first), g.label(s.edge->second)} : json(nullptr)},
                     {"segment", format_word(s.segment, g.labels())},
                     {"position", s.prepended ? "prepend" : "append"}});
    if (a.trace) {
      const std::string what = s.edge ? "delete " + g.label(s.edge->first) + " " + g.label(s.edge->second) : "close";
      out.text(what + ": " + (s.prepended ? "prepend " : "append ") + format_word(s.segment, g.labels()));
    }
  }
  if (a.trace && r.trace.reversed) out.text("reverse");
  out["result"] = {{"start_word", format_word(r.trace.start_word, g.labels())},
                   {"steps", steps},
                   {"reversed", r.trace.reversed}};
  out.flush();
  return ok;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  std::string graph, pattern = "aa";
  std::optional<std::size_t> uniform, at_length;
  bool all = false, first = false, no_prune = false;
  std::uint64_t cap = 1'000'000'000;
};

int cmd_oracle(const Globals& gl, const OracleArgs& a) {
  const Graph g = read_graph(a.graph);
  if (a.all && a.first) throw Error(ErrorKind::invalid_input, "--all and --first are exclusive");
  SearchConfig cfg;
  cfg.pattern = Pattern::parse(a.pattern);
  cfg.max_len = gl.max_len;
  cfg.uniform_k = a.uniform;
  cfg.threads = gl.threads;
  cfg.pruning = !a.no_prune;
  cfg.explored_cap = a.cap;
  if (a.first) cfg.mode = SearchMode::first;
  if (a.at_length) {
    if (a.first) throw Error(ErrorKind::invalid_input, "--at-length and --first are exclusive");
    cfg.mode = SearchMode::all_at_length;
    cfg.at_length = *a.at_length;
    if (cfg.max_len == 0) cfg.max_len = std::max(*a.at_length, 2 * g.vertex_count());
  }
  const auto r = search_min_representants(g, cfg);

  Output out(gl, "oracle");
  out["inputs"] = {{"graph", a.graph},
                   {"pattern", cfg.pattern.spelling()},
                   {"uniform", a.uniform ? json(*a.uniform) : json(nullptr)},
                   {"max_len", gl.max_len == 0 ? json(nullptr) : json(gl.max_len)},
                   {"mode", a.first ? "first" : a.at_length ? "at_length" : "all_minimal"},
                   {"threads", gl.threads},
                   {"pruning", !a.no_prune}};
  out["result"] = {{"explored", r.explored}};
  out["truncated"] = r.truncated;
  out["ell"] = r.ell ? json(*r.ell) : json(nullptr);
  out["count"] = r.words.size();
  if (r.truncated) {
    out.text("truncated after " + std::to_string(r.explored) + " prefixes; no minimality claim");
    out.words(r.words, g.labels(), false);
    out.flush();
    return truncated_search;
  }
  if (!r.ell) {
    out.text("no representant found within the length bound");
    out.flush();
    return failed;
  }
  out.text("ell " + std::to_string(*r.ell));
  out.text("count " + std::to_string(r.words.size()));
  out.words(r.words, g.labels());
  out.flush();
  return ok;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_input:
    case ErrorKind::precondition:
      return input_error;
    case ErrorKind::unsupported:
    case ErrorKind::unrepresentable:
    case ErrorKind::open_case:
    case ErrorKind::out_of_scope:
      return unsupported_case;
  }
  return input_error;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph representation by words under pattern avoidance"};
  app.require_subcommand(1);
  Globals gl;
  app.add_flag("--json", gl.json, "Print a JSON document instead of text");
  app.add_option("--threads", gl.threads, "Oracle worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--max-len", gl.max_len, "Oracle length bound (default 2|V|)")->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check that a word represents a graph");
  v->add_option("graph", verify.graph, "Graph file, - for stdin")->required();
  v->add_option("word", verify.word, "Word")->required();
  v->add_option("--pattern,-t", verify.pattern, "Forbidden pattern");
  v->add_flag("--kitaev", verify.kitaev, "Ordered (Kitaev) reading of the pattern");

  InduceArgs induce;
  auto* in = app.add_subcommand("induce", "Print the graph a word induces");
  in->add_option("word", induce.word, "Word")->required();
  in->add_option("--pattern,-t", induce.pattern, "Forbidden pattern");
  in->add_option("--graph", induce.graph, "Take the vertex table from this graph file");
  in->add_flag("--kitaev", induce.kitaev, "Ordered (Kitaev) reading of the pattern");

  FamilyArgs construct, enumerate, count;
  auto family = [&](const char* name, const char* help, FamilyArgs& args, std::vector<std::string> families) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("family", args.family, "Graph family")->required()->check(CLI::IsMember(families));
    s->add_option("argument", args.operand, "Graph file or size")->required();
    return s;
  };
  auto* c = family("construct", "Construct a minimal representant", construct, {"tree", "cycle", "star", "components"});
  auto* e = family("enumerate", "List all minimal representants", enumerate, {"tree", "cycle", "path", "star"});
  auto* n = family("count", "Count minimal representants", count, {"tree", "path", "cycle", "star"});

  BuildArgs build;
  auto* b = app.add_subcommand("build-t", "Build a t-representant by edge deletion");
  b->add_option("graph", build.graph, "Graph file, - for stdin")->required();
  b->add_option("--pattern,-t", build.pattern, "Pattern")->required();
  b->add_option("--rep", build.rep, "Word-representant of the graph (needed for aab and abb)");
  b->add_option("--max-vertices", build.max_vertices, "Vertex limit")->check(CLI::PositiveNumber);
  b->add_flag("--trace", build.trace, "Print the deletion steps");

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Exhaustive search for minimal representants");
  o->add_option("graph", oracle.graph, "Graph file, - for stdin")->required();
  o->add_option("--pattern,-t", oracle.pattern, "Forbidden pattern");
  o->add_option("--uniform", oracle.uniform, "Search k-uniform words only")->check(CLI::PositiveNumber);
  o->add_option("--at-length", oracle.at_length, "All representants of exactly this length")->check(CLI::PositiveNumber);
  o->add_flag("--all", oracle.all, "All minimal representants (default)");
  o->add_flag("--first", oracle.first, "Stop at the lexicographically first minimal representant");
  o->add_flag("--no-prune", oracle.no_prune, "Check every word without pruning");
  o->add_option("--explored-cap", oracle.cap, "Budget of visited prefixes")->check(CLI::PositiveNumber);

  for (auto* s : {v, in, c, e, n, b, o}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (v->parsed()) return cmd_verify(gl, verify);
    if (in->parsed()) return cmd_induce(gl, induce);
    if (c->parsed()) return cmd_construct(gl, construct);
    if (e->parsed()) return cmd_enumerate(gl, enumerate);
    if (n->parsed()) return cmd_count(gl, count);
    if (b->parsed()) return cmd_build_t(gl, build);
    if (o->parsed()) return cmd_oracle(gl, oracle);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_code(err.kind());
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return input_error;
  }
  return input_error;
}
