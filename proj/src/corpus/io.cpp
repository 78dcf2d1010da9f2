#include "berge/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "berge/errors.hpp"

namespace berge {

std::string_view to_string(Format f) { return f == Format::dimacs ? "dimacs" : "edge_list"; }

Format parse_format(std::string_view name) {
  if (name == "edge_list" || name == "edges") return Format::edge_list;
  if (name == "dimacs" || name == "col") return Format::dimacs;
  throw InvalidInput("unknown graph format '" + std::string(name) + "'");
}

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

std::optional<long> to_int(const std::string& s) {
  long v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return v;
}

class EdgeCollector {
 public:
  void add(int line, int u, int v) {
    if (u == v) throw InvalidInput("line " + std::to_string(line) + ": self-loop at vertex " + std::to_string(u));
    if (!seen_.insert({std::min(u, v), std::max(u, v)}).second) {
      throw InvalidInput("line " + std::to_string(line) + ": repeated edge");
    }
    edges_.push_back({u, v});
  }

  Graph build(int n) const {
    Graph g(n);
    for (auto [u, v] : edges_) g.add_edge(u, v);
    return g;
  }

  std::size_t count() const { return edges_.size(); }

 private:
  std::set<std::pair<int, int>> seen_;
  std::vector<std::pair<int, int>> edges_;
};

GraphDocument parse_edge_list(std::string_view text) {
  GraphDocument doc;
  EdgeCollector edges;
  std::optional<int> declared;
  std::unordered_map<std::string, int> index;
  bool any_edge = false;

  auto vertex = [&](int line, const std::string& tok) {
    if (declared) {
      auto v = to_int(tok);
      if (!v || *v < 0 || *v >= *declared) throw ParseError(line, "vertex '" + tok + "' outside 0.." + std::to_string(*declared - 1));
      return static_cast<int>(*v);
    }
    auto [it, fresh] = index.emplace(tok, static_cast<int>(doc.labels.size()));
    if (fresh) doc.labels.push_back(tok);
    return it->second;
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok[0] == "n" && tok.size() == 2 && !declared && index.empty() && !any_edge) {
      auto count = to_int(tok[1]);
      if (!count || *count < 0) throw ParseError(line_no, "bad vertex count '" + tok[1] + "'");
      declared = static_cast<int>(*count);
      continue;
    }
    if (tok.size() == 1) {
      vertex(line_no, tok[0]);
      continue;
    }
    if (tok.size() != 2) throw ParseError(line_no, "expected 'u v'");
    const int u = vertex(line_no, tok[0]);
    const int v = vertex(line_no, tok[1]);
    edges.add(line_no, u, v);
    any_edge = true;
  }
  const int n = declared ? *declared : static_cast<int>(doc.labels.size());
  doc.graph = edges.build(n);
  return doc;
}

GraphDocument parse_dimacs(std::string_view text) {
  GraphDocument doc;
  EdgeCollector edges;
  std::optional<int> n;
  long m = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n) throw ParseError(line_no, "second problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) throw ParseError(line_no, "expected 'p edge n m'");
      auto nv = to_int(tok[2]);
      auto mv = to_int(tok[3]);
      if (!nv || !mv || *nv < 0 || *mv < 0) throw ParseError(line_no, "bad problem line counts");
      n = static_cast<int>(*nv);
      m = *mv;
      continue;
    }
    if (tok[0] == "e") {
      if (!n) throw ParseError(line_no, "edge before problem line");
      if (tok.size() != 3) throw ParseError(line_no, "expected 'e u v'");
      auto u = to_int(tok[1]);
      auto v = to_int(tok[2]);
      if (!u || !v || *u < 1 || *v < 1 || *u > *n || *v > *n) throw ParseError(line_no, "vertex outside 1.." + std::to_string(*n));
      edges.add(line_no, static_cast<int>(*u) - 1, static_cast<int>(*v) - 1);
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + tok[0] + "'");
  }
  if (!n) throw ParseError(line_no, "missing problem line");
  if (static_cast<long>(edges.count()) != m) {
    throw ParseError(line_no, "problem line declares " + std::to_string(m) + " edges, found " + std::to_string(edges.count()));
  }
  doc.graph = edges.build(*n);
  return doc;
}

}  // namespace

GraphDocument parse_graph(std::string_view text, Format format, std::string source) {
  GraphDocument doc = format == Format::dimacs ? parse_dimacs(text) : parse_edge_list(text);
  doc.source = std::move(source);
  return doc;
}

std::string emit_graph(const Graph& g, Format format) {
  std::ostringstream os;
  if (format == Format::dimacs) {
    os << "p edge " << g.order() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  } else {
    os << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  }
  return os.str();
}

GraphDocument read_graph_file(const std::filesystem::path& path, std::optional<Format> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!format) {
    const auto ext = path.extension().string();
    format = (ext == ".col" || ext == ".dimacs") ? Format::dimacs : Format::edge_list;
  }
  return parse_graph(buf.str(), *format, path.string());
}

}  // namespace berge
