#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "berge/basic.hpp"
#include "berge/berge_lab.hpp"
#include "berge/decompose.hpp"
#include "berge/errors.hpp"
#include "berge/gasparyan.hpp"
#include "berge/generate.hpp"
#include "berge/graph6.hpp"
#include "berge/holes.hpp"
#include "berge/io.hpp"
#include "berge/oracle.hpp"
#include "berge/ops.hpp"
#include "berge/structures.hpp"
#include "berge/sweep.hpp"
#include "berge/wheels.hpp"

using json = nlohmann::json;
using namespace berge;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kInternal = 3 };

struct Input {
  std::string path;
  std::string format;
  std::string out;
  Limits limits;
};

void add_limits(CLI::App* cmd, Limits& l) {
  cmd->add_option("--limit-clique", l.clique, "max vertices for clique/stable/chromatic searches");
  cmd->add_option("--limit-perfect", l.perfect, "max vertices for perfection checks");
  cmd->add_option("--limit-skew", l.skew_partition, "max vertices for skew partition searches");
  cmd->add_option("--limit-homogeneous", l.homogeneous_pair, "max vertices for homogeneous pair searches");
  cmd->add_option("--limit-six-join", l.six_join, "max vertices for 6-join searches");
  cmd->add_option("--limit-wheel", l.wheel, "max vertices for wheel searches");
  cmd->add_option("--limit-stretcher", l.stretcher, "max vertices for stretcher searches");
  cmd->add_option("--limit-berge", l.berge, "max vertices for Berge recognition");
}

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("--in", in.path, "graph file")->required();
  cmd->add_option("--format", in.format, "edge_list or dimacs (default: by extension)");
  cmd->add_option("--out", in.out, "write JSON-lines records here");
  add_limits(cmd, in.limits);
}

/// Loaded graph plus the naming convention of its file.
struct Loaded {
  GraphDocument doc;
  Format format = Format::edge_list;

  std::string name(int v) const {
    if (!doc.labels.empty()) return doc.labels[v];
    return std::to_string(format == Format::dimacs ? v + 1 : v);
  }

  std::string names(const std::vector<int>& vs) const {
    std::string s;
    for (int v : vs) s += (s.empty() ? "" : " ") + name(v);
    return s.empty() ? "-" : s;
  }

  std::string names(const VertexSet& s) const { return names(s.elements()); }
};

Loaded load(const Input& in) {
  Loaded l;
  std::optional<Format> f;
  if (!in.format.empty()) f = parse_format(in.format);
  l.doc = read_graph_file(in.path, f);
  if (f) {
    l.format = *f;
  } else {
    const auto ext = std::filesystem::path(in.path).extension().string();
    l.format = (ext == ".col" || ext == ".dimacs") ? Format::dimacs : Format::edge_list;
  }
  return l;
}

/// JSON-lines sink; a no-op without --out.
class Records {
 public:
  explicit Records(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw InvalidInput("cannot write " + path);
  }

  void add(const json& r) {
    if (file_.is_open()) file_ << r.dump() << '\n';
  }

 private:
  std::ofstream file_;
};

json vs(const VertexSet& s) { return s.elements(); }

json two_join_json(const TwoJoin& t) {
  return {{"V1", vs(t.V1)}, {"V2", vs(t.V2)}, {"A1", vs(t.A1)}, {"B1", vs(t.B1)}, {"A2", vs(t.A2)}, {"B2", vs(t.B2)}};
}

json skew_json(const SkewPartition& s) { return {{"A", vs(s.A)}, {"B", vs(s.B)}, {"C", vs(s.C)}, {"D", vs(s.D)}}; }

/// Runs one structure search; a ResourceLimit becomes a "skipped" record.
template <class F>
void search(const char* what, Records& rec, F&& f) {
  try {
    f();
  } catch (const ResourceLimit& e) {
    std::cout << what << ": skipped (" << e.what() << ")\n";
    rec.add({{"record", "skipped"}, {"search", what}, {"reason", e.what()}});
  }
}

// --- analyze ----------------------------------------------------------------

int analyze(const Input& in, const std::vector<std::string>& expect) {
  const Loaded l = load(in);
  const Graph& g = l.doc.graph;
  const Limits& lim = in.limits;
  Records rec(in.out);

  std::cout << "graph: n=" << g.order() << " m=" << g.num_edges() << " source=" << l.doc.source << '\n';
  json head = {{"record", "graph"}, {"n", g.order()}, {"m", g.num_edges()}, {"source", l.doc.source}};
  if (g.order() <= 62) head["graph6"] = to_graph6(g);
  if (!l.doc.labels.empty()) head["labels"] = l.doc.labels;
  rec.add(head);

  std::optional<bool> berge;
  std::optional<bool> perfect;
  search("berge", rec, [&] {
    const auto r = is_berge(g, lim);
    berge = r.berge;
    json j = {{"record", "berge"}, {"value", r.berge}};
    std::cout << "berge: " << (r.berge ? "yes" : "no");
    if (r.witness) {
      std::cout << " (odd " << (r.in_complement ? "antihole" : "hole") << ' ' << l.names(r.witness->vertices) << ')';
      j["witness"] = {{"vertices", r.witness->vertices}, {"antihole", r.in_complement}};
    }
    std::cout << '\n';
    rec.add(j);
  });

  search("invariants", rec, [&] {
    const int omega = clique_number(g, lim);
    const int alpha = stability_number(g, lim);
    const int chi = chromatic_number(g, lim).chi;
    std::cout << "omega=" << omega << " alpha=" << alpha << " chi=" << chi << '\n';
    rec.add({{"record", "invariants"}, {"omega", omega}, {"alpha", alpha}, {"chi", chi}});
  });

  search("perfect", rec, [&] {
    const auto r = is_perfect(g, lim);
    perfect = r.perfect;
    json j = {{"record", "perfect"}, {"value", r.perfect}};
    std::cout << "perfect: " << (r.perfect ? "yes" : "no");
    if (r.witness) {
      std::cout << " (minimally imperfect subgraph on " << l.names(*r.witness) << ')';
      j["witness"] = vs(*r.witness);
      const bool mi = *r.witness == g.vertices();
      j["minimally_imperfect"] = mi;
      if (mi) std::cout << ", minimally imperfect";
    }
    std::cout << '\n';
    rec.add(j);
  });

  {
    const auto m = basic_membership(g);
    const BasicClass c = recognize_basic(g);
    std::cout << "basic: " << to_string(c.tag) << '\n';
    rec.add({{"record", "basic"},
             {"class", to_string(c.tag)},
             {"bipartite", m.bipartite},
             {"complement_of_bipartite", m.complement_of_bipartite},
             {"line_of_bipartite", m.line_of_bipartite},
             {"complement_of_line_of_bipartite", m.complement_of_line_of_bipartite}});
  }

  for (const bool co : {false, true}) {
    const char* where = co ? "complement" : "graph";
    search("two_join", rec, [&] {
      const auto t = find_two_join(co ? complement(g) : g);
      std::cout << "two_join in " << where << ": ";
      if (t) {
        std::cout << "V1={" << l.names(t->V1) << "} A1={" << l.names(t->A1) << "} B1={" << l.names(t->B1)
                  << "} A2={" << l.names(t->A2) << "} B2={" << l.names(t->B2) << "}\n";
      } else {
        std::cout << "none\n";
      }
      json j = {{"record", "two_join"}, {"in", where}, {"found", t.has_value()}};
      if (t) j["witness"] = two_join_json(*t);
      rec.add(j);
    });
  }

  search("skew_partition", rec, [&] {
    const auto s = find_skew_partition(g, lim);
    json j = {{"record", "skew_partition"}, {"found", s.has_value()}};
    std::cout << "skew_partition: ";
    if (s) {
      std::cout << "A={" << l.names(s->A) << "} B={" << l.names(s->B) << "} C={" << l.names(s->C) << "} D={"
                << l.names(s->D) << "} cutsets:";
      j["witness"] = skew_json(*s);
      json kinds = json::array();
      for (const auto& k : classify_cutset(g, *s)) {
        std::cout << ' ' << to_string(k.tag);
        kinds.push_back({{"kind", to_string(k.tag)}, {"u", k.u}, {"v", k.v}});
      }
      j["cutsets"] = kinds;
      std::cout << '\n';
    } else {
      std::cout << "none\n";
    }
    rec.add(j);
  });

  for (const bool t_kind : {true, false}) {
    const char* what = t_kind ? "t_cutset" : "u_cutset";
    search(what, rec, [&] {
      const auto r = t_kind ? find_t_cutset(g, lim) : find_u_cutset(g, lim);
      std::cout << what << ": " << (r ? "u=" + l.name(r->second.u) + " v=" + l.name(r->second.v) : "none") << '\n';
      json j = {{"record", what}, {"found", r.has_value()}};
      if (r) j["witness"] = {{"partition", skew_json(r->first)}, {"u", r->second.u}, {"v", r->second.v}};
      rec.add(j);
    });
  }

  search("homogeneous_pair", rec, [&] {
    const auto h = find_homogeneous_pair(g, lim);
    std::cout << "homogeneous_pair: ";
    if (h) {
      std::cout << "A1={" << l.names(h->A1) << "} A2={" << l.names(h->A2) << "} B={" << l.names(h->B) << "}\n";
    } else {
      std::cout << "none\n";
    }
    json j = {{"record", "homogeneous_pair"}, {"found", h.has_value()}};
    if (h) j["witness"] = {{"A1", vs(h->A1)}, {"A2", vs(h->A2)}, {"B", vs(h->B)}};
    rec.add(j);
  });

  search("six_join", rec, [&] {
    const auto s = find_six_join(g, lim);
    std::cout << "six_join: ";
    json j = {{"record", "six_join"}, {"found", s.has_value()}};
    if (s) {
      json xs = json::array();
      json ys = json::array();
      for (int i = 0; i < 4; ++i) {
        std::cout << "X" << i + 1 << "={" << l.names(s->X[i]) << "} ";
        xs.push_back(vs(s->X[i]));
      }
      for (int i = 0; i < 4; ++i) {
        std::cout << "Y" << i + 1 << "={" << l.names(s->Y[i]) << "}" << (i < 3 ? " " : "");
        ys.push_back(vs(s->Y[i]));
      }
      j["witness"] = {{"X", xs}, {"Y", ys}};
      std::cout << '\n';
    } else {
      std::cout << "none\n";
    }
    rec.add(j);
  });

  search("star_cutset", rec, [&] {
    const auto s = find_star_cutset(g);
    std::cout << "star_cutset: " << (s ? "center " + l.name(s->center) + " cutset {" + l.names(s->cutset) + "}" : "none")
              << '\n';
    json j = {{"record", "star_cutset"}, {"found", s.has_value()}};
    if (s) j["witness"] = {{"cutset", vs(s->cutset)}, {"center", s->center}};
    rec.add(j);
  });

  search("double_star_cutset", rec, [&] {
    const auto s = find_double_star_cutset(g);
    std::cout << "double_star_cutset: "
              << (s ? "edge " + l.name(s->u) + "-" + l.name(s->v) + " cutset {" + l.names(s->cutset) + "}" : "none")
              << '\n';
    json j = {{"record", "double_star_cutset"}, {"found", s.has_value()}};
    if (s) j["witness"] = {{"cutset", vs(s->cutset)}, {"u", s->u}, {"v", s->v}};
    rec.add(j);
  });

  search("wheels", rec, [&] {
    const auto wheels = find_wheels(g, {kAllWheelKinds.begin(), kAllWheelKinds.end()}, lim);
    std::cout << "wheels: " << wheels.size() << '\n';
    for (const auto& w : wheels) {
      std::cout << "  " << to_string(w.kind) << " center " << l.name(w.center) << " hole " << l.names(w.hole.vertices)
                << '\n';
      rec.add({{"record", "wheel"},
               {"kind", to_string(w.kind)},
               {"center", w.center},
               {"hole", w.hole.vertices},
               {"spokes", w.spokes},
               {"triangles", w.triangles}});
    }
  });

  search("stretcher", rec, [&] {
    const auto s = find_stretcher(g, lim);
    std::cout << "stretcher: ";
    json j = {{"record", "stretcher"}, {"found", s.has_value()}};
    if (s) {
      json paths = json::array();
      for (int i = 0; i < 3; ++i) {
        std::cout << (i ? " | " : "") << l.names(s->paths[i].vertices);
        paths.push_back(s->paths[i].vertices);
      }
      j["witness"] = {{"a", s->a}, {"b", s->b}, {"paths", paths}};
      std::cout << '\n';
    } else {
      std::cout << "none\n";
    }
    rec.add(j);
  });

  if (berge.value_or(false)) {
    search("decomposition", rec, [&] {
      const auto r = decomposition_report(g, lim, true);
      std::cout << "decomposition: " << to_string(r.kind) << '\n';
      json holds = json::object();
      for (int c = 0; c < 5; ++c) holds[std::string(to_string(static_cast<DecompositionCase>(c)))] = (*r.holds)[c];
      rec.add({{"record", "decomposition"}, {"case", to_string(r.kind)}, {"holds", holds}});
    });
  }

  int code = kOk;
  for (const auto& e : expect) {
    bool met = false;
    if (e == "berge") met = berge.value_or(false);
    else if (e == "not-berge") met = berge && !*berge;
    else if (e == "perfect") met = perfect.value_or(false);
    else if (e == "imperfect") met = perfect && !*perfect;
    else throw InvalidInput("unknown expectation '" + e + "'");
    if (!met) {
      std::cout << "expectation failed: " << e << '\n';
      code = kNegative;
    }
  }
  return code;
}

// --- color ------------------------------------------------------------------

int color(const Input& in) {
  const Loaded l = load(in);
  const Graph& g = l.doc.graph;
  Records rec(in.out);
  const Limits& lim = in.limits;

  bool perfect = true;
  if (g.order() <= lim.perfect) {
    perfect = is_perfect(g, lim).perfect;
  } else if (g.order() <= lim.berge) {
    perfect = is_berge(g, lim).berge;
  }

  Coloring c;
  std::string method;
  if (perfect) {
    PerfectColorOptions opts;
    opts.verify_perfect = false;
    opts.limits = lim;
    const PerfectColoring pc = perfect_color(g, opts);
    c = pc.coloring;
    method = pc.tree.method == ColorMethod::basic ? "basic" : pc.tree.method == ColorMethod::two_join ? "two_join" : "oracle";
    std::cout << "omega-coloring with " << c.num_colors << " colors (" << method << ")\n";
  } else {
    c = chromatic_number(g, lim).coloring;
    method = "oracle";
    std::cout << "graph is imperfect; optimal coloring with " << c.num_colors << " colors\n";
  }
  for (int v = 0; v < g.order(); ++v) std::cout << l.name(v) << ' ' << c.colors[v] + 1 << '\n';
  rec.add({{"record", "coloring"},
           {"perfect", perfect},
           {"method", method},
           {"num_colors", c.num_colors},
           {"colors", c.colors}});
  return kOk;
}

// --- certify ----------------------------------------------------------------

int certify(const Input& in, const std::string& verify_path) {
  const Loaded l = load(in);
  const Graph& g = l.doc.graph;
  if (!verify_path.empty()) {
    std::ifstream f(verify_path);
    if (!f) throw InvalidInput("cannot open " + verify_path);
    std::ostringstream buf;
    buf << f.rdbuf();
    const auto cert = parse_certificate(buf.str());
    const std::string err = verify_certificate(g, cert);
    std::cout << (err.empty() ? "certificate valid" : "certificate invalid: " + err) << '\n';
    return err.empty() ? kOk : kNegative;
  }
  if (!is_minimally_imperfect(g, in.limits)) {
    std::cout << "graph is not minimally imperfect; no certificate\n";
    return kNegative;
  }
  const auto cert = gasparyan_certificate(g, in.limits);
  const std::string text = format_certificate(cert);
  if (in.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream(in.out) << text;
    std::cout << "certificate with " << cert.rows() << " rows written to " << in.out << '\n';
  }
  return kOk;
}

// --- generate ---------------------------------------------------------------

int generate_cmd(const std::string& recipe, std::uint64_t seed, const std::string& format, const std::string& out) {
  const GraphDocument doc = generate(recipe, seed);
  const std::string text = emit_graph(doc.graph, parse_format(format.empty() ? "edge_list" : format));
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw InvalidInput("cannot write " + out);
    f << text;
  }
  return kOk;
}

// --- sweep ------------------------------------------------------------------

int sweep_cmd(const SweepOptions& o, const std::string& out) {
  Records rec(out);
  const SweepReport r = run_sweep(o, [&](const SampleResult& s) {
    json j = {{"record", "sample"},   {"index", s.index},       {"seed", s.seed},
              {"graph6", s.graph6},   {"applicable", s.applicable}, {"ok", s.ok},
              {"instances", s.instances}};
    if (!s.detail.empty()) j["detail"] = s.detail;
    rec.add(j);
  });
  rec.add({{"record", "summary"},
           {"theorem", r.theorem},
           {"n", r.n},
           {"samples", r.samples},
           {"seed", r.seed},
           {"applicable", r.applicable},
           {"passed", r.passed},
           {"failed", r.failed},
           {"instances", r.instances},
           {"seconds", r.seconds}});
  std::cout << "sweep " << r.theorem << " n=" << r.n << " samples=" << r.samples << " seed=" << r.seed
            << ": applicable=" << r.applicable << " passed=" << r.passed << " failed=" << r.failed
            << " instances=" << r.instances << '\n';
  bool internal = false;
  for (const auto& f : r.failures) {
    std::cout << "  sample " << f.index << " [" << f.graph6 << "]: " << f.detail << '\n';
    internal = internal || f.internal;
  }
  if (internal) return kInternal;
  return r.ok() ? kOk : kNegative;
}

// --- holes ------------------------------------------------------------------

int holes(const Input& in, const std::string& parity_name, int min_length) {
  const Loaded l = load(in);
  const Graph& g = l.doc.graph;
  Records rec(in.out);
  Parity parity = Parity::any;
  if (parity_name == "odd") parity = Parity::odd;
  else if (parity_name == "even") parity = Parity::even;
  else if (parity_name != "any") throw InvalidInput("parity must be odd, even or any");
  if (min_length < 4) throw InvalidInput("--min-length must be at least 4");
  int count = 0;
  for_each_hole(g, [&](const Path& h) {
    const int len = static_cast<int>(h.vertices.size());
    const bool odd = len % 2 == 1;
    if (len < min_length || (parity == Parity::odd && !odd) || (parity == Parity::even && odd)) return false;
    ++count;
    std::cout << len << (odd ? " odd: " : " even: ") << l.names(h.vertices) << '\n';
    rec.add({{"record", "hole"}, {"length", len}, {"parity", odd ? "odd" : "even"}, {"vertices", h.vertices}});
    return false;
  });
  std::cout << count << " holes\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berge graph toolkit: perfection, structure and decomposition checks"};
  app.require_subcommand(1);

  Input in;
  std::vector<std::string> expect;
  auto* a = app.add_subcommand("analyze", "report invariants and every detected structure");
  add_input(a, in);
  a->add_option("--expect", expect, "berge, not-berge, perfect or imperfect; exit 1 when unmet");

  auto* c = app.add_subcommand("color", "emit an omega-coloring (an optimal one if imperfect)");
  add_input(c, in);

  std::string verify_path;
  auto* cert = app.add_subcommand("certify", "emit or verify a certificate for a minimally imperfect graph");
  add_input(cert, in);
  cert->add_option("--verify", verify_path, "certificate file to check instead of emitting one");

  std::string recipe;
  std::uint64_t seed = 1;
  std::string format;
  std::string out;
  auto* gen = app.add_subcommand("generate", "build a graph from a recipe");
  gen->add_option("--recipe", recipe, "e.g. cycle(7) or glue_two_join(cycle(4),cycle(4))")->required();
  gen->add_option("--seed", seed, "seed for random recipes");
  gen->add_option("--format", format, "edge_list (default) or dimacs");
  gen->add_option("--out", out, "output file (default stdout)");

  SweepOptions so;
  std::string sweep_out;
  const auto theorems = sweep_theorems();
  auto* sw = app.add_subcommand("sweep", "check a theorem over seeded samples");
  sw->add_option("--theorem", so.theorem, "theorem name")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(theorems.begin(), theorems.end())));
  sw->add_option("--n", so.n, "vertices per sample (max block size for two_join_color)");
  sw->add_option("--samples", so.samples, "number of samples");
  sw->add_option("--seed", so.seed, "master seed");
  sw->add_option("--threads", so.threads, "worker threads (0 = all cores)");
  sw->add_flag("--exhaustive", so.exhaustive, "every graph on n vertices instead of samples");
  sw->add_option("--out", sweep_out, "write JSON-lines records here");
  add_limits(sw, so.limits);

  std::string parity = "any";
  int min_length = 4;
  auto* h = app.add_subcommand("holes", "list holes with their parity");
  add_input(h, in);
  h->add_option("--parity", parity, "odd, even or any");
  h->add_option("--min-length", min_length, "shortest hole to list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*a) return analyze(in, expect);
    if (*c) return color(in);
    if (*cert) return certify(in, verify_path);
    if (*gen) return generate_cmd(recipe, seed, format, out);
    if (*sw) return sweep_cmd(so, sweep_out);
    if (*h) return holes(in, parity, min_length);
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
