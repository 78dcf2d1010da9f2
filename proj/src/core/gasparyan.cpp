#include "berge/gasparyan.hpp"

#include <algorithm>
#include <sstream>

#include "berge/errors.hpp"
#include "berge/graph6.hpp"
#include "berge/oracle.hpp"
#include "berge/ops.hpp"

namespace berge {

namespace {

Eigen::MatrixXi incidence(int n, const std::vector<std::vector<int>>& rows) {
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int v : rows[i]) m(static_cast<Eigen::Index>(i), v) = 1;
  }
  return m;
}

[[noreturn]] void inconsistent(const Graph& g, const std::string& what) {
  throw InternalInconsistency("gasparyan_certificate: " + what + " [graph6 " + to_graph6(g) + "]");
}

std::vector<int> complement_of(int n, const std::vector<int>& removed) {
  std::vector<char> gone(n, 0);
  for (int v : removed) gone[v] = 1;
  std::vector<int> keep;
  for (int v = 0; v < n; ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return keep;
}

}  // namespace

Eigen::MatrixXi GasparyanCertificate::stable_matrix() const { return incidence(n, stable_sets); }
Eigen::MatrixXi GasparyanCertificate::clique_matrix() const { return incidence(n, cliques); }

GasparyanCertificate gasparyan_certificate(const Graph& g, const Limits& limits) {
  if (!is_minimally_imperfect(g, limits)) {
    throw InvalidInput("gasparyan_certificate: graph is not minimally imperfect");
  }
  const int n = g.order();
  GasparyanCertificate cert;
  cert.n = n;
  cert.omega = clique_number(g, limits);
  cert.stable_sets.push_back(max_stable_set(g, limits));
  cert.alpha = static_cast<int>(cert.stable_sets.front().size());

  for (int s : cert.stable_sets.front()) {
    const auto keep = complement_of(n, {s});
    const auto sub = induced_subgraph(g, std::span<const int>(keep));
    const auto chi = chromatic_number(sub.graph, limits);
    if (chi.chi != cert.omega) inconsistent(g, "G - v is not omega-colorable");
    for (const auto& cls : chi.coloring.classes()) {
      std::vector<int> row;
      for (int v : cls) row.push_back(sub.to_parent[v]);
      cert.stable_sets.push_back(std::move(row));
    }
  }
  const int rows = cert.alpha * cert.omega + 1;
  if (cert.rows() != rows) inconsistent(g, "wrong number of stable sets");

  for (const auto& a : cert.stable_sets) {
    const auto keep = complement_of(n, a);
    const auto sub = induced_subgraph(g, std::span<const int>(keep));
    auto clique = max_clique(sub.graph, limits);
    if (static_cast<int>(clique.size()) != cert.omega) inconsistent(g, "G - A_i has no omega-clique");
    for (int& v : clique) v = sub.to_parent[v];
    std::sort(clique.begin(), clique.end());
    cert.cliques.push_back(std::move(clique));
  }

  // Every omega-clique meets all but exactly one A_i, and every vertex lies
  // in exactly omega of them.
  std::vector<int> per_vertex(n, 0);
  for_each_clique_of_size(g, cert.omega, [&](const std::vector<int>& clique) {
    int missed = 0;
    for (const auto& a : cert.stable_sets) {
      const bool meets = std::any_of(clique.begin(), clique.end(),
                                     [&](int v) { return std::find(a.begin(), a.end(), v) != a.end(); });
      if (!meets) ++missed;
    }
    if (missed != 1) inconsistent(g, "an omega-clique misses " + std::to_string(missed) + " stable sets");
    for (int v : clique) ++per_vertex[v];
  });
  for (int v = 0; v < n; ++v) {
    if (per_vertex[v] != cert.omega) inconsistent(g, "vertex " + std::to_string(v) + " is not in omega omega-cliques");
  }

  const Eigen::MatrixXi product = cert.stable_matrix() * cert.clique_matrix().transpose();
  const Eigen::MatrixXi expected = Eigen::MatrixXi::Ones(rows, rows) - Eigen::MatrixXi::Identity(rows, rows);
  if (product != expected) inconsistent(g, "A B^T differs from J - I");

  Eigen::FullPivLU<Eigen::MatrixXd> lu(cert.stable_matrix().cast<double>());
  if (lu.rank() != rows) inconsistent(g, "stable set matrix is rank deficient");
  if (n < rows) inconsistent(g, "n < alpha omega + 1");
  return cert;
}

std::string verify_certificate(const Graph& g, const GasparyanCertificate& cert) {
  const int n = g.order();
  if (cert.n != n) return "vertex count mismatch";
  const int rows = cert.alpha * cert.omega + 1;
  if (cert.rows() != rows || static_cast<int>(cert.cliques.size()) != rows) return "expected alpha*omega+1 rows";
  for (const auto& row : cert.stable_sets) {
    for (int v : row) {
      if (v < 0 || v >= n) return "stable set vertex out of range";
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      for (std::size_t j = i + 1; j < row.size(); ++j) {
        if (row[i] == row[j] || g.adjacent(row[i], row[j])) return "a listed stable set is not stable";
      }
    }
  }
  for (const auto& row : cert.cliques) {
    if (static_cast<int>(row.size()) != cert.omega) return "a listed clique does not have omega vertices";
    for (int v : row) {
      if (v < 0 || v >= n) return "clique vertex out of range";
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      for (std::size_t j = i + 1; j < row.size(); ++j) {
        if (!g.adjacent(row[i], row[j])) return "a listed clique is not a clique";
      }
    }
  }
  if (static_cast<int>(cert.stable_sets.front().size()) != cert.alpha) return "A_0 is not an alpha-stable set";
  if (stability_number(g) != cert.alpha) return "alpha does not match the graph";
  if (clique_number(g) != cert.omega) return "omega does not match the graph";
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < rows; ++j) {
      int common = 0;
      for (int v : cert.stable_sets[i]) {
        common += static_cast<int>(std::count(cert.cliques[j].begin(), cert.cliques[j].end(), v));
      }
      if (common != (i == j ? 0 : 1)) {
        return "A_" + std::to_string(i) + " and B_" + std::to_string(j) + " meet in " + std::to_string(common) +
               " vertices";
      }
    }
  }
  if (n < rows) return "n < alpha omega + 1";
  return {};
}

std::string format_certificate(const GasparyanCertificate& cert) {
  std::ostringstream os;
  os << "n " << cert.n << "\nalpha " << cert.alpha << "\nomega " << cert.omega << '\n';
  auto rows = [&](char tag, const std::vector<std::vector<int>>& sets) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      os << tag << ' ' << i << ':';
      for (int v : sets[i]) os << ' ' << v;
      os << '\n';
    }
  };
  rows('A', cert.stable_sets);
  rows('B', cert.cliques);
  return os.str();
}

GasparyanCertificate parse_certificate(const std::string& text) {
  GasparyanCertificate cert;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "n") {
      ls >> cert.n;
    } else if (key == "alpha") {
      ls >> cert.alpha;
    } else if (key == "omega") {
      ls >> cert.omega;
    } else if (key == "A" || key == "B") {
      std::string index;
      ls >> index;
      if (index.empty() || index.back() != ':') throw ParseError(line_no, "expected '<index>:'");
      std::vector<int> row;
      for (int v; ls >> v;) row.push_back(v);
      if (!ls.eof()) throw ParseError(line_no, "bad vertex list");
      (key == "A" ? cert.stable_sets : cert.cliques).push_back(std::move(row));
      continue;
    } else {
      throw ParseError(line_no, "unknown record '" + key + "'");
    }
    if (!ls) throw ParseError(line_no, "expected an integer");
  }
  return cert;
}

}  // namespace berge
