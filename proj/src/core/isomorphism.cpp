#include "berge/isomorphism.hpp"

#include <algorithm>
#include <set>

#include "berge/errors.hpp"

namespace berge {

namespace {

bool extend(const Graph& a, const Graph& b, std::vector<int>& map, std::vector<char>& used, int pos) {
  const int n = a.order();
  if (pos == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand] || a.degree(pos) != b.degree(cand)) continue;
    bool ok = true;
    for (int prev = 0; prev < pos && ok; ++prev) {
      ok = a.adjacent(prev, pos) == b.adjacent(map[prev], cand);
    }
    if (!ok) continue;
    map[pos] = cand;
    used[cand] = 1;
    if (extend(a, b, map, used, pos + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

int code_bits(int n) { return n * (n - 1) / 2; }

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.num_edges() != b.num_edges()) return std::nullopt;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  std::vector<int> map(a.order(), -1);
  std::vector<char> used(a.order(), 0);
  if (!extend(a, b, map, used, 0)) return std::nullopt;
  return map;
}

bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

// Bits are taken column by column: (0,1), (0,2), (1,2), (0,3), ... with the
// first pair in the most significant position.
std::uint64_t adjacency_code(const Graph& g) {
  const int n = g.order();
  if (code_bits(n) > 64) throw InvalidInput("adjacency_code: order too large");
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1U : 0U);
  }
  return code;
}

Graph from_adjacency_code(int n, std::uint64_t code) {
  if (code_bits(n) > 64) throw InvalidInput("from_adjacency_code: order too large");
  Graph g(n);
  int idx = code_bits(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --idx;
      if ((code >> idx) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), total_(code_bits(g.order())), perm_(n_) {}

  std::uint64_t run() {
    search(0, 0, 0);
    return best_;
  }

 private:
  void search(int pos, std::uint64_t used, std::uint64_t prefix) {
    if (pos == n_) {
      if (!have_best_ || prefix > best_) {
        best_ = prefix;
        have_best_ = true;
      }
      return;
    }
    const int len = code_bits(pos + 1);
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      std::uint64_t next = prefix;
      for (int i = 0; i < pos; ++i) next = (next << 1) | (g_.adjacent(perm_[i], v) ? 1U : 0U);
      if (have_best_ && len > 0 && next < (best_ >> (total_ - len))) continue;
      perm_[pos] = v;
      search(pos + 1, used | (std::uint64_t{1} << v), next);
    }
  }

  const Graph& g_;
  int n_;
  int total_;
  std::vector<int> perm_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > 9) throw InvalidInput("canonical_code: order above 9");
  return CanonicalSearch(g).run();
}

std::vector<Graph> unlabeled_graphs(int n) {
  if (n < 0 || n > 8) throw InvalidInput("unlabeled_graphs: order must be in [0, 8]");
  std::vector<Graph> current{Graph(0)};
  for (int k = 1; k <= n; ++k) {
    std::set<std::uint64_t> codes;
    for (const Graph& base : current) {
      for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (k - 1)); ++nbrs) {
        Graph g(k);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int u = 0; u < k - 1; ++u) {
          if ((nbrs >> u) & 1U) g.add_edge(u, k - 1);
        }
        codes.insert(canonical_code(g));
      }
    }
    current.clear();
    for (auto code : codes) current.push_back(from_adjacency_code(k, code));
  }
  return current;
}

}  // namespace berge
