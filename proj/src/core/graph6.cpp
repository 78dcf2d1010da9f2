#include "berge/graph6.hpp"

#include "berge/errors.hpp"

namespace berge {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw InvalidInput("graph6: only orders up to 62 are supported");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw InvalidInput("graph6: empty string");
  const int n = text[0] - 63;
  if (n < 0 || n > 62) throw InvalidInput("graph6: unsupported order byte");
  Graph g(n);
  std::size_t pos = 1;
  int acc = 0;
  int left = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (left == 0) {
        if (pos >= text.size()) throw InvalidInput("graph6: truncated");
        acc = text[pos++] - 63;
        if (acc < 0 || acc > 63) throw InvalidInput("graph6: bad character");
        left = 6;
      }
      --left;
      if ((acc >> left) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace berge
