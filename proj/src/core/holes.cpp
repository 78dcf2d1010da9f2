#include "berge/holes.hpp"

#include "berge/errors.hpp"
#include "berge/ops.hpp"
#include "bits.hpp"

namespace berge {

namespace {

using detail::Mask;
using detail::bit;

// Grows chordless paths start = p0, p1, ..., pk over vertices larger than the
// start. `blocked` holds every vertex adjacent to p1..p(k-1) or on the path.
class HoleSearch {
 public:
  HoleSearch(const std::vector<Mask>& adj, const std::function<bool(const Path&)>& visit)
      : adj_(adj), visit_(visit) {}

  bool run() {
    const int n = static_cast<int>(adj_.size());
    for (int s = 0; s < n; ++s) {
      const Mask allowed = ~detail::low_bits(s + 1) & detail::low_bits(n);
      start_ = s;
      allowed_ = allowed;
      Mask firsts = adj_[s] & allowed;
      while (firsts) {
        int v1 = detail::lowest(firsts);
        firsts &= firsts - 1;
        path_.assign({s, v1});
        if (grow(bit(s) | bit(v1))) return true;
      }
    }
    return false;
  }

 private:
  // blocked: path vertices plus neighbours of p1..p(k-1)
  bool grow(Mask blocked) {
    const int last = path_.back();
    Mask candidates = adj_[last] & allowed_ & ~blocked;
    while (candidates) {
      int w = detail::lowest(candidates);
      candidates &= candidates - 1;
      const bool closes = (adj_[w] & bit(start_)) != 0;
      if (closes) {
        if (path_.size() < 3 || w < path_[1]) continue;
        path_.push_back(w);
        Path hole{path_};
        path_.pop_back();
        if (visit_(hole)) return true;
        continue;
      }
      path_.push_back(w);
      // the previous end becomes interior
      const Mask next_blocked = blocked | bit(w) | adj_[last];
      if (grow(next_blocked)) return true;
      path_.pop_back();
    }
    return false;
  }

  const std::vector<Mask>& adj_;
  const std::function<bool(const Path&)>& visit_;
  std::vector<int> path_;
  int start_ = 0;
  Mask allowed_ = 0;
};

}  // namespace

void for_each_hole(const Graph& g, const std::function<bool(const Path&)>& visit) {
  const auto adj = detail::masks_of(g, "for_each_hole");
  HoleSearch(adj, visit).run();
}

std::optional<Path> find_hole(const Graph& g, Parity parity, int min_length) {
  if (min_length < 4) throw InvalidInput("find_hole: min_length must be at least 4");
  std::optional<Path> found;
  for_each_hole(g, [&](const Path& h) {
    const int len = static_cast<int>(h.vertices.size());
    if (len < min_length) return false;
    if (parity == Parity::odd && len % 2 == 0) return false;
    if (parity == Parity::even && len % 2 == 1) return false;
    found = h;
    return true;
  });
  return found;
}

std::vector<Path> all_holes(const Graph& g) {
  std::vector<Path> out;
  for_each_hole(g, [&](const Path& h) {
    out.push_back(h);
    return false;
  });
  return out;
}

bool has_odd_hole(const Graph& g) { return find_hole(g, Parity::odd).has_value(); }

}  // namespace berge
