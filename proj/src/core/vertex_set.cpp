#include "berge/vertex_set.hpp"

#include <sstream>

#include "berge/errors.hpp"

namespace berge {

VertexSet::VertexSet(int universe, std::initializer_list<int> elements) : VertexSet(universe) {
  for (int v : elements) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const int> elements) : VertexSet(universe) {
  for (int v : elements) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw InvalidInput("VertexSet::from_mask: universe above 64");
  VertexSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  s.trim();
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= universe_) {
    throw InvalidInput("vertex " + std::to_string(v) + " outside [0, " + std::to_string(universe_) + ")");
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= universe_) return;
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_) {
    if (w) return false;
  }
  return true;
}

int VertexSet::next(int from) const noexcept {
  if (from < 0) from = 0;
  if (from >= universe_) return -1;
  std::size_t wi = static_cast<std::size_t>(from) >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) return static_cast<int>(wi * 64) + std::countr_zero(w);
    if (++wi == words_.size()) return -1;
    w = words_[wi];
  }
}

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  if (o.universe_ > universe_) throw InvalidInput("VertexSet union across universes");
  for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
    if (words_[i] & ~other) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) {
    if (words_[i] & o.words_[i]) return true;
  }
  return false;
}

std::strong_ordering VertexSet::lex_compare(const VertexSet& o) const {
  int a = first();
  int b = o.first();
  while (a != -1 && b != -1) {
    if (a != b) return a <=> b;
    a = next(a + 1);
    b = o.next(b + 1);
  }
  if (a == -1 && b == -1) return std::strong_ordering::equal;
  return a == -1 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first_item = true;
  for (int v : *this) {
    if (!first_item) os << ',';
    os << v;
    first_item = false;
  }
  os << '}';
  return os.str();
}

void VertexSet::trim() noexcept {
  if (universe_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
}

}  // namespace berge
