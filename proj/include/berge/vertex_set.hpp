#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace berge {

/// Subset of the vertex range [0, universe) stored as a packed bitset.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) {}

    int operator*() const { return pos_; }
    iterator& operator++() {
      pos_ = set_->next(pos_ + 1);
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator& o) const { return pos_ == o.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    int pos_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(int universe, std::initializer_list<int> elements);
  VertexSet(int universe, std::span<const int> elements);

  static VertexSet full(int universe);
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const noexcept { return universe_; }
  bool contains(int v) const {
    return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
  }
  void insert(int v);
  void erase(int v);
  int size() const noexcept;
  bool empty() const noexcept;

  /// Smallest element >= from, or -1.
  int next(int from) const noexcept;
  int first() const noexcept { return next(0); }

  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, -1); }

  std::vector<int> elements() const;
  /// Low word; only meaningful when universe() <= 64.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const;

  bool is_subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;

  bool operator==(const VertexSet& o) const = default;
  /// Lexicographic on the sorted element lists.
  std::strong_ordering lex_compare(const VertexSet& o) const;

  std::string to_string() const;

 private:
  void trim() noexcept;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace berge
