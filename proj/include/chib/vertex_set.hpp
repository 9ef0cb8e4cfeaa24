#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace chib {

using Vertex = int;

// Fixed-universe bitset over vertex ids 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet full(int universe);
  // Throws InputError on ids outside the universe.
  static VertexSet of(int universe, std::initializer_list<Vertex> members);
  static VertexSet of(int universe, std::span<const Vertex> members);

  int universe() const noexcept { return n_; }
  bool contains(Vertex v) const noexcept {
    return v >= 0 && v < n_ && ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u);
  }
  bool valid(Vertex v) const noexcept { return v >= 0 && v < n_; }

  void insert(Vertex v);
  void erase(Vertex v);
  void clear() noexcept;

  int size() const noexcept;
  bool empty() const noexcept;
  // -1 when empty / when no member follows.
  Vertex first() const noexcept;
  Vertex next(Vertex after) const noexcept;

  bool intersects(const VertexSet& other) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;
  bool is_disjoint_from(const VertexSet& other) const noexcept { return !intersects(other); }

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet with(Vertex v) const;
  VertexSet without(Vertex v) const;

  std::vector<Vertex> to_vector() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::size_t hash() const noexcept;

  bool operator==(const VertexSet& other) const noexcept = default;
  // Orders by universe, then by sorted member list.
  std::strong_ordering operator<=>(const VertexSet& other) const noexcept;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const VertexSet* set, Vertex v) : set_(set), v_(v) {}
    Vertex operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = -1;
  };

  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

 private:
  void check_compatible(const VertexSet& other) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace chib
