#include "chib/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "chib/errors.hpp"

namespace chib {

namespace {
std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }
}  // namespace

VertexSet::VertexSet(int universe) : n_(universe) {
  if (universe < 0) throw InputError("negative universe size");
  words_.assign(word_count(universe), 0);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<Vertex> members) {
  return of(universe, std::span<const Vertex>(members.begin(), members.size()));
}

VertexSet VertexSet::of(int universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (!valid(v)) {
    throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
  }
  words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (!valid(v)) return;
  words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::clear() noexcept {
  for (auto& w : words_) w = 0;
}

int VertexSet::size() const noexcept {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_)
    if (w) return false;
  return true;
}

Vertex VertexSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
  }
  return -1;
}

Vertex VertexSet::next(Vertex after) const noexcept {
  Vertex v = after + 1;
  if (v >= n_) return -1;
  std::size_t i = static_cast<std::size_t>(v) >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
  while (true) {
    if (w) return static_cast<Vertex>(i * 64 + std::countr_zero(w));
    if (++i >= words_.size()) return -1;
    w = words_[i];
  }
}

void VertexSet::check_compatible(const VertexSet& other) const {
  if (other.n_ != n_) {
    throw InputError("vertex sets over different universes (" + std::to_string(n_) + " vs " +
                     std::to_string(other.n_) + ")");
  }
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  std::size_t k = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < k; ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~o) return false;
  }
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::with(Vertex v) const {
  VertexSet s = *this;
  s.insert(v);
  return s;
}

VertexSet VertexSet::without(Vertex v) const {
  VertexSet s = *this;
  s.erase(v);
  return s;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::size_t VertexSet::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(n_);
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const noexcept {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  Vertex a = first(), b = other.first();
  while (a != -1 && b != -1) {
    if (a != b) return a <=> b;
    a = next(a);
    b = other.next(b);
  }
  if (a == b) return std::strong_ordering::equal;
  return a == -1 ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace chib
