#pragma once

// Brute-force reference implementations. They use only Graph::adjacent and plain loops.

#include <cstdint>
#include <random>
#include <vector>

#include "chib/graph.hpp"

namespace oracle {

using chib::Graph;
using chib::Vertex;

inline std::vector<Vertex> members(std::uint32_t mask, int n) {
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1u) out.push_back(v);
  return out;
}

inline bool clique_mask(const Graph& g, std::uint32_t mask) {
  auto vs = members(mask, g.order());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

inline int omega(const Graph& g) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) {
    int size = __builtin_popcount(mask);
    if (size > best && clique_mask(g, mask)) best = size;
  }
  return best;
}

inline bool colourable(const Graph& g, int k, std::vector<int>& col, int v) {
  if (v == g.order()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int u = 0; u < v; ++u)
      if (g.adjacent(u, v) && col[u] == c) ok = false;
    if (!ok) continue;
    col[v] = c;
    if (colourable(g, k, col, v + 1)) return true;
  }
  return false;
}

inline int chi(const Graph& g) {
  std::vector<int> col(g.order(), -1);
  for (int k = 0;; ++k)
    if (colourable(g, k, col, 0)) return k;
}

// G[S] is a hole: at least 4 vertices, all of degree 2 inside S, connected.
inline bool induces_cycle(const Graph& g, std::uint32_t mask) {
  auto vs = members(mask, g.order());
  if (vs.size() < 4) return false;
  for (Vertex v : vs) {
    int d = 0;
    for (Vertex u : vs)
      if (g.adjacent(u, v)) ++d;
    if (d != 2) return false;
  }
  std::uint32_t seen = 1u << vs[0], frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (Vertex v : members(frontier, g.order()))
      for (Vertex u : vs)
        if (g.adjacent(u, v) && !(seen >> u & 1u)) next |= 1u << u;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

// 0 when there is no hole.
inline int longest_hole(const Graph& g) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) {
    int size = __builtin_popcount(mask);
    if (size > best && induces_cycle(g, mask)) best = size;
  }
  return best;
}

inline Graph from_mask(int n, std::uint64_t bits) {
  std::vector<chib::Edge> edges;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (bits >> k & 1u) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<chib::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

inline Graph cycle(int n) {
  std::vector<chib::Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

inline Graph complete(int n) {
  std::vector<chib::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

inline Graph path(int n) {
  std::vector<chib::Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

// Outer cycle 0..4, spokes i - i+5, inner pentagram.
inline Graph petersen() {
  std::vector<chib::Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges);
}

inline Graph star(int leaves) {
  std::vector<chib::Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

}  // namespace oracle
