#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "chib/vertex_set.hpp"

namespace chib {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Throws InputError on loops, duplicate edges (in either orientation) and bad ids.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }
  bool valid(Vertex v) const noexcept { return v >= 0 && v < n_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return neighbors(v).size(); }

  VertexSet empty_set() const { return VertexSet(n_); }
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet make_set(std::initializer_list<Vertex> members) const { return VertexSet::of(n_, members); }
  VertexSet make_set(std::span<const Vertex> members) const { return VertexSet::of(n_, members); }

  // Sorted (u < v) lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> rows_;
};

// G[X] plus the map back to parent ids (to_parent[i] is the parent id of local vertex i).
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  Vertex lift(Vertex local) const { return to_parent.at(static_cast<std::size_t>(local)); }
  VertexSet lift(const VertexSet& local, int parent_order) const;
  std::vector<Vertex> lift(std::span<const Vertex> local) const;
};

// Throws InputError when X belongs to a different universe.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

// The three relations below require X and Y disjoint (InputError otherwise).
bool is_complete_between(const Graph& g, const VertexSet& x, const VertexSet& y);
bool is_anticomplete_between(const Graph& g, const VertexSet& x, const VertexSet& y);
// Every member of Y has a neighbour in X.
bool covers(const Graph& g, const VertexSet& x, const VertexSet& y);

bool is_clique(const Graph& g, const VertexSet& x);
bool is_stable(const Graph& g, const VertexSet& x);

// Vertices outside X complete to X. X must be a clique.
VertexSet n1(const Graph& g, const VertexSet& x);
// Vertices outside X with a neighbour in N1(X) and none in X. X must be a clique.
VertexSet n2(const Graph& g, const VertexSet& x);
// Same, computed inside the induced subgraph on `within` (X must lie inside it).
VertexSet n1(const Graph& g, const VertexSet& x, const VertexSet& within);
VertexSet n2(const Graph& g, const VertexSet& x, const VertexSet& within);

// Union of neighbourhoods of X's members.
VertexSet neighborhood_of(const Graph& g, const VertexSet& x);

// BFS layers from z0 inside its component (optionally restricted to `within`).
std::vector<VertexSet> distance_layers(const Graph& g, Vertex z0);
std::vector<VertexSet> distance_layers(const Graph& g, Vertex z0, const VertexSet& within);

// Components of G[within], ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);

// Shortest path from s to t inside G[within], lowest-id parents; empty if disconnected.
// s and t must belong to `within`. Shortest paths are induced.
std::vector<Vertex> shortest_path(const Graph& g, const VertexSet& within, Vertex s, Vertex t);

void check_vertex(const Graph& g, Vertex v);
void check_set(const Graph& g, const VertexSet& x);

}  // namespace chib
