#include "chib/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "chib/errors.hpp"

namespace chib {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (!g.valid(u) || !g.valid(v)) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an id outside 0.." +
                       std::to_string(n - 1));
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (g.adjacent(u, v)) {
      throw InputError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    g.rows_[static_cast<std::size_t>(u)].insert(v);
    g.rows_[static_cast<std::size_t>(v)].insert(u);
    ++g.m_;
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = neighbors(u).next(u); v != -1; v = neighbors(u).next(v)) out.emplace_back(u, v);
  }
  return out;
}

void check_vertex(const Graph& g, Vertex v) {
  if (!g.valid(v)) {
    throw InputError("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(g.order()));
  }
}

void check_set(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.order()) {
    throw InputError("vertex set universe " + std::to_string(x.universe()) + " does not match graph order " +
                     std::to_string(g.order()));
  }
}

VertexSet InducedSubgraph::lift(const VertexSet& local, int parent_order) const {
  VertexSet out(parent_order);
  for (Vertex v : local) out.insert(lift(v));
  return out;
}

std::vector<Vertex> InducedSubgraph::lift(std::span<const Vertex> local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(lift(v));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
  check_set(g, x);
  InducedSubgraph sub;
  sub.to_parent = x.to_vector();
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) local[static_cast<std::size_t>(sub.to_parent[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    Vertex u = sub.to_parent[i];
    for (Vertex w : g.neighbors(u) & x) {
      if (w > u) edges.emplace_back(static_cast<Vertex>(i), local[static_cast<std::size_t>(w)]);
    }
  }
  sub.graph = Graph::from_edges(static_cast<int>(sub.to_parent.size()), edges);
  return sub;
}

namespace {
void require_disjoint(const Graph& g, const VertexSet& x, const VertexSet& y) {
  check_set(g, x);
  check_set(g, y);
  if (x.intersects(y)) throw InputError("sets are not disjoint (common vertex " + std::to_string((x & y).first()) + ")");
}

void require_clique(const Graph& g, const VertexSet& x) {
  check_set(g, x);
  if (!is_clique(g, x)) throw InputError("set is not a clique");
}
}  // namespace

bool is_complete_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  require_disjoint(g, x, y);
  for (Vertex v : x)
    if (!y.is_subset_of(g.neighbors(v))) return false;
  return true;
}

bool is_anticomplete_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  require_disjoint(g, x, y);
  for (Vertex v : x)
    if (g.neighbors(v).intersects(y)) return false;
  return true;
}

bool covers(const Graph& g, const VertexSet& x, const VertexSet& y) {
  require_disjoint(g, x, y);
  for (Vertex v : y)
    if (!g.neighbors(v).intersects(x)) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& x) {
  check_set(g, x);
  for (Vertex v : x)
    if (!(x.without(v)).is_subset_of(g.neighbors(v))) return false;
  return true;
}

bool is_stable(const Graph& g, const VertexSet& x) {
  check_set(g, x);
  for (Vertex v : x)
    if (g.neighbors(v).intersects(x)) return false;
  return true;
}

VertexSet n1(const Graph& g, const VertexSet& x) { return n1(g, x, g.vertices()); }
VertexSet n2(const Graph& g, const VertexSet& x) { return n2(g, x, g.vertices()); }

VertexSet n1(const Graph& g, const VertexSet& x, const VertexSet& within) {
  require_clique(g, x);
  check_set(g, within);
  if (!x.is_subset_of(within)) throw InputError("clique is not inside the host set");
  VertexSet out = within - x;
  for (Vertex v : x) out &= g.neighbors(v);
  return out;
}

VertexSet n2(const Graph& g, const VertexSet& x, const VertexSet& within) {
  VertexSet first = n1(g, x, within);
  VertexSet out = neighborhood_of(g, first) & within;
  out -= x;
  out -= first;
  out -= neighborhood_of(g, x);
  return out;
}

VertexSet neighborhood_of(const Graph& g, const VertexSet& x) {
  check_set(g, x);
  VertexSet out = g.empty_set();
  for (Vertex v : x) out |= g.neighbors(v);
  return out;
}

std::vector<VertexSet> distance_layers(const Graph& g, Vertex z0) { return distance_layers(g, z0, g.vertices()); }

std::vector<VertexSet> distance_layers(const Graph& g, Vertex z0, const VertexSet& within) {
  check_vertex(g, z0);
  check_set(g, within);
  if (!within.contains(z0)) throw InputError("root is outside the host set");
  std::vector<VertexSet> layers;
  VertexSet seen = g.make_set({z0});
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    layers.push_back(frontier);
    VertexSet next = (neighborhood_of(g, frontier) & within) - seen;
    seen |= next;
    frontier = std::move(next);
  }
  return layers;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  check_set(g, within);
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    Vertex root = left.first();
    VertexSet comp = g.make_set({root});
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next = (neighborhood_of(g, frontier) & left) - comp;
      comp |= next;
      frontier = std::move(next);
    }
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Vertex> shortest_path(const Graph& g, const VertexSet& within, Vertex s, Vertex t) {
  check_vertex(g, s);
  check_vertex(g, t);
  if (!within.contains(s) || !within.contains(t)) throw InputError("path ends must lie in the host set");
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{s};
  VertexSet seen = g.make_set({s});
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (u == t) break;
    for (Vertex w : (g.neighbors(u) & within) - seen) {
      seen.insert(w);
      parent[static_cast<std::size_t>(w)] = u;
      queue.push_back(w);
    }
  }
  if (!seen.contains(t)) return {};
  std::vector<Vertex> path{t};
  while (path.back() != s) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace chib
