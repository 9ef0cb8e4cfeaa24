#include <algorithm>

#include "chib/errors.hpp"
#include "chib/solvers.hpp"

namespace chib {

namespace {

// DSATUR state on a graph with dense local ids.
class Dsatur {
 public:
  Dsatur(const Graph& g, Budget* budget)
      : g_(g),
        n_(g.order()),
        color_(static_cast<std::size_t>(n_), -1),
        count_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ + 1), 0),
        sat_(static_cast<std::size_t>(n_), 0),
        uncolored_(VertexSet::full(n_)),
        budget_(budget) {}

  void assign(Vertex v, int c) {
    color_[idx(v)] = c;
    uncolored_.erase(v);
    for (Vertex w : g_.neighbors(v)) {
      if (count_[cell(w, c)]++ == 0) ++sat_[idx(w)];
    }
  }

  void unassign(Vertex v) {
    int c = color_[idx(v)];
    color_[idx(v)] = -1;
    uncolored_.insert(v);
    for (Vertex w : g_.neighbors(v)) {
      if (--count_[cell(w, c)] == 0) --sat_[idx(w)];
    }
  }

  // Max saturation, then most uncoloured neighbours, then lowest id.
  Vertex select() const {
    Vertex best = -1;
    int best_sat = -1, best_deg = -1;
    for (Vertex v : uncolored_) {
      int s = sat_[idx(v)];
      if (s < best_sat) continue;
      int d = (g_.neighbors(v) & uncolored_).size();
      if (s > best_sat || d > best_deg) {
        best = v;
        best_sat = s;
        best_deg = d;
      }
    }
    return best;
  }

  bool free_for(Vertex v, int c) const { return count_[cell(v, c)] == 0; }

  // Greedy DSATUR: each vertex takes its lowest free colour.
  Coloring greedy() {
    int used = 0;
    while (!uncolored_.empty()) {
      Vertex v = select();
      int c = 0;
      while (!free_for(v, c)) ++c;
      assign(v, c);
      used = std::max(used, c + 1);
    }
    Coloring out{color_, used};
    for (Vertex v = 0; v < n_; ++v) unassign(v);
    return out;
  }

  // Exact search. `seed` vertices are precoloured 0..|seed|-1 (a clique).
  void solve(const std::vector<Vertex>& seed, int lower, Coloring& best) {
    lower_ = lower;
    best_ = &best;
    for (std::size_t i = 0; i < seed.size(); ++i) assign(seed[i], static_cast<int>(i));
    search(static_cast<int>(seed.size()));
    for (Vertex v : seed) unassign(v);
  }

  bool done() const { return best_->num_colors <= lower_ || (budget_ && budget_->exhausted()); }

 private:
  std::size_t idx(Vertex v) const { return static_cast<std::size_t>(v); }
  std::size_t cell(Vertex v, int c) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(c);
  }

  void search(int used) {
    if (budget_ && !budget_->tick()) return;
    if (uncolored_.empty()) {
      best_->color = color_;
      best_->num_colors = used;
      return;
    }
    Vertex v = select();
    // A colour count reaching the incumbent cannot improve it.
    int limit = std::min(used + 1, best_->num_colors - 1);
    for (int c = 0; c < limit; ++c) {
      if (!free_for(v, c)) continue;
      assign(v, c);
      search(std::max(used, c + 1));
      unassign(v);
      if (done()) return;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<int> sat_;
  VertexSet uncolored_;
  Budget* budget_;
  int lower_ = 0;
  Coloring* best_ = nullptr;
};

}  // namespace

ChiResult chromatic_number(const Graph& g, const SolverLimits& limits) {
  ChiResult r;
  if (g.order() == 0) return r;
  CliqueResult cl = omega(g, limits);
  Dsatur ds(g, nullptr);
  r.coloring = ds.greedy();
  r.lower = cl.size();
  r.upper = r.coloring.num_colors;
  // Any clique found, even by an interrupted search, is a valid lower bound.
  if (r.lower == r.upper) return r;
  Budget budget(limits);
  Dsatur exact(g, &budget);
  exact.solve(cl.witness.to_vector(), r.lower, r.coloring);
  r.upper = r.coloring.num_colors;
  if (budget.exhausted() && r.upper > r.lower) {
    r.status = SolveStatus::budget_exhausted;
  } else {
    r.lower = r.upper;
  }
  return r;
}

ChiResult chi_of_subset(const Graph& g, const VertexSet& x, const SolverLimits& limits) {
  check_set(g, x);
  InducedSubgraph sub = induced_subgraph(g, x);
  ChiResult local = chromatic_number(sub.graph, limits);
  ChiResult r = local;
  r.coloring.color.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    r.coloring.color[static_cast<std::size_t>(sub.to_parent[i])] = local.coloring.color[i];
  }
  return r;
}

DegeneracyResult degeneracy_order_and_coloring(const Graph& g) {
  const int n = g.order();
  DegeneracyResult r;
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  VertexSet alive = g.vertices();
  std::vector<Vertex> removal;
  while (!alive.empty()) {
    Vertex pick = -1;
    for (Vertex v : alive) {
      if (pick == -1 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]) pick = v;
    }
    r.degeneracy = std::max(r.degeneracy, deg[static_cast<std::size_t>(pick)]);
    alive.erase(pick);
    for (Vertex w : g.neighbors(pick) & alive) --deg[static_cast<std::size_t>(w)];
    removal.push_back(pick);
  }
  r.order.assign(removal.rbegin(), removal.rend());
  r.coloring.color.assign(static_cast<std::size_t>(n), -1);
  std::vector<char> taken;
  for (Vertex v : r.order) {
    taken.assign(static_cast<std::size_t>(r.coloring.num_colors + 1), 0);
    for (Vertex w : g.neighbors(v)) {
      int c = r.coloring.color[static_cast<std::size_t>(w)];
      if (c >= 0) taken[static_cast<std::size_t>(c)] = 1;
    }
    int c = 0;
    while (taken[static_cast<std::size_t>(c)]) ++c;
    r.coloring.color[static_cast<std::size_t>(v)] = c;
    r.coloring.num_colors = std::max(r.coloring.num_colors, c + 1);
  }
  return r;
}

}  // namespace chib
