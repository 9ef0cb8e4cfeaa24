#include <functional>

#include "chib/errors.hpp"
#include "chib/solvers.hpp"

namespace chib {

namespace {

// Branch and bound with a greedy colouring bound over candidate bitsets.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, Budget& budget) : g_(g), budget_(budget), best_(g.order()), current_(g.order()) {}

  void run(const VertexSet& candidates) {
    best_size_ = 0;
    if (!candidates.empty()) {
      best_ = VertexSet(g_.order());
      best_.insert(candidates.first());
      best_size_ = 1;
    }
    expand(candidates, 0);
  }

  const VertexSet& best() const { return best_; }

 private:
  // Colour classes built greedily in id order; bound[i] is the class index of order[i].
  void colour_sort(VertexSet p, std::vector<Vertex>& order, std::vector<int>& bound) const {
    int k = 0;
    while (!p.empty()) {
      ++k;
      VertexSet q = p;
      while (!q.empty()) {
        Vertex v = q.first();
        q.erase(v);
        q -= g_.neighbors(v);
        p.erase(v);
        order.push_back(v);
        bound.push_back(k);
      }
    }
  }

  void expand(VertexSet p, int size) {
    if (!budget_.tick()) return;
    std::vector<Vertex> order;
    std::vector<int> bound;
    colour_sort(p, order, bound);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (size + bound[idx] <= best_size_) return;
      Vertex v = order[idx];
      current_.insert(v);
      VertexSet next = p & g_.neighbors(v);
      if (next.empty()) {
        if (size + 1 > best_size_) {
          best_size_ = size + 1;
          best_ = current_;
        }
      } else {
        expand(std::move(next), size + 1);
      }
      current_.erase(v);
      p.erase(v);
      if (budget_.exhausted()) return;
    }
  }

  const Graph& g_;
  Budget& budget_;
  VertexSet best_;
  VertexSet current_;
  int best_size_ = 0;
};

}  // namespace

CliqueResult max_clique(const Graph& g, const VertexSet& within, const SolverLimits& limits) {
  check_set(g, within);
  Budget budget(limits);
  CliqueSearch search(g, budget);
  search.run(within);
  CliqueResult r;
  r.witness = search.best();
  if (budget.exhausted()) {
    r.status = SolveStatus::budget_exhausted;
    r.upper_bound = within.size();
  } else {
    r.upper_bound = r.witness.size();
  }
  return r;
}

CliqueResult omega(const Graph& g, const SolverLimits& limits) { return max_clique(g, g.vertices(), limits); }

void for_each_clique(const Graph& g, const VertexSet& within, int h,
                     const std::function<bool(const VertexSet&)>& visit) {
  check_set(g, within);
  if (h < 0) throw InputError("clique size must be nonnegative");
  VertexSet current(g.order());
  bool go = true;
  std::function<void(const VertexSet&, int)> rec = [&](const VertexSet& cand, int need) {
    if (need == 0) {
      go = visit(current);
      return;
    }
    if (cand.size() < need) return;
    for (Vertex v : cand) {
      VertexSet next = cand & g.neighbors(v);
      // keep lexicographic order: later members exceed v
      for (Vertex w = next.first(); w != -1 && w < v; w = next.first()) next.erase(w);
      current.insert(v);
      rec(next, need - 1);
      current.erase(v);
      if (!go) return;
    }
  };
  rec(within, h);
}

}  // namespace chib
