#include <deque>

#include "chib/errors.hpp"
#include "chib/solvers.hpp"

namespace chib {

namespace {

// Induced-path extension from a canonical start: s is the cycle's lowest vertex and
// a < w where a, w are the two cycle neighbours of s.
class HoleSearch {
 public:
  HoleSearch(const Graph& g, Budget& budget, int target, bool longest)
      : g_(g), budget_(budget), target_(target), longest_(longest) {}

  void run() {
    const int n = g_.order();
    for (Vertex s = 0; s < n && !stop_; ++s) {
      VertexSet higher(n);
      for (Vertex v = s + 1; v < n; ++v) higher.insert(v);
      VertexSet up = g_.neighbors(s) & higher;
      if (up.size() < 2) continue;
      for (Vertex a : up) {
        terminals_ = up;
        for (Vertex v = terminals_.first(); v != -1 && v <= a; v = terminals_.first()) terminals_.erase(v);
        if (terminals_.empty()) break;
        // Neighbours of s other than a and the closing candidates never appear.
        allowed_ = higher - (up - terminals_);
        path_ = {s, a};
        VertexSet inner(n);
        inner.insert(s);
        inner.insert(a);
        extend(inner);
        if (stop_) return;
      }
    }
  }

  const std::optional<Hole>& best() const { return best_; }

 private:
  // Upper bound on the length of any hole completing the current path, or 0 if none can.
  int length_bound(const VertexSet& inner) const {
    Vertex last = path_.back();
    VertexSet free = allowed_ - inner - terminals_;
    VertexSet ends = terminals_ - inner;
    VertexSet seen(g_.order());
    std::deque<Vertex> queue{last};
    bool closes = false;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (g_.neighbors(u).intersects(ends)) closes = true;
      for (Vertex w : g_.neighbors(u) & free) {
        if (!seen.contains(w)) {
          seen.insert(w);
          queue.push_back(w);
        }
      }
    }
    if (!closes) return 0;
    return static_cast<int>(path_.size()) + seen.size() + 1;
  }

  void record(Vertex w) {
    int len = static_cast<int>(path_.size()) + 1;
    if (longest_ ? len > length_ : len >= target_) {
      Hole h{path_};
      h.cycle.push_back(w);
      best_ = canonical_hole(std::move(h));
      length_ = len;
      if (!longest_) stop_ = true;
    }
  }

  void extend(const VertexSet& inner) {
    if (!budget_.tick()) {
      stop_ = true;
      return;
    }
    int bound = length_bound(inner);
    if (bound == 0 || (longest_ ? bound <= length_ : bound < target_)) return;
    Vertex last = path_.back();
    VertexSet step = (g_.neighbors(last) & allowed_) - inner;
    bool internal_ok = path_.size() >= 3;
    for (Vertex w : step & terminals_) {
      if (internal_ok) record(w);
      if (stop_) return;
    }
    VertexSet grown = inner | g_.neighbors(last);
    for (Vertex w : step - terminals_) {
      path_.push_back(w);
      extend(grown);
      path_.pop_back();
      if (stop_) return;
    }
  }

  const Graph& g_;
  Budget& budget_;
  int target_;
  bool longest_;
  bool stop_ = false;
  VertexSet terminals_;
  VertexSet allowed_;
  std::vector<Vertex> path_;
  std::optional<Hole> best_;
  int length_ = 0;
};

}  // namespace

HoleResult find_hole_at_least(const Graph& g, int ell, const SolverLimits& limits) {
  if (ell < 4) throw InputError("find_hole_at_least: ell must be at least 4");
  Budget budget(limits);
  HoleSearch search(g, budget, ell, false);
  search.run();
  HoleResult r;
  r.hole = search.best();
  if (!r.hole && budget.exhausted()) r.status = SolveStatus::budget_exhausted;
  return r;
}

HoleResult longest_hole(const Graph& g, const SolverLimits& limits) {
  Budget budget(limits);
  HoleSearch search(g, budget, 4, true);
  search.run();
  HoleResult r;
  r.hole = search.best();
  if (budget.exhausted()) r.status = SolveStatus::budget_exhausted;
  return r;
}

bool is_chordal(const Graph& g) {
  const int n = g.order();
  // Maximum cardinality search; the reverse visit order is a perfect elimination order iff chordal.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  VertexSet unvisited = g.vertices();
  std::vector<Vertex> visit;
  while (!unvisited.empty()) {
    Vertex pick = -1;
    for (Vertex v : unvisited) {
      if (pick == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]) pick = v;
    }
    unvisited.erase(pick);
    visit.push_back(pick);
    for (Vertex w : g.neighbors(pick) & unvisited) ++weight[static_cast<std::size_t>(w)];
  }
  // For v in elimination order, its neighbours later in that order are those visited earlier.
  VertexSet earlier(n);
  for (Vertex v : visit) {
    if (!is_clique(g, g.neighbors(v) & earlier)) return false;
    earlier.insert(v);
  }
  return true;
}

}  // namespace chib
