#include "chib/errors.hpp"
#include "chib/solvers.hpp"

namespace chib {

ChiOracle::ChiOracle(const Graph& g, SolverLimits limits, std::size_t max_entries)
    : g_(&g), limits_(limits), max_entries_(max_entries) {}

ChiResult ChiOracle::solve(const VertexSet& x) {
  check_set(*g_, x);
  if (auto it = index_.find(x); it != index_.end()) {
    ++hits_;
    lru_.splice(lru_.begin(), lru_, it->second);
    return it->second->second;
  }
  ++misses_;
  ChiResult r = chi_of_subset(*g_, x, limits_);
  if (r.complete() && max_entries_ > 0) {
    lru_.emplace_front(x, r);
    index_.emplace(x, lru_.begin());
    if (index_.size() > max_entries_) {
      index_.erase(lru_.back().first);
      lru_.pop_back();
    }
  }
  return r;
}

int ChiOracle::chi(const VertexSet& x) {
  ChiResult r = solve(x);
  if (!r.complete()) {
    throw BudgetExhausted("chi of a " + std::to_string(x.size()) + "-vertex subset: bounds [" +
                          std::to_string(r.lower) + "," + std::to_string(r.upper) + "]");
  }
  return r.upper;
}

bool ChiOracle::exceeds(const VertexSet& x, long long threshold) {
  if (x.size() <= threshold) return false;
  if (threshold < 0) return true;
  return chi(x) > threshold;
}

CliqueSearchResult find_clique_with_large_n2(ChiOracle& oracle, const VertexSet& within, int h, long long n) {
  if (h < 1) throw InputError("find_clique_with_large_n2: h must be at least 1");
  if (n < 0) throw InputError("find_clique_with_large_n2: n must be nonnegative");
  const Graph& g = oracle.graph();
  CliqueSearchResult r;
  bool incomplete = false;
  for_each_clique(g, within, h, [&](const VertexSet& x) {
    VertexSet second = n2(g, x, within);
    if (second.size() <= n) return true;
    ChiResult chi = oracle.solve(second);
    if (chi.lower > n) {
      r.clique = x;
      r.n2_chi = chi.complete() ? chi.upper : chi.lower;
      return false;
    }
    if (!chi.complete() && chi.upper > n) incomplete = true;
    return true;
  });
  if (!r.clique && incomplete) r.status = SolveStatus::budget_exhausted;
  return r;
}

CliqueSearchResult find_clique_with_large_n2(const Graph& g, int h, int n, const SolverLimits& limits) {
  ChiOracle oracle(g, limits);
  return find_clique_with_large_n2(oracle, g.vertices(), h, n);
}

}  // namespace chib
