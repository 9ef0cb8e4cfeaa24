#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <list>
#include <optional>
#include <unordered_map>
#include <vector>

#include "chib/certificates.hpp"
#include "chib/graph.hpp"

namespace chib {

// Both budgets are optional; an unset budget is unlimited.
struct SolverLimits {
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget;  // wall-clock seconds
};

enum class SolveStatus { complete, budget_exhausted };

const char* to_string(SolveStatus s);

// Search-node counter for a single solver call.
class Budget {
 public:
  explicit Budget(const SolverLimits& limits);

  // Counts one node. Returns false once either budget is spent (and forever after).
  bool tick();
  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  SolverLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

struct CliqueResult {
  SolveStatus status = SolveStatus::complete;
  VertexSet witness;  // largest clique found
  int upper_bound = 0;

  int size() const { return witness.size(); }
  bool complete() const { return status == SolveStatus::complete; }
};

CliqueResult omega(const Graph& g, const SolverLimits& limits = {});
CliqueResult max_clique(const Graph& g, const VertexSet& within, const SolverLimits& limits = {});

// On exhaustion `lower`/`upper` bracket chi and `coloring` achieves `upper`.
struct ChiResult {
  SolveStatus status = SolveStatus::complete;
  int lower = 0;
  int upper = 0;
  Coloring coloring;

  bool complete() const { return status == SolveStatus::complete; }
  int chi() const { return upper; }
};

ChiResult chromatic_number(const Graph& g, const SolverLimits& limits = {});
// chi(G[X]); the coloring is in parent ids for members of X and -1 elsewhere.
ChiResult chi_of_subset(const Graph& g, const VertexSet& x, const SolverLimits& limits = {});

// Memoized chi of induced subgraphs of one graph, LRU-capped.
class ChiOracle {
 public:
  explicit ChiOracle(const Graph& g, SolverLimits limits = {}, std::size_t max_entries = 1u << 15);

  const Graph& graph() const noexcept { return *g_; }
  const SolverLimits& limits() const noexcept { return limits_; }

  ChiResult solve(const VertexSet& x);
  // Throws BudgetExhausted when the search does not finish.
  int chi(const VertexSet& x);
  // chi(X) > threshold, with the |X| <= threshold shortcut.
  bool exceeds(const VertexSet& x, long long threshold);

  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }
  std::size_t cached() const noexcept { return index_.size(); }

 private:
  using Entry = std::pair<VertexSet, ChiResult>;

  const Graph* g_;
  SolverLimits limits_;
  std::size_t max_entries_;
  std::list<Entry> lru_;
  std::unordered_map<VertexSet, std::list<Entry>::iterator, VertexSetHash> index_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

struct HoleResult {
  SolveStatus status = SolveStatus::complete;
  std::optional<Hole> hole;

  bool complete() const { return status == SolveStatus::complete; }
  int length() const { return hole ? hole->length() : 0; }
};

// Some hole of length >= ell (ell >= 4), or none if no such hole exists.
HoleResult find_hole_at_least(const Graph& g, int ell, const SolverLimits& limits = {});
// A hole of maximum length; no hole when G is chordal.
HoleResult longest_hole(const Graph& g, const SolverLimits& limits = {});

struct DegeneracyResult {
  std::vector<Vertex> order;  // coloring order: smallest-last
  Coloring coloring;
  int degeneracy = 0;
};

DegeneracyResult degeneracy_order_and_coloring(const Graph& g);

bool is_chordal(const Graph& g);

// Visits h-cliques of G[within] in lexicographic order of sorted members; stop by returning false.
void for_each_clique(const Graph& g, const VertexSet& within, int h,
                     const std::function<bool(const VertexSet&)>& visit);

struct CliqueSearchResult {
  SolveStatus status = SolveStatus::complete;
  std::optional<VertexSet> clique;
  int n2_chi = 0;  // chi(N2(clique)) for the returned clique
};

// First h-clique X (lexicographic) of G[within] with chi(N2_{G[within]}(X)) > n.
CliqueSearchResult find_clique_with_large_n2(const Graph& g, int h, int n, const SolverLimits& limits = {});
CliqueSearchResult find_clique_with_large_n2(ChiOracle& oracle, const VertexSet& within, int h, long long n);

}  // namespace chib
