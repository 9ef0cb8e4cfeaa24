#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chib/graph.hpp"

namespace chib {

// (x, N) covering C.
struct Cover {
  Vertex x = -1;
  VertexSet N;
  VertexSet C;
};

// Family (N_x : x in X) covering C. N[i] belongs to X[i]; X is kept sorted.
struct Multicover {
  std::vector<Vertex> X;
  std::vector<VertexSet> N;
  VertexSet C;

  int size() const { return static_cast<int>(X.size()); }
  VertexSet x_set(int universe) const;
  VertexSet n_union(int universe) const;
  // Index of x in X, or -1.
  int index_of(Vertex x) const;
  Cover cover(int i) const { return {X[static_cast<std::size_t>(i)], N[static_cast<std::size_t>(i)], C}; }
};

// Apex a and knees a_x over the stable set X; knees[i] belongs to X[i].
struct Tick {
  std::vector<Vertex> X;
  Vertex apex = -1;
  std::vector<Vertex> knees;
};

// Map of a pattern graph H: branch vertices vertex_map[v], and paths[e] for the
// e-th edge of pattern.edges() running from the image of its first end to its second.
struct Impression {
  Graph pattern;
  std::vector<Vertex> vertex_map;
  std::vector<std::vector<Vertex>> paths;
  int order = 0;
};

// h-cable of length t = X.size(), 0-based: X[i], N[i], Y[i] (= Y_{i,t}), Z[i][j] for i < j.
struct Cable {
  int h = 1;
  std::vector<std::vector<Vertex>> X;
  std::vector<VertexSet> N;
  std::vector<VertexSet> Y;
  std::vector<std::vector<VertexSet>> Z;
  VertexSet C;

  int length() const { return static_cast<int>(X.size()); }
  // Base-only cable.
  static Cable base_only(int h, VertexSet C);
  const VertexSet& z(int i, int j) const { return Z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
};

struct Violation {
  std::string clause;
  std::string message;
  std::vector<Vertex> witness;
};

struct Verdict {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& clause) const;
  std::vector<std::string> clauses() const;
  std::string describe() const;
  // Records at most one violation per clause.
  void add(std::string clause, std::string message, std::vector<Vertex> witness = {});
  void merge(const Verdict& other, const std::string& prefix = "");
};

Verdict verify_cover(const Graph& g, const Cover& cover);
Verdict verify_multicover(const Graph& g, const Multicover& mc, bool require_stable_N = false);
Verdict verify_containment(const Multicover& outer, const Multicover& inner);
Verdict verify_tick(const Graph& g, const Tick& tick);
Verdict verify_tick_tangent(const Graph& g, const Tick& tick, const Multicover& mc);
Verdict verify_impression(const Graph& g, const Impression& imp);
Verdict verify_cable(const Graph& g, const Cable& cable);

struct AxiomStatus {
  std::string axiom;
  bool ok = true;
  std::string message;
};

// Status of each field clause group and of (C1)..(C5), in a fixed order.
std::vector<AxiomStatus> cable_axiom_report(const Verdict& verdict);

enum class PairType { type1, type2, neither };
const char* to_string(PairType t);

// Which (C5) alternative holds for 0 <= i < j < t. When both hold (possible only with
// empty Y_{i,t}, Z_{i,j} and N_j) the answer is type1. Throws InputError on an unverified cable.
PairType cable_pair_type(const Graph& g, const Cable& cable, int i, int j);
// Same, skipping verification.
PairType pair_type_unchecked(const Graph& g, const Cable& cable, int i, int j);

// Subcable on increasing 0-based indices I; throws InputError on an unverified cable or bad I.
Cable subcable(const Graph& g, const Cable& cable, const std::vector<int>& indices);

}  // namespace chib
