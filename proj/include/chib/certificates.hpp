#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chib/graph.hpp"

namespace chib {

// color[v] in [0, num_colors) for every vertex of the graph it certifies.
struct Coloring {
  std::vector<int> color;
  int num_colors = 0;

  bool operator==(const Coloring&) const = default;
};

// Cyclic vertex sequence of an induced cycle, length >= 4.
struct Hole {
  std::vector<Vertex> cycle;

  int length() const noexcept { return static_cast<int>(cycle.size()); }
  bool operator==(const Hole&) const = default;
};

// Independent certificate checks. They only read adjacency and never call solver code.
// Each returns std::nullopt when the certificate is valid, otherwise a reason.
std::optional<std::string> check_coloring(const Graph& g, const Coloring& c);
std::optional<std::string> check_hole(const Graph& g, const Hole& h);
std::optional<std::string> check_clique(const Graph& g, const std::vector<Vertex>& clique);

inline bool is_proper_coloring(const Graph& g, const Coloring& c) { return !check_coloring(g, c); }
inline bool is_induced_hole(const Graph& g, const Hole& h) { return !check_hole(g, h); }

// Canonical rotation: smallest vertex first, then its smaller cycle neighbour.
Hole canonical_hole(Hole h);

}  // namespace chib
