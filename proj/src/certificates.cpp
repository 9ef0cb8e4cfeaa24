#include "chib/certificates.hpp"

#include <algorithm>

namespace chib {

std::optional<std::string> check_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.order()) {
    return "coloring covers " + std::to_string(c.color.size()) + " vertices, graph has " + std::to_string(g.order());
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    int col = c.color[static_cast<std::size_t>(v)];
    if (col < 0 || col >= c.num_colors) {
      return "vertex " + std::to_string(v) + " has color " + std::to_string(col) + " outside [0," +
             std::to_string(c.num_colors) + ")";
    }
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v) && c.color[static_cast<std::size_t>(u)] == c.color[static_cast<std::size_t>(v)]) {
        return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is monochromatic";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_hole(const Graph& g, const Hole& h) {
  const auto len = h.cycle.size();
  if (len < 4) return "cycle of length " + std::to_string(len) + " is too short for a hole";
  for (std::size_t i = 0; i < len; ++i) {
    if (!g.valid(h.cycle[i])) return "vertex " + std::to_string(h.cycle[i]) + " is not in the graph";
    for (std::size_t j = 0; j < i; ++j)
      if (h.cycle[i] == h.cycle[j]) return "vertex " + std::to_string(h.cycle[i]) + " repeats";
  }
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      bool adj = g.adjacent(h.cycle[i], h.cycle[j]);
      if (consecutive && !adj) {
        return "consecutive vertices " + std::to_string(h.cycle[i]) + "," + std::to_string(h.cycle[j]) +
               " are not adjacent";
      }
      if (!consecutive && adj) {
        return "chord " + std::to_string(h.cycle[i]) + "-" + std::to_string(h.cycle[j]);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_clique(const Graph& g, const std::vector<Vertex>& clique) {
  for (std::size_t i = 0; i < clique.size(); ++i) {
    if (!g.valid(clique[i])) return "vertex " + std::to_string(clique[i]) + " is not in the graph";
    for (std::size_t j = 0; j < i; ++j) {
      if (clique[i] == clique[j]) return "vertex " + std::to_string(clique[i]) + " repeats";
      if (!g.adjacent(clique[i], clique[j])) {
        return "vertices " + std::to_string(clique[j]) + "," + std::to_string(clique[i]) + " are not adjacent";
      }
    }
  }
  return std::nullopt;
}

Hole canonical_hole(Hole h) {
  auto& c = h.cycle;
  if (c.size() < 3) return h;
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return h;
}

}  // namespace chib
