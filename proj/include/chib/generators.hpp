#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "chib/graph.hpp"
#include "chib/structures.hpp"

namespace chib::gen {

// Platform-independent draws on top of mt19937_64 (the std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  int between(int lo, int hi);
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1p-53; }
  bool chance(double p) { return unit() < p; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

// Erdos-Renyi G(n, p). Throws InputError unless 0 <= p <= 1.
Graph gen_gnp(int n, double p, std::uint64_t seed);
// Random chordal graph: each new vertex attaches to a random clique of at most `width`
// earlier vertices, then ids are shuffled. Throws InputError unless 1 <= width <= n.
Graph gen_chordal(int n, int width, std::uint64_t seed);
// Relabels g by a uniform permutation.
Graph shuffled(const Graph& g, std::uint64_t seed);

Graph cycle(int n);
Graph complete(int n);
Graph path(int n);
Graph star(int leaves);
Graph petersen();
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
// Names: C<n>, K<n>, P<n>, S<n> (star with n leaves), E<n> (edgeless), coC<n>, petersen.
Graph named(const std::string& name);

// Pair types indexed [i][j] for 0 <= i < j < t; other entries are ignored.
using TypeMatrix = std::vector<std::vector<PairType>>;
TypeMatrix uniform_types(int t, PairType type);

struct PlantedCable {
  Graph graph;
  Cable cable;
};

struct PlantedCableOptions {
  int y_size = 2;       // |Y_{i,t}|
  int z_size = 1;       // |Z_{i,j}| for type-2 pairs
  int extra_n = 0;      // further vertices of each N_i outside Y and Z
  double c_edge_p = 0.3;  // extra Y-to-base edges beyond the covering ones
};

// h-cable of length t realizing `types`, with base a disjoint union of cliques of chromatic
// number base_chi. Throws InputError on malformed or infeasible type matrices.
PlantedCable gen_planted_cable(int h, int t, const TypeMatrix& types, int base_chi, std::uint64_t seed,
                               const PlantedCableOptions& opt = {});

struct PlantedMulticover {
  Graph graph;
  Multicover mc;
  std::optional<Tick> tick;
};

struct PlantedMulticoverOptions {
  int n_size = 3;       // |N_x|
  int c_size = 4;       // |C|
  bool stable_n = false;
  double noise_p = 0.3;  // edges inside C, inside N-sets and between N-sets
  bool with_tick = false;  // add a tangent tick on X
};

// Multicover of C over a stable X of size s (plus an optional tangent tick), ids shuffled.
PlantedMulticover gen_planted_multicover(int s, std::uint64_t seed, const PlantedMulticoverOptions& opt = {});

struct PlantedImpression {
  Graph graph;
  Impression imp;
};

// Impression of K_{n,n} with paths of 2 to max_len edges, random chords between paths of
// incident edges with probability chord_p, and `decoys` pendant vertices on path interiors.
PlantedImpression gen_planted_impression(int n, int max_len, double chord_p, int decoys, std::uint64_t seed);

}  // namespace chib::gen
