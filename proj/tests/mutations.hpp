#pragma once

// Single-clause mutations of valid structures. Each mutation returns the mutated graph and
// structure together with the clause the verifier is expected to name.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "chib/generators.hpp"
#include "chib/structures.hpp"

namespace mutation {

using namespace chib;

inline Graph edit(const Graph& g, const std::vector<Edge>& add, const std::vector<Edge>& remove = {}) {
  std::set<Edge> e;
  for (auto x : g.edges()) e.insert(x);
  for (auto [u, v] : remove) e.erase({std::min(u, v), std::max(u, v)});
  for (auto [u, v] : add) e.insert({std::min(u, v), std::max(u, v)});
  return Graph::from_edges(g.order(), std::vector<Edge>(e.begin(), e.end()));
}

template <class T>
struct Mutant {
  Graph graph;
  T value;
  std::string clause;
};

inline Vertex pick(const VertexSet& s, gen::Rng& rng) {
  auto v = s.to_vector();
  return v[rng.below(v.size())];
}

inline Vertex pick(const std::vector<Vertex>& v, gen::Rng& rng) { return v[rng.below(v.size())]; }

// Valid cover (x, N) of C with |N| >= 2 and |C| >= 1.
inline Mutant<Cover> cover_mutant(std::uint64_t seed) {
  gen::Rng rng(seed);
  gen::PlantedMulticoverOptions opt;
  opt.c_size = 3;
  auto pm = gen::gen_planted_multicover(1, seed, opt);
  Cover c = pm.mc.cover(0);
  const Graph& g = pm.graph;
  Vertex n = pick(c.N, rng), k = pick(c.C, rng);
  switch (rng.below(4)) {
    case 0: return {edit(g, {{c.x, k}}), c, "x_anticomplete_C"};
    case 1: return {edit(g, {}, {{c.x, n}}), c, "N_subset_neighbors"};
    case 2: {
      std::vector<Edge> cut;
      for (Vertex u : c.N) cut.emplace_back(k, u);
      return {edit(g, {}, cut), c, "N_covers_C"};
    }
    default: {
      Cover m = c;
      m.C.insert(n);
      return {g, m, "C_disjoint"};
    }
  }
}

inline Mutant<Multicover> multicover_mutant(std::uint64_t seed) {
  gen::Rng rng(seed);
  gen::PlantedMulticoverOptions opt;
  opt.stable_n = true;
  auto pm = gen::gen_planted_multicover(3, seed, opt);
  const Graph& g = pm.graph;
  Multicover mc = pm.mc;
  int i = static_cast<int>(rng.below(3)), j = (i + 1 + static_cast<int>(rng.below(2))) % 3;
  Vertex x = mc.X[static_cast<std::size_t>(i)], y = mc.X[static_cast<std::size_t>(j)];
  Vertex n = pick(mc.N[static_cast<std::size_t>(i)], rng);
  switch (rng.below(5)) {
    case 0: return {edit(g, {{x, y}}), mc, "X_stable"};
    case 1: return {edit(g, {{y, n}}), mc, "cross_anticomplete"};
    case 2: {
      mc.N[static_cast<std::size_t>(j)].insert(n);
      return {edit(g, {{y, n}}), mc, "sets_disjoint"};
    }
    case 3: return {edit(g, {{x, pick(mc.C, rng)}}), mc, "cover.x_anticomplete_C"};
    default: {
      auto nx = mc.N[static_cast<std::size_t>(i)].to_vector();
      return {edit(g, {{nx[0], nx[1]}}), mc, "N_stable"};
    }
  }
}

struct TickCase {
  Tick tick;
  Multicover mc;
};

inline Mutant<TickCase> tick_mutant(std::uint64_t seed) {
  gen::Rng rng(seed);
  gen::PlantedMulticoverOptions opt;
  opt.with_tick = true;
  auto pm = gen::gen_planted_multicover(3, seed, opt);
  const Graph& g = pm.graph;
  TickCase tc{*pm.tick, pm.mc};
  const Tick& t = tc.tick;
  auto i = static_cast<std::size_t>(rng.below(3));
  auto j = (i + 1 + rng.below(2)) % 3;
  Vertex x = t.X[i], knee = t.knees[i];
  switch (rng.below(7)) {
    case 0: return {edit(g, {{t.apex, x}}), tc, "apex_anticomplete_X"};
    case 1: return {edit(g, {}, {{knee, t.apex}}), tc, "knee_adjacent_apex"};
    case 2: return {edit(g, {}, {{knee, x}}), tc, "knee_adjacent_x"};
    case 3: return {edit(g, {{knee, t.X[j]}}), tc, "knee_anticomplete_other_X"};
    case 4: return {edit(g, {{rng.chance(0.5) ? t.apex : knee, pick(tc.mc.C, rng)}}), tc, "tangent"};
    case 5: {
      TickCase m = tc;
      m.tick.knees[j] = knee;
      return {edit(g, {{knee, t.X[j]}}), m, "distinct"};
    }
    default: return {edit(g, {{x, t.X[j]}}), tc, "X_stable"};
  }
}

inline Mutant<Impression> impression_mutant(std::uint64_t seed) {
  gen::Rng rng(seed);
  auto pi = gen::gen_planted_impression(2 + static_cast<int>(rng.below(2)), 3, 0.3, 2, seed);
  const Graph& g = pi.graph;
  Impression imp = pi.imp;
  const auto pe = imp.pattern.edges();
  std::vector<std::pair<std::size_t, std::size_t>> far;
  for (std::size_t e = 0; e < pe.size(); ++e)
    for (std::size_t f = e + 1; f < pe.size(); ++f)
      if (pe[e].first != pe[f].first && pe[e].second != pe[f].second) far.emplace_back(e, f);
  auto [e, f] = far[rng.below(far.size())];
  const auto& p = imp.paths[e];
  const auto& q = imp.paths[f];
  switch (rng.below(6)) {
    case 0: {
      Vertex a = imp.vertex_map[0], b = imp.vertex_map[1];
      return {edit(g, {{a, b}}), imp, "branch_stable"};
    }
    case 1: return {edit(g, {{p[1], q[1]}}), imp, "nonincident_anticomplete"};
    case 2: return {edit(g, {}, {{p[0], p[1]}}), imp, "path_is_path"};
    case 3: {
      Impression m = imp;
      m.order += 1;
      return {g, m, "order"};
    }
    case 4: {
      Impression m = imp;
      m.vertex_map[1] = m.vertex_map[0];
      return {g, m, "injective"};
    }
    default: {
      Impression m = imp;
      m.paths[e] = {p.front(), p.back()};
      return {edit(g, {{p.front(), p.back()}}), m, "path_length"};
    }
  }
}

inline Mutant<Cable> cable_mutant(std::uint64_t seed) {
  gen::Rng rng(seed);
  const int t = 3 + static_cast<int>(rng.below(2));
  const int h = 1 + static_cast<int>(rng.below(2));
  gen::TypeMatrix types = gen::uniform_types(t, PairType::type2);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (rng.chance(0.3)) types[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = PairType::type1;
  types[0][1] = PairType::type2;
  types[1][2] = PairType::type2;
  auto pc = gen::gen_planted_cable(h, t, types, 2, seed);
  const Graph& g = pc.graph;
  const Cable& c = pc.cable;
  auto xs = [&](int i) { return c.X[static_cast<std::size_t>(i)]; };
  switch (rng.below(8)) {
    case 0: {
      Vertex z = pick(c.z(0, 1), rng);
      std::vector<Edge> add;
      for (Vertex x : xs(1)) add.emplace_back(z, x);
      return {edit(g, add), c, "C3"};
    }
    case 1: return {edit(g, {{pick(c.C, rng), pick(xs(1), rng)}}), c, "C1"};
    case 2: {
      Vertex k = pick(c.C, rng);
      std::vector<Edge> cut;
      for (Vertex y : c.Y[2]) cut.emplace_back(k, y);
      return {edit(g, {}, cut), c, "C1"};
    }
    case 3: return {edit(g, {{pick(xs(0), rng), pick(c.N[2], rng)}}), c, "C2"};
    case 4: return {edit(g, {{pick(c.z(0, 1), rng), pick(xs(2), rng)}}), c, "C4"};
    case 5: {
      // Break (C5) for the type-2 pair (1,2): drop the type-2 edges from X_2 to one vertex of Y_1.
      Vertex y = pick(c.Y[1], rng);
      std::vector<Edge> cut;
      for (Vertex x : xs(2)) cut.emplace_back(x, y);
      return {edit(g, {}, cut), c, "C5"};
    }
    case 6: return {edit(g, {}, {{pick(xs(0), rng), pick(c.N[0], rng)}}), c, "N_subset_N1"};
    default: return {edit(g, {{pick(xs(0), rng), pick(xs(1), rng)}}), c, "X_anticomplete"};
  }
}

}  // namespace mutation
