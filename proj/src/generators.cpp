#include "chib/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "chib/errors.hpp"

namespace chib::gen {

std::uint64_t Rng::below(std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(eng_()) * n) >> 64);
}

int Rng::between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("gen_gnp: p must lie in [0, 1]");
  if (n < 0) throw InputError("gen_gnp: n must be nonnegative");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (p >= 1.0 || rng.chance(p)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return Graph::from_edges(g.order(), edges);
}

std::vector<Vertex> random_perm(int n, Rng& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return perm;
}

}  // namespace

Graph gen_chordal(int n, int width, std::uint64_t seed) {
  if (width < 1 || width > n) throw InputError("gen_chordal: need 1 <= width <= n");
  Rng rng(seed);
  // home[v] is the clique v attached to, plus v itself.
  std::vector<std::vector<Vertex>> home;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> attach;
    if (v > 0) {
      std::vector<Vertex> pool = home[rng.below(static_cast<std::uint64_t>(v))];
      rng.shuffle(pool);
      int cap = std::min<int>(width, static_cast<int>(pool.size()));
      int size = rng.between(0, cap);
      attach.assign(pool.begin(), pool.begin() + size);
    }
    for (Vertex u : attach) edges.emplace_back(u, v);
    attach.push_back(v);
    home.push_back(std::move(attach));
  }
  return relabel(Graph::from_edges(n, edges), random_perm(n, rng));
}

Graph shuffled(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  return relabel(g, random_perm(g.order(), rng));
}

Graph cycle(int n) {
  if (n < 3) throw InputError("cycle: need n >= 3");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
  return Graph::from_edges(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph path(int n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  for (auto& [u, v] : e)
    if (u > v) std::swap(u, v);
  return Graph::from_edges(10, e);
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph::from_edges(g.order(), e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
  return Graph::from_edges(a.order() + b.order(), e);
}

Graph named(const std::string& name) {
  auto num = [&](std::size_t prefix) {
    std::string digits = name.substr(prefix);
    if (digits.empty() || digits.size() > 4 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw InputError("unknown graph name \"" + name + "\"");
    }
    return std::stoi(digits);
  };
  if (name == "petersen") return petersen();
  if (name.rfind("coC", 0) == 0) return complement(cycle(num(3)));
  if (name.empty()) throw InputError("empty graph name");
  switch (name[0]) {
    case 'C': return cycle(num(1));
    case 'K': return complete(num(1));
    case 'P': return path(num(1));
    case 'S': return star(num(1));
    case 'E': return Graph(num(1));
    default: throw InputError("unknown graph name \"" + name + "\"");
  }
}

TypeMatrix uniform_types(int t, PairType type) {
  return TypeMatrix(static_cast<std::size_t>(std::max(t, 0)), std::vector<PairType>(static_cast<std::size_t>(std::max(t, 0)), type));
}

PlantedCable gen_planted_cable(int h, int t, const TypeMatrix& types, int base_chi, std::uint64_t seed,
                               const PlantedCableOptions& opt) {
  if (h < 1 || t < 0 || base_chi < 0) throw InputError("gen_planted_cable: need h >= 1, t >= 0, base_chi >= 0");
  if (opt.y_size < 1 || opt.z_size < 1 || opt.extra_n < 0) throw InputError("gen_planted_cable: bad set sizes");
  auto type_of = [&](int i, int j) {
    if (static_cast<int>(types.size()) <= i || static_cast<int>(types[static_cast<std::size_t>(i)].size()) <= j) {
      throw InputError("gen_planted_cable: type matrix smaller than t x t");
    }
    PairType p = types[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (p == PairType::neither) {
      throw InputError("gen_planted_cable: pair (" + std::to_string(i) + "," + std::to_string(j) +
                       ") must be type1 or type2");
    }
    return p;
  };
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) type_of(i, j);

  Rng rng(seed);
  int next = 0;
  auto take = [&](int count) {
    std::vector<Vertex> out(static_cast<std::size_t>(count));
    std::iota(out.begin(), out.end(), next);
    next += count;
    return out;
  };
  std::vector<std::vector<Vertex>> X, Y, extra;
  std::vector<std::vector<std::vector<Vertex>>> Z(static_cast<std::size_t>(t), std::vector<std::vector<Vertex>>(static_cast<std::size_t>(t)));
  for (int i = 0; i < t; ++i) {
    X.push_back(take(h));
    Y.push_back(take(opt.y_size));
    extra.push_back(take(opt.extra_n));
    for (int j = i + 1; j < t; ++j) {
      if (type_of(i, j) == PairType::type2) Z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = take(opt.z_size);
    }
  }
  std::vector<std::vector<Vertex>> cliques;
  if (base_chi > 0) {
    cliques.push_back(take(base_chi));
    cliques.push_back(take(rng.between(1, base_chi)));
  }
  const int n = next;
  std::set<Edge> edges;
  auto join = [&](Vertex u, Vertex v) { edges.insert({std::min(u, v), std::max(u, v)}); };
  auto pick = [&](const std::vector<Vertex>& v) { return v[rng.below(v.size())]; };

  std::vector<std::vector<Vertex>> N(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) {
    auto si = static_cast<std::size_t>(i);
    N[si] = Y[si];
    N[si].insert(N[si].end(), extra[si].begin(), extra[si].end());
    for (int j = i + 1; j < t; ++j) {
      const auto& z = Z[si][static_cast<std::size_t>(j)];
      N[si].insert(N[si].end(), z.begin(), z.end());
    }
    for (std::size_t a = 0; a < X[si].size(); ++a)
      for (std::size_t b = a + 1; b < X[si].size(); ++b) join(X[si][a], X[si][b]);
    for (Vertex x : X[si])
      for (Vertex u : N[si]) join(x, u);
  }
  for (const auto& q : cliques) {
    for (std::size_t a = 0; a < q.size(); ++a)
      for (std::size_t b = a + 1; b < q.size(); ++b) join(q[a], q[b]);
    for (int i = 0; i < t; ++i) {
      const auto& y = Y[static_cast<std::size_t>(i)];
      for (Vertex c : q) {
        join(c, pick(y));
        for (Vertex u : y)
          if (rng.chance(opt.c_edge_p)) join(c, u);
      }
    }
  }
  for (int i = 0; i < t; ++i) {
    auto si = static_cast<std::size_t>(i);
    for (int j = i + 1; j < t; ++j) {
      auto sj = static_cast<std::size_t>(j);
      if (type_of(i, j) == PairType::type2) {
        for (Vertex x : X[sj])
          for (Vertex y : Y[si]) join(x, y);
        for (Vertex u : N[sj]) join(u, pick(Z[si][sj]));
      } else {
        auto r = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(h)));
        for (std::size_t s = 0; s < X[sj].size(); ++s) {
          if (s == r) continue;
          for (Vertex y : Y[si])
            if (rng.chance(0.5)) join(X[sj][s], y);
        }
      }
    }
  }

  std::vector<Vertex> perm = random_perm(n, rng);
  auto map = [&](Vertex v) { return perm[static_cast<std::size_t>(v)]; };
  auto map_set = [&](const std::vector<Vertex>& vs) {
    VertexSet out(n);
    for (Vertex v : vs) out.insert(map(v));
    return out;
  };
  std::vector<Edge> edge_list;
  for (auto [u, v] : edges) edge_list.emplace_back(map(u), map(v));
  PlantedCable out{Graph::from_edges(n, edge_list), Cable::base_only(h, VertexSet(n))};
  for (const auto& q : cliques) out.cable.C |= map_set(q);
  out.cable.Z.assign(static_cast<std::size_t>(t), std::vector<VertexSet>(static_cast<std::size_t>(t), VertexSet(n)));
  for (int i = 0; i < t; ++i) {
    auto si = static_cast<std::size_t>(i);
    std::vector<Vertex> xi;
    for (Vertex x : X[si]) xi.push_back(map(x));
    std::sort(xi.begin(), xi.end());
    out.cable.X.push_back(xi);
    out.cable.N.push_back(map_set(N[si]));
    out.cable.Y.push_back(map_set(Y[si]));
    for (int j = i + 1; j < t; ++j) out.cable.Z[si][static_cast<std::size_t>(j)] = map_set(Z[si][static_cast<std::size_t>(j)]);
  }
  return out;
}

PlantedMulticover gen_planted_multicover(int s, std::uint64_t seed, const PlantedMulticoverOptions& opt) {
  if (s < 0 || opt.n_size < 1 || opt.c_size < 0) throw InputError("gen_planted_multicover: bad sizes");
  Rng rng(seed);
  int next = 0;
  auto take = [&](int count) {
    std::vector<Vertex> out(static_cast<std::size_t>(count));
    std::iota(out.begin(), out.end(), next);
    next += count;
    return out;
  };
  std::vector<Vertex> X = take(s);
  std::vector<std::vector<Vertex>> N;
  for (int i = 0; i < s; ++i) N.push_back(take(opt.n_size));
  std::vector<Vertex> C = take(opt.c_size);
  std::vector<Vertex> knees;
  Vertex apex = -1;
  if (opt.with_tick) {
    knees = take(s);
    apex = take(1)[0];
  }
  const int n = next;
  std::set<Edge> edges;
  auto join = [&](Vertex u, Vertex v) { edges.insert({std::min(u, v), std::max(u, v)}); };
  auto maybe = [&](Vertex u, Vertex v) {
    if (rng.chance(opt.noise_p)) join(u, v);
  };
  for (std::size_t a = 0; a < C.size(); ++a)
    for (std::size_t b = a + 1; b < C.size(); ++b) maybe(C[a], C[b]);
  for (std::size_t i = 0; i < N.size(); ++i) {
    for (Vertex u : N[i]) join(X[i], u);
    if (!opt.stable_n) {
      for (std::size_t a = 0; a < N[i].size(); ++a)
        for (std::size_t b = a + 1; b < N[i].size(); ++b) maybe(N[i][a], N[i][b]);
    }
    for (std::size_t k = i + 1; k < N.size(); ++k)
      for (Vertex u : N[i])
        for (Vertex w : N[k]) maybe(u, w);
    for (Vertex c : C) {
      join(c, N[i][rng.below(N[i].size())]);
      for (Vertex u : N[i]) maybe(c, u);
    }
  }
  for (std::size_t i = 0; i < knees.size(); ++i) {
    join(knees[i], X[i]);
    join(knees[i], apex);
    for (std::size_t k = i + 1; k < knees.size(); ++k) maybe(knees[i], knees[k]);
  }
  std::vector<Vertex> perm = random_perm(n, rng);
  auto map = [&](Vertex v) { return perm[static_cast<std::size_t>(v)]; };
  std::vector<Edge> edge_list;
  for (auto [u, v] : edges) edge_list.emplace_back(map(u), map(v));
  PlantedMulticover out{Graph::from_edges(n, edge_list), {}, std::nullopt};
  std::vector<std::pair<Vertex, std::size_t>> order;
  for (std::size_t i = 0; i < X.size(); ++i) order.emplace_back(map(X[i]), i);
  std::sort(order.begin(), order.end());
  out.mc.C = VertexSet(n);
  for (Vertex c : C) out.mc.C.insert(map(c));
  Tick tick;
  tick.apex = apex >= 0 ? map(apex) : -1;
  for (auto [x, i] : order) {
    out.mc.X.push_back(x);
    VertexSet nx(n);
    for (Vertex u : N[i]) nx.insert(map(u));
    out.mc.N.push_back(nx);
    if (opt.with_tick) {
      tick.X.push_back(x);
      tick.knees.push_back(map(knees[i]));
    }
  }
  if (opt.with_tick) out.tick = tick;
  return out;
}

PlantedImpression gen_planted_impression(int n, int max_len, double chord_p, int decoys, std::uint64_t seed) {
  if (n < 1 || max_len < 2 || decoys < 0) throw InputError("gen_planted_impression: need n >= 1, max_len >= 2");
  Rng rng(seed);
  std::vector<Edge> pattern_edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = n; b < 2 * n; ++b) pattern_edges.emplace_back(a, b);
  Graph pattern = Graph::from_edges(2 * n, pattern_edges);
  int next = 2 * n;
  std::set<Edge> edges;
  auto join = [&](Vertex u, Vertex v) { edges.insert({std::min(u, v), std::max(u, v)}); };
  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> interior_all;
  for (auto [a, b] : pattern.edges()) {
    int len = rng.between(2, max_len);
    std::vector<Vertex> p{a};
    for (int i = 1; i < len; ++i) p.push_back(next++);
    p.push_back(b);
    for (std::size_t i = 1; i < p.size(); ++i) join(p[i - 1], p[i]);
    interior_all.insert(interior_all.end(), p.begin() + 1, p.end() - 1);
    paths.push_back(std::move(p));
  }
  auto pe = pattern.edges();
  for (std::size_t e = 0; e < pe.size(); ++e) {
    for (std::size_t f = e + 1; f < pe.size(); ++f) {
      bool incident = pe[e].first == pe[f].first || pe[e].first == pe[f].second || pe[e].second == pe[f].first ||
                      pe[e].second == pe[f].second;
      if (!incident) continue;
      for (std::size_t i = 1; i + 1 < paths[e].size(); ++i)
        for (std::size_t k = 1; k + 1 < paths[f].size(); ++k)
          if (rng.chance(chord_p)) join(paths[e][i], paths[f][k]);
    }
  }
  for (int d = 0; d < decoys && !interior_all.empty(); ++d) join(next++, interior_all[rng.below(interior_all.size())]);
  const int total = next;
  std::vector<Vertex> perm = random_perm(total, rng);
  auto map = [&](Vertex v) { return perm[static_cast<std::size_t>(v)]; };
  std::vector<Edge> edge_list;
  for (auto [u, v] : edges) edge_list.emplace_back(map(u), map(v));
  PlantedImpression out{Graph::from_edges(total, edge_list), {pattern, {}, {}, 0}};
  for (Vertex v = 0; v < 2 * n; ++v) out.imp.vertex_map.push_back(map(v));
  for (auto& p : paths) {
    out.imp.order = std::max(out.imp.order, static_cast<int>(p.size()) - 1);
    for (Vertex& v : p) v = map(v);
    out.imp.paths.push_back(p);
  }
  return out;
}

}  // namespace chib::gen
