#include <algorithm>

#include "engine_util.hpp"

namespace chib {

using detail::chi_claim;
using detail::js;

long long longhole_color_bound(int ell, int kappa, int tau) {
  return 2LL * (ell - 3) * (static_cast<long long>(kappa) + tau) + 1;
}

namespace {

// Builds the hole from a layer component whose chi exceeds t(kappa+tau).
Hole grow_hole(ChiOracle& oracle, EngineTranscript& tr, const std::vector<VertexSet>& layers, std::size_t k,
               const VertexSet& c0, int t) {
  const Graph& g = oracle.graph();
  const VertexSet& below = layers[k - 1];
  Vertex v0 = -1;
  for (Vertex u : below)
    if (g.neighbors(u).intersects(c0)) {
      v0 = u;
      break;
    }
  if (v0 < 0) throw detail::EngineFailure("no vertex of the previous layer sees the layer component");
  std::vector<Vertex> path{v0};
  VertexSet ci = c0;
  for (int i = 0; i < t; ++i) {
    Vertex vi = path.back();
    VertexSet nb = g.neighbors(vi) & ci;
    auto next = detail::max_chi_component(oracle, ci - nb);
    if (next.set.empty()) throw detail::EngineFailure("C_" + std::to_string(i) + " minus N(v_i) is empty");
    Vertex vn = -1;
    for (Vertex w : nb)
      if (g.neighbors(w).intersects(next.set)) {
        vn = w;
        break;
      }
    if (vn < 0) throw detail::EngineFailure("no neighbour of v_" + std::to_string(i) + " sees C_" + std::to_string(i + 1));
    ci = next.set;
    path.push_back(vn);
    tr.step("path_" + std::to_string(i + 1), {{"v", vn}, {"C", js(ci)}});
    tr.claim("C_" + std::to_string(i + 1), ci, next.chi);
  }
  VertexSet blocked = g.empty_set();
  for (int i = 0; i < t; ++i) blocked |= n2(g, g.make_set({path[static_cast<std::size_t>(i)]}));
  Vertex v = (ci - blocked).first();
  if (v < 0) throw detail::EngineFailure("C_t lies inside the second neighbourhoods of v_0..v_{t-1}");
  Vertex u = (g.neighbors(v) & below).first();
  if (u < 0) throw detail::EngineFailure("v has no neighbour in the previous layer");
  std::vector<Vertex> p = shortest_path(g, ci.with(u).with(path.back()), u, path.back());
  VertexSet lower = g.empty_set();
  for (std::size_t i = 0; i + 1 < k; ++i) lower |= layers[i];
  std::vector<Vertex> q = shortest_path(g, lower.with(u).with(v0), u, v0);
  if (p.size() < 2 || q.size() < 3) throw detail::EngineFailure("closing paths P or Q are too short or missing");
  tr.step("close", {{"v", v}, {"u", u}, {"P", p}, {"Q", q}});
  Hole h;
  h.cycle = path;                                         // v0 .. vt
  for (std::size_t i = p.size() - 1; i-- > 1;) h.cycle.push_back(p[i]);  // P interior, from v_t side
  h.cycle.push_back(u);
  for (std::size_t i = 1; i + 1 < q.size(); ++i) h.cycle.push_back(q[i]);  // Q interior towards v0
  if (auto why = check_hole(g, h)) throw detail::EngineFailure("constructed cycle is not a hole: " + *why);
  return h;
}

}  // namespace

EngineRun<LongholeOutcome> longhole_decompose(const Graph& g, int ell, int kappa, int tau, const SolverLimits& limits) {
  if (ell < 4) throw InputError("longhole_decompose: ell must be at least 4");
  if (kappa < 0 || tau < 0) throw InputError("longhole_decompose: kappa and tau must be nonnegative");
  return detail::run_guarded<LongholeOutcome>("longhole_decompose", [&](EngineTranscript& tr) {
    ChiOracle oracle(g, limits);
    const int t = ell - 3;
    const long long bound = static_cast<long long>(t) * (kappa + tau);
    tr.step("preconditions", {{"kappa", kappa}, {"tau", tau}});
    for (Vertex v = 0; v < g.order(); ++v) {
      VertexSet one = g.neighbors(v), two = n2(g, g.make_set({v}));
      int c1 = chi_claim(oracle, tr, "N1(" + std::to_string(v) + ")", one);
      int c2 = chi_claim(oracle, tr, "N2(" + std::to_string(v) + ")", two);
      if (c1 > kappa)
        throw PreconditionError("chi(N1(" + std::to_string(v) + ")) = " + std::to_string(c1) + " > kappa");
      if (c2 > tau) throw PreconditionError("chi(N2(" + std::to_string(v) + ")) = " + std::to_string(c2) + " > tau");
    }
    tr.hypothesis("chi(N1(v)) <= kappa for all v", HypothesisStatus::verified);
    tr.hypothesis("chi(N2(v)) <= tau for all v", HypothesisStatus::verified);

    // Layer components, coloured on two alternating palettes unless one is too expensive.
    std::vector<std::pair<VertexSet, Coloring>> pieces[2];
    int width[2] = {0, 0};
    for (const auto& g1 : components(g, g.vertices())) {
      Vertex z0 = g1.first();
      auto layers = distance_layers(g, z0);
      tr.step("layers", {{"root", z0}, {"sizes", [&] {
                            std::vector<int> s;
                            for (const auto& l : layers) s.push_back(l.size());
                            return s;
                          }()}});
      for (std::size_t k = 0; k < layers.size(); ++k) {
        for (const auto& comp : components(g, layers[k])) {
          ChiResult r = oracle.solve(comp);
          if (!r.complete()) throw BudgetExhausted("chi of a layer component did not finish");
          tr.claim("L" + std::to_string(k) + " component " + std::to_string(comp.first()), comp, r.chi());
          if (k > 0 && r.chi() > bound) {
            tr.step("large_component", {{"layer", k}, {"C0", js(comp)}, {"threshold", bound}});
            tr.claim("C_0", comp, r.chi());
            Hole h = grow_hole(oracle, tr, layers, k, comp, t);
            tr.outcome = {{"branch", "hole"}, {"hole", ser::to_json(h)}};
            return LongholeOutcome{std::nullopt, h};
          }
          int parity = static_cast<int>(k % 2);
          width[parity] = std::max(width[parity], r.chi());
          pieces[parity].emplace_back(comp, r.coloring);
        }
      }
    }
    Coloring col;
    col.color.assign(static_cast<std::size_t>(g.order()), 0);
    for (int parity = 0; parity < 2; ++parity)
      for (const auto& [set, c] : pieces[parity])
        for (Vertex v : set) col.color[static_cast<std::size_t>(v)] = c.color[static_cast<std::size_t>(v)] + parity * width[0];
    col.num_colors = g.order() == 0 ? 0 : width[0] + width[1];
    if (auto why = check_coloring(g, col)) throw detail::EngineFailure("layer colouring is improper: " + *why);
    if (col.num_colors > longhole_color_bound(ell, kappa, tau))
      throw detail::EngineFailure("layer colouring exceeds the bound");
    tr.outcome = {{"branch", "coloring"}, {"coloring", ser::to_json(col)}, {"bound", longhole_color_bound(ell, kappa, tau)}};
    return LongholeOutcome{col, std::nullopt};
  });
}

}  // namespace chib
