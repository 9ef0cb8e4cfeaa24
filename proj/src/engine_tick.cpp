#include <algorithm>
#include <map>

#include "engine_util.hpp"

namespace chib {

using detail::chi_claim;
using detail::js;

namespace {

std::string s(long long v) { return std::to_string(v); }

struct Level {
  BoundExpr m, c;
};

std::vector<Level> tick_ladder(const GrowTickParams& p) {
  BoundBuilder b;
  std::vector<Level> out;
  if (p.ladder) {
    if (p.ladder->size() < static_cast<std::size_t>(p.j) + 1)
      throw InputError("grow_tick: the ladder needs levels 0.." + s(p.j));
    for (const auto& l : *p.ladder) out.push_back({b.constant(l.m), b.constant(l.c)});
    return out;
  }
  for (const auto& l : gettick_ladder(b, static_cast<unsigned>(p.j), b.constant(static_cast<unsigned long>(p.k)),
                                      b.constant(p.m), b.constant(p.c), b.constant(p.kappa)))
    out.push_back({l.m_j, l.c_j});
  return out;
}

// chi > threshold for a bound expression threshold.
bool chi_above(int chi, const BoundExpr& threshold) { return chi > 0 && at_most(threshold, chi - 1); }

BoundExpr times_pow2(const BoundExpr& c, const BoundExpr& m) {
  BoundBuilder b;
  return b.mul(c, b.pow(b.constant(2UL), m));
}

TickOutcome grow_tick_level(ChiOracle& oracle, EngineTranscript& tr, const Multicover& input, int j,
                            const std::vector<Level>& ladder, const GrowTickParams& p, const std::string& pre) {
  const Graph& g = oracle.graph();
  const int n = g.order();
  const long long kappa = static_cast<long long>(p.kappa);
  if (j == 0) throw PreconditionError("m_0=c_0=1, theorem vacuous");
  if (Verdict v = verify_multicover(g, input, true); !v.ok())
    throw PreconditionError("input is not a stable multicover: " + v.describe());
  {
    CliqueResult w = max_clique(g, input.n_union(n), oracle.limits());
    if (!w.complete()) throw BudgetExhausted("omega of the union of the N_x did not finish");
    if (w.size() > j) throw PreconditionError("omega(union N_x) = " + s(w.size()) + " > j = " + s(j));
  }
  tr.hypothesis(pre + "omega(union N_x) <= j", HypothesisStatus::verified);

  const Level& lev = ladder[static_cast<std::size_t>(j)];
  const Level& prev = ladder[static_cast<std::size_t>(j - 1)];
  Multicover mc = input;
  if (!at_most(lev.m, mc.size())) {
    if (p.enforce_thresholds) throw PreconditionError("|X| = " + s(mc.size()) + " < m_j = " + lev.m.summary());
    tr.hypothesis(pre + "|X| >= m_j", HypothesisStatus::assumed, "|X| = " + s(mc.size()) + ", m_j = " + lev.m.summary());
  } else {
    auto keep = static_cast<std::size_t>(lev.m.value().get_ui());
    mc.X.resize(keep);
    mc.N.resize(keep);
    tr.hypothesis(pre + "|X| >= m_j", HypothesisStatus::verified);
  }
  const int chi_c = chi_claim(oracle, tr, "C", mc.C);
  if (!at_most(lev.c, chi_c)) {
    if (p.enforce_thresholds) throw PreconditionError("chi(C) = " + s(chi_c) + " < c_j = " + lev.c.summary());
    tr.hypothesis(pre + "chi(C) >= c_j", HypothesisStatus::assumed, "chi(C) = " + s(chi_c) + ", c_j = " + lev.c.summary());
  } else {
    tr.hypothesis(pre + "chi(C) >= c_j", HypothesisStatus::verified);
  }
  tr.step(pre + "start", {{"j", j}, {"X", mc.X}, {"C", js(mc.C)}, {"m_j", lev.m.summary()}, {"c_j", lev.c.summary()}});

  // Clique A and C_0.
  CliqueResult ar = max_clique(g, mc.C, oracle.limits());
  if (!ar.complete()) throw BudgetExhausted("clique search in C did not finish");
  if (ar.size() < p.k) {
    if (chi_c > kappa)
      throw PreconditionError("C has no " + s(p.k) + "-clique yet chi(C) = " + s(chi_c) + " > kappa");
    throw detail::EngineFailure("C has no " + s(p.k) + "-clique (chi(C) >= c_j was assumed, not met)");
  }
  std::vector<Vertex> A = ar.witness.to_vector();
  VertexSet aset = ar.witness;
  VertexSet c0 = mc.C - aset - neighborhood_of(g, aset);
  tr.step(pre + "clique_A", {{"A", A}, {"C0", js(c0)}});
  for (Vertex a : A) {
    int c = chi_claim(oracle, tr, "N(" + s(a) + ") & C", g.neighbors(a) & mc.C);
    if (c > kappa) throw PreconditionError("chi(N(" + s(a) + ") & C) = " + s(c) + " > kappa");
  }
  chi_claim(oracle, tr, "C0", c0);

  // (1): a_{v,x}, a_v, X_v, then pigeonhole on a_v and X_v.
  const auto xs = static_cast<std::size_t>(mc.size());
  std::map<Vertex, VertexSet> by_a;
  std::vector<std::vector<Vertex>> xv(static_cast<std::size_t>(n));
  for (Vertex v : c0) {
    std::map<Vertex, std::vector<Vertex>> hits;
    for (std::size_t i = 0; i < xs; ++i) {
      VertexSet cand = mc.N[i] & g.neighbors(v);
      Vertex pick = -1;
      for (Vertex a : A)
        if (!(cand - g.neighbors(a)).empty()) {
          pick = a;
          break;
        }
      if (pick < 0) throw PreconditionError("a neighbour of " + s(v) + " in N_" + s(mc.X[i]) + " is complete to A");
      hits[pick].push_back(mc.X[i]);
    }
    Vertex best = -1;
    for (const auto& [a, list] : hits)
      if (best < 0 || list.size() > hits[best].size()) best = a;
    xv[static_cast<std::size_t>(v)] = hits[best];
    by_a.try_emplace(best, g.empty_set()).first->second.insert(v);
  }
  if (by_a.empty()) throw detail::EngineFailure("C0 is empty (chi(C) >= c_j was assumed, not met)");
  auto [a, cprime] = detail::max_chi_class(oracle, by_a);
  tr.step(pre + "step1_a", {{"a", a}, {"C'", js(cprime.set)}});
  tr.claim("C'", cprime.set, cprime.chi);
  std::map<std::vector<Vertex>, VertexSet> by_x;
  for (Vertex v : cprime.set) by_x.try_emplace(xv[static_cast<std::size_t>(v)], g.empty_set()).first->second.insert(v);
  auto [x1, c1] = detail::max_chi_class(oracle, by_x);
  tr.step(pre + "step1_X", {{"X1", x1}, {"C1", js(c1.set)}});
  tr.claim("C1", c1.set, c1.chi);

  // n_{x,v}, a_x, C_2.
  auto nidx = [&](Vertex x) { return static_cast<std::size_t>(mc.index_of(x)); };
  std::map<Vertex, Vertex> ax;
  for (Vertex x : x1) {
    Vertex k = (mc.N[nidx(x)] & g.neighbors(a)).first();
    if (k < 0) throw PreconditionError("N_" + s(x) + " has no neighbour of a = " + s(a) + " although a is in C");
    ax[x] = k;
  }
  auto nxv = [&](Vertex x, Vertex v) {
    Vertex r = ((mc.N[nidx(x)] & g.neighbors(v)) - g.neighbors(a)).first();
    if (r < 0) throw detail::EngineFailure("no n_{x,v} for x = " + s(x) + ", v = " + s(v));
    return r;
  };
  VertexSet knees = g.empty_set();
  for (auto [x, k] : ax) knees.insert(k);
  VertexSet c2 = c1.set - neighborhood_of(g, knees);
  for (auto [x, k] : ax) {
    int c = chi_claim(oracle, tr, "N(" + s(k) + ") & C1", g.neighbors(k) & c1.set);
    if (c > kappa) throw PreconditionError("chi(N(" + s(k) + ") & C1) = " + s(c) + " > kappa");
  }
  {
    nlohmann::json knee_json = nlohmann::json::object();
    for (auto [x, k] : ax) knee_json[s(x)] = k;
    tr.step(pre + "knees", {{"a_x", knee_json}, {"C2", js(c2)}});
  }
  chi_claim(oracle, tr, "C2", c2);

  // (2): the sets C_y.
  const bool mprev_small = at_most(prev.m, static_cast<long long>(x1.size()));
  const long long mprev = mprev_small ? static_cast<long long>(prev.m.value().get_ui()) : -1;
  const BoundExpr cy_threshold = times_pow2(prev.c, lev.m);
  VertexSet cy_union = g.empty_set();
  for (Vertex y : x1) {
    VertexSet cy = g.empty_set();
    std::vector<std::vector<Vertex>> witness(static_cast<std::size_t>(n));
    if (mprev_small) {
      for (Vertex v : c2) {
        std::vector<Vertex> list;
        for (Vertex x : x1)
          if (x != y && g.adjacent(nxv(x, v), ax[y])) list.push_back(x);
        if (static_cast<long long>(list.size()) >= mprev) {
          cy.insert(v);
          list.resize(static_cast<std::size_t>(mprev));
          witness[static_cast<std::size_t>(v)] = list;
        }
      }
    }
    cy_union |= cy;
    int chi_y = chi_claim(oracle, tr, "C_" + s(y), cy);
    if (!chi_above(chi_y, cy_threshold)) continue;
    // The recursion branch.
    std::map<std::vector<Vertex>, VertexSet> groups;
    for (Vertex v : cy) groups.try_emplace(witness[static_cast<std::size_t>(v)], g.empty_set()).first->second.insert(v);
    auto [xp, cp] = detail::max_chi_class(oracle, groups);
    Multicover inner;
    inner.X = xp;
    for (Vertex x : xp) inner.N.push_back(mc.N[nidx(x)] & g.neighbors(ax[y]));
    inner.C = cp.set;
    tr.step(pre + "step2_recurse", {{"y", y}, {"a_y", ax[y]}, {"X'", xp}, {"C'", js(cp.set)},
                                    {"threshold", cy_threshold.summary()}});
    tr.claim("C'", cp.set, cp.chi);
    return grow_tick_level(oracle, tr, inner, j - 1, ladder, p, pre + "j" + s(j - 1) + "/");
  }
  tr.step(pre + "step2_bounded", {{"threshold", cy_threshold.summary()}, {"m_{j-1}", prev.m.summary()}});

  // (3): digraphs G_v and their degeneracy colourings.
  VertexSet cpp = c2 - cy_union;
  chi_claim(oracle, tr, "C'", cpp);
  const int k1 = static_cast<int>(x1.size());
  std::map<std::vector<Vertex>, VertexSet> by_stable;
  for (Vertex v : cpp) {
    std::vector<Edge> edges;
    for (int i = 0; i < k1; ++i)
      for (int l = i + 1; l < k1; ++l) {
        Vertex x = x1[static_cast<std::size_t>(i)], y = x1[static_cast<std::size_t>(l)];
        if (g.adjacent(nxv(x, v), ax[y]) || g.adjacent(nxv(y, v), ax[x])) edges.emplace_back(i, l);
      }
    Graph gv = Graph::from_edges(k1, edges);
    DegeneracyResult dr = degeneracy_order_and_coloring(gv);
    std::vector<int> count(static_cast<std::size_t>(std::max(dr.coloring.num_colors, 1)), 0);
    for (int c : dr.coloring.color) ++count[static_cast<std::size_t>(c)];
    int best = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
    std::vector<Vertex> cls;
    for (int i = 0; i < k1; ++i)
      if (dr.coloring.color[static_cast<std::size_t>(i)] == best) cls.push_back(x1[static_cast<std::size_t>(i)]);
    by_stable.try_emplace(cls, g.empty_set()).first->second.insert(v);
  }
  if (by_stable.empty()) throw detail::EngineFailure("C' is empty after step (2) (thresholds were assumed, not met)");
  auto [x3, c3] = detail::max_chi_class(oracle, by_stable);
  tr.step(pre + "step3", {{"X3", x3}, {"C3", js(c3.set)}});
  tr.claim("C3", c3.set, c3.chi);
  if (static_cast<long long>(x3.size()) < static_cast<long long>(p.m) || c3.chi < static_cast<long long>(p.c))
    throw detail::EngineFailure("step (3) reached |X3| = " + s(static_cast<long long>(x3.size())) + ", chi(C3) = " +
                                s(c3.chi) + " below the targets m = " + s(static_cast<long long>(p.m)) + ", c = " +
                                s(static_cast<long long>(p.c)) + " (thresholds were assumed, not met)");

  // Final pruning of the N_x.
  VertexSet drop = g.neighbors(a).with(a);
  for (Vertex y : x3) drop |= g.neighbors(ax[y]).with(ax[y]);
  TickOutcome out;
  out.mc.X = x3;
  for (Vertex x : x3) out.mc.N.push_back(mc.N[nidx(x)] - drop);
  out.mc.C = c3.set;
  out.tick.X = x3;
  out.tick.apex = a;
  for (Vertex x : x3) out.tick.knees.push_back(ax[x]);
  tr.step(pre + "prune", {{"X'", x3}, {"apex", a}, {"knees", out.tick.knees}});
  return out;
}

}  // namespace

EngineRun<TickOutcome> grow_tick(const Graph& g, const Multicover& mc, const GrowTickParams& p) {
  if (p.j == 0) {
    EngineRun<TickOutcome> run;
    run.transcript.engine = "grow_tick";
    run.status = EngineStatus::precondition_failed;
    run.message = "m_0=c_0=1, theorem vacuous";
    run.transcript.outcome = {{"status", to_string(run.status)}, {"message", run.message}};
    return run;
  }
  if (p.j < 0) throw InputError("grow_tick: j must be nonnegative");
  if (p.k < 2) throw InputError("grow_tick: k must be at least 2");
  auto ladder = tick_ladder(p);
  return detail::run_guarded<TickOutcome>("grow_tick", [&](EngineTranscript& tr) {
    ChiOracle oracle(g, p.limits);
    CliqueResult w = omega(g, p.limits);
    if (!w.complete()) throw BudgetExhausted("omega(G) did not finish");
    if (w.size() > p.k) throw PreconditionError("omega(G) = " + s(w.size()) + " > k = " + s(p.k));
    tr.hypothesis("omega(G) <= k", HypothesisStatus::verified);
    tr.hypothesis("chi(H) <= kappa whenever omega(H) < k", HypothesisStatus::assumed,
                  "spot-checked on N(a) & C for a in A and N(a_x) & C1");
    TickOutcome out = grow_tick_level(oracle, tr, mc, p.j, ladder, p, "");
    Verdict v = verify_containment(mc, out.mc);
    v.merge(verify_multicover(g, out.mc, true), "multicover.");
    v.merge(verify_tick_tangent(g, out.tick, out.mc), "tick.");
    if (!v.ok()) throw detail::EngineFailure("output does not verify: " + v.describe());
    tr.outcome = {{"multicover", ser::to_json(out.mc)}, {"tick", ser::to_json(out.tick)}};
    return out;
  });
}

EngineRun<StabilizeOutcome> stabilize_multicover(const Graph& g, const Multicover& mc, int kappa,
                                                 const SolverLimits& limits) {
  if (kappa < 0) throw InputError("stabilize_multicover: kappa must be nonnegative");
  return detail::run_guarded<StabilizeOutcome>("stabilize_multicover", [&](EngineTranscript& tr) {
    if (Verdict v = verify_multicover(g, mc); !v.ok()) throw PreconditionError("input is not a multicover: " + v.describe());
    ChiOracle oracle(g, limits);
    std::vector<Coloring> cols;
    tr.step("colour_N");
    for (std::size_t i = 0; i < mc.X.size(); ++i) {
      ChiResult r = oracle.solve(mc.N[i]);
      if (!r.complete()) throw BudgetExhausted("colouring N_" + s(mc.X[i]) + " did not finish");
      tr.claim("N_" + s(mc.X[i]), mc.N[i], r.chi());
      if (r.chi() > kappa) throw PreconditionError("chi(N_" + s(mc.X[i]) + ") = " + s(r.chi()) + " > kappa");
      cols.push_back(r.coloring);
    }
    tr.hypothesis("chi(N_x) <= kappa", HypothesisStatus::verified);
    std::map<std::vector<int>, VertexSet> fibers;
    for (Vertex v : mc.C) {
      std::vector<int> f;
      for (std::size_t i = 0; i < mc.X.size(); ++i) {
        int best = -1;
        for (Vertex u : mc.N[i] & g.neighbors(v)) {
          int c = cols[i].color[static_cast<std::size_t>(u)];
          if (best < 0 || c < best) best = c;
        }
        f.push_back(best);
      }
      fibers.try_emplace(f, g.empty_set()).first->second.insert(v);
    }
    StabilizeOutcome out;
    out.chi_before = chi_claim(oracle, tr, "C", mc.C);
    out.mc.X = mc.X;
    if (fibers.empty()) {
      out.mc.N = mc.N;
      out.mc.C = mc.C;
      out.fingerprint.assign(mc.X.size(), 0);
    } else {
      auto [f, fiber] = detail::max_chi_class(oracle, fibers);
      out.fingerprint = f;
      out.mc.C = fiber.set;
      for (std::size_t i = 0; i < mc.X.size(); ++i) {
        VertexSet keep = g.empty_set();
        for (Vertex u : mc.N[i])
          if (cols[i].color[static_cast<std::size_t>(u)] == f[i]) keep.insert(u);
        out.mc.N.push_back(keep);
      }
      tr.step("fiber", {{"fingerprint", f}, {"fibers", fibers.size()}, {"C'", js(fiber.set)}});
    }
    out.chi_after = chi_claim(oracle, tr, "C'", out.mc.C);
    long double scaled = out.chi_after;
    for (std::size_t i = 0; i < mc.X.size() && scaled < out.chi_before; ++i) scaled *= kappa;
    if (scaled < out.chi_before) throw detail::EngineFailure("fiber bound chi(C')*kappa^|X| >= chi(C) fails");
    Verdict v = verify_containment(mc, out.mc);
    v.merge(verify_multicover(g, out.mc, true), "multicover.");
    if (!v.ok()) throw detail::EngineFailure("output does not verify: " + v.describe());
    tr.outcome = {{"multicover", ser::to_json(out.mc)}, {"fingerprint", out.fingerprint}};
    return out;
  });
}

EngineRun<Impression> ticks_to_impression(const Graph& g, const std::vector<Tick>& ticks, const Multicover& mc) {
  return detail::run_guarded<Impression>("ticks_to_impression", [&](EngineTranscript& tr) {
    const int n = static_cast<int>(ticks.size());
    if (n == 0) throw PreconditionError("no ticks given");
    if (mc.size() != n) throw PreconditionError("|X'| = " + s(mc.size()) + " differs from the number of ticks " + s(n));
    std::vector<VertexSet> outside;
    for (int s_ = 0; s_ < n; ++s_) {
      const Tick& t = ticks[static_cast<std::size_t>(s_)];
      if (Verdict v = verify_tick_tangent(g, t, mc); !v.ok())
        throw PreconditionError("tick " + s(s_) + " is not tangent: " + v.describe());
      VertexSet f = g.empty_set();
      f.insert(t.apex);
      for (Vertex k : t.knees) f.insert(k);
      for (int r = 0; r < s_; ++r) {
        if (f.intersects(outside[static_cast<std::size_t>(r)]))
          throw PreconditionError("ticks " + s(r) + " and " + s(s_) + " share a vertex outside X'");
        if (f.intersects(neighborhood_of(g, outside[static_cast<std::size_t>(r)])))
          throw PreconditionError("ticks " + s(r) + " and " + s(s_) + " are joined outside X'");
      }
      outside.push_back(f);
    }
    tr.hypothesis("ticks tangent, disjoint and anticomplete outside X'", HypothesisStatus::verified);
    std::vector<Edge> pe;
    for (int i = 0; i < n; ++i)
      for (int s_ = 0; s_ < n; ++s_) pe.emplace_back(i, n + s_);
    Impression imp;
    imp.pattern = Graph::from_edges(2 * n, pe);
    imp.vertex_map = mc.X;
    for (const Tick& t : ticks) imp.vertex_map.push_back(t.apex);
    for (auto [i, b] : imp.pattern.edges()) {
      const Tick& t = ticks[static_cast<std::size_t>(b - n)];
      imp.paths.push_back({mc.X[static_cast<std::size_t>(i)], t.knees[static_cast<std::size_t>(i)], t.apex});
    }
    imp.order = 2;
    if (Verdict v = verify_impression(g, imp); !v.ok())
      throw detail::EngineFailure("impression does not verify: " + v.describe());
    tr.step("assemble", {{"n", n}});
    tr.outcome = ser::to_json(imp);
    return imp;
  });
}

namespace {

// Side size n when the pattern is K_{n,n}, else -1.
int complete_bipartite_side(const Graph& h) {
  const int order = h.order();
  if (order % 2 != 0 || order == 0) return -1;
  const int n = order / 2;
  if (h.edge_count() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) return -1;
  std::vector<int> side(static_cast<std::size_t>(order), -1);
  side[0] = 0;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : h.neighbors(v)) {
      if (side[static_cast<std::size_t>(u)] < 0) {
        side[static_cast<std::size_t>(u)] = 1 - side[static_cast<std::size_t>(v)];
        stack.push_back(u);
      } else if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]) {
        return -1;
      }
    }
  }
  if (std::count(side.begin(), side.end(), 0) != n) return -1;
  return n;  // n^2 edges across sides of size n is K_{n,n}
}

}  // namespace

EngineRun<Hole> impression_to_hole(const Graph& g, const Impression& imp, const SolverLimits& limits) {
  return detail::run_guarded<Hole>("impression_to_hole", [&](EngineTranscript& tr) {
    const int n = complete_bipartite_side(imp.pattern);
    if (n < 2) throw PreconditionError("pattern is not K_{n,n} with n >= 2");
    if (Verdict v = verify_impression(g, imp); !v.ok())
      throw PreconditionError("impression does not verify: " + v.describe());
    VertexSet u = g.empty_set();
    for (Vertex v : imp.vertex_map) u.insert(v);
    for (const auto& path : imp.paths)
      for (Vertex v : path) u.insert(v);
    InducedSubgraph sub = induced_subgraph(g, u);
    tr.step("search", {{"n", n}, {"min_length", 2 * n}, {"union", js(u)}});
    HoleResult r = find_hole_at_least(sub.graph, 2 * n, limits);
    if (!r.complete()) throw BudgetExhausted("restricted hole search did not finish");
    if (!r.hole)
      throw detail::EngineFailure("audit case: no hole of length >= " + s(2 * n) +
                                  " inside the impression's vertex union");
    Hole h{sub.lift(r.hole->cycle)};
    if (auto why = check_hole(g, h)) throw detail::EngineFailure("lifted cycle is not a hole: " + *why);
    tr.outcome = ser::to_json(h);
    return h;
  });
}

}  // namespace chib
