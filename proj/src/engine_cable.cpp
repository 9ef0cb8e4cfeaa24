#include <algorithm>
#include <map>

#include "engine_util.hpp"

namespace chib {

using detail::chi_claim;
using detail::js;

namespace {

std::string s(long long v) { return std::to_string(v); }

std::size_t u(int i) { return static_cast<std::size_t>(i); }

}  // namespace

PairColoring::PairColoring(int t, int h) : t_(t), h_(h) {
  if (t < 0) throw InputError("PairColoring: t must be nonnegative");
  if (h < 1) throw InputError("PairColoring: h must be at least 1");
  c_.assign(u(t) * u(t), 0);
}

int PairColoring::get(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= t_ || i == j) throw InputError("PairColoring: bad pair (" + s(i) + "," + s(j) + ")");
  return c_[u(i) * u(t_) + u(j)];
}

void PairColoring::set(int i, int j, int colour) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= t_ || i == j) throw InputError("PairColoring: bad pair (" + s(i) + "," + s(j) + ")");
  if (colour < 0 || colour >= h_) throw InputError("PairColoring: colour out of range");
  c_[u(i) * u(t_) + u(j)] = colour;
}

namespace {

// Lexicographically first m-subset extending `chosen` whose pairs all have colour c.
bool extend(const PairColoring& col, int m, int c, std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) == m) return true;
  const int need = m - static_cast<int>(chosen.size());
  const int start = chosen.empty() ? 0 : chosen.back() + 1;
  for (int v = start; v + need <= col.t(); ++v) {
    bool ok = true;
    for (int w : chosen)
      if (col.get(w, v) != c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(v);
    if (extend(col, m, c, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<MonoSubset> monochromatic_subset(const PairColoring& colours, int m) {
  if (m < 1) throw InputError("monochromatic_subset: m must be at least 1");
  for (int c = 0; c < colours.h(); ++c) {
    std::vector<int> chosen;
    if (extend(colours, m, c, chosen)) return MonoSubset{chosen, c};
  }
  return std::nullopt;
}

EngineRun<Multicover> type1_extract_multicover(const Graph& g, const Cable& cable, int m, bool check_length) {
  if (m < 1) throw InputError("type1_extract_multicover: m must be at least 1");
  return detail::run_guarded<Multicover>("type1_extract_multicover", [&](EngineTranscript& tr) {
    if (Verdict v = verify_cable(g, cable); !v.ok()) throw PreconditionError("cable does not verify: " + v.describe());
    const int t = cable.length();
    BoundBuilder b;
    BoundExpr need = ramsey_upper(b, static_cast<unsigned long>(cable.h), static_cast<unsigned long>(m));
    if (check_length && !at_most(need, t))
      throw PreconditionError("cable length " + s(t) + " is below ramsey_upper(h, m) = " + need.summary());
    tr.hypothesis("length >= ramsey_upper(h, m)", check_length ? HypothesisStatus::verified : HypothesisStatus::assumed,
                  "t = " + s(t) + ", bound = " + need.summary());
    PairColoring col(t, cable.h);
    nlohmann::json fj = nlohmann::json::array();
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) {
        if (pair_type_unchecked(g, cable, i, j) != PairType::type1)
          throw PreconditionError("pair (" + s(i) + "," + s(j) + ") is not type 1");
        const auto& xj = cable.X[u(j)];
        int r = -1;
        for (std::size_t q = 0; q < xj.size(); ++q)
          if (is_anticomplete_between(g, g.make_set({xj[q]}), cable.Y[u(i)])) {
            r = static_cast<int>(q);
            break;
          }
        if (r < 0) throw detail::EngineFailure("no member of X_" + s(j) + " is anticomplete to Y_" + s(i));
        col.set(i, j, r);
        fj.push_back({{"i", i}, {"j", j}, {"r", r}, {"x", xj[u(r)]}});
      }
    tr.step("f", {{"f", fj}});
    auto mono = monochromatic_subset(col, m);
    if (!mono) throw detail::EngineFailure("no monochromatic " + s(m) + "-subset (length below the Ramsey bound)");
    tr.step("ramsey", {{"I", mono->indices}, {"r", mono->colour}});
    std::vector<std::pair<Vertex, VertexSet>> members;
    for (int j : mono->indices) {
      const auto& xj = cable.X[u(j)];
      if (u(mono->colour) >= xj.size()) throw detail::EngineFailure("X_" + s(j) + " has no member " + s(mono->colour));
      members.emplace_back(xj[u(mono->colour)], cable.Y[u(j)]);
    }
    std::sort(members.begin(), members.end());
    Multicover mc;
    for (auto& [x, n] : members) {
      mc.X.push_back(x);
      mc.N.push_back(n);
    }
    mc.C = cable.C;
    if (Verdict v = verify_multicover(g, mc); !v.ok())
      throw detail::EngineFailure("extracted multicover does not verify: " + v.describe());
    tr.outcome = ser::to_json(mc);
    return mc;
  });
}

EngineRun<Hole> type2_construct_hole(const Graph& g, const Cable& cable, int ell, int tau, const SolverLimits& limits) {
  if (ell < 5) throw InputError("type2_construct_hole: ell must be at least 5");
  if (tau < 0) throw InputError("type2_construct_hole: tau must be nonnegative");
  return detail::run_guarded<Hole>("type2_construct_hole", [&](EngineTranscript& tr) {
    const int t = ell - 3;
    if (cable.length() != t) throw PreconditionError("cable length " + s(cable.length()) + " differs from ell-3 = " + s(t));
    if (Verdict v = verify_cable(g, cable); !v.ok()) throw PreconditionError("cable does not verify: " + v.describe());
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j)
        if (pair_type_unchecked(g, cable, i, j) != PairType::type2)
          throw PreconditionError("pair (" + s(i) + "," + s(j) + ") is not type 2");
    ChiOracle oracle(g, limits);
    tr.step("base");
    int chi_c = chi_claim(oracle, tr, "C", cable.C);
    if (chi_c <= static_cast<long long>(t) * tau)
      throw PreconditionError("chi(C) = " + s(chi_c) + " is not above (ell-3)*tau = " + s(static_cast<long long>(t) * tau));
    tr.hypothesis("chi(C) > (ell-3)tau", HypothesisStatus::verified);

    // z_t, z_{t-1}, x_t, then the chain down to z_1 (0-based: z[t-1] .. z[0]).
    std::vector<Vertex> z(u(t), -1);
    z[u(t - 1)] = cable.Y[u(t - 1)].first();
    if (z[u(t - 1)] < 0) throw detail::EngineFailure("(C1) guarantees z_t exists, but Y_{t,t} is empty");
    for (int i = t - 2; i >= 0; --i) {
      z[u(i)] = (cable.z(i, i + 1) & g.neighbors(z[u(i + 1)])).first();
      if (z[u(i)] < 0)
        throw detail::EngineFailure("type 2 guarantees z_" + s(i + 1) + " in Z_{" + s(i + 1) + "," + s(i + 2) +
                                    "} adjacent to z_" + s(i + 2) + ", none found");
    }
    Vertex xt = -1;
    for (Vertex x : cable.X[u(t - 1)])
      if (!g.adjacent(x, z[u(t - 2)])) {
        xt = x;
        break;
      }
    if (xt < 0) throw detail::EngineFailure("(C3) guarantees x_t in X_t nonadjacent to z_{t-1}, none found");
    tr.step("chain", {{"z", z}, {"x_t", xt}});

    // tau on the touched cliques X_i + z_i, and the sets C_i.
    VertexSet blocked = g.empty_set();
    for (int i = 0; i < t; ++i) {
      VertexSet clique = g.make_set(cable.X[u(i)]).with(z[u(i)]);
      VertexSet second = n2(g, clique);
      int c = chi_claim(oracle, tr, "N2(X_" + s(i + 1) + "+z_" + s(i + 1) + ")", second);
      if (c > tau)
        throw PreconditionError("chi(N2(X_" + s(i + 1) + " + z_" + s(i + 1) + ")) = " + s(c) + " > tau");
      VertexSet ci = cable.C & neighborhood_of(g, cable.Y[0] & g.neighbors(z[u(i)]));
      blocked |= ci;
    }
    tr.hypothesis("chi(N2(X)) <= tau on the touched (h+1)-cliques", HypothesisStatus::verified);
    Vertex uu = (cable.C - blocked).first();
    if (uu < 0) throw detail::EngineFailure("chi(C) > t*tau guarantees u outside C_1..C_t, none found");
    Vertex v = (cable.Y[0] & g.neighbors(uu)).first();
    if (v < 0) throw detail::EngineFailure("(C1) guarantees v in Y_{1,t} adjacent to u, none found");
    Vertex x1 = cable.X[0].empty() ? -1 : *std::min_element(cable.X[0].begin(), cable.X[0].end());
    if (x1 < 0) throw detail::EngineFailure("X_1 is empty");
    tr.step("close", {{"u", uu}, {"v", v}, {"x_1", x1}});
    Hole h;
    h.cycle.push_back(v);
    h.cycle.push_back(x1);
    for (Vertex w : z) h.cycle.push_back(w);
    h.cycle.push_back(xt);
    if (auto why = check_hole(g, h)) throw detail::EngineFailure("constructed cycle is not a hole: " + *why);
    if (h.length() != ell) throw detail::EngineFailure("hole length " + s(h.length()) + " differs from ell");
    tr.outcome = ser::to_json(h);
    return h;
  });
}

namespace {

struct SigmaThresholds {
  std::vector<BoundExpr> sigma;
};

// d_i = (h+1)^(s-i) sigma_{s+1}.
BoundExpr d_value(const BoundBuilder& b, const SigmaThresholds& st, int h, int s_, int i) {
  return b.mul(b.pow(b.constant(static_cast<unsigned long>(h + 1)), b.constant(static_cast<unsigned long>(s_ - i))),
               st.sigma[u(s_ + 1)]);
}

bool above(int chi, const BoundExpr& threshold) { return chi > 0 && at_most(threshold, chi - 1); }

Cable grow_step(ChiOracle& oracle, EngineTranscript& tr, const Cable& cable, const GrowCableParams& p,
                const std::optional<SigmaThresholds>& ladder, const std::string& pre) {
  const Graph& g = oracle.graph();
  const int h = cable.h;
  const int s_ = cable.length();
  const long long thr = static_cast<long long>(p.tau) + static_cast<long long>(h) * p.kappa;
  const bool literal = p.mode == CableMode::literal;
  BoundBuilder b;
  const VertexSet& C = cable.C;

  // Fingerprints f_{i,v}.
  tr.step(pre + "fingerprint", {{"threshold", thr}});
  std::map<std::vector<int>, VertexSet> fibers;
  for (Vertex v : C) {
    std::vector<int> f;
    for (int i = 0; i < s_; ++i) {
      VertexSet civ = (C & neighborhood_of(g, cable.Y[u(i)] & g.neighbors(v))) - g.neighbors(v);
      civ.erase(v);
      int bit = 0;
      if (civ.size() > thr) bit = chi_claim(oracle, tr, "C_" + s(i + 1) + "," + s(v), civ) > thr ? 1 : 0;
      f.push_back(bit);
    }
    fibers.try_emplace(f, g.empty_set()).first->second.insert(v);
  }
  if (fibers.empty()) throw detail::EngineFailure("the base is empty");
  auto [fingerprint, c1] = detail::max_chi_class(oracle, fibers);
  tr.step(pre + "fiber", {{"f", fingerprint}, {"C1", js(c1.set)}});
  tr.claim("C1", c1.set, c1.chi);

  // The clique X_{s+1}.
  std::optional<VertexSet> xset;
  int d0chi = 0;
  if (literal) {
    BoundExpr d0 = d_value(b, *ladder, h, s_, 0);
    BoundExpr phi_d0 = (*p.phi)(d0);
    if (d0.exact() && at_most(d0, 1LL << 40)) {
      auto r = find_clique_with_large_n2(oracle, c1.set, h, static_cast<long long>(d0.value().get_si()));
      if (r.status != SolveStatus::complete && !r.clique) throw BudgetExhausted("clique search did not finish");
      if (r.clique) {
        xset = r.clique;
        d0chi = r.n2_chi;
      }
    }
    if (!xset) {
      if (above(c1.chi, phi_d0))
        throw PreconditionError("clique control falsified: chi(C1) = " + s(c1.chi) + " > phi(d_0) = " + phi_d0.summary() +
                                " but no " + s(h) + "-clique has chi(N2) > d_0 = " + d0.summary());
      throw detail::EngineFailure("chi(C1) = " + s(c1.chi) + " does not exceed phi(d_0) = " + phi_d0.summary() +
                                  " (the base is below the sigma ladder)");
    }
  } else {
    bool incomplete = false;
    for_each_clique(g, c1.set, h, [&](const VertexSet& x) {
      VertexSet second = n2(g, x, c1.set);
      if (second.size() <= d0chi) return true;
      ChiResult r = oracle.solve(second);
      if (!r.complete()) {
        incomplete = true;
        return false;
      }
      if (r.chi() > d0chi) {
        d0chi = r.chi();
        xset = x;
      }
      return true;
    });
    if (incomplete) throw BudgetExhausted("chi of a second neighbourhood did not finish");
    if (!xset) {
      if (p.phi && above(c1.chi, (*p.phi)(b.constant(0UL))))
        throw PreconditionError("clique control falsified: chi(C1) = " + s(c1.chi) + " > phi(0) but no " + s(h) +
                                "-clique of G[C1] has a nonempty N2");
      throw detail::EngineFailure("no " + s(h) + "-clique of G[C1] has a nonempty N2 (chi(C1) = " + s(c1.chi) + ")");
    }
  }
  const VertexSet& X = *xset;
  const VertexSet nnew = n1(g, X, c1.set);
  VertexSet D = n2(g, X, c1.set);
  tr.step(pre + "clique", {{"X", js(X)}, {"N", js(nnew)}, {"D0", js(D)}});
  tr.claim("D0", D, d0chi);

  // tau on the touched cliques X + v.
  for (Vertex v : nnew) {
    VertexSet sec = n2(g, X.with(v));
    int c = chi_claim(oracle, tr, "N2(X+" + s(v) + ")", sec);
    if (c > p.tau) throw PreconditionError("chi(N2(X_{s+1} + " + s(v) + ")) = " + s(c) + " > tau");
  }

  Cable out = cable;
  out.X.push_back(X.to_vector());
  out.N.push_back(nnew);
  out.Y.push_back(nnew);
  for (auto& row : out.Z) row.push_back(g.empty_set());
  out.Z.emplace_back(u(s_ + 1), g.empty_set());
  nlohmann::json cases = nlohmann::json::array();
  for (int i = 0; i < s_; ++i) {
    const VertexSet& Y = cable.Y[u(i)];
    VertexSet W = g.empty_set();
    for (Vertex y : Y)
      if (X.is_subset_of(g.neighbors(y))) W.insert(y);
    std::vector<std::pair<Vertex, VertexSet>> ux;
    for (Vertex x : X) ux.emplace_back(x, D & neighborhood_of(g, Y - g.neighbors(x)));
    VertexSet uall = g.empty_set();
    for (const auto& [x, set] : ux) uall |= set;
    VertexSet d2 = D - uall;
    const VertexSet z2 = Y - W;
    const bool case2_ok = covers(g, z2, nnew);
    int choice = -1;  // index into ux, or -2 for case 2
    int best = -1;
    if (literal) {
      BoundExpr di = d_value(b, *ladder, h, s_, i + 1);
      for (std::size_t q = 0; q < ux.size() && choice == -1; ++q) {
        int c = chi_claim(oracle, tr, "U_" + s(ux[q].first) + "@" + s(i + 1), ux[q].second);
        if (above(c, di)) {
          choice = static_cast<int>(q);
          best = c;
        }
      }
      if (choice == -1) {
        best = chi_claim(oracle, tr, "D_" + s(i + 1), d2);
        if (!case2_ok || !above(best, di))
          throw detail::EngineFailure("falsification report at i = " + s(i + 1) + ": no U_x exceeds d_i = " + di.summary() +
                                      "; case 2 gives chi(D_i) = " + s(best) +
                                      (case2_ok ? "" : " and Z_{i,s+1} does not cover N_{s+1}"));
        choice = -2;
      }
    } else {
      for (std::size_t q = 0; q < ux.size(); ++q) {
        int c = chi_claim(oracle, tr, "U_" + s(ux[q].first) + "@" + s(i + 1), ux[q].second);
        if (c > best) {
          best = c;
          choice = static_cast<int>(q);
        }
      }
      if (case2_ok) {
        int c = chi_claim(oracle, tr, "D_" + s(i + 1), d2);
        if (c > best) {
          best = c;
          choice = -2;
        }
      }
      if (best <= 0) throw detail::EngineFailure("neither case leaves a nonempty base at i = " + s(i + 1));
    }
    if (choice == -2) {
      D = d2;
      out.Y[u(i)] = W;
      out.Z[u(i)][u(s_)] = z2;
      cases.push_back({{"i", i}, {"case", 2}, {"chi", best}});
    } else {
      Vertex x = ux[u(choice)].first;
      D = ux[u(choice)].second;
      out.Y[u(i)] = Y - g.neighbors(x);
      cases.push_back({{"i", i}, {"case", 1}, {"x", x}, {"chi", best}});
    }
  }
  out.C = D;
  tr.step(pre + "cases", {{"cases", cases}, {"base", js(D)}});
  int chi_new = chi_claim(oracle, tr, "D_s", D);
  if (literal) {
    if (!above(chi_new, ladder->sigma[u(s_ + 1)]))
      throw detail::EngineFailure("new base chi " + s(chi_new) + " is not above sigma_{s+1}");
  } else if (chi_new <= 0) {
    throw detail::EngineFailure("new base is empty");
  }
  if (Verdict v = verify_cable(g, out); !v.ok()) throw detail::EngineFailure("grown cable does not verify: " + v.describe());
  tr.outcome = {{"cable", ser::to_json(out)}, {"fingerprint", fingerprint}, {"cases", cases}, {"base_chi", chi_new}};
  return out;
}

std::optional<SigmaThresholds> literal_ladder(const GrowCableParams& p, int h) {
  if (p.mode != CableMode::literal) return std::nullopt;
  BoundBuilder b;
  SigmaLadder l = sigma_ladder(b, b.constant(static_cast<unsigned long>(p.target_length)), b.constant(p.target_c),
                               b.constant(static_cast<unsigned long>(p.tau)), b.constant(static_cast<unsigned long>(p.kappa)),
                               b.constant(static_cast<unsigned long>(h)), *p.phi);
  if (l.sigma.empty()) throw InputError("grow_cable: literal mode needs an explicit sigma ladder (target length too large)");
  return SigmaThresholds{l.sigma};
}

GrowCableParams with_phi(GrowCableParams p) {
  if (p.kappa < 0 || p.tau < 0) throw InputError("grow_cable: kappa and tau must be nonnegative");
  if (p.mode == CableMode::literal && !p.phi) {
    BoundBuilder b;
    p.phi = phi1_function(b, static_cast<unsigned long>(p.target_length + 3), b.constant(static_cast<unsigned long>(p.kappa)));
  }
  return p;
}

void check_kappa(ChiOracle& oracle, EngineTranscript& tr, int kappa) {
  const Graph& g = oracle.graph();
  tr.step("kappa");
  for (Vertex v = 0; v < g.order(); ++v) {
    int c = chi_claim(oracle, tr, "N1(" + s(v) + ")", g.neighbors(v));
    if (c > kappa) throw PreconditionError("chi(N1(" + s(v) + ")) = " + s(c) + " > kappa");
  }
  tr.hypothesis("chi(N1(v)) <= kappa for all v", HypothesisStatus::verified);
  tr.hypothesis("(h,phi)-clique control", HypothesisStatus::assumed, "operational: the clique search must succeed");
}

}  // namespace

EngineRun<Cable> grow_cable(const Graph& g, const Cable& cable, const GrowCableParams& params) {
  GrowCableParams p = with_phi(params);
  auto ladder = literal_ladder(p, cable.h);
  if (ladder && cable.length() >= p.target_length)
    throw InputError("grow_cable: the cable already has the target length");
  return detail::run_guarded<Cable>("grow_cable", [&](EngineTranscript& tr) {
    if (Verdict v = verify_cable(g, cable); !v.ok()) throw PreconditionError("cable does not verify: " + v.describe());
    ChiOracle oracle(g, p.limits);
    check_kappa(oracle, tr, p.kappa);
    return grow_step(oracle, tr, cable, p, ladder, "");
  });
}

EngineRun<Cable> grow_cable_from_base(const Graph& g, int h, int t, const GrowCableParams& params) {
  if (h < 1) throw InputError("grow_cable_from_base: h must be at least 1");
  if (t < 0) throw InputError("grow_cable_from_base: t must be nonnegative");
  GrowCableParams p = with_phi(params);
  if (p.mode == CableMode::literal) p.target_length = t;
  auto ladder = literal_ladder(p, h);
  Cable current = Cable::base_only(h, g.vertices());
  auto run = detail::run_guarded<Cable>("grow_cable_from_base", [&](EngineTranscript& tr) {
    ChiOracle oracle(g, p.limits);
    check_kappa(oracle, tr, p.kappa);
    if (ladder) {
      int c = chi_claim(oracle, tr, "V(G)", current.C);
      tr.hypothesis("chi(G) > sigma_0", above(c, ladder->sigma[0]) ? HypothesisStatus::verified : HypothesisStatus::failed,
                    "sigma_0 = " + ladder->sigma[0].summary());
    }
    for (int step = 0; step < t; ++step) {
      current = grow_step(oracle, tr, current, p, ladder, "s" + s(step + 1) + "/");
    }
    tr.outcome = {{"cable", ser::to_json(current)}};
    return current;
  });
  if (!run.ok()) {
    // Keep the longest cable reached.
    run.output = current;
    run.transcript.outcome["reached_length"] = current.length();
    run.transcript.outcome["cable"] = ser::to_json(current);
  }
  return run;
}

}  // namespace chib
