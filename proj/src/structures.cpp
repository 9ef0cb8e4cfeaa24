#include "chib/structures.hpp"

#include <algorithm>
#include <sstream>

#include "chib/errors.hpp"

namespace chib {

namespace {

std::string s(Vertex v) { return std::to_string(v); }

std::optional<Edge> edge_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex u : a) {
    VertexSet hit = g.neighbors(u) & b;
    if (!hit.empty()) return Edge{u, hit.first()};
  }
  return std::nullopt;
}

std::optional<Edge> edge_within(const Graph& g, const VertexSet& a) {
  for (Vertex u : a) {
    Vertex w = (g.neighbors(u) & a).next(u);
    if (w != -1) return Edge{u, w};
  }
  return std::nullopt;
}

// A vertex of `inner` missing from `outer`, or -1.
Vertex missing(const VertexSet& inner, const VertexSet& outer) { return (inner - outer).first(); }

bool ids_ok(const Graph& g, const std::vector<Vertex>& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return g.valid(v); });
}

bool universe_ok(const Graph& g, const VertexSet& x) { return x.universe() == g.order(); }

}  // namespace

VertexSet Multicover::x_set(int universe) const { return VertexSet::of(universe, X); }

VertexSet Multicover::n_union(int universe) const {
  VertexSet out(universe);
  for (const auto& n : N) out |= n;
  return out;
}

int Multicover::index_of(Vertex x) const {
  auto it = std::find(X.begin(), X.end(), x);
  return it == X.end() ? -1 : static_cast<int>(it - X.begin());
}

Cable Cable::base_only(int h, VertexSet C) {
  Cable c;
  c.h = h;
  c.C = std::move(C);
  return c;
}

bool Verdict::has(const std::string& clause) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.clause == clause; });
}

std::vector<std::string> Verdict::clauses() const {
  std::vector<std::string> out;
  for (const auto& v : violations) out.push_back(v.clause);
  return out;
}

std::string Verdict::describe() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].clause << ": " << violations[i].message;
  }
  return out.str();
}

void Verdict::add(std::string clause, std::string message, std::vector<Vertex> witness) {
  if (has(clause)) return;
  violations.push_back({std::move(clause), std::move(message), std::move(witness)});
}

void Verdict::merge(const Verdict& other, const std::string& prefix) {
  for (const auto& v : other.violations) add(prefix + v.clause, v.message, v.witness);
}

Verdict verify_cover(const Graph& g, const Cover& cover) {
  Verdict v;
  if (!g.valid(cover.x) || !universe_ok(g, cover.N) || !universe_ok(g, cover.C)) {
    v.add("vertex_ids", "cover refers to vertices outside the graph");
    return v;
  }
  if (Vertex n = missing(cover.N, g.neighbors(cover.x)); n != -1) {
    v.add("N_subset_neighbors", "N contains " + s(n) + ", not a neighbour of x=" + s(cover.x), {n, cover.x});
  }
  if (Vertex c = (cover.C & cover.N.with(cover.x)).first(); c != -1) {
    v.add("C_disjoint", "C meets N + {x} at " + s(c), {c});
  }
  if (Vertex c = (cover.C & g.neighbors(cover.x)).first(); c != -1) {
    v.add("x_anticomplete_C", "x not anticomplete to C: x=" + s(cover.x) + " adjacent to " + s(c), {cover.x, c});
  }
  for (Vertex c : cover.C) {
    if (!g.neighbors(c).intersects(cover.N)) {
      v.add("N_covers_C", "vertex " + s(c) + " of C has no neighbour in N", {c});
      break;
    }
  }
  return v;
}

Verdict verify_multicover(const Graph& g, const Multicover& mc, bool require_stable_N) {
  Verdict v;
  if (mc.X.size() != mc.N.size()) {
    v.add("shape", "X has " + std::to_string(mc.X.size()) + " members but " + std::to_string(mc.N.size()) +
                       " N sets are given");
    return v;
  }
  bool bad = !ids_ok(g, mc.X) || !universe_ok(g, mc.C);
  for (const auto& n : mc.N) bad = bad || !universe_ok(g, n);
  if (bad) {
    v.add("vertex_ids", "multicover refers to vertices outside the graph");
    return v;
  }
  VertexSet xs(g.order());
  for (Vertex x : mc.X) {
    if (xs.contains(x)) v.add("X_distinct", "x=" + s(x) + " listed twice", {x});
    xs.insert(x);
  }
  if (auto e = edge_within(g, xs)) v.add("X_stable", "X has edge " + s(e->first) + "-" + s(e->second), {e->first, e->second});
  for (int i = 0; i < mc.size(); ++i) v.merge(verify_cover(g, mc.cover(i)), "cover.");
  for (int i = 0; i < mc.size(); ++i) {
    for (int j = 0; j < mc.size(); ++j) {
      if (i == j) continue;
      Vertex x = mc.X[static_cast<std::size_t>(i)], y = mc.X[static_cast<std::size_t>(j)];
      const VertexSet& nx = mc.N[static_cast<std::size_t>(i)];
      if (Vertex w = (g.neighbors(y) & nx).first(); w != -1) {
        v.add("cross_anticomplete", "x'=" + s(y) + " adjacent to " + s(w) + " in N_" + s(x), {y, w});
      }
      if (j > i) {
        VertexSet a = nx.with(x), b = mc.N[static_cast<std::size_t>(j)].with(y);
        if (Vertex w = (a & b).first(); w != -1) {
          v.add("sets_disjoint", "{x}+N_x for x=" + s(x) + " and x=" + s(y) + " share " + s(w), {w});
        }
      }
    }
  }
  if (require_stable_N) {
    for (int i = 0; i < mc.size(); ++i) {
      if (auto e = edge_within(g, mc.N[static_cast<std::size_t>(i)])) {
        v.add("N_stable", "N_" + s(mc.X[static_cast<std::size_t>(i)]) + " has edge " + s(e->first) + "-" + s(e->second),
              {e->first, e->second});
      }
    }
  }
  return v;
}

Verdict verify_containment(const Multicover& outer, const Multicover& inner) {
  Verdict v;
  for (int i = 0; i < inner.size(); ++i) {
    Vertex x = inner.X[static_cast<std::size_t>(i)];
    int o = outer.index_of(x);
    if (o < 0) {
      v.add("X_subset", "x=" + s(x) + " is not in the outer X", {x});
      continue;
    }
    const VertexSet& a = inner.N[static_cast<std::size_t>(i)];
    const VertexSet& b = outer.N[static_cast<std::size_t>(o)];
    Vertex w = a.universe() == b.universe() ? missing(a, b) : -2;
    if (w != -1) v.add("N_subset", "N'_" + s(x) + " is not contained in N_" + s(x), {x, w});
  }
  return v;
}

Verdict verify_tick(const Graph& g, const Tick& tick) {
  Verdict v;
  if (tick.X.size() != tick.knees.size()) {
    v.add("shape", "knees are not aligned with X");
    return v;
  }
  if (!ids_ok(g, tick.X) || !ids_ok(g, tick.knees) || !g.valid(tick.apex)) {
    v.add("vertex_ids", "tick refers to vertices outside the graph");
    return v;
  }
  VertexSet xs = VertexSet::of(g.order(), tick.X);
  if (xs.size() != static_cast<int>(tick.X.size())) v.add("distinct", "X lists a vertex twice");
  if (auto e = edge_within(g, xs)) v.add("X_stable", "X has edge " + s(e->first) + "-" + s(e->second), {e->first, e->second});
  VertexSet outside(g.order());
  std::vector<Vertex> listed{tick.apex};
  listed.insert(listed.end(), tick.knees.begin(), tick.knees.end());
  for (Vertex u : listed) {
    if (xs.contains(u)) v.add("distinct", "tick vertex " + s(u) + " lies in X", {u});
    if (outside.contains(u)) v.add("distinct", "tick vertex " + s(u) + " repeats", {u});
    outside.insert(u);
  }
  if (Vertex x = (g.neighbors(tick.apex) & xs).first(); x != -1) {
    v.add("apex_anticomplete_X", "apex " + s(tick.apex) + " adjacent to x=" + s(x), {tick.apex, x});
  }
  for (std::size_t i = 0; i < tick.X.size(); ++i) {
    Vertex x = tick.X[i], k = tick.knees[i];
    if (!g.adjacent(k, tick.apex)) v.add("knee_adjacent_apex", "knee " + s(k) + " not adjacent to apex", {k, tick.apex});
    if (!g.adjacent(k, x)) v.add("knee_adjacent_x", "knee " + s(k) + " not adjacent to x=" + s(x), {k, x});
    if (Vertex y = (g.neighbors(k) & xs.without(x)).first(); y != -1) {
      v.add("knee_anticomplete_other_X", "knee " + s(k) + " of x=" + s(x) + " adjacent to " + s(y), {k, y});
    }
  }
  return v;
}

Verdict verify_tick_tangent(const Graph& g, const Tick& tick, const Multicover& mc) {
  Verdict v = verify_tick(g, tick);
  if (v.has("vertex_ids") || v.has("shape")) return v;
  Verdict m = verify_multicover(g, mc);
  if (m.has("vertex_ids") || m.has("shape")) {
    v.merge(m, "multicover.");
    return v;
  }
  VertexSet tx = VertexSet::of(g.order(), tick.X);
  if (tx != mc.x_set(g.order())) v.add("X_mismatch", "tick X differs from the multicover's X");
  VertexSet body = mc.C | mc.n_union(g.order());
  VertexSet f(g.order());
  f.insert(tick.apex);
  for (Vertex k : tick.knees) f.insert(k);
  f -= tx;
  if (Vertex u = (body & f).first(); u != -1) {
    v.add("tangent", "tick vertex " + s(u) + " lies in C or some N_x", {u});
  } else if (auto e = edge_between(g, f, body)) {
    v.add("tangent", "tick vertex " + s(e->first) + " adjacent to " + s(e->second) + " in C or some N_x",
          {e->first, e->second});
  }
  return v;
}

Verdict verify_impression(const Graph& g, const Impression& imp) {
  Verdict v;
  const auto edges = imp.pattern.edges();
  if (static_cast<int>(imp.vertex_map.size()) != imp.pattern.order() || imp.paths.size() != edges.size()) {
    v.add("shape", "vertex map or path list does not match the pattern");
    return v;
  }
  bool bad = !ids_ok(g, imp.vertex_map);
  for (const auto& p : imp.paths) bad = bad || !ids_ok(g, p);
  if (bad) {
    v.add("vertex_ids", "impression refers to vertices outside the graph");
    return v;
  }
  VertexSet branch(g.order());
  for (Vertex u : imp.vertex_map) {
    if (branch.contains(u)) v.add("injective", "two pattern vertices map to " + s(u), {u});
    branch.insert(u);
  }
  if (auto e = edge_within(g, branch)) {
    v.add("branch_stable", "branch vertices " + s(e->first) + "," + s(e->second) + " are adjacent", {e->first, e->second});
  }
  std::vector<VertexSet> body;
  int longest = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& p = imp.paths[e];
    auto [a, b] = edges[e];
    int len = static_cast<int>(p.size()) - 1;
    longest = std::max(longest, len);
    if (len < 2) v.add("path_length", "path for pattern edge " + s(a) + "-" + s(b) + " has length " + s(len));
    if (p.empty() || p.front() != imp.vertex_map[static_cast<std::size_t>(a)] ||
        p.back() != imp.vertex_map[static_cast<std::size_t>(b)]) {
      v.add("path_ends", "path for pattern edge " + s(a) + "-" + s(b) + " does not join the images of its ends");
    }
    VertexSet vs(g.order());
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (vs.contains(p[i])) v.add("path_is_path", "path repeats vertex " + s(p[i]), {p[i]});
      vs.insert(p[i]);
      if (i > 0 && !g.adjacent(p[i - 1], p[i])) {
        v.add("path_is_path", "path step " + s(p[i - 1]) + "-" + s(p[i]) + " is not an edge", {p[i - 1], p[i]});
      }
    }
    body.push_back(vs);
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      auto [a, b] = edges[e];
      auto [c, d] = edges[f];
      if (a == c || a == d || b == c || b == d) continue;
      if (Vertex w = (body[e] & body[f]).first(); w != -1) {
        v.add("nonincident_disjoint", "paths of non-incident edges share " + s(w), {w});
      } else if (auto x = edge_between(g, body[e], body[f])) {
        v.add("nonincident_anticomplete", "paths of non-incident edges joined by " + s(x->first) + "-" + s(x->second),
              {x->first, x->second});
      }
    }
  }
  if (imp.order != longest) {
    v.add("order", "declared order " + s(imp.order) + " but the longest path has length " + s(longest));
  }
  return v;
}

Verdict verify_cable(const Graph& g, const Cable& cable) {
  Verdict v;
  const int t = cable.length();
  const std::size_t ts = static_cast<std::size_t>(t);
  if (cable.h < 1 || cable.N.size() != ts || cable.Y.size() != ts || cable.Z.size() != ts ||
      std::any_of(cable.Z.begin(), cable.Z.end(), [&](const auto& row) { return row.size() != ts; })) {
    v.add("shape", "cable parts are not sized for length " + s(t));
    return v;
  }
  bool bad = !universe_ok(g, cable.C);
  for (std::size_t i = 0; i < ts; ++i) {
    bad = bad || !ids_ok(g, cable.X[i]) || !universe_ok(g, cable.N[i]) || !universe_ok(g, cable.Y[i]);
    for (const auto& z : cable.Z[i]) bad = bad || !universe_ok(g, z);
  }
  if (bad) {
    v.add("vertex_ids", "cable refers to vertices outside the graph");
    return v;
  }
  const int n = g.order();
  std::vector<VertexSet> xs;
  for (const auto& x : cable.X) xs.push_back(VertexSet::of(n, x));
  auto z = [&](int i, int j) -> const VertexSet& { return cable.z(i, j); };

  for (int i = 0; i < t; ++i) {
    const auto& xi = xs[static_cast<std::size_t>(i)];
    if (xi.size() != cable.h || static_cast<int>(cable.X[static_cast<std::size_t>(i)].size()) != cable.h ||
        !is_clique(g, xi)) {
      v.add("X_clique", "X_" + s(i) + " is not an " + s(cable.h) + "-clique");
    }
    for (int j = 0; j < t; ++j) {
      if (j <= i && !z(i, j).empty()) v.add("shape", "Z_" + s(i) + "," + s(j) + " must be empty (j <= i)");
    }
  }
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      const auto& a = xs[static_cast<std::size_t>(i)];
      const auto& b = xs[static_cast<std::size_t>(j)];
      if (Vertex w = (a & b).first(); w != -1) v.add("X_disjoint", "X_" + s(i) + " and X_" + s(j) + " share " + s(w), {w});
      if (auto e = edge_between(g, a, b)) {
        v.add("X_anticomplete", "X_" + s(i) + " and X_" + s(j) + " joined by " + s(e->first) + "-" + s(e->second),
              {e->first, e->second});
      }
      if (Vertex w = (cable.N[static_cast<std::size_t>(i)] & cable.N[static_cast<std::size_t>(j)]).first(); w != -1) {
        v.add("N_disjoint", "N_" + s(i) + " and N_" + s(j) + " share " + s(w), {w});
      }
    }
  }
  VertexSet core(n);
  for (int i = 0; i < t; ++i) {
    const auto& xi = xs[static_cast<std::size_t>(i)];
    const auto& ni = cable.N[static_cast<std::size_t>(i)];
    core |= xi;
    core |= ni;
    for (Vertex u : ni) {
      if (xi.contains(u) || !xi.is_subset_of(g.neighbors(u))) {
        v.add("N_subset_N1", "vertex " + s(u) + " of N_" + s(i) + " is not complete to X_" + s(i), {u});
        break;
      }
    }
    std::vector<std::pair<std::string, const VertexSet*>> parts{{"Y_" + s(i), &cable.Y[static_cast<std::size_t>(i)]}};
    for (int j = i + 1; j < t; ++j) parts.emplace_back("Z_" + s(i) + "," + s(j), &z(i, j));
    for (std::size_t a = 0; a < parts.size(); ++a) {
      if (Vertex w = missing(*parts[a].second, ni); w != -1) {
        v.add("YZ_subset_N", parts[a].first + " has " + s(w) + " outside N_" + s(i), {w});
      }
      for (std::size_t b = a + 1; b < parts.size(); ++b) {
        if (Vertex w = (*parts[a].second & *parts[b].second).first(); w != -1) {
          v.add("YZ_disjoint", parts[a].first + " and " + parts[b].first + " share " + s(w), {w});
        }
      }
    }
  }
  if (Vertex w = (cable.C & core).first(); w != -1) v.add("C_disjoint", "base meets the X/N sets at " + s(w), {w});

  for (int i = 0; i < t; ++i) {
    const auto& yi = cable.Y[static_cast<std::size_t>(i)];
    for (Vertex c : cable.C) {
      if (!g.neighbors(c).intersects(yi)) {
        v.add("C1", "Y_" + s(i) + " does not cover base vertex " + s(c), {c});
        break;
      }
    }
    for (int j = i + 1; j < t; ++j) {
      if (auto e = edge_between(g, cable.C, z(i, j))) {
        v.add("C1", "base vertex " + s(e->first) + " adjacent to " + s(e->second) + " in Z_" + s(i) + "," + s(j),
              {e->first, e->second});
      }
    }
    if (auto e = edge_between(g, cable.C, xs[static_cast<std::size_t>(i)])) {
      v.add("C1", "base vertex " + s(e->first) + " adjacent to " + s(e->second) + " in X_" + s(i), {e->first, e->second});
    }
  }
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      const auto& xj = xs[static_cast<std::size_t>(j)];
      if (auto e = edge_between(g, xs[static_cast<std::size_t>(i)], cable.N[static_cast<std::size_t>(j)])) {
        v.add("C2", "X_" + s(i) + " vertex " + s(e->first) + " adjacent to " + s(e->second) + " in N_" + s(j),
              {e->first, e->second});
      }
      for (Vertex w : z(i, j)) {
        if (xj.is_subset_of(g.neighbors(w))) {
          v.add("C3", "vertex " + s(w) + " of Z_" + s(i) + "," + s(j) + " is complete to X_" + s(j), {w});
          break;
        }
      }
      for (int k = j + 1; k < t; ++k) {
        VertexSet target = xs[static_cast<std::size_t>(k)] | cable.N[static_cast<std::size_t>(k)];
        if (auto e = edge_between(g, z(i, j), target)) {
          v.add("C4", "Z_" + s(i) + "," + s(j) + " vertex " + s(e->first) + " adjacent to " + s(e->second) +
                          " in X_" + s(k) + " + N_" + s(k),
                {e->first, e->second});
        }
      }
      if (pair_type_unchecked(g, cable, i, j) == PairType::neither) {
        v.add("C5", "pair (" + s(i) + "," + s(j) + ") satisfies neither alternative", {});
      }
    }
  }
  return v;
}

std::vector<AxiomStatus> cable_axiom_report(const Verdict& verdict) {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> groups{
      {"fields", {"shape", "vertex_ids", "X_clique", "X_disjoint", "X_anticomplete", "N_subset_N1", "N_disjoint",
                  "YZ_subset_N", "YZ_disjoint", "C_disjoint"}},
      {"C1", {"C1"}}, {"C2", {"C2"}}, {"C3", {"C3"}}, {"C4", {"C4"}}, {"C5", {"C5"}}};
  std::vector<AxiomStatus> out;
  for (const auto& [name, clauses] : groups) {
    AxiomStatus st{name, true, ""};
    for (const auto& v : verdict.violations) {
      if (std::find(clauses.begin(), clauses.end(), v.clause) == clauses.end()) continue;
      st.ok = false;
      if (!st.message.empty()) st.message += "; ";
      st.message += v.clause + ": " + v.message;
    }
    out.push_back(st);
  }
  return out;
}

const char* to_string(PairType t) {
  switch (t) {
    case PairType::type1: return "type1";
    case PairType::type2: return "type2";
    case PairType::neither: return "neither";
  }
  return "?";
}

PairType pair_type_unchecked(const Graph& g, const Cable& cable, int i, int j) {
  const VertexSet& y = cable.Y[static_cast<std::size_t>(i)];
  const VertexSet& zij = cable.z(i, j);
  const auto& xj = cable.X[static_cast<std::size_t>(j)];
  bool some_free = std::any_of(xj.begin(), xj.end(), [&](Vertex x) { return !g.neighbors(x).intersects(y); });
  if (some_free && zij.empty()) return PairType::type1;
  bool complete = std::all_of(xj.begin(), xj.end(), [&](Vertex x) { return y.is_subset_of(g.neighbors(x)); });
  bool covered = true;
  for (Vertex u : cable.N[static_cast<std::size_t>(j)]) covered = covered && g.neighbors(u).intersects(zij);
  if (complete && covered) return PairType::type2;
  return PairType::neither;
}

PairType cable_pair_type(const Graph& g, const Cable& cable, int i, int j) {
  if (!(0 <= i && i < j && j < cable.length())) {
    throw InputError("cable_pair_type: need 0 <= i < j < " + std::to_string(cable.length()));
  }
  Verdict v = verify_cable(g, cable);
  if (!v.ok()) throw InputError("cable_pair_type: cable does not verify: " + v.describe());
  PairType t = pair_type_unchecked(g, cable, i, j);
  if (t == PairType::neither) throw std::logic_error("verified cable has a pair of neither type");
  return t;
}

Cable subcable(const Graph& g, const Cable& cable, const std::vector<int>& indices) {
  Verdict v = verify_cable(g, cable);
  if (!v.ok()) throw InputError("subcable: cable does not verify: " + v.describe());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    if (indices[a] < 0 || indices[a] >= cable.length() || (a > 0 && indices[a] <= indices[a - 1])) {
      throw InputError("subcable: indices must be increasing and inside 0.." + std::to_string(cable.length() - 1));
    }
  }
  Cable out = Cable::base_only(cable.h, cable.C);
  const std::size_t len = indices.size();
  out.Z.assign(len, std::vector<VertexSet>(len, VertexSet(g.order())));
  for (std::size_t a = 0; a < len; ++a) {
    auto i = static_cast<std::size_t>(indices[a]);
    out.X.push_back(cable.X[i]);
    out.N.push_back(cable.N[i]);
    out.Y.push_back(cable.Y[i]);
    for (std::size_t b = a + 1; b < len; ++b) out.Z[a][b] = cable.Z[i][static_cast<std::size_t>(indices[b])];
  }
  return out;
}

}  // namespace chib
