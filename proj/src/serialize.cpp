#include "chib/serialize.hpp"

#include <algorithm>

#include "chib/errors.hpp"

namespace chib::ser {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

void expect_kind(const json& j, const char* kind) {
  std::string k = kind_of(j);
  if (k != kind) throw ParseError("expected kind \"" + std::string(kind) + "\", got \"" + k + "\"");
}

long long as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<long long>();
}

Vertex vertex_from_json(const json& j, int n) {
  long long v = as_int(j, "vertex id");
  if (v < 0 || v >= n) throw ParseError("vertex id " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
  return static_cast<Vertex>(v);
}

std::vector<Vertex> list_from_json(const json& j, int n) {
  if (!j.is_array()) throw ParseError("expected a list of vertex ids");
  std::vector<Vertex> out;
  for (const auto& e : j) out.push_back(vertex_from_json(e, n));
  return out;
}

json list_to_json(const std::vector<Vertex>& v) { return json(v); }

}  // namespace

std::string kind_of(const json& j) {
  const json& k = field(j, "kind");
  if (!k.is_string()) throw ParseError("\"kind\" must be a string");
  return k.get<std::string>();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json set_to_json(const VertexSet& s) { return json(s.to_vector()); }

VertexSet set_from_json(const json& j, int n) {
  VertexSet out(n);
  for (Vertex v : list_from_json(j, n)) out.insert(v);
  return out;
}

json to_json(const Cover& c) {
  return {{"kind", "cover"}, {"x", c.x}, {"N", set_to_json(c.N)}, {"C", set_to_json(c.C)}};
}

Cover cover_from_json(const json& j, int n) {
  expect_kind(j, "cover");
  return {vertex_from_json(field(j, "x"), n), set_from_json(field(j, "N"), n), set_from_json(field(j, "C"), n)};
}

json to_json(const Multicover& mc) {
  json members = json::array();
  for (int i = 0; i < mc.size(); ++i) {
    members.push_back({{"x", mc.X[static_cast<std::size_t>(i)]}, {"N", set_to_json(mc.N[static_cast<std::size_t>(i)])}});
  }
  return {{"kind", "multicover"}, {"members", members}, {"C", set_to_json(mc.C)}};
}

Multicover multicover_from_json(const json& j, int n) {
  expect_kind(j, "multicover");
  const json& members = field(j, "members");
  if (!members.is_array()) throw ParseError("\"members\" must be a list");
  std::vector<std::pair<Vertex, VertexSet>> rows;
  for (const auto& m : members) rows.emplace_back(vertex_from_json(field(m, "x"), n), set_from_json(field(m, "N"), n));
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Multicover mc;
  for (auto& [x, nx] : rows) {
    mc.X.push_back(x);
    mc.N.push_back(std::move(nx));
  }
  mc.C = set_from_json(field(j, "C"), n);
  return mc;
}

json to_json(const Tick& t) {
  return {{"kind", "tick"}, {"X", list_to_json(t.X)}, {"apex", t.apex}, {"knees", list_to_json(t.knees)}};
}

Tick tick_from_json(const json& j, int n) {
  expect_kind(j, "tick");
  Tick t;
  t.X = list_from_json(field(j, "X"), n);
  t.apex = vertex_from_json(field(j, "apex"), n);
  t.knees = list_from_json(field(j, "knees"), n);
  if (t.X.size() != t.knees.size()) throw ParseError("tick: \"knees\" must align with \"X\"");
  return t;
}

json to_json(const Impression& imp) {
  json edges = json::array();
  for (auto [u, v] : imp.pattern.edges()) edges.push_back({u, v});
  json paths = json::array();
  auto pe = imp.pattern.edges();
  for (std::size_t e = 0; e < pe.size() && e < imp.paths.size(); ++e) {
    paths.push_back({{"edge", {pe[e].first, pe[e].second}}, {"path", list_to_json(imp.paths[e])}});
  }
  return {{"kind", "impression"},
          {"pattern", {{"n", imp.pattern.order()}, {"edges", edges}}},
          {"vertex_map", list_to_json(imp.vertex_map)},
          {"paths", paths},
          {"order", imp.order}};
}

Impression impression_from_json(const json& j, int n) {
  expect_kind(j, "impression");
  const json& pat = field(j, "pattern");
  long long pn = as_int(field(pat, "n"), "pattern.n");
  if (pn < 0) throw ParseError("pattern.n must be nonnegative");
  std::vector<Edge> edges;
  for (const auto& e : field(pat, "edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("pattern edge must be a pair");
    edges.emplace_back(static_cast<Vertex>(as_int(e[0], "edge end")), static_cast<Vertex>(as_int(e[1], "edge end")));
  }
  Impression imp;
  try {
    imp.pattern = Graph::from_edges(static_cast<int>(pn), edges);
  } catch (const InputError& e) {
    throw ParseError(std::string("pattern: ") + e.what());
  }
  imp.vertex_map = list_from_json(field(j, "vertex_map"), n);
  auto pe = imp.pattern.edges();
  imp.paths.assign(pe.size(), {});
  std::vector<bool> seen(pe.size(), false);
  const json& paths = field(j, "paths");
  if (!paths.is_array()) throw ParseError("\"paths\" must be a list");
  for (const auto& p : paths) {
    const json& e = field(p, "edge");
    if (!e.is_array() || e.size() != 2) throw ParseError("path edge must be a pair");
    Vertex a = static_cast<Vertex>(as_int(e[0], "edge end")), b = static_cast<Vertex>(as_int(e[1], "edge end"));
    std::vector<Vertex> path = list_from_json(field(p, "path"), n);
    if (a > b) {
      std::swap(a, b);
      std::reverse(path.begin(), path.end());
    }
    auto it = std::find(pe.begin(), pe.end(), Edge{a, b});
    if (it == pe.end()) throw ParseError("path given for a non-edge of the pattern");
    auto idx = static_cast<std::size_t>(it - pe.begin());
    if (seen[idx]) throw ParseError("two paths given for one pattern edge");
    seen[idx] = true;
    imp.paths[idx] = std::move(path);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw ParseError("a pattern edge has no path");
  imp.order = static_cast<int>(as_int(field(j, "order"), "order"));
  return imp;
}

json to_json(const Cable& c) {
  json xs = json::array(), ns = json::array(), ys = json::array(), zs = json::array();
  for (int i = 0; i < c.length(); ++i) {
    auto si = static_cast<std::size_t>(i);
    xs.push_back(list_to_json(c.X[si]));
    if (si < c.N.size()) ns.push_back(set_to_json(c.N[si]));
    if (si < c.Y.size()) ys.push_back(set_to_json(c.Y[si]));
    for (int k = i + 1; k < c.length(); ++k) {
      if (si < c.Z.size() && static_cast<std::size_t>(k) < c.Z[si].size() && !c.z(i, k).empty()) {
        zs.push_back({{"i", i}, {"j", k}, {"members", set_to_json(c.z(i, k))}});
      }
    }
  }
  return {{"kind", "cable"}, {"h", c.h}, {"X", xs}, {"N", ns}, {"Y", ys}, {"Z", zs}, {"C", set_to_json(c.C)}};
}

Cable cable_from_json(const json& j, int n) {
  expect_kind(j, "cable");
  Cable c = Cable::base_only(static_cast<int>(as_int(field(j, "h"), "h")), set_from_json(field(j, "C"), n));
  const json& xs = field(j, "X");
  const json& ns = field(j, "N");
  const json& ys = field(j, "Y");
  if (!xs.is_array() || !ns.is_array() || !ys.is_array() || ns.size() != xs.size() || ys.size() != xs.size()) {
    throw ParseError("cable: \"X\", \"N\" and \"Y\" must be lists of equal length");
  }
  const std::size_t t = xs.size();
  for (std::size_t i = 0; i < t; ++i) {
    c.X.push_back(list_from_json(xs[i], n));
    c.N.push_back(set_from_json(ns[i], n));
    c.Y.push_back(set_from_json(ys[i], n));
  }
  c.Z.assign(t, std::vector<VertexSet>(t, VertexSet(n)));
  if (j.contains("Z")) {
    for (const auto& z : j.at("Z")) {
      long long i = as_int(field(z, "i"), "Z.i"), k = as_int(field(z, "j"), "Z.j");
      if (i < 0 || k <= i || k >= static_cast<long long>(t)) throw ParseError("Z entry needs 0 <= i < j < t");
      c.Z[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = set_from_json(field(z, "members"), n);
    }
  }
  return c;
}

json to_json(const Coloring& c) {
  return {{"kind", "coloring"}, {"num_colors", c.num_colors}, {"color", c.color}};
}

Coloring coloring_from_json(const json& j, int n) {
  expect_kind(j, "coloring");
  Coloring c;
  c.num_colors = static_cast<int>(as_int(field(j, "num_colors"), "num_colors"));
  const json& col = field(j, "color");
  if (!col.is_array() || static_cast<long long>(col.size()) != n) {
    throw ParseError("coloring: \"color\" must list one color per vertex");
  }
  for (const auto& e : col) c.color.push_back(static_cast<int>(as_int(e, "color")));
  return c;
}

json to_json(const Hole& h) { return {{"kind", "hole"}, {"length", h.length()}, {"cycle", h.cycle}}; }

Hole hole_from_json(const json& j, int n) {
  expect_kind(j, "hole");
  return {list_from_json(field(j, "cycle"), n)};
}

json to_json(const Verdict& v) {
  json out = {{"kind", "verdict"}, {"ok", v.ok()}, {"violations", json::array()}};
  for (const auto& x : v.violations) {
    out["violations"].push_back({{"clause", x.clause}, {"message", x.message}, {"witness", x.witness}});
  }
  return out;
}

}  // namespace chib::ser
