#include <doctest.h>

#include "chib/errors.hpp"
#include "chib/generators.hpp"
#include "chib/serialize.hpp"
#include "chib/structures.hpp"
#include "mutations.hpp"

using namespace chib;

namespace {

VertexSet set_of(const Graph& g, std::initializer_list<Vertex> v) { return g.make_set(v); }

bool same_cable(const Cable& a, const Cable& b) {
  return a.h == b.h && a.X == b.X && a.N == b.N && a.Y == b.Y && a.C == b.C && a.Z == b.Z;
}

}  // namespace

TEST_CASE("verify_cover examples") {
  Graph s = gen::star(3);
  CHECK(verify_cover(s, {0, set_of(s, {1, 2, 3}), s.empty_set()}).ok());
  // x=0 with N={1}, C={2} where 1-2 and 0-2 are edges.
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  Verdict v = verify_cover(g, {0, set_of(g, {1}), set_of(g, {2})});
  REQUIRE(v.has("x_anticomplete_C"));
  CHECK(v.describe().find("x not anticomplete to C") != std::string::npos);
  CHECK(verify_cover(g, {0, set_of(g, {1}), Graph(4).empty_set()}).has("vertex_ids"));
  CHECK(verify_cover(g, {5, set_of(g, {1}), g.empty_set()}).has("vertex_ids"));
}

TEST_CASE("verify_multicover, containment and tangency examples") {
  auto pm = gen::gen_planted_multicover(3, 7, {.n_size = 2, .c_size = 3, .stable_n = true, .noise_p = 0.3,
                                               .with_tick = true});
  const Graph& g = pm.graph;
  CHECK(verify_multicover(g, pm.mc, true).ok());
  Multicover single{{pm.mc.X[0]}, {pm.mc.N[0]}, pm.mc.C};
  CHECK(verify_multicover(g, single).ok());
  CHECK(verify_containment(pm.mc, pm.mc).ok());
  CHECK(verify_containment(pm.mc, single).ok());
  Multicover extra = single;
  extra.X.push_back(pm.tick->apex);
  extra.N.push_back(g.empty_set());
  CHECK(verify_containment(pm.mc, extra).has("X_subset"));
  Multicover wider = single;
  wider.N[0].insert(pm.tick->apex);
  CHECK(verify_containment(pm.mc, wider).has("N_subset"));
  CHECK(verify_tick(g, *pm.tick).ok());
  CHECK(verify_tick_tangent(g, *pm.tick, pm.mc).ok());
  Graph touched = mutation::edit(g, {{pm.tick->apex, pm.mc.C.first()}});
  CHECK(verify_tick_tangent(touched, *pm.tick, pm.mc).has("tangent"));
  CHECK(verify_tick_tangent(g, *pm.tick, single).has("X_mismatch"));
  Multicover misaligned = pm.mc;
  misaligned.N.pop_back();
  CHECK(verify_multicover(g, misaligned).has("shape"));
}

TEST_CASE("knee-knee adjacency is allowed in a tick") {
  // X = {0,1}, knees 2,3, apex 4, knees adjacent.
  Graph g = Graph::from_edges(5, {{0, 2}, {1, 3}, {2, 4}, {3, 4}, {2, 3}});
  CHECK(verify_tick(g, {{0, 1}, 4, {2, 3}}).ok());
}

TEST_CASE("verify_impression examples") {
  // 1-subdivision of K_{2,2}: branch 0,1 | 2,3; subdivision vertices 4..7.
  Graph pattern = Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  Graph g = Graph::from_edges(8, {{0, 4}, {4, 2}, {0, 5}, {5, 3}, {1, 6}, {6, 2}, {1, 7}, {7, 3}});
  Impression imp{pattern, {0, 1, 2, 3}, {{0, 4, 2}, {0, 5, 3}, {1, 6, 2}, {1, 7, 3}}, 2};
  CHECK(verify_impression(g, imp).ok());
  Impression bad = imp;
  bad.paths[3] = {1, 4, 3};  // shares 4 with the path of edge (0,2)
  Graph g2 = mutation::edit(g, {{1, 4}, {4, 3}});
  CHECK(verify_impression(g2, bad).has("nonincident_disjoint"));
}

TEST_CASE("verify_cable examples") {
  Graph g = gen::complete(3);
  CHECK(verify_cable(g, Cable::base_only(1, g.vertices())).ok());
  auto pc = gen::gen_planted_cable(2, 3, gen::uniform_types(3, PairType::type2), 3, 11);
  REQUIRE(verify_cable(pc.graph, pc.cable).ok());
  Vertex z = pc.cable.z(0, 2).first();
  std::vector<Edge> add;
  for (Vertex x : pc.cable.X[2]) add.emplace_back(z, x);
  Verdict v = verify_cable(mutation::edit(pc.graph, add), pc.cable);
  CHECK(v.has("C3"));
  auto report = cable_axiom_report(v);
  REQUIRE(report.size() == 6);
  CHECK(report[0].axiom == "fields");
  CHECK(report[3].axiom == "C3");
  CHECK_FALSE(report[3].ok);
  CHECK(report[1].ok);
}

TEST_CASE("cable_pair_type") {
  auto t1 = gen::gen_planted_cable(1, 2, gen::uniform_types(2, PairType::type1), 2, 3);
  CHECK(cable_pair_type(t1.graph, t1.cable, 0, 1) == PairType::type1);
  auto t2 = gen::gen_planted_cable(1, 2, gen::uniform_types(2, PairType::type2), 2, 3);
  CHECK(cable_pair_type(t2.graph, t2.cable, 0, 1) == PairType::type2);
  CHECK_THROWS_AS(cable_pair_type(t2.graph, t2.cable, 1, 1), InputError);
  Graph broken = mutation::edit(t2.graph, {{t2.cable.X[0][0], t2.cable.X[1][0]}});
  CHECK_THROWS_AS(cable_pair_type(broken, t2.cable, 0, 1), InputError);
  CHECK(std::string(to_string(PairType::neither)) == "neither");
}

TEST_CASE("planted cables realize the requested types") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    gen::Rng rng(seed);
    int t = rng.between(0, 5), h = rng.between(1, 3);
    gen::TypeMatrix types = gen::uniform_types(t, PairType::type1);
    for (auto& row : types)
      for (auto& p : row) p = rng.chance(0.5) ? PairType::type1 : PairType::type2;
    auto pc = gen::gen_planted_cable(h, t, types, rng.between(1, 4), seed,
                                     {.y_size = rng.between(1, 3), .z_size = rng.between(1, 2),
                                      .extra_n = rng.between(0, 2), .c_edge_p = 0.3});
    INFO("seed " << seed);
    REQUIRE(verify_cable(pc.graph, pc.cable).ok());
    bool all1 = true, all2 = true;
    for (int i = 0; i < t; ++i) {
      for (int j = i + 1; j < t; ++j) {
        PairType want = types[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        CHECK(cable_pair_type(pc.graph, pc.cable, i, j) == want);
        all1 = all1 && want == PairType::type1;
        all2 = all2 && want == PairType::type2;
      }
    }
    for (int i = 0; i < t; ++i) {
      for (int j = i + 1; j < t; ++j) {
        if (all1) CHECK(pc.cable.z(i, j).empty());
        if (all2) CHECK(covers(pc.graph, pc.cable.z(i, j), pc.cable.N[static_cast<std::size_t>(j)]));
      }
    }
  }
  CHECK(gen::gen_planted_cable(1, 0, {}, 2, 1).cable.length() == 0);
  CHECK_THROWS_AS(gen::gen_planted_cable(1, 2, gen::uniform_types(2, PairType::neither), 2, 1), InputError);
  CHECK_THROWS_AS(gen::gen_planted_cable(1, 3, gen::uniform_types(2, PairType::type1), 2, 1), InputError);
}

TEST_CASE("subcable closure and type stability") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    gen::Rng rng(seed + 100);
    int t = seed < 6 ? 4 : 7;
    gen::TypeMatrix types = gen::uniform_types(t, PairType::type1);
    for (auto& row : types)
      for (auto& p : row) p = rng.chance(0.5) ? PairType::type1 : PairType::type2;
    auto pc = gen::gen_planted_cable(2, t, types, 2, seed);
    const Graph& g = pc.graph;
    std::vector<int> all(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) all[static_cast<std::size_t>(i)] = i;
    CHECK(same_cable(subcable(g, pc.cable, all), pc.cable));
    Cable empty = subcable(g, pc.cable, {});
    CHECK(empty.length() == 0);
    CHECK(empty.C == pc.cable.C);
    // Exhaustive for t = 4, 40 random subsets otherwise.
    int trials = t <= 4 ? (1 << t) : 40;
    for (int trial = 0; trial < trials; ++trial) {
      std::uint64_t mask = t <= 4 ? static_cast<std::uint64_t>(trial) : rng.below(1ull << t);
      std::vector<int> idx;
      for (int i = 0; i < t; ++i)
        if (mask >> i & 1) idx.push_back(i);
      Cable sub = subcable(g, pc.cable, idx);
      REQUIRE(verify_cable(g, sub).ok());
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
          CHECK(cable_pair_type(g, sub, static_cast<int>(a), static_cast<int>(b)) ==
                cable_pair_type(g, pc.cable, idx[a], idx[b]));
    }
  }
  auto pc = gen::gen_planted_cable(1, 3, gen::uniform_types(3, PairType::type2), 2, 5);
  CHECK_THROWS_AS(subcable(pc.graph, pc.cable, {2, 1}), InputError);
  CHECK_THROWS_AS(subcable(pc.graph, pc.cable, {3}), InputError);
}

TEST_CASE("single-clause mutations are rejected with the right clause") {
  auto check = [](const auto& m, const Verdict& v) {
    INFO("expected " << m.clause << ", got " << v.describe());
    CHECK(v.has(m.clause));
  };
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto c = mutation::cover_mutant(seed);
    check(c, verify_cover(c.graph, c.value));
    auto mc = mutation::multicover_mutant(seed);
    check(mc, verify_multicover(mc.graph, mc.value, true));
    auto t = mutation::tick_mutant(seed);
    check(t, verify_tick_tangent(t.graph, t.value.tick, t.value.mc));
    auto imp = mutation::impression_mutant(seed);
    check(imp, verify_impression(imp.graph, imp.value));
    auto cab = mutation::cable_mutant(seed);
    check(cab, verify_cable(cab.graph, cab.value));
  }
}

TEST_CASE("planted structures verify before mutation") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto pm = gen::gen_planted_multicover(3, seed, {.n_size = 3, .c_size = 4, .stable_n = false, .noise_p = 0.3,
                                                    .with_tick = true});
    CHECK(verify_multicover(pm.graph, pm.mc).ok());
    CHECK(verify_tick_tangent(pm.graph, *pm.tick, pm.mc).ok());
    auto pi = gen::gen_planted_impression(3, 3, 0.4, 3, seed);
    CHECK(verify_impression(pi.graph, pi.imp).ok());
  }
}

TEST_CASE("JSON round trips") {
  auto pc = gen::gen_planted_cable(2, 3, gen::uniform_types(3, PairType::type2), 2, 9);
  const int n = pc.graph.order();
  Cable back = ser::cable_from_json(ser::parse_json(ser::to_json(pc.cable).dump()), n);
  CHECK(same_cable(back, pc.cable));
  auto pm = gen::gen_planted_multicover(3, 4, {.n_size = 3, .c_size = 4, .stable_n = false, .noise_p = 0.3,
                                               .with_tick = true});
  const int m = pm.graph.order();
  Multicover mc = ser::multicover_from_json(ser::to_json(pm.mc), m);
  CHECK(mc.X == pm.mc.X);
  CHECK(mc.N == pm.mc.N);
  CHECK(mc.C == pm.mc.C);
  Tick t = ser::tick_from_json(ser::to_json(*pm.tick), m);
  CHECK(t.knees == pm.tick->knees);
  Cover c = ser::cover_from_json(ser::to_json(pm.mc.cover(1)), m);
  CHECK(c.N == pm.mc.N[1]);
  auto pi = gen::gen_planted_impression(2, 3, 0.3, 1, 4);
  Impression imp = ser::impression_from_json(ser::to_json(pi.imp), pi.graph.order());
  CHECK(imp.paths == pi.imp.paths);
  CHECK(imp.pattern == pi.imp.pattern);
  CHECK(verify_impression(pi.graph, imp).ok());
  Hole h = ser::hole_from_json(ser::to_json(Hole{{0, 1, 2, 3}}), 4);
  CHECK(h.length() == 4);
  Coloring col = ser::coloring_from_json(ser::to_json(Coloring{{0, 1, 0}, 2}), 3);
  CHECK(col.num_colors == 2);

  CHECK_THROWS_AS(ser::parse_json("{\"kind\":"), ParseError);
  CHECK_THROWS_AS(ser::cable_from_json(ser::to_json(pm.mc), m), ParseError);
  CHECK_THROWS_AS(ser::cover_from_json(ser::json{{"kind", "cover"}, {"x", 99}, {"N", {}}, {"C", {}}}, 5), ParseError);
  CHECK_THROWS_AS(ser::kind_of(ser::json::array()), ParseError);
}
