#include <doctest.h>

#include <random>

#include "chib/errors.hpp"
#include "chib/graph.hpp"
#include "chib/graph_io.hpp"
#include "oracles.hpp"

using namespace chib;

namespace {

VertexSet random_subset(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if (coin(rng)) s.insert(v);
  return s;
}

}  // namespace

TEST_CASE("vertex set algebra") {
  VertexSet a = VertexSet::of(130, {0, 64, 129});
  VertexSet b = VertexSet::of(130, {64, 100});
  CHECK((a & b).to_vector() == std::vector<Vertex>{64});
  CHECK((a | b).size() == 4);
  CHECK((a - b).to_vector() == std::vector<Vertex>{0, 129});
  CHECK(a.next(64) == 129);
  CHECK(a.next(129) == -1);
  CHECK_THROWS_AS(VertexSet::of(5, {5}), InputError);
  CHECK_THROWS_AS(a &= VertexSet(10), InputError);
  CHECK(VertexSet::of(4, {1, 2}) < VertexSet::of(4, {1, 3}));
}

TEST_CASE("graph construction rejects loops and duplicates") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InputError);
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(Graph(0).order() == 0);
}

TEST_CASE("induced_subgraph examples") {
  Graph c5 = oracle::cycle(5);
  auto sub = induced_subgraph(c5, c5.make_set({0, 1, 2}));
  CHECK(sub.graph == oracle::path(3));
  CHECK(sub.lift(2) == 2);

  auto empty = induced_subgraph(oracle::complete(4), VertexSet(4));
  CHECK(empty.graph.order() == 0);

  Graph pet = oracle::petersen();
  auto outer = induced_subgraph(pet, pet.make_set({0, 1, 2, 3, 4}));
  CHECK(outer.graph == oracle::cycle(5));

  CHECK_THROWS_AS(induced_subgraph(c5, VertexSet(6)), InputError);
}

TEST_CASE("induced_subgraph property: edges match the parent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(12, 0.4, rng);
    VertexSet x = random_subset(12, 0.5, rng);
    auto sub = induced_subgraph(g, x);
    REQUIRE(sub.graph.order() == x.size());
    for (int i = 0; i < sub.graph.order(); ++i)
      for (int j = 0; j < sub.graph.order(); ++j)
        if (i != j) CHECK(sub.graph.adjacent(i, j) == g.adjacent(sub.lift(i), sub.lift(j)));
  }
}

TEST_CASE("complete / anticomplete / covers examples") {
  Graph k4 = oracle::complete(4), c5 = oracle::cycle(5);
  CHECK(is_complete_between(k4, k4.make_set({0, 1}), k4.make_set({2, 3})));
  CHECK_FALSE(is_complete_between(c5, c5.make_set({0}), c5.make_set({2})));
  CHECK(is_anticomplete_between(c5, c5.make_set({0}), c5.make_set({2, 3})));
  CHECK_FALSE(is_anticomplete_between(k4, k4.make_set({0}), k4.make_set({1})));
  Graph star = oracle::star(3);
  CHECK(covers(star, star.make_set({0}), star.make_set({1, 2, 3})));
  Graph p4 = oracle::path(4);
  CHECK_FALSE(covers(p4, p4.make_set({0}), p4.make_set({2, 3})));
  CHECK_THROWS_AS(is_complete_between(k4, k4.make_set({0, 1}), k4.make_set({1})), InputError);
  CHECK_THROWS_AS(is_anticomplete_between(k4, k4.make_set({0}), k4.make_set({0})), InputError);
  CHECK_THROWS_AS(covers(k4, k4.make_set({2}), k4.make_set({2, 3})), InputError);
}

TEST_CASE("relations agree with double-loop oracles") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(10, 0.5, rng);
    VertexSet x = random_subset(10, 0.4, rng);
    VertexSet y = random_subset(10, 0.4, rng) - x;
    bool all = true, none = true, cov = true;
    for (Vertex u : x)
      for (Vertex v : y) (g.adjacent(u, v) ? none : all) = false;
    for (Vertex v : y) {
      bool has = false;
      for (Vertex u : x) has = has || g.adjacent(u, v);
      cov = cov && has;
    }
    CHECK(is_complete_between(g, x, y) == all);
    CHECK(is_anticomplete_between(g, x, y) == none);
    CHECK(covers(g, x, y) == cov);
    if (cov && none) CHECK(y.empty());
    bool stable = true;
    for (Vertex u : x)
      for (Vertex v : x) stable = stable && !g.adjacent(u, v);
    CHECK(is_stable(g, x) == stable);
  }
}

TEST_CASE("n1 / n2 examples") {
  Graph p4 = oracle::path(4), c5 = oracle::cycle(5), k4 = oracle::complete(4), star = oracle::star(3);
  CHECK(n1(p4, p4.make_set({0})).to_vector() == std::vector<Vertex>{1});
  CHECK(n2(p4, p4.make_set({0})).to_vector() == std::vector<Vertex>{2});
  CHECK(n1(c5, c5.make_set({0})).to_vector() == std::vector<Vertex>{1, 4});
  CHECK(n2(c5, c5.make_set({0})).to_vector() == std::vector<Vertex>{2, 3});
  CHECK(n1(k4, k4.make_set({0, 1})).to_vector() == std::vector<Vertex>{2, 3});
  CHECK(n2(star, star.make_set({0})).empty());
  CHECK_THROWS_AS(n1(c5, c5.make_set({0, 2})), InputError);
  CHECK_THROWS_AS(n2(c5, c5.make_set({0, 2})), InputError);
  CHECK(is_stable(c5, c5.make_set({0, 2})));
  CHECK_FALSE(is_stable(k4, k4.make_set({0, 1})));
}

TEST_CASE("n1 / n2 property on random cliques") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_graph(14, 0.45, rng);
    Vertex v = static_cast<Vertex>(rng() % 14);
    VertexSet x = g.make_set({v});
    for (Vertex w : g.neighbors(v))
      if (is_clique(g, x.with(w)) && rng() % 2) x.insert(w);
    VertexSet a = n1(g, x), b = n2(g, x);
    CHECK(a.is_disjoint_from(b));
    CHECK(a.is_disjoint_from(x));
    CHECK(b.is_disjoint_from(x));
    for (Vertex u : a) CHECK(x.is_subset_of(g.neighbors(u)));
    for (Vertex u : b) {
      CHECK(g.neighbors(u).intersects(a));
      CHECK_FALSE(g.neighbors(u).intersects(x));
    }
  }
}

TEST_CASE("distance layers") {
  auto sizes = [](const std::vector<VertexSet>& layers) {
    std::vector<int> out;
    for (auto& l : layers) out.push_back(l.size());
    return out;
  };
  Graph p4 = oracle::path(4);
  auto lp = distance_layers(p4, 0);
  REQUIRE(lp.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(lp[i].to_vector() == std::vector<Vertex>{i});
  CHECK(sizes(distance_layers(oracle::complete(4), 0)) == std::vector<int>{1, 3});
  Graph pet = oracle::petersen();
  for (Vertex v = 0; v < 10; ++v) CHECK(sizes(distance_layers(pet, v)) == std::vector<int>{1, 3, 6});

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(15, 0.2, rng);
    auto layers = distance_layers(g, 0);
    for (std::size_t i = 0; i < layers.size(); ++i)
      for (std::size_t j = i + 2; j < layers.size(); ++j) CHECK(is_anticomplete_between(g, layers[i], layers[j]));
  }
}

TEST_CASE("graph6 known encodings") {
  // Reference strings from the nauty format description.
  CHECK(io::to_graph6(Graph(0)) == "?");
  CHECK(io::to_graph6(oracle::cycle(5)) == "Dhc");
  CHECK(io::to_graph6(oracle::petersen()).size() == 9);
  CHECK(io::parse_graph6("Dhc\n") == oracle::cycle(5));
  CHECK(io::parse_graph6(">>graph6<<Dhc") == oracle::cycle(5));
  CHECK_THROWS_AS(io::parse_graph6("Dh"), ParseError);
  CHECK_THROWS_AS(io::parse_graph6(":Dhc"), ParseError);
  CHECK_THROWS_AS(io::parse_graph6("Dhd"), ParseError);  // padding bit set
}

TEST_CASE("graph6 and dimacs round trips") {
  std::mt19937_64 rng(9);
  for (int n : {0, 1, 2, 7, 30, 63, 64, 100}) {
    Graph g = oracle::random_graph(n, 0.3, rng);
    CHECK(io::parse_graph6(io::to_graph6(g)) == g);
    CHECK(io::parse_dimacs(io::to_dimacs(g)) == g);
    CHECK(io::parse_graph(io::to_dimacs(g)) == g);
    CHECK(io::parse_graph(io::to_graph6(g)) == g);
  }
}

TEST_CASE("dimacs diagnostics") {
  CHECK(io::parse_dimacs("c hi\np edge 3 2\ne 1 2\ne 2 3\n") == oracle::path(3));
  CHECK_THROWS_AS(io::parse_dimacs("p edge 3 1\ne 1 1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_dimacs("p edge 3 2\ne 1 2\ne 2 1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_dimacs("p edge 3 1\ne 1 4\n"), ParseError);
  CHECK_THROWS_AS(io::parse_dimacs("p edge 3 2\ne 1 2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_dimacs("e 1 2\n"), ParseError);
  try {
    io::parse_dimacs("p edge 3 1\nx 1 2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}
