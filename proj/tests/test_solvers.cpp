#include <doctest.h>

#include <random>

#include "chib/certificates.hpp"
#include "chib/errors.hpp"
#include "chib/solvers.hpp"
#include "oracles.hpp"

using namespace chib;

namespace {

Graph random_tree(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % v), v);
  return Graph::from_edges(n, edges);
}

void check_all(const Graph& g) {
  CliqueResult w = omega(g);
  REQUIRE(w.complete());
  CHECK_FALSE(check_clique(g, w.witness.to_vector()));
  CHECK(w.size() == oracle::omega(g));
  ChiResult c = chromatic_number(g);
  REQUIRE(c.complete());
  CHECK_FALSE(check_coloring(g, c.coloring));
  CHECK(c.chi() == c.coloring.num_colors);
  CHECK(c.chi() == oracle::chi(g));
  HoleResult h = longest_hole(g);
  REQUIRE(h.complete());
  if (h.hole) CHECK_FALSE(check_hole(g, *h.hole));
  CHECK(h.length() == oracle::longest_hole(g));
  CHECK(is_chordal(g) == !h.hole);
}

}  // namespace

TEST_CASE("omega / chi / longest hole on named graphs") {
  CHECK(omega(oracle::cycle(5)).size() == 2);
  CHECK(omega(oracle::complete(4)).size() == 4);
  CHECK(omega(oracle::petersen()).size() == 2);
  CHECK(omega(Graph(0)).size() == 0);
  CHECK(chromatic_number(oracle::cycle(5)).chi() == 3);
  CHECK(chromatic_number(oracle::complete(4)).chi() == 4);
  CHECK(chromatic_number(oracle::petersen()).chi() == 3);
  CHECK(chromatic_number(Graph(0)).chi() == 0);
  CHECK(longest_hole(oracle::cycle(7)).length() == 7);
  CHECK(longest_hole(oracle::petersen()).length() == oracle::longest_hole(oracle::petersen()));
  std::mt19937_64 rng(1);
  CHECK_FALSE(longest_hole(random_tree(20, rng)).hole);
  check_all(oracle::petersen());
}

TEST_CASE("solvers agree with brute force on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 3 + static_cast<int>(rng() % 9);
    double p = 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    check_all(oracle::random_graph(n, p, rng));
  }
}

TEST_CASE("find_hole_at_least") {
  auto c6 = find_hole_at_least(oracle::cycle(6), 5);
  REQUIRE(c6.hole);
  CHECK(c6.length() == 6);
  CHECK_FALSE(find_hole_at_least(oracle::complete(5), 4).hole);
  auto pet = find_hole_at_least(oracle::petersen(), 5);
  REQUIRE(pet.hole);
  CHECK(pet.length() >= 5);
  CHECK_FALSE(check_hole(oracle::petersen(), *pet.hole));
  CHECK_THROWS_AS(find_hole_at_least(oracle::cycle(5), 3), InputError);

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_graph(10, 0.35, rng);
    int longest = oracle::longest_hole(g);
    for (int ell = 4; ell <= 8; ++ell) {
      auto r = find_hole_at_least(g, ell);
      CHECK(r.hole.has_value() == (longest >= ell));
      if (r.hole) {
        CHECK(r.length() >= ell);
        CHECK_FALSE(check_hole(g, *r.hole));
      }
    }
  }
}

TEST_CASE("chi_of_subset and the oracle memo") {
  Graph c5 = oracle::cycle(5);
  CHECK(chi_of_subset(c5, VertexSet(5)).chi() == 0);
  CHECK(chi_of_subset(c5, c5.make_set({0, 1, 2})).chi() == 2);

  std::mt19937_64 rng(12);
  Graph g = oracle::random_graph(12, 0.4, rng);
  ChiOracle memo(g, {}, 8);
  for (int trial = 0; trial < 200; ++trial) {
    VertexSet x(12);
    for (int v = 0; v < 12; ++v)
      if (rng() % 2) x.insert(v);
    int direct = oracle::chi(induced_subgraph(g, x).graph);
    CHECK(memo.chi(x) == direct);
    CHECK(memo.chi(x) == direct);
    CHECK(memo.cached() <= 8);
    auto sub = chi_of_subset(g, x);
    for (Vertex v = 0; v < 12; ++v) CHECK((sub.coloring.color[v] >= 0) == x.contains(v));
    // monotone under shrinking
    VertexSet y = x;
    if (!y.empty()) y.erase(y.first());
    CHECK(memo.chi(y) <= memo.chi(x));
  }
  CHECK(memo.hits() >= 200);
}

TEST_CASE("budget exhaustion is reported, never wrong") {
  std::mt19937_64 rng(99);
  Graph g = oracle::random_graph(60, 0.5, rng);
  SolverLimits tiny{std::uint64_t{5}, std::nullopt};
  ChiResult c = chromatic_number(g, tiny);
  CHECK_FALSE(c.complete());
  CHECK(c.lower <= c.upper);
  CHECK_FALSE(check_coloring(g, c.coloring));
  CHECK(c.coloring.num_colors == c.upper);
  CliqueResult w = omega(g, tiny);
  CHECK_FALSE(w.complete());
  CHECK_FALSE(check_clique(g, w.witness.to_vector()));
  HoleResult h = longest_hole(g, tiny);
  CHECK_FALSE(h.complete());
  ChiOracle memo(g, tiny);
  CHECK_THROWS_AS(memo.chi(g.vertices()), BudgetExhausted);
}

TEST_CASE("degeneracy colouring") {
  auto c5 = degeneracy_order_and_coloring(oracle::cycle(5));
  CHECK(c5.degeneracy == 2);
  CHECK(c5.coloring.num_colors <= 3);
  std::mt19937_64 rng(4);
  auto tree = degeneracy_order_and_coloring(random_tree(30, rng));
  CHECK(tree.degeneracy == 1);
  CHECK(tree.coloring.num_colors <= 2);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(20, 0.3, rng);
    auto d = degeneracy_order_and_coloring(g);
    CHECK_FALSE(check_coloring(g, d.coloring));
    CHECK(d.coloring.num_colors <= d.degeneracy + 1);
    CHECK(d.order.size() == 20);
  }
}

TEST_CASE("is_chordal") {
  std::mt19937_64 rng(6);
  CHECK(is_chordal(random_tree(25, rng)));
  CHECK_FALSE(is_chordal(oracle::cycle(4)));
  CHECK(is_chordal(oracle::complete(6)));
}

TEST_CASE("find_clique_with_large_n2") {
  auto p5 = find_clique_with_large_n2(oracle::path(5), 1, 0);
  REQUIRE(p5.clique);
  CHECK(p5.clique->to_vector() == std::vector<Vertex>{0});
  CHECK_FALSE(find_clique_with_large_n2(oracle::complete(4), 2, 0).clique);

  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_graph(15, 0.3, rng);
    bool expect = false;
    for (Vertex u = 0; u < 15 && !expect; ++u)
      for (Vertex v = u + 1; v < 15 && !expect; ++v)
        if (g.adjacent(u, v)) {
          // N2 by its definition, computed with plain loops
          VertexSet x = g.make_set({u, v}), second(15);
          for (Vertex w = 0; w < 15; ++w) {
            if (x.contains(w) || g.adjacent(w, u) || g.adjacent(w, v)) continue;
            for (Vertex y = 0; y < 15; ++y)
              if (!x.contains(y) && g.adjacent(y, u) && g.adjacent(y, v) && g.adjacent(w, y)) second.insert(w);
          }
          expect = oracle::chi(induced_subgraph(g, second).graph) > 1;
        }
    auto r = find_clique_with_large_n2(g, 2, 1);
    CHECK(r.clique.has_value() == expect);
    if (r.clique) {
      CHECK(is_clique(g, *r.clique));
      CHECK(r.clique->size() == 2);
      CHECK(r.n2_chi > 1);
    }
  }
}
