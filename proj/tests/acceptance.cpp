// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 when any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

#include "chib/bounds.hpp"
#include "chib/engines.hpp"
#include "chib/generators.hpp"
#include "chib/graph_io.hpp"
#include "chib/harness.hpp"
#include "chib/serialize.hpp"
#include "mutations.hpp"
#include "oracles.hpp"
#include "reference_bounds.hpp"

using namespace chib;
namespace hx = chib::harness;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(why);
  }
};

// Criterion 9 table config; also shipped as configs/sweep_table.conf.
const char* kTableConfig =
    "seed = 20261014\n"
    "samples = 100\n"
    "n_min = 1\n"
    "n_max = 20\n"
    "generators = gnp:0.0, gnp:0.1, gnp:0.2, gnp:0.35, chordal:1, chordal:2, chordal:3, chordal:4\n"
    "k = 1, 2, 3\n"
    "ell = 4, 5, 6\n"
    "threads = 4\n";

std::string str(long long v) { return std::to_string(v); }

Outcome c1_solver_oracles() {
  Outcome o;
  const int n = 6;
  const std::uint64_t total = 1ULL << 15;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Graph g = oracle::from_mask(n, bits);
    const int w = oracle::omega(g), c = oracle::chi(g), h = oracle::longest_hole(g);
    CliqueResult cw = omega(g);
    ChiResult cc = chromatic_number(g);
    HoleResult ch = longest_hole(g);
    if (cw.size() != w || !cw.complete()) o.fail("omega mismatch on mask " + str(static_cast<long long>(bits)));
    if (cc.chi() != c || !cc.complete()) o.fail("chi mismatch on mask " + str(static_cast<long long>(bits)));
    if (ch.length() != h || !ch.complete()) o.fail("longest hole mismatch on mask " + str(static_cast<long long>(bits)));
  }
  o.detail = str(static_cast<long long>(total)) + " labelled graphs on 6 vertices";
  return o;
}

Outcome c2_chordal() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    gen::Rng rng(seed * 7 + 1);
    const int n = rng.between(1, 40), w = rng.between(1, std::min(n, 8));
    Graph g = gen::gen_chordal(n, w, seed);
    HoleResult h = longest_hole(g);
    CliqueResult cw = omega(g);
    ChiResult cc = chromatic_number(g);
    std::vector<Vertex> clique(cw.witness.begin(), cw.witness.end());
    if (!h.complete() || h.hole) o.fail("hole found in chordal graph, seed " + str(static_cast<long long>(seed)));
    // Certified equality: a proper colouring with as many colours as a verified clique.
    if (check_clique(g, clique) || check_coloring(g, cc.coloring) || cc.coloring.num_colors != cw.size())
      o.fail("chi != omega on chordal graph, seed " + str(static_cast<long long>(seed)));
  }
  o.detail = "1000 chordal graphs, n <= 40";
  return o;
}

int max_chi_around(const Graph& g, bool second) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    best = std::max(best, chi_of_subset(g, second ? n2(g, g.make_set({v})) : g.neighbors(v)).chi());
  return best;
}

Outcome c3_longhole() {
  Outcome o;
  int holes = 0, colourings = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    gen::Rng rng(seed + 5000);
    const int n = rng.between(1, 25);
    const double p = 0.05 + 0.45 * rng.unit();
    const int ell = rng.between(4, 8);
    Graph g = gen::gen_gnp(n, p, seed);
    const int kappa = max_chi_around(g, false), tau = max_chi_around(g, true);
    auto run = longhole_decompose(g, ell, kappa, tau);
    const std::string tag = "seed " + str(static_cast<long long>(seed));
    if (!run.ok()) {
      o.fail(tag + ": " + to_string(run.status) + " " + run.message);
      continue;
    }
    if (run.output->coloring) {
      ++colourings;
      if (check_coloring(g, *run.output->coloring)) o.fail(tag + ": improper colouring");
      if (run.output->coloring->num_colors > longhole_color_bound(ell, kappa, tau)) o.fail(tag + ": too many colours");
    } else if (run.output->hole) {
      ++holes;
      if (check_hole(g, *run.output->hole) || run.output->hole->length() < ell) o.fail(tag + ": bad hole");
    } else {
      o.fail(tag + ": no certificate");
    }
  }
  o.detail = "500 graphs, " + str(colourings) + " colourings, " + str(holes) + " holes";
  return o;
}

Outcome c4_type2() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    gen::Rng rng(seed + 900);
    const int ell = rng.between(5, 9), h = rng.between(1, 3), tau = rng.between(0, 2);
    const int t = ell - 3;
    gen::PlantedCableOptions opt;
    opt.y_size = rng.between(1, 3);
    opt.z_size = rng.between(1, 2);
    opt.extra_n = rng.between(0, 1);
    auto pc = gen::gen_planted_cable(h, t, gen::uniform_types(t, PairType::type2), t * tau + 1, seed, opt);
    const std::string tag = "seed " + str(static_cast<long long>(seed));
    if (chi_of_subset(pc.graph, pc.cable.C).chi() <= t * tau) {
      o.fail(tag + ": planted base too small");
      continue;
    }
    auto run = type2_construct_hole(pc.graph, pc.cable, ell, tau);
    if (!run.ok()) {
      o.fail(tag + ": " + to_string(run.status) + " " + run.message);
      continue;
    }
    if (check_hole(pc.graph, *run.output) || run.output->length() != ell) o.fail(tag + ": hole is wrong");
  }
  o.detail = "100 planted type-2 cables, ell in 5..9";
  return o;
}

Outcome c5_mutations() {
  Outcome o;
  int rejected = 0;
  auto check = [&](const std::string& what, const auto& m, const Verdict& v) {
    if (v.ok()) o.fail(what + ": false accept (expected " + m.clause + ")");
    else if (!v.has(m.clause)) o.fail(what + ": expected " + m.clause + ", got " + v.describe());
    else ++rejected;
  };
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto c = mutation::cover_mutant(seed);
    check("cover", c, verify_cover(c.graph, c.value));
    auto mc = mutation::multicover_mutant(seed);
    check("multicover", mc, verify_multicover(mc.graph, mc.value, true));
    auto t = mutation::tick_mutant(seed);
    check("tick", t, verify_tick_tangent(t.graph, t.value.tick, t.value.mc));
    auto imp = mutation::impression_mutant(seed);
    check("impression", imp, verify_impression(imp.graph, imp.value));
    auto cab = mutation::cable_mutant(seed);
    check("cable", cab, verify_cable(cab.graph, cab.value));
  }
  o.detail = str(rejected) + "/500 mutants rejected with the right clause";
  return o;
}

Outcome c6_constants() {
  Outcome o;
  BoundBuilder b;
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 50; ++trial) {
    unsigned j = static_cast<unsigned>(rng() % 3);
    unsigned long k = 1 + rng() % 3, m = 1 + rng() % 3, c = rng() % 6, kappa = rng() % 4;
    auto got = gettick_constants(b, j, k, m, c, kappa);
    auto want = reference::gettick(j, k, m, c, kappa);
    if (!got.c_j.exact() || got.m_j.value() != want.m || got.c_j.value() != want.c || got.d0.value() != want.d0 ||
        got.d1.value() != want.d1 || got.d2.value() != want.d2)
      o.fail("gettick trial " + str(trial));
  }
  for (int trial = 0; trial < 50; ++trial) {
    unsigned long t = rng() % 5, c = rng() % 6, tau = rng() % 4, kappa = rng() % 3, h = 1 + rng() % 3,
                  ell = 4 + rng() % 4;
    auto f = phi1_function(b, ell, b.constant(kappa));
    auto got = sigma_ladder(b, b.constant(t), b.constant(c), b.constant(tau), b.constant(kappa), b.constant(h), f);
    auto want = reference::sigma(t, c, tau, kappa, h, ell, kappa);
    if (got.sigma.size() != t + 1) {
      o.fail("sigma trial " + str(trial) + ": ladder not expanded");
      continue;
    }
    for (unsigned long s = 0; s <= t; ++s)
      if (got.sigma[s].value() != want[s]) o.fail("sigma trial " + str(trial) + " at s=" + str(static_cast<long long>(s)));
  }
  for (int trial = 0; trial < 50; ++trial) {
    unsigned long x = rng() % 1000, ell = 4 + rng() % 10, kappa = rng() % 20;
    if (phi1(b, b.constant(x), ell, b.constant(kappa)).value() != reference::phi1(x, ell, kappa))
      o.fail("phi1 trial " + str(trial));
  }
  if (phi1(b, b.constant(0UL), 4, b.constant(1UL)).value() != 3) o.fail("phi1(0) at ell=4, kappa=1 is not 3");
  o.detail = "150 tuples, phi1(0; ell=4, kappa=1) = 3";
  return o;
}

std::optional<MonoSubset> naive_mono(const PairColoring& col, int m) {
  const int t = col.t();
  if (m > t) return std::nullopt;
  for (int c = 0; c < col.h(); ++c) {
    // Subsets as bitmasks in lexicographic order of their sorted members.
    std::vector<std::vector<int>> subsets;
    for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
      if (__builtin_popcount(mask) != m) continue;
      std::vector<int> s;
      for (int i = 0; i < t; ++i)
        if (mask >> i & 1u) s.push_back(i);
      bool ok = true;
      for (std::size_t a = 0; a < s.size() && ok; ++a)
        for (std::size_t b = a + 1; b < s.size() && ok; ++b) ok = col.get(s[a], s[b]) == c;
      if (ok) subsets.push_back(s);
    }
    if (!subsets.empty()) return MonoSubset{*std::min_element(subsets.begin(), subsets.end()), c};
  }
  return std::nullopt;
}

Outcome c7_ramsey() {
  Outcome o;
  gen::Rng rng(77);
  int agreed = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int t = rng.between(1, 8), h = rng.between(1, 3), m = rng.between(1, 5);
    PairColoring col(t, h);
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) col.set(i, j, static_cast<int>(rng.below(static_cast<std::uint64_t>(h))));
    auto a = monochromatic_subset(col, m);
    auto b = naive_mono(col, m);
    if (a.has_value() != b.has_value() || (a && (a->indices != b->indices || a->colour != b->colour)))
      o.fail("disagreement at trial " + str(trial));
    else
      ++agreed;
  }
  BoundBuilder bb;
  int witnessed = 0;
  std::vector<std::pair<int, int>> hm{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}};
  for (auto [h, m] : hm) {
    const int t = static_cast<int>(ramsey_upper(bb, static_cast<unsigned long>(h), static_cast<unsigned long>(m)).value().get_ui());
    for (int trial = 0; trial < 200; ++trial) {
      PairColoring col(t, h);
      for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) col.set(i, j, static_cast<int>(rng.below(static_cast<std::uint64_t>(h))));
      auto r = monochromatic_subset(col, m);
      if (!r) o.fail("no monochromatic " + str(m) + "-set at t = " + str(t) + ", h = " + str(h));
      else ++witnessed;
    }
  }
  o.detail = str(agreed) + " colourings at t <= 8 agree; " + str(witnessed) + " Ramsey-length witnesses";
  return o;
}

std::string slurp(const std::filesystem::path& p) { return io::read_text_file(p); }

Outcome c8_determinism() {
  Outcome o;
  auto dir = std::filesystem::temp_directory_path() / ("chib_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  auto cfg = hx::ExperimentConfig::parse(
      "seed = 99\nsamples = 40\nn_min = 1\nn_max = 16\ngenerators = gnp:0.15, gnp:0.3, chordal:2\n"
      "k = 1, 2, 3\nell = 4, 5, 6\nengine = longhole\n");
  std::string first_rec, first_tab;
  for (int threads : {1, 4, 1}) {
    cfg.threads = threads;
    cfg.output = dir / ("r" + std::to_string(threads) + ".jsonl");
    cfg.table = dir / ("t" + std::to_string(threads) + ".csv");
    hx::write_sweep(cfg, hx::run_conjecture_sweep(cfg));
    std::string rec = slurp(cfg.output), tab = slurp(cfg.table);
    if (first_rec.empty()) {
      first_rec = rec;
      first_tab = tab;
    } else if (rec != first_rec || tab != first_tab) {
      o.fail("sweep output differs at threads = " + str(threads));
    }
  }
  if (!hx::replay_records(hx::records_from_jsonl(first_rec)).ok()) o.fail("sweep records do not replay");

  // Engine runs: the written documents are byte-identical across reruns.
  std::vector<hx::EngineRequest> reqs;
  reqs.push_back({"longhole_decompose", gen::cycle(9), std::nullopt, {{"ell", "5"}, {"kappa", "1"}, {"tau", "1"}}, {}});
  auto pc = gen::gen_planted_cable(2, 3, gen::uniform_types(3, PairType::type2), 4, 5);
  reqs.push_back({"type2_construct_hole", pc.graph, ser::to_json(pc.cable), {{"ell", "6"}, {"tau", "1"}}, {}});
  auto p1 = gen::gen_planted_cable(2, 6, gen::uniform_types(6, PairType::type1), 2, 3);
  reqs.push_back({"type1_extract_multicover", p1.graph, ser::to_json(p1.cable), {{"m", "3"}, {"check_length", "false"}}, {}});
  Graph gg = gen::gen_gnp(12, 0.35, 4);
  reqs.push_back({"grow_cable_from_base", gg, std::nullopt, {{"t", "2"}, {"kappa", "4"}, {"tau", "4"}}, {}});
  auto pm = gen::gen_planted_multicover(3, 8, {.n_size = 3, .c_size = 5, .stable_n = false, .noise_p = 0.3});
  reqs.push_back({"stabilize_multicover", pm.graph, ser::to_json(pm.mc), {{"kappa", "3"}}, {}});
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    std::string a = hx::run_engine(reqs[i]).document.dump(2), b = hx::run_engine(reqs[i]).document.dump(2);
    if (a != b) o.fail("engine document differs: " + reqs[i].name);
  }
  std::filesystem::remove_all(dir);
  o.detail = "sweep at 1/4/1 threads and " + str(static_cast<long long>(reqs.size())) + " engine runs";
  return o;
}

Outcome c9_table() {
  Outcome o;
  auto cfg = hx::ExperimentConfig::parse(kTableConfig);
  auto res = hx::run_conjecture_sweep(cfg);
  std::ostringstream t;
  for (const auto& c : res.table) {
    const std::string cell = "(" + str(c.k) + "," + str(c.ell) + ")";
    if (!c.max_chi || c.exhausted > 0) {
      o.fail(cell + " has no finite entry");
      continue;
    }
    t << " " << cell << "=" << *c.max_chi;
    if (c.k == 1 && *c.max_chi != 1) o.fail(cell + " max chi " + str(*c.max_chi) + " != 1");
    if (c.ell == 4 && *c.max_chi != c.k) o.fail(cell + " max chi " + str(*c.max_chi) + " != k");
    if (!c.within_main_bound) o.fail(cell + " exceeds the main bound");
  }
  o.detail = str(static_cast<long long>(res.records.size())) + " graphs;" + t.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 solver oracle equivalence", c1_solver_oracles},
      {"2 chordal regime", c2_chordal},
      {"3 longhole_decompose totality", c3_longhole},
      {"4 type2_construct_hole exact length", c4_type2},
      {"5 structure mutation testing", c5_mutations},
      {"6 constants reproduction", c6_constants},
      {"7 Ramsey witness", c7_ramsey},
      {"8 determinism", c8_determinism},
      {"9 max-chi table", c9_table},
  };
  std::string only = argc > 1 ? argv[1] : "";
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    if (!only.empty() && name.rfind(only + " ", 0) != 0) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    if (!o.pass) ++failed;
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
