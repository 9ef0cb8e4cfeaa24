#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "chib/bounds.hpp"
#include "chib/errors.hpp"
#include "chib/generators.hpp"
#include "chib/graph_io.hpp"
#include "chib/harness.hpp"
#include "chib/serialize.hpp"

using namespace chib;
using nlohmann::json;
namespace hx = chib::harness;

namespace {

struct Common {
  std::string graph;
  std::string format = "auto";
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget;
  std::string out;
};

io::GraphFormat to_format(const std::string& f) {
  if (f == "graph6") return io::GraphFormat::graph6;
  if (f == "dimacs") return io::GraphFormat::dimacs;
  return io::GraphFormat::automatic;
}

SolverLimits limits_of(const Common& c) {
  SolverLimits l;
  if (const char* v = std::getenv("CHIB_NODE_BUDGET"); v && *v) l.node_budget = std::stoull(v);
  if (const char* v = std::getenv("CHIB_TIME_BUDGET"); v && *v) l.time_budget = std::stod(v);
  if (c.node_budget) l.node_budget = c.node_budget;
  if (c.time_budget) l.time_budget = c.time_budget;
  return l;
}

Graph load(const Common& c) { return io::read_graph_file(c.graph, to_format(c.format)); }

void emit(const Common& c, const json& j) {
  if (c.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw InputError("cannot write " + c.out);
  f << j.dump(2) << "\n";
}

void add_graph(CLI::App* sub, Common& c, bool with_limits = true) {
  sub->add_option("graph", c.graph, "graph file (graph6 or DIMACS)")->required();
  sub->add_option("--format", c.format, "auto, graph6 or dimacs")->check(CLI::IsMember({"auto", "graph6", "dimacs"}));
  sub->add_option("-o,--out", c.out, "write the JSON result here instead of stdout");
  if (with_limits) {
    sub->add_option("--node-budget", c.node_budget, "search-node budget per solver call");
    sub->add_option("--time-budget", c.time_budget, "seconds per solver call");
  }
}

const char* status_name(SolveStatus s) { return to_string(s); }

int budget_code(SolveStatus s) { return s == SolveStatus::complete ? hx::kExitOk : hx::kExitBudget; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chibound: exact solvers, structure verifiers and engines for graphs without long holes"};
  app.require_subcommand(1);
  Common c;
  int rc = hx::kExitOk;

  auto* chi = app.add_subcommand("chi", "exact chromatic number with a colouring certificate");
  add_graph(chi, c);
  chi->callback([&] {
    Graph g = load(c);
    ChiResult r = chromatic_number(g, limits_of(c));
    emit(c, {{"status", status_name(r.status)}, {"chi", r.complete() ? json(r.chi()) : json()}, {"lower", r.lower},
             {"upper", r.upper}, {"coloring", ser::to_json(r.coloring)}});
    rc = budget_code(r.status);
  });

  auto* om = app.add_subcommand("omega", "clique number with a witness clique");
  add_graph(om, c);
  om->callback([&] {
    Graph g = load(c);
    CliqueResult r = omega(g, limits_of(c));
    emit(c, {{"status", status_name(r.status)}, {"omega", r.complete() ? json(r.size()) : json()},
             {"upper", r.upper_bound}, {"clique", ser::set_to_json(r.witness)}});
    rc = budget_code(r.status);
  });

  auto* lh = app.add_subcommand("longest-hole", "longest induced cycle (none for chordal graphs)");
  add_graph(lh, c);
  lh->callback([&] {
    Graph g = load(c);
    HoleResult r = longest_hole(g, limits_of(c));
    emit(c, {{"status", status_name(r.status)}, {"length", r.hole ? json(r.length()) : json()},
             {"hole", r.hole ? ser::to_json(*r.hole) : json()}});
    rc = budget_code(r.status);
  });

  int min_len = 4;
  auto* fh = app.add_subcommand("find-hole", "some hole of length at least L");
  add_graph(fh, c);
  fh->add_option("--min-len", min_len, "L >= 4")->required();
  fh->callback([&] {
    Graph g = load(c);
    HoleResult r = find_hole_at_least(g, min_len, limits_of(c));
    emit(c, {{"status", status_name(r.status)}, {"found", r.hole.has_value()},
             {"hole", r.hole ? ser::to_json(*r.hole) : json()}});
    rc = budget_code(r.status);
  });

  int ell = 4, kappa = 0, tau = 0;
  auto* dec = app.add_subcommand("decompose", "distance-layer colouring or a hole of length >= ell");
  add_graph(dec, c);
  dec->add_option("--ell", ell)->required();
  dec->add_option("--kappa", kappa)->required();
  dec->add_option("--tau", tau)->required();
  dec->callback([&] {
    Graph g = load(c);
    auto run = longhole_decompose(g, ell, kappa, tau, limits_of(c));
    json j{{"status", to_string(run.status)}, {"message", run.message}, {"transcript", run.transcript.to_json()}};
    if (run.output && run.output->coloring) j["coloring"] = ser::to_json(*run.output->coloring);
    if (run.output && run.output->hole) j["hole"] = ser::to_json(*run.output->hole);
    emit(c, j);
    rc = hx::exit_code(run.status);
  });

  std::string kind, structure;
  auto* ver = app.add_subcommand("verify", "check a structure against its definition");
  add_graph(ver, c, false);
  ver->add_option("structure", structure, "structure JSON file")->required();
  ver->add_option("--kind", kind)->required()->check(CLI::IsMember({"cover", "multicover", "tick", "impression", "cable"}));
  bool stable = false;
  ver->add_flag("--stable", stable, "multicover: also require each N_x stable");
  ver->callback([&] {
    Graph g = load(c);
    json s = ser::parse_json(io::read_text_file(structure));
    const int n = g.order();
    Verdict v;
    if (kind == "cover") v = verify_cover(g, ser::cover_from_json(s, n));
    else if (kind == "multicover") v = verify_multicover(g, ser::multicover_from_json(s, n), stable);
    else if (kind == "tick") v = verify_tick(g, ser::tick_from_json(s, n));
    else if (kind == "impression") v = verify_impression(g, ser::impression_from_json(s, n));
    else v = verify_cable(g, ser::cable_from_json(s, n));
    emit(c, ser::to_json(v));
    rc = v.ok() ? hx::kExitOk : hx::kExitFailed;
  });

  std::string transcript;
  auto* aud = app.add_subcommand("audit", "re-solve every chi claim of an engine transcript");
  add_graph(aud, c);
  aud->add_option("transcript", transcript, "engine_run or transcript JSON")->required();
  aud->callback([&] {
    Graph g = load(c);
    json j = ser::parse_json(io::read_text_file(transcript));
    if (ser::kind_of(j) == "engine_run") j = j.at("transcript");
    AuditReport a = audit_transcript(g, EngineTranscript::from_json(j, g.order()), limits_of(c));
    emit(c, {{"ok", a.ok()}, {"checked", a.checked}, {"mismatches", a.mismatches}});
    rc = a.ok() ? hx::kExitOk : hx::kExitFailed;
  });

  hx::EngineRequest req;
  std::string struct_file;
  std::vector<std::string> params;
  auto* eng = app.add_subcommand("engine", "run a lemma engine and write its transcript");
  add_graph(eng, c);
  eng->add_option("--name", req.name, "engine name")->required()->check(CLI::IsMember(hx::engine_names()));
  eng->add_option("--structure", struct_file, "structure JSON input");
  eng->add_option("-p,--param", params, "key=value engine parameter (repeatable)");
  eng->callback([&] {
    req.graph = load(c);
    req.limits = limits_of(c);
    if (!struct_file.empty()) req.structure = ser::parse_json(io::read_text_file(struct_file));
    for (const auto& kv : params) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw InputError("parameter '" + kv + "' is not key=value");
      req.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    hx::EngineReport rep = hx::run_engine(req);
    emit(c, rep.document);
    if (!rep.message.empty()) std::cerr << to_string(rep.status) << ": " << rep.message << "\n";
    rc = hx::exit_code(rep.status);
  });

  unsigned long bk = 2, bell = 4;
  std::size_t digits = 100000;
  auto* bd = app.add_subcommand("bound", "the chromatic bound for clique number k and no hole of length >= ell");
  bd->add_option("--k", bk)->required();
  bd->add_option("--ell", bell)->required();
  bd->add_option("--digits", digits, "decimal-digit budget for exact values");
  bool tree = false;
  bd->add_flag("--tree", tree, "print the whole expression DAG as JSON");
  bd->callback([&] {
    if (bk < 1 || bell < 4) throw InputError("need k >= 1 and ell >= 4");
    BoundBuilder b(digits);
    BoundExpr e = main_bound(b, bk, bell);
    json j{{"k", bk}, {"ell", bell}, {"exact", e.exact()}, {"summary", e.summary()}, {"nodes", e.node_count()}};
    if (std::isfinite(e.log10())) j["log10"] = e.log10();
    if (tree) j["expr"] = e.to_json();
    std::cout << j.dump(2) << "\n";
  });

  std::string config, replay;
  int threads = 0;
  auto* sw = app.add_subcommand("sweep", "sample, filter by omega and hole length, record exact chi");
  sw->add_option("--config", config, "key-value config file");
  sw->add_option("--replay", replay, "re-verify a JSON-lines record file instead of sampling");
  sw->add_option("--threads", threads, "override the config's worker count");
  sw->callback([&] {
    if (!replay.empty()) {
      Common none;
      auto rep = hx::replay_records(hx::records_from_jsonl(io::read_text_file(replay)), limits_of(none));
      std::cout << json{{"records", rep.records}, {"ok", rep.ok()}, {"mismatches", rep.mismatches}}.dump(2) << "\n";
      rc = rep.ok() ? hx::kExitOk : hx::kExitFailed;
      return;
    }
    if (config.empty()) throw CLI::RequiredError("--config or --replay");
    hx::ExperimentConfig cfg = hx::ExperimentConfig::load(config);
    if (threads > 0) cfg.threads = threads;
    hx::SweepResult res = hx::run_conjecture_sweep(cfg);
    hx::write_sweep(cfg, res);
    std::cout << hx::table_to_csv(res.table);
    std::cerr << res.sampled << " sampled, " << res.records.size() << " recorded\n";
  });

  std::string model = "gnp", types = "2";
  int gn = 10, width = 2, h = 1, t = 2, base_chi = 2;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string gout, sout;
  auto* gn_cmd = app.add_subcommand("gen", "generate a graph (graph6) or a planted cable");
  gn_cmd->add_option("--model", model)->check(CLI::IsMember({"gnp", "chordal", "cable", "named"}));
  gn_cmd->add_option("--n", gn);
  gn_cmd->add_option("--p", p);
  gn_cmd->add_option("--width", width);
  gn_cmd->add_option("--seed", seed);
  std::string name;
  gn_cmd->add_option("--name", name, "named model: C<n>, K<n>, P<n>, S<n>, E<n>, coC<n>, petersen");
  gn_cmd->add_option("--cable-h", h, "cable clique size h");
  gn_cmd->add_option("--t", t);
  gn_cmd->add_option("--types", types, "cable pair types: 1 or 2 for every pair");
  gn_cmd->add_option("--base-chi", base_chi);
  gn_cmd->add_option("-o,--out", gout, "graph output (graph6); stdout when omitted");
  gn_cmd->add_option("--structure-out", sout, "cable JSON output");
  gn_cmd->callback([&] {
    Graph g;
    std::optional<Cable> cable;
    if (model == "gnp") g = gen::gen_gnp(gn, p, seed);
    else if (model == "chordal") g = gen::gen_chordal(gn, width, seed);
    else if (model == "named") g = gen::named(name);
    else {
      if (types != "1" && types != "2") throw InputError("--types must be 1 or 2");
      auto pc = gen::gen_planted_cable(h, t, gen::uniform_types(t, types == "1" ? PairType::type1 : PairType::type2),
                                       base_chi, seed);
      g = pc.graph;
      cable = pc.cable;
    }
    if (gout.empty()) std::cout << io::to_graph6(g) << "\n";
    else io::write_graph_file(gout, g, io::format_from_path(gout));
    if (cable) {
      if (sout.empty()) throw InputError("--structure-out is required for cables");
      std::ofstream f(sout, std::ios::binary);
      f << ser::to_json(*cable).dump(2) << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : hx::kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return hx::kExitPrecondition;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return hx::kExitBudget;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hx::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return hx::kExitFailed;
  }
  return rc;
}
