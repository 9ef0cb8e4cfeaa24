#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "chib/bounds.hpp"
#include "chib/errors.hpp"
#include "chib/generators.hpp"
#include "chib/graph_io.hpp"
#include "chib/harness.hpp"
#include "chib/serialize.hpp"

namespace chib::harness {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T>
T parse_number(const std::string& s, const std::string& what, long line = -1) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad " + what + ": '" + s + "'", line);
  return v;
}

bool parse_bool(const std::string& s, long line) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ParseError("bad boolean: '" + s + "'", line);
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

int max_chi_over(const Graph& g, bool second, const SolverLimits& limits, bool& complete) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet s = second ? n2(g, g.make_set({v})) : g.neighbors(v);
    ChiResult r = chi_of_subset(g, s, limits);
    complete = complete && r.complete();
    best = std::max(best, r.chi());
  }
  return best;
}

json longhole_engine(const Graph& g, int ell, const SolverLimits& limits) {
  bool complete = true;
  const int kappa = max_chi_over(g, false, limits, complete);
  const int tau = max_chi_over(g, true, limits, complete);
  if (!complete) return {{"ell", ell}, {"status", "budget_exhausted"}};
  auto run = longhole_decompose(g, ell, kappa, tau, limits);
  json j{{"ell", ell}, {"kappa", kappa}, {"tau", tau}, {"status", to_string(run.status)}};
  if (!run.ok()) {
    j["message"] = run.message;
    return j;
  }
  j["bound"] = longhole_color_bound(ell, kappa, tau);
  if (run.output->coloring) j["coloring"] = ser::to_json(*run.output->coloring);
  if (run.output->hole) j["hole"] = ser::to_json(*run.output->hole);
  return j;
}

ExperimentRecord sample_one(const ExperimentConfig& cfg, std::size_t index, int k_max, int ell_max, bool& keep) {
  const std::size_t gi = index / static_cast<std::size_t>(cfg.samples);
  const GeneratorSpec& spec = cfg.generators[gi];
  ExperimentRecord r;
  r.index = index;
  r.generator = spec.to_string();
  r.seed = splitmix(cfg.seed ^ splitmix(index));
  gen::Rng rng(r.seed);
  const int n = rng.between(cfg.n_min, cfg.n_max);
  const std::uint64_t graph_seed = rng.next();
  Graph g = spec.model == GeneratorSpec::Model::gnp ? gen::gen_gnp(n, spec.p, graph_seed)
                                                    : gen::gen_chordal(n, std::min(spec.width, std::max(n, 1)), graph_seed);
  auto start = std::chrono::steady_clock::now();
  r.graph6 = io::to_graph6(g);
  r.n = g.order();
  r.m = g.edge_count();
  keep = false;

  CliqueResult w = omega(g, cfg.limits);
  r.omega = w.size();
  r.clique = w.witness;
  if (w.complete() && r.omega > k_max) return r;
  HoleResult far = find_hole_at_least(g, std::max(4, ell_max), cfg.limits);
  if (far.complete() && far.hole) return r;
  keep = true;
  HoleResult lh = longest_hole(g, cfg.limits);
  if (!w.complete() || !lh.complete()) {
    r.status = "budget_exhausted";
    return r;
  }
  r.longest_hole = lh.length();
  r.hole = lh.hole;
  for (int k : cfg.k_values)
    for (int ell : cfg.ell_values)
      if (admits(k, ell, r.omega, r.longest_hole)) r.cells.emplace_back(k, ell);
  if (r.cells.empty()) {
    keep = false;
    return r;
  }
  ChiResult c = chromatic_number(g, cfg.limits);
  r.chi_lower = c.lower;
  if (c.complete()) {
    r.chi = c.chi();
    r.coloring = c.coloring;
  } else {
    r.status = "budget_exhausted";
  }
  if (cfg.engine == "longhole") {
    std::set<int> ells;
    for (auto [k, ell] : r.cells) ells.insert(ell);
    json runs = json::array();
    for (int ell : ells) runs.push_back(longhole_engine(g, ell, cfg.limits));
    r.engines["longhole_decompose"] = runs;
  }
  if (cfg.timings) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::string GeneratorSpec::to_string() const {
  if (model == Model::chordal) return "chordal:" + std::to_string(width);
  std::ostringstream o;
  o << "gnp:" << p;
  return o.str();
}

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("generator needs model:parameter, got '" + text + "'");
  std::string model = trim(text.substr(0, colon)), arg = trim(text.substr(colon + 1));
  GeneratorSpec s;
  if (model == "gnp") {
    s.model = Model::gnp;
    s.p = parse_number<double>(arg, "edge probability");
    if (!(s.p >= 0.0 && s.p <= 1.0)) throw InputError("edge probability must be in [0, 1]");
  } else if (model == "chordal") {
    s.model = Model::chordal;
    s.width = parse_number<int>(arg, "chordal width");
    if (s.width < 1) throw InputError("chordal width must be at least 1");
  } else {
    throw ParseError("unknown generator model '" + model + "'");
  }
  return s;
}

ExperimentConfig ExperimentConfig::parse(const std::string& text, const std::filesystem::path& base_dir) {
  ExperimentConfig c;
  std::istringstream in(text);
  std::string raw;
  long line = 0;
  std::set<std::string> seen;
  auto resolve = [&](const std::string& v) {
    std::filesystem::path p(v);
    return p.is_relative() && !base_dir.empty() ? base_dir / p : p;
  };
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", line);
    std::string key = trim(s.substr(0, eq)), val = trim(s.substr(eq + 1));
    if (!seen.insert(key).second) throw ParseError("duplicate key '" + key + "'", line);
    if (key == "seed") c.seed = parse_number<std::uint64_t>(val, "seed", line);
    else if (key == "samples") c.samples = parse_number<int>(val, "samples", line);
    else if (key == "n_min") c.n_min = parse_number<int>(val, "n_min", line);
    else if (key == "n_max") c.n_max = parse_number<int>(val, "n_max", line);
    else if (key == "generators") {
      for (const auto& item : split_list(val)) {
        try {
          c.generators.push_back(GeneratorSpec::parse(item));
        } catch (const ParseError& e) {
          throw ParseError(e.what(), line);
        }
      }
    } else if (key == "k" || key == "ell") {
      std::vector<int> vals;
      for (const auto& item : split_list(val)) vals.push_back(parse_number<int>(item, key, line));
      (key == "k" ? c.k_values : c.ell_values) = vals;
    } else if (key == "node_budget") c.limits.node_budget = parse_number<std::uint64_t>(val, "node_budget", line);
    else if (key == "time_budget") c.limits.time_budget = parse_number<double>(val, "time_budget", line);
    else if (key == "threads") c.threads = parse_number<int>(val, "threads", line);
    else if (key == "engine") c.engine = val;
    else if (key == "timings") c.timings = parse_bool(val, line);
    else if (key == "output") c.output = resolve(val);
    else if (key == "table") c.table = resolve(val);
    else throw ParseError("unknown key '" + key + "'", line);
  }
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
  ExperimentConfig c = parse(io::read_text_file(path), path.parent_path());
  c.apply_env_overrides();
  return c;
}

void ExperimentConfig::apply_env_overrides() {
  if (const char* v = std::getenv("CHIB_NODE_BUDGET"); v && *v)
    limits.node_budget = parse_number<std::uint64_t>(v, "CHIB_NODE_BUDGET");
  if (const char* v = std::getenv("CHIB_TIME_BUDGET"); v && *v)
    limits.time_budget = parse_number<double>(v, "CHIB_TIME_BUDGET");
}

void ExperimentConfig::validate() const {
  if (samples < 0) throw InputError("samples must be nonnegative");
  if (n_min < 1 || n_max < n_min || n_max > 30) throw InputError("need 1 <= n_min <= n_max <= 30");
  if (generators.empty()) throw InputError("at least one generator is required");
  if (k_values.empty() || ell_values.empty()) throw InputError("k and ell lists must be nonempty");
  for (int k : k_values)
    if (k < 1) throw InputError("k values must be at least 1");
  for (int ell : ell_values)
    if (ell < 4) throw InputError("ell values must be at least 4");
  if (threads < 1) throw InputError("threads must be at least 1");
  if (engine != "none" && engine != "longhole") throw InputError("engine must be none or longhole");
}

bool admits(int k, int ell, int omega, int longest_hole) { return omega <= k && longest_hole < ell; }

json ExperimentRecord::to_json() const {
  json j{{"index", index}, {"generator", generator}, {"seed", seed}, {"graph6", graph6}, {"n", n}, {"m", m},
         {"omega", omega}, {"clique", ser::set_to_json(clique)}, {"longest_hole", longest_hole},
         {"chi_lower", chi_lower}, {"status", status}, {"engines", engines}};
  j["hole"] = hole ? ser::to_json(*hole) : json();
  j["chi"] = chi ? json(*chi) : json();
  j["coloring"] = coloring ? ser::to_json(*coloring) : json();
  json cs = json::array();
  for (auto [k, ell] : cells) cs.push_back({k, ell});
  j["cells"] = cs;
  if (seconds) j["seconds"] = *seconds;
  return j;
}

ExperimentRecord ExperimentRecord::from_json(const json& j) {
  try {
    ExperimentRecord r;
    r.index = j.at("index").get<std::size_t>();
    r.generator = j.at("generator").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.graph6 = j.at("graph6").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<std::size_t>();
    r.omega = j.at("omega").get<int>();
    r.clique = ser::set_from_json(j.at("clique"), r.n);
    r.longest_hole = j.at("longest_hole").get<int>();
    if (!j.at("hole").is_null()) r.hole = ser::hole_from_json(j.at("hole"), r.n);
    if (!j.at("chi").is_null()) r.chi = j.at("chi").get<int>();
    r.chi_lower = j.at("chi_lower").get<int>();
    if (!j.at("coloring").is_null()) r.coloring = ser::coloring_from_json(j.at("coloring"), r.n);
    r.status = j.at("status").get<std::string>();
    for (const auto& c : j.at("cells")) r.cells.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    r.engines = j.at("engines");
    if (j.contains("seconds")) r.seconds = j.at("seconds").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad experiment record: ") + e.what());
  }
}

SweepResult run_conjecture_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  const int k_max = *std::max_element(cfg.k_values.begin(), cfg.k_values.end());
  const int ell_max = *std::max_element(cfg.ell_values.begin(), cfg.ell_values.end());
  const std::size_t total = cfg.generators.size() * static_cast<std::size_t>(cfg.samples);
  std::vector<std::optional<ExperimentRecord>> slots(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < total;) {
      try {
        bool keep = false;
        ExperimentRecord r = sample_one(cfg, i, k_max, ell_max, keep);
        if (keep) slots[i] = std::move(r);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = total;
      }
    }
  };
  const int nt = std::max(1, std::min<int>(cfg.threads, static_cast<int>(std::max<std::size_t>(total, 1))));
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  SweepResult out;
  out.sampled = total;
  for (auto& s : slots)
    if (s) out.records.push_back(std::move(*s));

  BoundBuilder b(4096);
  for (int k : cfg.k_values)
    for (int ell : cfg.ell_values) {
      CellSummary cell;
      cell.k = k;
      cell.ell = ell;
      BoundExpr bound = main_bound(b, static_cast<unsigned long>(k), static_cast<unsigned long>(ell));
      for (const auto& r : out.records) {
        if (std::find(r.cells.begin(), r.cells.end(), std::pair{k, ell}) == r.cells.end()) continue;
        ++cell.graphs;
        if (!r.chi) {
          ++cell.exhausted;
          continue;
        }
        cell.max_chi = std::max(cell.max_chi.value_or(0), *r.chi);
        if (at_most(bound, *r.chi - 1)) cell.within_main_bound = false;
      }
      out.table.push_back(cell);
    }
  return out;
}

std::string records_to_jsonl(const std::vector<ExperimentRecord>& records) {
  std::string s;
  for (const auto& r : records) s += r.to_json().dump() + "\n";
  return s;
}

std::vector<ExperimentRecord> records_from_jsonl(const std::string& text) {
  std::vector<ExperimentRecord> out;
  std::istringstream in(text);
  std::string line;
  long no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (trim(line).empty()) continue;
    try {
      out.push_back(ExperimentRecord::from_json(ser::parse_json(line)));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), no);
    }
  }
  return out;
}

std::string table_to_csv(const std::vector<CellSummary>& table) {
  std::string s = "k,ell,graphs,exhausted,max_chi,within_main_bound\n";
  for (const auto& c : table) {
    s += std::to_string(c.k) + "," + std::to_string(c.ell) + "," + std::to_string(c.graphs) + "," +
         std::to_string(c.exhausted) + "," + (c.max_chi ? std::to_string(*c.max_chi) : "") + "," +
         (c.within_main_bound ? "true" : "false") + "\n";
  }
  return s;
}

void write_sweep(const ExperimentConfig& config, const SweepResult& result) {
  auto write = [](const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw InputError("cannot write " + p.string());
    f << text;
  };
  if (!config.output.empty()) write(config.output, records_to_jsonl(result.records));
  if (!config.table.empty()) write(config.table, table_to_csv(result.table));
}

ReplayReport replay_records(const std::vector<ExperimentRecord>& records, const SolverLimits& limits) {
  ReplayReport rep;
  for (const auto& r : records) {
    ++rep.records;
    const std::string tag = "record " + std::to_string(r.index) + ": ";
    auto bad = [&](const std::string& m) { rep.mismatches.push_back(tag + m); };
    Graph g;
    try {
      g = io::parse_graph6(r.graph6);
    } catch (const InputError& e) {
      bad(std::string("graph6 does not parse: ") + e.what());
      continue;
    }
    if (g.order() != r.n || g.edge_count() != r.m) bad("n or m disagree with graph6");
    std::vector<Vertex> cl(r.clique.begin(), r.clique.end());
    if (auto why = check_clique(g, cl)) bad("clique witness: " + *why);
    if (r.clique.size() != r.omega) bad("clique witness size differs from omega");
    if (r.hole) {
      if (auto why = check_hole(g, *r.hole)) bad("hole certificate: " + *why);
      if (r.hole->length() != r.longest_hole) bad("hole length differs from longest_hole");
    } else if (r.longest_hole != 0 && r.status == "ok") {
      bad("longest_hole set without a hole certificate");
    }
    if (r.coloring) {
      if (auto why = check_coloring(g, *r.coloring)) bad("coloring certificate: " + *why);
      if (!r.chi || r.coloring->num_colors != *r.chi) bad("coloring size differs from chi");
    }
    if (r.status != "ok") continue;
    CliqueResult w = omega(g, limits);
    if (w.complete() && w.size() != r.omega) bad("omega recomputes to " + std::to_string(w.size()));
    HoleResult lh = longest_hole(g, limits);
    if (lh.complete() && lh.length() != r.longest_hole) bad("longest hole recomputes to " + std::to_string(lh.length()));
    ChiResult c = chromatic_number(g, limits);
    if (c.complete() && r.chi && c.chi() != *r.chi) bad("chi recomputes to " + std::to_string(c.chi()));
    for (auto [k, ell] : r.cells)
      if (!admits(k, ell, r.omega, r.longest_hole))
        bad("cell (" + std::to_string(k) + "," + std::to_string(ell) + ") does not admit the graph");
    if (r.engines.contains("longhole_decompose")) {
      for (const auto& e : r.engines["longhole_decompose"]) {
        if (e.value("status", "") != "ok") continue;
        if (e.contains("coloring")) {
          Coloring col = ser::coloring_from_json(e["coloring"], g.order());
          if (auto why = check_coloring(g, col)) bad("longhole coloring: " + *why);
          if (col.num_colors > e["bound"].get<long long>()) bad("longhole coloring exceeds its bound");
        } else if (e.contains("hole")) {
          Hole h = ser::hole_from_json(e["hole"], g.order());
          if (auto why = check_hole(g, h)) bad("longhole hole: " + *why);
          if (h.length() < e["ell"].get<int>()) bad("longhole hole is too short");
        } else {
          bad("longhole run without a certificate");
        }
      }
    }
  }
  return rep;
}

}  // namespace chib::harness
