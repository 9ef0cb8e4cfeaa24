#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chib/engines.hpp"
#include "chib/graph.hpp"
#include "chib/solvers.hpp"

namespace chib::harness {

// ---- sweep -------------------------------------------------------------------------------

struct GeneratorSpec {
  enum class Model { gnp, chordal } model = Model::gnp;
  double p = 0.0;  // gnp
  int width = 1;   // chordal, capped at n
  std::string to_string() const;  // "gnp:0.25", "chordal:3"
  static GeneratorSpec parse(const std::string& text);
};

// Key-value file, one "key = value" per line, '#' starts a comment:
//   seed         64-bit integer (default 1)
//   samples      graphs per generator (default 100)
//   n_min, n_max vertex count range, drawn uniformly per graph (default 4..12, n_max <= 30)
//   generators   comma list of gnp:<p> and chordal:<width>
//   k, ell       comma lists of filter values (defaults 1,2,3 and 4,5,6)
//   node_budget, time_budget  per solver call; overridden by CHIB_NODE_BUDGET, CHIB_TIME_BUDGET
//   threads      worker count (default 1; output does not depend on it)
//   engine       none | longhole (run longhole_decompose with exact kappa, tau per graph)
//   timings      false | true (wall-clock fields make output nondeterministic)
//   output, table   records (JSON lines) and max-chi table (CSV); relative to the config file
struct ExperimentConfig {
  std::uint64_t seed = 1;
  int samples = 100;
  int n_min = 4;
  int n_max = 12;
  std::vector<GeneratorSpec> generators;
  std::vector<int> k_values{1, 2, 3};
  std::vector<int> ell_values{4, 5, 6};
  SolverLimits limits;
  int threads = 1;
  std::string engine = "none";
  bool timings = false;
  std::filesystem::path output;
  std::filesystem::path table;

  // Throws ParseError on unknown keys or bad values, InputError on inconsistent ones.
  static ExperimentConfig parse(const std::string& text, const std::filesystem::path& base_dir = {});
  static ExperimentConfig load(const std::filesystem::path& path);
  // Reads CHIB_NODE_BUDGET / CHIB_TIME_BUDGET.
  void apply_env_overrides();
  void validate() const;
};

// A cell (k, ell) admits G when omega(G) <= k and G has no hole of length >= ell.
bool admits(int k, int ell, int omega, int longest_hole);

struct ExperimentRecord {
  std::size_t index = 0;  // position in the deterministic sample order
  std::string generator;
  std::uint64_t seed = 0;
  std::string graph6;
  int n = 0;
  std::size_t m = 0;
  int omega = 0;
  VertexSet clique;
  int longest_hole = 0;
  std::optional<Hole> hole;
  std::optional<int> chi;  // unset when the chi solve ran out of budget
  int chi_lower = 0;
  std::optional<Coloring> coloring;
  std::string status = "ok";  // ok | budget_exhausted
  std::vector<std::pair<int, int>> cells;
  nlohmann::json engines = nlohmann::json::object();
  std::optional<double> seconds;

  nlohmann::json to_json() const;
  static ExperimentRecord from_json(const nlohmann::json& j);
};

struct CellSummary {
  int k = 0;
  int ell = 0;
  std::size_t graphs = 0;
  std::size_t exhausted = 0;
  std::optional<int> max_chi;
  bool within_main_bound = true;  // every recorded chi <= main_bound(k, ell) where evaluable
};

struct SweepResult {
  std::vector<ExperimentRecord> records;  // filtered-in graphs, in sample order
  std::size_t sampled = 0;
  std::vector<CellSummary> table;
};

// Pure function of the config (timings aside).
SweepResult run_conjecture_sweep(const ExperimentConfig& config);

std::string records_to_jsonl(const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> records_from_jsonl(const std::string& text);
std::string table_to_csv(const std::vector<CellSummary>& table);
// Writes config.output and config.table when set.
void write_sweep(const ExperimentConfig& config, const SweepResult& result);

struct ReplayReport {
  std::size_t records = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Re-verifies every certificate of every record with the independent checkers and recomputes
// omega, longest hole and chi (under limits) to confirm the recorded verdicts.
ReplayReport replay_records(const std::vector<ExperimentRecord>& records, const SolverLimits& limits = {});

// ---- engine driver ---------------------------------------------------------------------

struct EngineRequest {
  std::string name;
  Graph graph;
  std::optional<nlohmann::json> structure;
  std::map<std::string, std::string> params;
  SolverLimits limits;
};

struct EngineReport {
  EngineStatus status = EngineStatus::ok;
  std::string message;
  nlohmann::json document;  // {kind: "engine_run", engine, status, message, params, output, transcript}
};

// Engines: longhole_decompose, grow_tick, stabilize_multicover, ticks_to_impression,
// impression_to_hole, type1_extract_multicover, type2_construct_hole, grow_cable,
// grow_cable_from_base. Throws InputError for unknown names or missing/bad params and
// ParseError for malformed structures.
EngineReport run_engine(const EngineRequest& request);
std::vector<std::string> engine_names();

// Process exit codes shared by the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitFailed = 4;
int exit_code(EngineStatus s);

}  // namespace chib::harness
