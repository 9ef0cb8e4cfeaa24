#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chib/bounds.hpp"
#include "chib/certificates.hpp"
#include "chib/solvers.hpp"
#include "chib/structures.hpp"

namespace chib {

// chi(G[set]) = value, as claimed by an engine step.
struct ChiClaim {
  std::string label;
  VertexSet set;
  int value = 0;
};

enum class HypothesisStatus { verified, assumed, failed };
const char* to_string(HypothesisStatus s);

struct Hypothesis {
  std::string name;
  HypothesisStatus status = HypothesisStatus::assumed;
  std::string note;
};

struct TranscriptStep {
  std::string name;
  nlohmann::json detail = nlohmann::json::object();
  std::vector<ChiClaim> claims;
};

struct EngineTranscript {
  std::string engine;
  std::vector<TranscriptStep> steps;
  std::vector<Hypothesis> hypotheses;
  nlohmann::json outcome;

  TranscriptStep& step(std::string name, nlohmann::json detail = nlohmann::json::object());
  // Appends to the last step (opening an unnamed one if needed).
  void claim(std::string label, const VertexSet& set, int value);
  void hypothesis(std::string name, HypothesisStatus status, std::string note = "");
  std::size_t claim_count() const;

  nlohmann::json to_json() const;
  // n is the ambient graph order; throws ParseError.
  static EngineTranscript from_json(const nlohmann::json& j, int n);
};

struct AuditReport {
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Recomputes every chi claim with a fresh solver call (no memo).
AuditReport audit_transcript(const Graph& g, const EngineTranscript& t, const SolverLimits& limits = {});

enum class EngineStatus { ok, precondition_failed, budget_exhausted, failed };
const char* to_string(EngineStatus s);

template <class T>
struct EngineRun {
  EngineStatus status = EngineStatus::ok;
  std::optional<T> output;
  EngineTranscript transcript;
  std::string message;

  bool ok() const { return status == EngineStatus::ok; }
};

// ---- long holes ------------------------------------------------------------------------

// 2(ell-3)(kappa+tau)+1.
long long longhole_color_bound(int ell, int kappa, int tau);

// Exactly one of the two is set on success.
struct LongholeOutcome {
  std::optional<Coloring> coloring;
  std::optional<Hole> hole;
};

// Throws InputError unless ell >= 4 and kappa, tau >= 0.
EngineRun<LongholeOutcome> longhole_decompose(const Graph& g, int ell, int kappa, int tau,
                                              const SolverLimits& limits = {});

// ---- ticks and impressions ---------------------------------------------------------------

struct TickLevel {
  unsigned long m = 1;
  unsigned long c = 1;
};

struct GrowTickParams {
  int j = 1;
  int k = 2;
  unsigned long m = 1;
  unsigned long c = 1;
  unsigned long kappa = 1;
  // (m_i, c_i) for i = 0..j; the recurrence from [bounds] when unset.
  std::optional<std::vector<TickLevel>> ladder;
  // Reject inputs with |X| < m_j or chi(C) < c_j instead of running and checking the outcome.
  bool enforce_thresholds = false;
  SolverLimits limits;
};

struct TickOutcome {
  Multicover mc;  // stable, contained in the input, covering its own C
  Tick tick;      // tangent to mc
};

EngineRun<TickOutcome> grow_tick(const Graph& g, const Multicover& mc, const GrowTickParams& p);

struct StabilizeOutcome {
  Multicover mc;
  std::vector<int> fingerprint;  // f(x) per member of mc.X
  int chi_before = 0;
  int chi_after = 0;
};

EngineRun<StabilizeOutcome> stabilize_multicover(const Graph& g, const Multicover& mc, int kappa,
                                                 const SolverLimits& limits = {});

// Pattern vertices 0..n-1 are X' in increasing order, n..2n-1 the apexes of ticks[0..n-1].
EngineRun<Impression> ticks_to_impression(const Graph& g, const std::vector<Tick>& ticks, const Multicover& mc);

// Restricted exhaustive hole search on the impression's vertex union. A failed search is an
// audit case (status failed).
EngineRun<Hole> impression_to_hole(const Graph& g, const Impression& imp, const SolverLimits& limits = {});

// ---- cables ----------------------------------------------------------------------------

// Colours of pairs i < j of {0..t-1}, each in [0, h).
class PairColoring {
 public:
  PairColoring(int t, int h);
  int t() const noexcept { return t_; }
  int h() const noexcept { return h_; }
  int get(int i, int j) const;
  void set(int i, int j, int colour);

 private:
  int t_, h_;
  std::vector<int> c_;
};

struct MonoSubset {
  std::vector<int> indices;  // increasing
  int colour = 0;
};

// Smallest colour admitting a monochromatic m-subset, with the lexicographically first subset
// of that colour; none when no colour admits one.
std::optional<MonoSubset> monochromatic_subset(const PairColoring& colours, int m);

// Multicover (x_j, Y_{j,t}) for j in a monochromatic set I of size m. The length check
// t >= ramsey_upper(h, m) can be switched off for exploratory runs.
EngineRun<Multicover> type1_extract_multicover(const Graph& g, const Cable& cable, int m, bool check_length = true);

// Hole v-x_1-z_1-...-z_t-x_t of length exactly ell from a type-2 cable of length ell-3.
EngineRun<Hole> type2_construct_hole(const Graph& g, const Cable& cable, int ell, int tau,
                                     const SolverLimits& limits = {});

enum class CableMode {
  adaptive,  // case choices and clique search maximise chi of the next base
  literal,   // the thresholds d_i from the sigma ladder of the target length and c
};

struct GrowCableParams {
  int kappa = 0;
  int tau = 0;
  CableMode mode = CableMode::adaptive;
  // Literal mode only: target length and base chromatic number of the sigma ladder, and phi.
  int target_length = 1;
  unsigned long target_c = 0;
  std::optional<BoundFunction> phi;
  SolverLimits limits;
};

// One growth step s -> s+1; the transcript records the fingerprint and the case taken per i.
EngineRun<Cable> grow_cable(const Graph& g, const Cable& cable, const GrowCableParams& p);

// Base-only cable on V(G), grown to length t (or as far as the steps succeed).
EngineRun<Cable> grow_cable_from_base(const Graph& g, int h, int t, const GrowCableParams& p);

}  // namespace chib
