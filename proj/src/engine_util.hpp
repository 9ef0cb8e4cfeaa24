#pragma once

// Helpers shared by the engine sources.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "chib/engines.hpp"
#include "chib/errors.hpp"
#include "chib/serialize.hpp"

namespace chib::detail {

// A construction step that should have succeeded did not.
class EngineFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Scored {
  VertexSet set;
  int chi = -1;
};

// chi with a transcript claim.
inline int chi_claim(ChiOracle& oracle, EngineTranscript& t, const std::string& label, const VertexSet& x) {
  int c = oracle.chi(x);
  t.claim(label, x, c);
  return c;
}

// Component of G[within] of maximum chi; ties to the lowest minimum id.
inline Scored max_chi_component(ChiOracle& oracle, const VertexSet& within) {
  Scored best{within, -1};
  for (const auto& comp : components(oracle.graph(), within)) {
    int c = oracle.chi(comp);
    if (c > best.chi) best = {comp, c};
  }
  if (best.chi < 0) best = {within, 0};
  return best;
}

// Class of maximum chi; ties to the smallest key.
template <class Key>
std::pair<Key, Scored> max_chi_class(ChiOracle& oracle, const std::map<Key, VertexSet>& classes) {
  std::pair<Key, Scored> best{};
  best.second.chi = -1;
  for (const auto& [k, s] : classes) {
    int c = oracle.chi(s);
    if (c > best.second.chi) best = {k, Scored{s, c}};
  }
  return best;
}

inline nlohmann::json js(const VertexSet& s) { return ser::set_to_json(s); }

template <class T, class F>
EngineRun<T> run_guarded(const std::string& engine, F&& body) {
  EngineRun<T> run;
  run.transcript.engine = engine;
  try {
    run.output = body(run.transcript);
    run.status = EngineStatus::ok;
  } catch (const PreconditionError& e) {
    run.status = EngineStatus::precondition_failed;
    run.message = e.what();
  } catch (const BudgetExhausted& e) {
    run.status = EngineStatus::budget_exhausted;
    run.message = e.what();
  } catch (const EngineFailure& e) {
    run.status = EngineStatus::failed;
    run.message = e.what();
  }
  if (!run.ok()) {
    run.output.reset();
    run.transcript.outcome = {{"status", to_string(run.status)}, {"message", run.message}};
  }
  return run;
}

}  // namespace chib::detail
