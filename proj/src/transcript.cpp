#include "chib/engines.hpp"
#include "chib/errors.hpp"
#include "chib/serialize.hpp"

namespace chib {

const char* to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::verified: return "verified";
    case HypothesisStatus::assumed: return "assumed";
    case HypothesisStatus::failed: return "failed";
  }
  return "?";
}

const char* to_string(EngineStatus s) {
  switch (s) {
    case EngineStatus::ok: return "ok";
    case EngineStatus::precondition_failed: return "precondition_failed";
    case EngineStatus::budget_exhausted: return "budget_exhausted";
    case EngineStatus::failed: return "failed";
  }
  return "?";
}

TranscriptStep& EngineTranscript::step(std::string name, nlohmann::json detail) {
  steps.push_back({std::move(name), std::move(detail), {}});
  return steps.back();
}

void EngineTranscript::claim(std::string label, const VertexSet& set, int value) {
  if (steps.empty()) step("");
  steps.back().claims.push_back({std::move(label), set, value});
}

void EngineTranscript::hypothesis(std::string name, HypothesisStatus status, std::string note) {
  hypotheses.push_back({std::move(name), status, std::move(note)});
}

std::size_t EngineTranscript::claim_count() const {
  std::size_t n = 0;
  for (const auto& s : steps) n += s.claims.size();
  return n;
}

nlohmann::json EngineTranscript::to_json() const {
  nlohmann::json st = nlohmann::json::array();
  for (const auto& s : steps) {
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : s.claims) claims.push_back({{"label", c.label}, {"set", ser::set_to_json(c.set)}, {"chi", c.value}});
    st.push_back({{"name", s.name}, {"detail", s.detail}, {"claims", claims}});
  }
  nlohmann::json hy = nlohmann::json::array();
  for (const auto& h : hypotheses) hy.push_back({{"name", h.name}, {"status", to_string(h.status)}, {"note", h.note}});
  return {{"kind", "transcript"}, {"engine", engine}, {"steps", st}, {"hypotheses", hy}, {"outcome", outcome}};
}

EngineTranscript EngineTranscript::from_json(const nlohmann::json& j, int n) {
  if (ser::kind_of(j) != "transcript") throw ParseError("expected kind \"transcript\"");
  EngineTranscript t;
  try {
    t.engine = j.at("engine").get<std::string>();
    for (const auto& s : j.at("steps")) {
      TranscriptStep step{s.at("name").get<std::string>(), s.value("detail", nlohmann::json::object()), {}};
      for (const auto& c : s.at("claims")) {
        step.claims.push_back({c.at("label").get<std::string>(), ser::set_from_json(c.at("set"), n), c.at("chi").get<int>()});
      }
      t.steps.push_back(std::move(step));
    }
    for (const auto& h : j.at("hypotheses")) {
      std::string st = h.at("status").get<std::string>();
      HypothesisStatus hs = st == "verified" ? HypothesisStatus::verified
                            : st == "failed" ? HypothesisStatus::failed
                                             : HypothesisStatus::assumed;
      t.hypotheses.push_back({h.at("name").get<std::string>(), hs, h.value("note", "")});
    }
    t.outcome = j.value("outcome", nlohmann::json());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("transcript: ") + e.what());
  }
  return t;
}

AuditReport audit_transcript(const Graph& g, const EngineTranscript& t, const SolverLimits& limits) {
  AuditReport r;
  for (const auto& s : t.steps) {
    for (const auto& c : s.claims) {
      ++r.checked;
      if (c.set.universe() != g.order()) {
        r.mismatches.push_back(s.name + "/" + c.label + ": set is not over this graph");
        continue;
      }
      ChiResult got = chi_of_subset(g, c.set, limits);
      if (!got.complete()) {
        r.mismatches.push_back(s.name + "/" + c.label + ": re-solve did not finish");
      } else if (got.chi() != c.value) {
        r.mismatches.push_back(s.name + "/" + c.label + ": claimed " + std::to_string(c.value) + ", actual " +
                               std::to_string(got.chi()));
      }
    }
  }
  return r;
}

}  // namespace chib
