#include <charconv>
#include <set>

#include "chib/errors.hpp"
#include "chib/harness.hpp"
#include "chib/serialize.hpp"

namespace chib::harness {

using nlohmann::json;

namespace {

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& p) : p_(p) {}

  template <class T>
  T get(const std::string& key, std::optional<T> fallback = std::nullopt) {
    used_.insert(key);
    auto it = p_.find(key);
    if (it == p_.end()) {
      if (fallback) return *fallback;
      throw InputError("missing parameter '" + key + "'");
    }
    T v{};
    const std::string& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw InputError("bad value for '" + key + "': " + s);
    return v;
  }

  std::string text(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    auto it = p_.find(key);
    return it == p_.end() ? fallback : it->second;
  }

  bool flag(const std::string& key, bool fallback) {
    std::string v = text(key, fallback ? "true" : "false");
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw InputError("bad boolean for '" + key + "': " + v);
  }

  void finish() const {
    for (const auto& [k, v] : p_)
      if (!used_.count(k)) throw InputError("unknown parameter '" + k + "'");
  }

 private:
  const std::map<std::string, std::string>& p_;
  std::set<std::string> used_;
};

const json& need_structure(const EngineRequest& r, const std::string& kind) {
  if (!r.structure) throw InputError(r.name + " needs a " + kind + " structure file");
  return *r.structure;
}

json to_doc(const LongholeOutcome& o) {
  json j = json::object();
  if (o.coloring) j["coloring"] = ser::to_json(*o.coloring);
  if (o.hole) j["hole"] = ser::to_json(*o.hole);
  return j;
}
json to_doc(const TickOutcome& o) { return {{"multicover", ser::to_json(o.mc)}, {"tick", ser::to_json(o.tick)}}; }
json to_doc(const StabilizeOutcome& o) {
  return {{"multicover", ser::to_json(o.mc)}, {"fingerprint", o.fingerprint}, {"chi_before", o.chi_before},
          {"chi_after", o.chi_after}};
}
json to_doc(const Impression& o) { return ser::to_json(o); }
json to_doc(const Hole& o) { return ser::to_json(o); }
json to_doc(const Multicover& o) { return ser::to_json(o); }
json to_doc(const Cable& o) { return ser::to_json(o); }

template <class T>
EngineReport finish(const EngineRequest& r, const EngineRun<T>& run) {
  EngineReport rep;
  rep.status = run.status;
  rep.message = run.message;
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  rep.document = {{"kind", "engine_run"}, {"engine", r.name},           {"status", to_string(run.status)},
                  {"message", run.message}, {"params", params},          {"transcript", run.transcript.to_json()}};
  rep.document["output"] = run.output ? to_doc(*run.output) : json();
  return rep;
}

GrowCableParams cable_params(Params& p, const SolverLimits& limits) {
  GrowCableParams c;
  c.kappa = p.get<int>("kappa");
  c.tau = p.get<int>("tau");
  std::string mode = p.text("mode", "adaptive");
  if (mode == "adaptive") c.mode = CableMode::adaptive;
  else if (mode == "literal") c.mode = CableMode::literal;
  else throw InputError("mode must be adaptive or literal");
  c.target_length = p.get<int>("target_length", 1);
  c.target_c = p.get<unsigned long>("target_c", 0UL);
  c.limits = limits;
  return c;
}

}  // namespace

std::vector<std::string> engine_names() {
  return {"longhole_decompose",   "grow_tick",          "stabilize_multicover", "ticks_to_impression",
          "impression_to_hole",   "type1_extract_multicover", "type2_construct_hole", "grow_cable",
          "grow_cable_from_base"};
}

int exit_code(EngineStatus s) {
  switch (s) {
    case EngineStatus::ok: return kExitOk;
    case EngineStatus::precondition_failed: return kExitPrecondition;
    case EngineStatus::budget_exhausted: return kExitBudget;
    case EngineStatus::failed: return kExitFailed;
  }
  return kExitFailed;
}

EngineReport run_engine(const EngineRequest& r) {
  const Graph& g = r.graph;
  const int n = g.order();
  Params p(r.params);
  if (r.name == "longhole_decompose") {
    int ell = p.get<int>("ell"), kappa = p.get<int>("kappa"), tau = p.get<int>("tau");
    p.finish();
    return finish(r, longhole_decompose(g, ell, kappa, tau, r.limits));
  }
  if (r.name == "grow_tick") {
    Multicover mc = ser::multicover_from_json(need_structure(r, "multicover"), n);
    GrowTickParams gp;
    gp.j = p.get<int>("j", 1);
    gp.k = p.get<int>("k", 2);
    gp.m = p.get<unsigned long>("m", 1UL);
    gp.c = p.get<unsigned long>("c", 1UL);
    gp.kappa = p.get<unsigned long>("kappa", 1UL);
    gp.enforce_thresholds = p.flag("enforce_thresholds", false);
    gp.limits = r.limits;
    p.finish();
    return finish(r, grow_tick(g, mc, gp));
  }
  if (r.name == "stabilize_multicover") {
    Multicover mc = ser::multicover_from_json(need_structure(r, "multicover"), n);
    int kappa = p.get<int>("kappa");
    p.finish();
    return finish(r, stabilize_multicover(g, mc, kappa, r.limits));
  }
  if (r.name == "ticks_to_impression") {
    const json& s = need_structure(r, "tick_cluster");
    if (ser::kind_of(s) != "tick_cluster") throw ParseError("expected kind tick_cluster");
    Multicover mc;
    std::vector<Tick> ticks;
    try {
      mc = ser::multicover_from_json(s.at("multicover"), n);
      for (const auto& t : s.at("ticks")) ticks.push_back(ser::tick_from_json(t, n));
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad tick_cluster: ") + e.what());
    }
    p.finish();
    return finish(r, ticks_to_impression(g, ticks, mc));
  }
  if (r.name == "impression_to_hole") {
    Impression imp = ser::impression_from_json(need_structure(r, "impression"), n);
    p.finish();
    return finish(r, impression_to_hole(g, imp, r.limits));
  }
  if (r.name == "type1_extract_multicover") {
    Cable c = ser::cable_from_json(need_structure(r, "cable"), n);
    int m = p.get<int>("m");
    bool check = p.flag("check_length", true);
    p.finish();
    return finish(r, type1_extract_multicover(g, c, m, check));
  }
  if (r.name == "type2_construct_hole") {
    Cable c = ser::cable_from_json(need_structure(r, "cable"), n);
    int ell = p.get<int>("ell"), tau = p.get<int>("tau");
    p.finish();
    return finish(r, type2_construct_hole(g, c, ell, tau, r.limits));
  }
  if (r.name == "grow_cable") {
    Cable c = ser::cable_from_json(need_structure(r, "cable"), n);
    GrowCableParams cp = cable_params(p, r.limits);
    p.finish();
    return finish(r, grow_cable(g, c, cp));
  }
  if (r.name == "grow_cable_from_base") {
    int h = p.get<int>("h", 1), t = p.get<int>("t");
    GrowCableParams cp = cable_params(p, r.limits);
    p.finish();
    return finish(r, grow_cable_from_base(g, h, t, cp));
  }
  throw InputError("unknown engine '" + r.name + "'");
}

}  // namespace chib::harness
