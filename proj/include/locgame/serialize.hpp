#pragma once

#include <json.hpp>

#include "locgame/bush.hpp"
#include "locgame/locating.hpp"
#include "locgame/plane.hpp"

namespace locgame {

using json = nlohmann::ordered_json;

inline json to_json(VertexSet s) { return s.to_vector(); }

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

inline json to_json(const SolveResult& r) {
  json strategy = json::array();
  for (const auto& e : r.strategy) strategy.push_back({{"belief", to_json(e.belief)}, {"probe", e.probe}});
  return {{"zeta", optional_json(r.zeta)}, {"turns", r.turns}, {"strategy", strategy}, {"states", r.states}};
}

inline json to_json(const MetricDimension& d) { return {{"dim", d.dimension}, {"witness", d.witness}}; }

inline json to_json(const VerificationReport& r) {
  json j{{"verdict", to_string(r.verdict)}, {"turns", r.turns}};
  if (r.verdict == Verdict::cycle) j["reason"] = "cycle";
  if (r.verdict == Verdict::timeout) j["reason"] = "timeout";
  json trace = json::array();
  for (const auto& t : r.trace) trace.push_back({{"probe", t.probe}, {"class", to_json(t.cls)}});
  j["trace"] = trace;
  return j;
}

inline json to_json(const EquivalenceReport& r) {
  json j{{"construction", r.construction}, {"lhs", r.lhs},           {"rhs", r.rhs},
         {"witness_lhs", r.witness_lhs},   {"witness_rhs", r.witness_rhs}, {"equal", r.equal()}};
  if (r.proof_strategy_verified) j["strategy_verified"] = *r.proof_strategy_verified;
  return j;
}

inline json to_json(const BushSearch& b) {
  return {{"k", optional_json(b.k)}, {"schedule", b.schedule}, {"states", b.states}};
}

inline json to_json(const ChainReport& c) {
  return {{"bush", c.bush}, {"blind", c.blind}, {"universal_zeta", c.universal_zeta}, {"holds", c.holds()}};
}

inline json to_json(const ScalingRow& r) {
  return {{"arity", r.arity},       {"height", r.height},       {"subdivisions", r.subdivisions},
          {"vertices", r.vertices}, {"regular", r.regular},     {"status", r.status},
          {"bush", optional_json(r.bush)}, {"schedule", r.schedule}, {"clean_regular", r.clean_regular},
          {"states", r.states}};
}

namespace plane {

inline json to_json(Point p) { return json::array({p.x, p.y}); }

inline json to_json(const std::vector<TraceEntry>& trace) {
  json rounds = json::array();
  for (const auto& t : trace)
    rounds.push_back({{"round", t.round}, {"probe", to_json(t.probe)}, {"distance", t.distance}, {"region", t.region}});
  return rounds;
}

inline json to_json(const TwoCopResult& r) {
  return {{"rounds", to_json(r.trace)}, {"estimate", to_json(r.located)}, {"error_bound", 0.0},
          {"turns", r.rounds}};
}

inline json to_json(const ApproxResult& r) {
  return {{"rounds", to_json(r.trace)},
          {"estimate", to_json(r.estimate)},
          {"error_bound", r.error_bound},
          {"exact", r.exact},
          {"epsilon", r.params.epsilon},
          {"delta", r.params.delta},
          {"deviation_l", r.deviation_l},
          {"deviation_k", r.deviation_k},
          {"sagitta_bound_l", r.sagitta_bound_l},
          {"sagitta_bound_k", r.sagitta_bound_k}};
}

inline json to_json(const std::vector<EscapeRound>& rounds) {
  json out = json::array();
  for (const auto& r : rounds)
    out.push_back({{"probe", to_json(r.probe)},
                   {"distance", r.distance},
                   {"region", "circle(" + describe(r.probe) + "," + describe(r.distance) + ")&disk(" +
                                  describe(r.previous) + ",1)"},
                   {"position", to_json(r.position)},
                   {"witness", to_json(r.witness)},
                   {"separation", r.separation}});
  return out;
}

}  // namespace plane

}  // namespace locgame
