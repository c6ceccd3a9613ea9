#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "gqp/bridge.hpp"
#include "gqp/core.hpp"
#include "gqp/errors.hpp"
#include "gqp/relation.hpp"
#include "gqp/result.hpp"
#include "gqp/search.hpp"
#include "gqp/textio.hpp"

// Machine-readable reports ("gqp-report-v1") and the matching human-readable
// renderings. Machine documents are deterministic: insertion-ordered keys,
// no timestamps, no durations — identical (input, run configuration) pairs
// produce byte-identical output.

namespace gqp {

using Json = nlohmann::ordered_json;

// Everything that parameterizes a run. Embedded verbatim in every report
// header so a report identifies the run that produced it.
struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string q5_variant = "nonempty";  // nonempty | notnull
  std::string q7_prizes = "all";        // all | ordered
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000000;
  std::uint64_t cap = 65536;  // act-space limit for exhaustive checks
  std::string format = "text";
  bool complete = false;  // enumeration: complete mode instead of sampling
  std::string event;      // event bitstring argument, when a command takes one
};

inline Json run_config_json(const RunConfig& rc) {
  Json j;
  j["command"] = rc.command;
  j["inputs"] = rc.inputs;
  j["q5"] = rc.q5_variant;
  j["q7_prizes"] = rc.q7_prizes;
  j["seed"] = rc.seed;
  j["budget"] = rc.budget;
  j["cap"] = rc.cap;
  j["format"] = rc.format;
  j["complete"] = rc.complete;
  if (!rc.event.empty()) j["event"] = rc.event;
  return j;
}

inline Json make_report(const RunConfig& rc) {
  Json j;
  j["format"] = "gqp-report-v1";
  j["run"] = run_config_json(rc);
  return j;
}

inline std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// JSON forms of the core result types
// ---------------------------------------------------------------------------

inline Json relation_rows(const EventRelation& rel) {
  Json rows = Json::array();
  std::uint32_t E = rel.event_count();
  for (event_mask A = 0; A < E; ++A) {
    std::string row;
    row.reserve(E);
    for (event_mask B = 0; B < E; ++B) row.push_back(rel.leq(A, B) ? '1' : '0');
    rows.push_back(std::move(row));
  }
  return rows;
}

inline EventRelation relation_from_rows(const Json& rows) {
  if (!rows.is_array() || rows.empty())
    throw input_error("relation rows must be a nonempty array");
  std::uint32_t E = static_cast<std::uint32_t>(rows.size());
  unsigned n = 0;
  while ((std::uint32_t{1} << n) < E) ++n;
  if ((std::uint32_t{1} << n) != E)
    throw input_error("relation row count must be a power of two");
  EventRelation rel(n);
  for (event_mask A = 0; A < E; ++A) {
    std::string row = rows[A].get<std::string>();
    if (row.size() != E)
      throw input_error("relation row has the wrong width");
    for (event_mask B = 0; B < E; ++B) {
      if (row[B] != '0' && row[B] != '1')
        throw input_error("relation rows must be over {0,1}");
      rel.set(A, B, row[B] == '1');
    }
  }
  return rel;
}

inline Json witness_json(const Witness& w) {
  Json j;
  if (!w.events.empty()) {
    Json a = Json::array();
    for (const auto& [role, ev] : w.events)
      a.push_back(Json{{"role", role}, {"event", ev.bitstring()}});
    j["events"] = std::move(a);
  }
  if (!w.acts.empty()) {
    Json a = Json::array();
    for (const auto& [role, act] : w.acts)
      a.push_back(Json{{"role", role}, {"act", act.values()}});
    j["acts"] = std::move(a);
  }
  if (!w.consequences.empty()) {
    Json a = Json::array();
    for (const auto& [role, c] : w.consequences)
      a.push_back(Json{{"role", role}, {"consequence", c}});
    j["consequences"] = std::move(a);
  }
  return j;
}

inline Witness witness_from_json(const Json& j) {
  Witness w;
  if (j.contains("events"))
    for (const Json& e : j["events"])
      w.events.emplace_back(e["role"].get<std::string>(),
                            Event::from_bitstring(e["event"].get<std::string>()));
  if (j.contains("acts"))
    for (const Json& e : j["acts"])
      w.acts.emplace_back(e["role"].get<std::string>(),
                          Act(e["act"].get<std::vector<consequence_t>>()));
  if (j.contains("consequences"))
    for (const Json& e : j["consequences"])
      w.consequences.emplace_back(e["role"].get<std::string>(),
                                  e["consequence"].get<consequence_t>());
  return w;
}

inline Json check_result_json(const CheckResult& r) {
  Json j;
  j["id"] = r.id;
  j["verdict"] = to_string(r.verdict);
  j["instances"] = r.instances;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.witness) j["witness"] = witness_json(*r.witness);
  return j;
}

inline Json check_results_json(const std::vector<CheckResult>& rs) {
  Json a = Json::array();
  for (const CheckResult& r : rs) a.push_back(check_result_json(r));
  return a;
}

inline Json classification_json(const Classification& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  if (c.verdict == Verdict::pass) {
    j["total"] = c.flags.total;
    j["standard"] = c.flags.standard;
    j["purely_nonstandard"] = c.flags.purely_nonstandard;
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline Json round_trip_json(const RoundTripReport& r) {
  Json j;
  j["postulates"] = check_results_json(r.construction_postulates);
  j["relation_match"] = r.relation_match;
  j["degenerate"] = r.degenerate;
  j["derived"] = relation_rows(r.derived);
  return j;
}

inline Json conjecture_json(const ConjectureVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  if (!v.note.empty()) j["note"] = v.note;
  j["nodes_explored"] = v.nodes_explored;
  j["seed"] = v.seed;
  j["exhaustive"] = v.exhaustive;
  if (v.relation) j["relation"] = relation_rows(*v.relation);
  if (v.intersection) {
    j["extensions"] = v.extensions;
    j["intersection"] = relation_rows(*v.intersection);
  }
  if (v.candidates || v.candidates_canonical) {
    j["candidates"] = v.candidates;
    j["candidates_canonical"] = v.candidates_canonical;
  }
  if (v.structure) j["structure"] = emit_structure(v.structure->materialized());
  if (v.witness) j["witness"] = witness_json(*v.witness);
  return j;
}

// ---------------------------------------------------------------------------
// Human-readable rendering
// ---------------------------------------------------------------------------

inline std::string render_witness(const Witness& w) {
  std::string out;
  auto sep = [&] { if (!out.empty()) out += ", "; };
  for (const auto& [role, ev] : w.events) {
    sep();
    out += role + " = " + (ev.n_states() ? ev.bitstring() : "(empty space)");
  }
  for (const auto& [role, act] : w.acts) {
    sep();
    out += role + " = [";
    for (std::size_t i = 0; i < act.values().size(); ++i) {
      if (i) out += " ";
      out += std::to_string(act.values()[i]);
    }
    out += "]";
  }
  for (const auto& [role, c] : w.consequences) {
    sep();
    out += role + " = " + std::to_string(c);
  }
  return out;
}

inline std::string render_check_line(const CheckResult& r) {
  std::string out = r.id + ": " + to_string(r.verdict);
  if (r.verdict != Verdict::inconclusive)
    out += " (" + std::to_string(r.instances) + " instance" +
           (r.instances == 1 ? "" : "s") + ")";
  if (r.witness && !r.witness->empty())
    out += "\n  witness: " + render_witness(*r.witness);
  if (!r.note.empty()) out += "\n  note: " + r.note;
  return out;
}

inline std::string render_relation_text(const EventRelation& rel) {
  std::string out;
  std::uint32_t E = rel.event_count();
  for (event_mask A = 0; A < E; ++A) {
    for (event_mask B = 0; B < E; ++B) out += rel.leq(A, B) ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace gqp
