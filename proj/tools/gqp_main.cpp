// gqp-lab: batch front end for the finite-model laboratory.
//
// Subcommands cover the whole pipeline: postulate checking on preference
// structures, axiom checking and classification of event relations,
// derivation and construction between the two levels, lemma suites,
// enumeration, total extensions, and the two conjecture sweeps.
//
// Exit codes:
//   0  all checks passed / the search completed
//   1  a checked property failed (a witness is emitted)
//   2  inconclusive: a budget or cap was exhausted, or a gate was unmet
//   3  input error (malformed file, bad flag, unusable input)
//
// Reports are emitted in a human-readable text form (default) or as a
// machine-readable JSON document (--format machine). Both embed the full run
// configuration; machine reports are byte-deterministic for a fixed
// configuration.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gqp/gqp.hpp"

namespace {

using namespace gqp;

// ---------------------------------------------------------------------------
// Shared plumbing
// ---------------------------------------------------------------------------

struct CommonOpts {
  std::string q5 = "nonempty";
  std::string q7_prizes = "all";
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000000;
  std::uint64_t cap = 65536;
  std::string format = "text";
  std::string output;  // empty = stdout
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--q5", o.q5, "Q5 variant: which events must carry a non-trivial preference")
      ->check(CLI::IsMember({"nonempty", "notnull"}))
      ->capture_default_str();
  cmd->add_option("--q7-prizes", o.q7_prizes,
                  "constant pairs quantified by Q7: all distinct pairs, or ordered pairs only")
      ->check(CLI::IsMember({"all", "ordered"}))
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "random seed for sampled searches")->capture_default_str();
  cmd->add_option("--budget", o.budget, "node budget for searches")->capture_default_str();
  cmd->add_option("--cap", o.cap, "act-space cap for exhaustive checks")->capture_default_str();
  cmd->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  cmd->add_option("--output,-o", o.output, "write the report to this file instead of stdout");
}

CheckOptions make_check_options(const CommonOpts& o) {
  CheckOptions c;
  c.act_cap = o.cap;
  c.q5_variant = o.q5 == "notnull" ? Q5Variant::notnull : Q5Variant::nonempty;
  c.q7_prizes = o.q7_prizes == "ordered" ? Q7Prizes::ordered : Q7Prizes::all_pairs;
  return c;
}

RunConfig make_config(const std::string& command, std::vector<std::string> inputs,
                      const CommonOpts& o, bool complete = false,
                      const std::string& event = {}) {
  RunConfig cfg;
  cfg.command = command;
  cfg.inputs = std::move(inputs);
  cfg.q5_variant = o.q5;
  cfg.q7_prizes = o.q7_prizes;
  cfg.seed = o.seed;
  cfg.budget = o.budget;
  cfg.cap = o.cap;
  cfg.format = o.format;
  cfg.complete = complete;
  cfg.event = event;
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw input_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_out(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw input_error("cannot open output file: " + o.output);
  f << text;
}

EventRelation load_relation(const std::string& path) {
  return parse_relation_document(read_file(path));
}

PreferenceStructure load_structure(const std::string& path) {
  return parse_document(read_file(path)).realize();
}

// Text reports start with the run configuration as '#' comment lines, so
// document-shaped outputs (derive, construct, enumerate, extensions) stay
// parseable as text-format files.
std::string config_comment(const RunConfig& cfg) {
  std::string out = "# run: " + cfg.command;
  for (const std::string& p : cfg.inputs) out += " " + p;
  out += "\n# config: q5=" + cfg.q5_variant + " q7-prizes=" + cfg.q7_prizes +
         " seed=" + std::to_string(cfg.seed) + " budget=" + std::to_string(cfg.budget) +
         " cap=" + std::to_string(cfg.cap) + " format=" + cfg.format;
  if (cfg.complete) out += " complete";
  if (!cfg.event.empty()) out += " event=" + cfg.event;
  out += "\n";
  return out;
}

const char* verdict_word(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

// Overall outcome of a batch of checks: any failure wins, then any
// inconclusive result, then pass.
Verdict overall(const std::vector<CheckResult>& rs) {
  bool undecided = false;
  for (const CheckResult& r : rs) {
    if (r.verdict == Verdict::fail) return Verdict::fail;
    if (r.verdict == Verdict::inconclusive) undecided = true;
  }
  return undecided ? Verdict::inconclusive : Verdict::pass;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::inconclusive: return 2;
  }
  return 3;
}

// Standard shape for commands that run a list of checks.
int emit_checks(const RunConfig& cfg, const CommonOpts& o,
                const std::vector<CheckResult>& rs,
                const std::optional<EventRelation>& relation = std::nullopt) {
  Verdict v = overall(rs);
  if (o.format == "machine") {
    Json rep = make_report(cfg);
    if (relation) rep["relation"] = relation_rows(*relation);
    rep["checks"] = check_results_json(rs);
    rep["result"] = verdict_word(v);
    write_out(o, dump_report(rep));
  } else {
    std::string out = config_comment(cfg);
    for (const CheckResult& r : rs) out += render_check_line(r) + "\n";
    out += std::string("result: ") + verdict_word(v) + "\n";
    write_out(o, out);
  }
  return exit_code(v);
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

int cmd_check_postulates(const std::string& path, const std::vector<std::string>& ids,
                         const CommonOpts& o) {
  RunConfig cfg = make_config("check-postulates", {path}, o);
  PreferenceStructure ps = load_structure(path);
  CheckOptions opts = make_check_options(o);
  std::vector<Postulate> wanted;
  if (ids.empty()) {
    wanted.assign(all_postulates.begin(), all_postulates.end());
  } else {
    for (const std::string& id : ids) {
      std::optional<Postulate> p = parse_postulate(id);
      if (!p) throw input_error("unknown postulate id: " + id);
      wanted.push_back(*p);
    }
  }
  std::vector<CheckResult> rs;
  for (Postulate p : wanted) rs.push_back(check_postulate(ps, p, opts));
  return emit_checks(cfg, o, rs);
}

int cmd_check_gqp(const std::string& path, const CommonOpts& o) {
  RunConfig cfg = make_config("check-gqp", {path}, o);
  EventRelation rel = load_relation(path);
  return emit_checks(cfg, o, check_gqp_all(rel), rel);
}

int cmd_derive(const std::string& path, const CommonOpts& o) {
  RunConfig cfg = make_config("derive", {path}, o);
  PreferenceStructure ps = load_structure(path);
  EventRelation rel = derive_relation(ps, make_check_options(o));
  if (o.format == "machine") {
    Json rep = make_report(cfg);
    rep["relation"] = relation_rows(rel);
    write_out(o, dump_report(rep));
  } else {
    write_out(o, config_comment(cfg) + emit_relation(rel));
  }
  return 0;
}

int cmd_construct(const std::string& path, const CommonOpts& o) {
  RunConfig cfg = make_config("construct", {path}, o);
  EventRelation rel = load_relation(path);
  PreferenceStructure ps = construct_preferences(rel);
  if (o.format == "machine") {
    Json rep = make_report(cfg);
    rep["structure"] = emit_structure(ps);
    write_out(o, dump_report(rep));
  } else {
    write_out(o, config_comment(cfg) + emit_structure(ps));
  }
  return 0;
}

int cmd_round_trip(const std::string& path, const CommonOpts& o) {
  RunConfig cfg = make_config("round-trip", {path}, o);
  EventRelation rel = load_relation(path);
  RoundTripReport rt = round_trip(rel, make_check_options(o));

  // The trip passes when the derived relation matches the input and the
  // constructed structure satisfies the expected postulates. A degenerate
  // input (the sure event is below the empty one) is excused from Q6.
  bool fail = !rt.relation_match;
  bool undecided = false;
  for (const CheckResult& r : rt.construction_postulates) {
    bool excused = r.id == "Q6" && rt.degenerate;
    if (r.verdict == Verdict::fail && !excused) fail = true;
    if (r.verdict == Verdict::inconclusive) undecided = true;
  }
  Verdict v = fail ? Verdict::fail
                   : (undecided ? Verdict::inconclusive : Verdict::pass);

  if (o.format == "machine") {
    Json rep = make_report(cfg);
    rep["round_trip"] = round_trip_json(rt);
    rep["result"] = verdict_word(v);
    write_out(o, dump_report(rep));
  } else {
    std::string out = config_comment(cfg);
    for (const CheckResult& r : rt.construction_postulates)
      out += render_check_line(r) + "\n";
    out += std::string("relation match: ") + (rt.relation_match ? "yes" : "no") + "\n";
    out += std::string("degenerate: ") + (rt.degenerate ? "yes" : "no") + "\n";
    out += "derived relation:\n" + render_relation_text(rt.derived);
    out += std::string("result: ") + verdict_word(v) + "\n";
    write_out(o, out);
  }
  return exit_code(v);
}

int cmd_classify(const std::string& path, const CommonOpts& o) {
  RunConfig cfg = make_config("classify", {path}, o);
  EventRelation rel = load_relation(path);
  Classification c = classify(rel);
  // A relation that is not a g.q.p. has no family flags: the classification
  // question itself fails, with the failing axiom as evidence.
  Verdict v = c.verdict == Verdict::pass ? Verdict::pass : Verdict::fail;
  if (o.format == "machine") {
    Json rep = make_report(cfg);
    rep["relation"] = relation_rows(rel);
    rep["classification"] = classification_json(c);
    if (v == Verdict::fail) rep["gate"] = check_result_json(check_gqp(rel));
    rep["result"] = verdict_word(v);
    write_out(o, dump_report(rep));
  } else {
    std::string out = config_comment(cfg);
    out += std::string("verdict: ") + verdict_word(c.verdict) + "\n";
    if (c.verdict == Verdict::pass) {
      out += std::string("total: ") + (c.flags.total ? "yes" : "no") + "\n";
      out += std::string("standard: ") + (c.flags.standard ? "yes" : "no") + "\n";
      out += std::string("purely nonstandard: ") +
             (c.flags.purely_nonstandard ? "yes" : "no") + "\n";
    }
    if (!c.note.empty()) out += "note: " + c.note + "\n";
    if (v == Verdict::fail) out += render_check_line(check_gqp(rel)) + "\n";
    out += std::string("result: ") + verdict_word(v) + "\n";
    write_out(o, out);
  }
  return exit_code(v);
}

int cmd_verify_lemmas(const std::string& path, const std::vector<std::string>& ids,
                      const CommonOpts& o) {
  RunConfig cfg = make_config("verify-lemmas", {path}, o);
  Document doc = parse_document(read_file(path));
  std::vector<CheckResult> rs;
  auto selected = [&](const char* id) {
    if (ids.empty()) return true;
    for (const std::string& want : ids)
      if (want == id) return true;
    return false;
  };
  if (doc.kind == DocumentKind::relation) {
    // Relation documents get the derived-property suite for event relations.
    const EventRelation& rel = *doc.relation;
    for (GqpProperty id : all_gqp_properties)
      if (selected(to_string(id))) rs.push_back(verify_gqp_property(rel, id));
  } else {
    // Structures and models get the act-level suite, plus the level-set
    // comparison lemma that connects the two layers.
    PreferenceStructure ps = doc.realize();
    CheckOptions opts = make_check_options(o);
    for (PreferenceLemma id : all_preference_lemmas)
      if (selected(to_string(id))) rs.push_back(verify_preference_lemma(ps, id, opts));
    if (selected("L11")) rs.push_back(verify_lemma11(ps, opts));
  }
  if (rs.empty()) throw input_error("no lemma or property matches the requested ids");
  return emit_checks(cfg, o, rs, doc.relation);
}

// Renders a stream of relation documents, separated by blank lines, with the
// run configuration and summary up front as comments.
std::string relation_stream(const RunConfig& cfg, const std::vector<EventRelation>& rels,
                            const std::vector<std::pair<std::string, std::string>>& summary) {
  std::string out = config_comment(cfg);
  for (const auto& [key, value] : summary) out += "# " + key + ": " + value + "\n";
  for (const EventRelation& r : rels) out += "\n" + emit_relation(r);
  return out;
}

int cmd_enumerate(unsigned states, std::size_t count, bool complete, const CommonOpts& o) {
  RunConfig cfg = make_config("enumerate", {}, o, complete);
  std::vector<std::pair<std::string, std::string>> summary;
  summary.emplace_back("states", std::to_string(states));
  std::vector<EventRelation> rels;
  bool done = true;
  std::uint64_t nodes = 0;
  if (complete) {
    EnumerationResult res = enumerate_gqps(states, o.budget);
    rels = std::move(res.relations);
    done = res.complete;
    nodes = res.nodes_explored;
    summary.emplace_back("mode", "complete");
  } else {
    SampleResult res = sample_gqps(states, count, o.seed, o.budget);
    rels = std::move(res.relations);
    done = !res.budget_exhausted;
    nodes = res.nodes_explored;
    summary.emplace_back("mode", "sample");
    summary.emplace_back("requested", std::to_string(count));
    summary.emplace_back("walks", std::to_string(res.walks));
  }
  summary.emplace_back("relations", std::to_string(rels.size()));
  summary.emplace_back("nodes", std::to_string(nodes));
  summary.emplace_back("complete", done ? "yes" : "no");

  if (o.format == "machine") {
    Json rep = make_report(cfg);
    rep["states"] = states;
    rep["mode"] = complete ? "complete" : "sample";
    if (!complete) rep["requested"] = count;
    Json arr = Json::array();
    for (const EventRelation& r : rels) arr.push_back(relation_rows(r));
    rep["relations"] = std::move(arr);
    rep["nodes_explored"] = nodes;
    rep["complete"] = done;
    write_out(o, dump_report(rep));
  } else {
    write_out(o, relation_stream(cfg, rels, summary));
  }
  return done ? 0 : 2;
}

int cmd_extensions(const std::string& path, const CommonOpts& o) {
  RunConfig cfg = make_config("extensions", {path}, o);
  EventRelation rel = load_relation(path);
  ExtensionResult res = total_extensions(rel, o.budget);
  if (o.format == "machine") {
    Json rep = make_report(cfg);
    rep["relation"] = relation_rows(rel);
    Json arr = Json::array();
    for (const EventRelation& r : res.relations) arr.push_back(relation_rows(r));
    rep["extensions"] = std::move(arr);
    rep["nodes_explored"] = res.nodes_explored;
    rep["complete"] = res.complete;
    write_out(o, dump_report(rep));
  } else {
    write_out(o, relation_stream(
                     cfg, res.relations,
                     {{"extensions", std::to_string(res.relations.size())},
                      {"nodes", std::to_string(res.nodes_explored)},
                      {"complete", res.complete ? "yes" : "no"}}));
  }
  return res.complete ? 0 : 2;
}

int conjecture_exit(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::holds_on_instance: return 0;
    case ConjectureStatus::counterexample_found: return 1;
    case ConjectureStatus::inconclusive: return 2;
  }
  return 3;
}

int emit_conjecture(const RunConfig& cfg, const CommonOpts& o, const ConjectureVerdict& v) {
  if (o.format == "machine") {
    Json rep = make_report(cfg);
    rep.update(conjecture_json(v));
    write_out(o, dump_report(rep));
  } else {
    std::string out = config_comment(cfg);
    out += std::string("status: ") + to_string(v.status) + "\n";
    if (!v.note.empty()) out += "note: " + v.note + "\n";
    out += "nodes: " + std::to_string(v.nodes_explored) + "\n";
    if (v.intersection) {
      out += "extensions: " + std::to_string(v.extensions) + "\n";
      out += "intersection:\n" + render_relation_text(*v.intersection);
    }
    if (v.candidates > 0) {
      out += "candidates: " + std::to_string(v.candidates) + "\n";
      if (v.candidates_canonical > 0)
        out += "canonical: " + std::to_string(v.candidates_canonical) + "\n";
      out += "seed: " + std::to_string(v.seed) + "\n";
      out += std::string("exhaustive: ") + (v.exhaustive ? "yes" : "no") + "\n";
    }
    if (v.witness) out += "witness: " + render_witness(*v.witness) + "\n";
    if (v.structure) out += "structure:\n" + emit_structure(*v.structure);
    write_out(o, out);
  }
  return conjecture_exit(v.status);
}

int cmd_conjecture(const std::string& path, const CommonOpts& o) {
  RunConfig cfg = make_config("conjecture", {path}, o);
  EventRelation rel = load_relation(path);
  return emit_conjecture(cfg, o, check_intersection_conjecture(rel, o.budget));
}

int cmd_q7_search(unsigned states, unsigned consequences, bool require_q7,
                  const CommonOpts& o) {
  RunConfig cfg = make_config("q7-search", {}, o);
  Q7SearchOptions opts;
  opts.seed = o.seed;
  opts.check = make_check_options(o);
  opts.require_q7 = require_q7;
  ConjectureVerdict v = search_q7_independence(states, consequences, o.budget, opts);
  return emit_conjecture(cfg, o, v);
}

int cmd_verify_theorem2(const std::string& path, const std::string& event_bits,
                        const CommonOpts& o) {
  RunConfig cfg = make_config("verify-theorem2", {path}, o, false, event_bits);
  PreferenceStructure ps = load_structure(path);
  CheckOptions opts = make_check_options(o);
  unsigned n = ps.space().states.size();
  std::vector<std::pair<std::string, CheckResult>> rows;
  if (!event_bits.empty()) {
    Event A = Event::from_bitstring(event_bits);
    if (A.n_states() != n)
      throw input_error("event bitstring has " + std::to_string(A.n_states()) +
                        " states, the structure has " + std::to_string(n));
    rows.emplace_back(event_bits, verify_theorem2(ps, A, opts));
  } else {
    for (event_mask m = 0; m < (event_mask(1) << n); ++m) {
      Event A(m, n);
      rows.emplace_back(A.bitstring(), verify_theorem2(ps, A, opts));
    }
  }
  std::vector<CheckResult> rs;
  for (auto& [bits, r] : rows) rs.push_back(r);
  Verdict v = overall(rs);
  if (o.format == "machine") {
    Json rep = make_report(cfg);
    Json arr = Json::array();
    for (auto& [bits, r] : rows) {
      Json row;
      row["event"] = bits;
      row["check"] = check_result_json(r);
      arr.push_back(std::move(row));
    }
    rep["events"] = std::move(arr);
    rep["result"] = verdict_word(v);
    write_out(o, dump_report(rep));
  } else {
    std::string out = config_comment(cfg);
    for (auto& [bits, r] : rows) out += "event " + bits + ": " + render_check_line(r) + "\n";
    out += std::string("result: ") + verdict_word(v) + "\n";
    write_out(o, out);
  }
  return exit_code(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model laboratory for ordered events and act preferences"};
  app.require_subcommand(1);

  int code = 0;

  // check-postulates
  CommonOpts o_post;
  std::string post_path;
  std::vector<std::string> post_ids;
  CLI::App* c_post = app.add_subcommand(
      "check-postulates", "check the rationality postulates on a structure or model");
  c_post->add_option("file", post_path, "structure or model document")->required();
  c_post->add_option("--postulate", post_ids,
                     "check only these postulates (default: all of Q0..Q7, Q'4, R)");
  add_common(c_post, o_post);
  c_post->callback([&] { code = cmd_check_postulates(post_path, post_ids, o_post); });

  // check-gqp
  CommonOpts o_gqp;
  std::string gqp_path;
  CLI::App* c_gqp = app.add_subcommand(
      "check-gqp", "check the qualitative-probability axioms on an event relation");
  c_gqp->add_option("file", gqp_path, "relation document")->required();
  add_common(c_gqp, o_gqp);
  c_gqp->callback([&] { code = cmd_check_gqp(gqp_path, o_gqp); });

  // derive
  CommonOpts o_der;
  std::string der_path;
  CLI::App* c_der = app.add_subcommand(
      "derive", "derive the event relation induced by a structure or model");
  c_der->add_option("file", der_path, "structure or model document")->required();
  add_common(c_der, o_der);
  c_der->callback([&] { code = cmd_derive(der_path, o_der); });

  // construct
  CommonOpts o_con;
  std::string con_path;
  CLI::App* c_con = app.add_subcommand(
      "construct", "construct the canonical two-prize structure from an event relation");
  c_con->add_option("file", con_path, "relation document")->required();
  add_common(c_con, o_con);
  c_con->callback([&] { code = cmd_construct(con_path, o_con); });

  // round-trip
  CommonOpts o_rt;
  std::string rt_path;
  CLI::App* c_rt = app.add_subcommand(
      "round-trip", "construct preferences from a relation and re-derive it");
  c_rt->add_option("file", rt_path, "relation document")->required();
  add_common(c_rt, o_rt);
  c_rt->callback([&] { code = cmd_round_trip(rt_path, o_rt); });

  // classify
  CommonOpts o_cls;
  std::string cls_path;
  CLI::App* c_cls = app.add_subcommand(
      "classify", "classify a verified relation: total, standard, purely nonstandard");
  c_cls->add_option("file", cls_path, "relation document")->required();
  add_common(c_cls, o_cls);
  c_cls->callback([&] { code = cmd_classify(cls_path, o_cls); });

  // verify-lemmas
  CommonOpts o_lem;
  std::string lem_path;
  std::vector<std::string> lem_ids;
  CLI::App* c_lem = app.add_subcommand(
      "verify-lemmas",
      "verify the derived-property suite (act-level on structures, relation-level on relations)");
  c_lem->add_option("file", lem_path, "structure, model, or relation document")->required();
  c_lem->add_option("--id", lem_ids, "verify only these property ids");
  add_common(c_lem, o_lem);
  c_lem->callback([&] { code = cmd_verify_lemmas(lem_path, lem_ids, o_lem); });

  // enumerate
  CommonOpts o_enum;
  unsigned enum_states = 3;
  std::size_t enum_count = 100;
  bool enum_complete = false;
  CLI::App* c_enum = app.add_subcommand(
      "enumerate", "enumerate verified relations (sampled by default; --complete for all)");
  c_enum->add_option("--states", enum_states, "number of states")->capture_default_str();
  c_enum->add_option("--count", enum_count, "sample size (sampling mode only)")
      ->capture_default_str();
  c_enum->add_flag("--complete", enum_complete, "exhaustive enumeration instead of sampling");
  add_common(c_enum, o_enum);
  c_enum->callback([&] { code = cmd_enumerate(enum_states, enum_count, enum_complete, o_enum); });

  // extensions
  CommonOpts o_ext;
  std::string ext_path;
  CLI::App* c_ext = app.add_subcommand(
      "extensions", "enumerate all total verified relations extending the input");
  c_ext->add_option("file", ext_path, "relation document")->required();
  add_common(c_ext, o_ext);
  c_ext->callback([&] { code = cmd_extensions(ext_path, o_ext); });

  // conjecture
  CommonOpts o_conj;
  std::string conj_path;
  CLI::App* c_conj = app.add_subcommand(
      "conjecture",
      "test whether the input relation is the intersection of its total extensions");
  c_conj->add_option("file", conj_path, "relation document")->required();
  add_common(c_conj, o_conj);
  c_conj->callback([&] { code = cmd_conjecture(conj_path, o_conj); });

  // q7-search
  CommonOpts o_q7;
  unsigned q7_states = 2;
  unsigned q7_consequences = 2;
  bool q7_require = false;
  CLI::App* c_q7 = app.add_subcommand(
      "q7-search", "search for a structure separating Q7 from the level-set comparison");
  c_q7->add_option("--states", q7_states, "number of states (1..4)")->capture_default_str();
  c_q7->add_option("--consequences", q7_consequences, "number of consequences (2..4)")
      ->capture_default_str();
  c_q7->add_flag("--require-q7", q7_require, "restrict the search to candidates passing Q7");
  add_common(c_q7, o_q7);
  c_q7->callback([&] { code = cmd_q7_search(q7_states, q7_consequences, q7_require, o_q7); });

  // verify-theorem2
  CommonOpts o_t2;
  std::string t2_path;
  std::string t2_event;
  CLI::App* c_t2 = app.add_subcommand(
      "verify-theorem2",
      "verify level-set indifference on a structure passing the postulates");
  c_t2->add_option("file", t2_path, "structure or model document")->required();
  c_t2->add_option("--event", t2_event, "restrict to one event (bitstring, state 0 first)");
  add_common(c_t2, o_t2);
  c_t2->callback([&] { code = cmd_verify_theorem2(t2_path, t2_event, o_t2); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int cli_code = app.exit(e);
    return cli_code == 0 ? 0 : 3;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const budget_error& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return code;
}
