// End-to-end tests for the gqp-lab command line tool: exit codes, report
// surfaces in both formats, determinism of machine reports, golden files, and
// the JSON helpers that machine reports are built from.
//
// The harness passes the tool's location and the repository directories as
// compile definitions; each invocation runs from the source directory so the
// relative input paths embedded in reports match the pinned golden files.

#include <catch_amalgamated.hpp>

#include <gqp/gqp.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace gqp;
namespace fs = std::filesystem;

namespace {

struct RunOutcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "gqp-cli-tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// Runs the tool with the given argument string, cwd = repository root.
RunOutcome run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = scratch_dir() / ("out" + std::to_string(counter));
  fs::path err = scratch_dir() / ("err" + std::to_string(counter));
  ++counter;
  std::string cmd = "cd \"" GQP_SOURCE_DIR "\" && \"" GQP_CLI_PATH "\" " +
                    args + " > \"" + out.string() + "\" 2> \"" + err.string() +
                    "\"";
  int raw = std::system(cmd.c_str());
  RunOutcome r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string data_file(const std::string& name) { return "data/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check-postulates passes on the uniform model") {
  RunOutcome r = run_cli("check-postulates " + data_file("uniform3.txt"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "# run: check-postulates data/uniform3.txt"));
  for (const char* id : {"Q0", "Q1", "Q2", "Q3", "Q4", "Q'4", "Q5", "Q6", "Q7", "R"})
    CHECK(contains(r.out, std::string(id) + ": pass"));
  CHECK(contains(r.out, "result: pass\n"));
}

TEST_CASE("check-postulates reports postulate failures with witnesses") {
  RunOutcome r = run_cli("check-postulates " + data_file("q0_violating.txt"));
  CHECK(r.code == 1);
  CHECK(contains(r.out, "Q0: fail"));
  CHECK(contains(r.out, "witness: A = 1, f = [0]"));
  CHECK(contains(r.out, "result: fail\n"));
}

TEST_CASE("check-postulates can select individual postulates") {
  RunOutcome r = run_cli("check-postulates " + data_file("partial_prizes.txt") +
                         " --postulate Q1 --postulate \"Q'4\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Q1: pass"));
  CHECK(contains(r.out, "Q'4: pass"));
  CHECK_FALSE(contains(r.out, "Q2:"));

  RunOutcome bad = run_cli("check-postulates " + data_file("uniform3.txt") +
                           " --postulate Q9");
  CHECK(bad.code == 3);
  CHECK(contains(bad.err, "error: unknown postulate id: Q9"));
}

TEST_CASE("check-gqp rejects a relation missing the empty-event axiom") {
  RunOutcome r = run_cli("check-gqp " + data_file("not_gqp.txt"));
  CHECK(r.code == 1);
  CHECK(contains(r.out, "axiom4: fail"));
  CHECK(contains(r.out, "witness: A = 1"));
  CHECK(contains(r.out, "result: fail\n"));

  // The machine report carries the relation; feeding it back through the
  // checker reproduces the same failing axiom.
  RunOutcome m = run_cli("check-gqp " + data_file("not_gqp.txt") +
                         " --format machine");
  CHECK(m.code == 1);
  Json rep = Json::parse(m.out);
  CHECK(rep["format"] == "gqp-report-v1");
  CHECK(rep["result"] == "fail");
  EventRelation rel = relation_from_rows(rep["relation"]);
  CheckResult again = check_gqp(rel);
  CHECK(again.verdict == Verdict::fail);
  bool found = false;
  for (const Json& c : rep["checks"])
    if (c["id"] == "axiom4") {
      found = true;
      CHECK(c["verdict"] == "fail");
      Witness w = witness_from_json(c["witness"]);
      REQUIRE(w.events.size() == 1);
      CHECK(w.events[0].second.bitstring() == "1");
    }
  CHECK(found);
}

TEST_CASE("malformed input exits 3 with a located diagnostic") {
  fs::path bad = scratch_dir() / "truncated.txt";
  std::ofstream(bad) << "states: 2\nrelation:\n1111\n0111\n0111\n";
  RunOutcome r = run_cli("check-gqp \"" + bad.string() + "\"");
  CHECK(r.code == 3);
  CHECK(contains(r.err,
                 "error: line 6, column 1: relation block has 3 rows, "
                 "expected 4"));

  RunOutcome missing = run_cli("check-gqp no/such/file.txt");
  CHECK(missing.code == 3);
  CHECK(contains(missing.err, "error: cannot open input file"));

  RunOutcome badflag = run_cli("check-gqp " + data_file("total2.txt") +
                               " --q5 sometimes");
  CHECK(badflag.code == 3);
}

TEST_CASE("derive emits a parseable relation document") {
  RunOutcome r = run_cli("derive " + data_file("uniform3.txt"));
  REQUIRE(r.code == 0);
  EventRelation via_cli = parse_relation_document(r.out);

  PreferenceStructure ps =
      parse_structure_document(slurp(fs::path(GQP_DATA_DIR) / "uniform3.txt"));
  CHECK(via_cli == derive_relation(ps));
}

TEST_CASE("construct emits a parseable structure document") {
  RunOutcome r = run_cli("construct " + data_file("total2.txt"));
  REQUIRE(r.code == 0);
  PreferenceStructure via_cli = parse_structure_document(r.out);

  EventRelation rel =
      parse_relation_document(slurp(fs::path(GQP_DATA_DIR) / "total2.txt"));
  PreferenceStructure direct = construct_preferences(rel).materialized();
  REQUIRE(via_cli.event_count() == direct.event_count());
  for (event_mask A = 0; A < direct.event_count(); ++A)
    CHECK(via_cli.table(A) == direct.table(A));
}

TEST_CASE("round-trip excuses Q6 only on degenerate inputs") {
  RunOutcome ok = run_cli("round-trip " + data_file("incomparable2.txt"));
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "relation match: yes"));
  CHECK(contains(ok.out, "degenerate: no"));

  RunOutcome dg = run_cli("round-trip " + data_file("degenerate1.txt"));
  CHECK(dg.code == 0);
  CHECK(contains(dg.out, "degenerate: yes"));
  CHECK(contains(dg.out, "Q6: fail"));
  CHECK(contains(dg.out, "result: pass\n"));
}

TEST_CASE("the q5 flag changes the round-trip verdict on a null atom") {
  fs::path nullatom = scratch_dir() / "nullatom.txt";
  std::ofstream(nullatom) << "states: 2\nrelation:\n1111\n1111\n0011\n0011\n";

  RunOutcome strict = run_cli("round-trip \"" + nullatom.string() + "\"");
  CHECK(strict.code == 1);  // default --q5 nonempty
  CHECK(contains(strict.out, "Q5: fail"));
  CHECK(contains(strict.out, "relation match: yes"));

  RunOutcome lax =
      run_cli("round-trip \"" + nullatom.string() + "\" --q5 notnull");
  CHECK(lax.code == 0);
  CHECK(contains(lax.out, "Q5: pass"));

  // The run configuration block reflects the flag in both formats.
  CHECK(contains(strict.out, "# config: q5=nonempty"));
  CHECK(contains(lax.out, "# config: q5=notnull"));
  RunOutcome machine =
      run_cli("round-trip \"" + nullatom.string() + "\" --q5 notnull --format machine");
  CHECK(machine.code == 0);
  Json rep = Json::parse(machine.out);
  CHECK(rep["run"]["q5"] == "notnull");
  CHECK(rep["run"]["command"] == "round-trip");
  CHECK(rep["result"] == "pass");
  CHECK(rep["round_trip"]["relation_match"] == true);
}

TEST_CASE("classify reports family flags for verified relations") {
  RunOutcome r = run_cli("classify " + data_file("total2.txt"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "total: yes"));
  CHECK(contains(r.out, "standard: yes"));
  CHECK(contains(r.out, "result: pass\n"));

  RunOutcome bad = run_cli("classify " + data_file("not_gqp.txt"));
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "axiom4: fail"));
}

TEST_CASE("verify-lemmas dispatches on the document kind") {
  RunOutcome acts = run_cli("verify-lemmas " + data_file("uniform3.txt"));
  CHECK(acts.code == 0);
  for (const char* id : {"L1", "C1", "L7", "L11"})
    CHECK(contains(acts.out, std::string(id) + ": pass"));

  RunOutcome rel = run_cli("verify-lemmas " + data_file("total2.txt"));
  CHECK(rel.code == 0);
  CHECK(contains(rel.out, "result: pass\n"));
  CHECK_FALSE(contains(rel.out, "L1: "));  // act-level suite not run

  RunOutcome one = run_cli("verify-lemmas " + data_file("uniform3.txt") +
                           " --id L11");
  CHECK(one.code == 0);
  CHECK(contains(one.out, "L11: pass"));
  CHECK_FALSE(contains(one.out, "L1: "));

  RunOutcome none = run_cli("verify-lemmas " + data_file("uniform3.txt") +
                            " --id L99");
  CHECK(none.code == 3);
  CHECK(contains(none.err, "no lemma or property matches the requested ids"));
}

TEST_CASE("enumerate respects budgets and reports incompleteness") {
  RunOutcome done = run_cli("enumerate --states 2 --complete");
  CHECK(done.code == 0);
  CHECK(contains(done.out, "# relations: 9"));
  CHECK(contains(done.out, "# complete: yes"));

  RunOutcome starved = run_cli("enumerate --states 3 --complete --budget 10");
  CHECK(starved.code == 2);
  CHECK(contains(starved.out, "# complete: no"));
}

TEST_CASE("extensions and conjecture agree with the library") {
  RunOutcome ext = run_cli("extensions " + data_file("incomparable2.txt"));
  CHECK(ext.code == 0);
  CHECK(contains(ext.out, "# extensions: 3"));
  CHECK(contains(ext.out, "# complete: yes"));

  RunOutcome conj = run_cli("conjecture " + data_file("total2.txt"));
  CHECK(conj.code == 0);
  CHECK(contains(conj.out, "status: holds-on-instance"));
  CHECK(contains(conj.out,
                 "the relation equals the intersection of its 1 total "
                 "extension"));

  RunOutcome starved = run_cli("conjecture " + data_file("incomparable2.txt") +
                               " --budget 0");
  CHECK(starved.code == 2);
  CHECK(contains(starved.out, "status: inconclusive"));
}

TEST_CASE("q7-search completes exhaustively at the smallest bounds") {
  RunOutcome r = run_cli("q7-search --states 2 --consequences 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "status: holds-on-instance"));
  CHECK(contains(r.out, "candidates: 5680"));
  CHECK(contains(r.out, "canonical: 2942"));
  CHECK(contains(r.out, "exhaustive: yes"));

  RunOutcome bad = run_cli("q7-search --states 9 --consequences 2");
  CHECK(bad.code == 3);
}

TEST_CASE("verify-theorem2 accepts an event restriction") {
  RunOutcome all = run_cli("verify-theorem2 " + data_file("uniform3.txt"));
  CHECK(all.code == 0);
  CHECK(contains(all.out, "event 000: T2: pass"));
  CHECK(contains(all.out, "event 111: T2: pass"));

  RunOutcome one = run_cli("verify-theorem2 " + data_file("uniform3.txt") +
                           " --event 101");
  CHECK(one.code == 0);
  CHECK(contains(one.out, "event 101: T2: pass"));
  CHECK_FALSE(contains(one.out, "event 000:"));

  RunOutcome bad = run_cli("verify-theorem2 " + data_file("uniform3.txt") +
                           " --event 1011");
  CHECK(bad.code == 3);
  CHECK(contains(bad.err, "event bitstring has 4 states, the structure has 3"));
}

TEST_CASE("machine reports are byte-identical across repeated runs") {
  const std::vector<std::string> invocations = {
      "check-gqp " + data_file("incomparable2.txt") + " --format machine",
      "enumerate --states 3 --count 5 --seed 9 --format machine",
      "round-trip " + data_file("total2.txt") + " --q5 notnull --format machine",
      "q7-search --states 2 --consequences 2 --format machine",
  };
  for (const std::string& inv : invocations) {
    INFO(inv);
    RunOutcome a = run_cli(inv);
    RunOutcome b = run_cli(inv);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("reports match the pinned golden files") {
  struct Golden {
    std::string invocation;
    const char* file;
  };
  const std::vector<Golden> cases = {
      {"enumerate --states 0 --complete", "enumerate_n0.txt"},
      {"enumerate --states 1 --complete", "enumerate_n1.txt"},
      {"enumerate --states 2 --complete", "enumerate_n2.txt"},
      {"derive " + data_file("uniform3.txt"), "derived_uniform3.txt"},
      {"derive " + data_file("ranked4.txt"), "derived_ranked4.txt"},
      {"derive " + data_file("nonstandard3.txt"), "derived_nonstandard3.txt"},
  };
  for (const Golden& g : cases) {
    INFO(g.invocation);
    RunOutcome r = run_cli(g.invocation);
    CHECK(r.code == 0);
    CHECK(r.out == slurp(fs::path(GQP_GOLDEN_DIR) / g.file));
  }
}

TEST_CASE("the -o flag writes the report to a file") {
  fs::path out = scratch_dir() / "report.json";
  RunOutcome r = run_cli("check-gqp " + data_file("total2.txt") +
                         " --format machine -o \"" + out.string() + "\"");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  Json rep = Json::parse(slurp(out));
  CHECK(rep["result"] == "pass");
}

// ---------------------------------------------------------------------------
// JSON helpers backing the machine reports
// ---------------------------------------------------------------------------

TEST_CASE("relation rows round trip through JSON") {
  EnumerationResult all = enumerate_gqps(2, 1u << 20);
  REQUIRE(all.complete);
  for (const EventRelation& rel : all.relations)
    CHECK(relation_from_rows(relation_rows(rel)) == rel);

  CHECK_THROWS_AS(relation_from_rows(Json::array()), input_error);
  CHECK_THROWS_AS(relation_from_rows(Json::array({"11", "01", "11"})),
                  input_error);  // not a power of two
  CHECK_THROWS_AS(relation_from_rows(Json::array({"111", "01"})), input_error);
  CHECK_THROWS_AS(relation_from_rows(Json::array({"1x", "01"})), input_error);
}

TEST_CASE("witnesses round trip through JSON") {
  Witness w;
  w.events.emplace_back("A", Event(5, 3));
  w.events.emplace_back("B", Event(2, 3));
  w.acts.emplace_back("f", Act({0, 2, 1}));
  w.consequences.emplace_back("x", 2);
  Witness back = witness_from_json(witness_json(w));
  REQUIRE(back.events.size() == 2);
  CHECK(back.events[0].first == "A");
  CHECK(back.events[0].second.bits() == 5);
  CHECK(back.events[1].second.bitstring() == "010");
  REQUIRE(back.acts.size() == 1);
  CHECK(back.acts[0].second.values() == std::vector<consequence_t>{0, 2, 1});
  REQUIRE(back.consequences.size() == 1);
  CHECK(back.consequences[0].second == 2);

  CHECK(witness_from_json(witness_json(Witness{})).empty());
}

TEST_CASE("report skeletons and render formats") {
  RunConfig rc;
  rc.command = "check-gqp";
  rc.inputs = {"data/total2.txt"};
  Json rep = make_report(rc);
  CHECK(rep["format"] == "gqp-report-v1");
  CHECK(rep["run"]["command"] == "check-gqp");
  CHECK(rep["run"]["seed"] == 0);
  CHECK_FALSE(rep["run"].contains("event"));  // empty event omitted
  CHECK(dump_report(rep).back() == '\n');

  CheckResult one;
  one.id = "Q2";
  one.verdict = Verdict::pass;
  one.instances = 1;
  CHECK(render_check_line(one) == "Q2: pass (1 instance)");
  one.instances = 4;
  one.note = "spot check";
  CHECK(render_check_line(one) == "Q2: pass (4 instances)\n  note: spot check");

  CheckResult gated;
  gated.id = "L3";
  gated.verdict = Verdict::inconclusive;
  gated.instances = 0;
  CHECK(render_check_line(gated) == "L3: inconclusive");
}
