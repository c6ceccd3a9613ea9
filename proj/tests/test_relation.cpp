// Event relations, the qualitative-probability axioms, family
// classification, and the derived-property suite. Key oracles: specific
// small matrices with hand-computed verdicts, the complement-reversal
// characterization of standardness (checked exhaustively over the full
// enumeration at n <= 2 here; n <= 3 in the acceptance run), and witness
// re-verification through the ungated evaluators.

#include "catch_amalgamated.hpp"

#include <string>
#include <vector>

#include "gqp/relation.hpp"
#include "gqp/search.hpp"

using namespace gqp;

namespace {

EventRelation rel_from(const std::vector<std::string>& rows) {
  unsigned n = 0;
  while ((1u << n) < rows.size()) ++n;
  REQUIRE((std::size_t{1} << n) == rows.size());
  EventRelation r(n);
  for (event_mask A = 0; A < rows.size(); ++A) {
    REQUIRE(rows[A].size() == rows.size());
    for (event_mask B = 0; B < rows.size(); ++B)
      if (rows[A][B] == '1') r.set(A, B);
  }
  return r;
}

// The relation induced by the uniform measure on two states: compare by size.
EventRelation uniform2() {
  EventRelation r(2);
  for (event_mask A = 0; A < 4; ++A)
    for (event_mask B = 0; B < 4; ++B)
      if (std::popcount(A) <= std::popcount(B)) r.set(A, B);
  return r;
}

bool complement_reversal(const EventRelation& rel) {
  event_mask full = rel.event_count() - 1;
  for (event_mask A = 0; A < rel.event_count(); ++A)
    for (event_mask B = 0; B < rel.event_count(); ++B)
      if (rel.leq(A, B) && !rel.leq(full & ~B, full & ~A)) return false;
  return true;
}

CheckResult result_for(const std::vector<CheckResult>& rs, const std::string& id) {
  for (const CheckResult& r : rs)
    if (r.id == id) return r;
  FAIL("no result with id " << id);
  return CheckResult::undecided(id, "");
}

}  // namespace

TEST_CASE("relation accessors derive strictness and indifference from leq") {
  EventRelation r = uniform2();
  CHECK(r.leq(1, 2));
  CHECK(r.indifferent(1, 2));       // singletons tie under the uniform measure
  CHECK(r.strictly_less(1, 3));     // {s0} < S
  CHECK(!r.strictly_less(1, 2));
  CHECK(r.null_event(0));
  CHECK(!r.null_event(1));
  CHECK(r == r);
  CHECK(!(r == EventRelation::complete(2)));
  CHECK_THROWS_AS(EventRelation(13), input_error);
}

TEST_CASE("the axioms hold on known models and fail on crafted mutations") {
  CHECK(check_gqp(uniform2()).verdict == Verdict::pass);
  for (unsigned n = 0; n <= 3; ++n)
    CHECK(check_gqp(EventRelation::complete(n)).verdict == Verdict::pass);

  SECTION("reflexivity") {
    EventRelation r(1);  // all-no matrix
    CheckResult first = check_gqp(r);
    CHECK(first.verdict == Verdict::fail);
    CHECK(first.id == "reflexivity");
  }

  SECTION("the empty event must be least") {
    EventRelation r(1);
    r.set(0, 0);
    r.set(1, 1);
    CheckResult axiom4 = result_for(check_gqp_all(r), "axiom4");
    CHECK(axiom4.verdict == Verdict::fail);
    REQUIRE(axiom4.witness.has_value());
    REQUIRE(axiom4.witness->events.size() == 1);
    CHECK(axiom4.witness->events[0].second.bits() == 1);
    CHECK(result_for(check_gqp_all(r), "reflexivity").verdict == Verdict::pass);
  }

  SECTION("unions must respect the order") {
    // {s0} <= {s1} but {s0} u {s2} vs {s1} u {s2} is dropped.
    EventRelation r = rel_from({
        "11111111", "01111111", "01111111", "00010111",
        "01111111", "00000111", "00010111", "00000001"});
    CheckResult axiom1 = result_for(check_gqp_all(r), "axiom1");
    CHECK(axiom1.verdict == Verdict::fail);
  }

  SECTION("a union below its own part forces nullity") {
    EventRelation r = EventRelation::complete(2);
    r.set(2, 0, false);  // {s1} no longer null, yet {s0} <= {s1} and S <= {s0}
    CheckResult axiom3 = result_for(check_gqp_all(r), "axiom3");
    CHECK(axiom3.verdict == Verdict::fail);
    REQUIRE(axiom3.witness.has_value());
    REQUIRE(axiom3.witness->events.size() == 2);
  }

  SECTION("transitivity") {
    EventRelation r = uniform2();
    r.set(1, 3, false);  // {s0} <= {s1} <= S but not {s0} <= S
    CheckResult tr = result_for(check_gqp_all(r), "transitivity");
    CHECK(tr.verdict == Verdict::fail);
  }
}

TEST_CASE("negligibility is size-impossible under the uniform measure") {
  EventRelation r = uniform2();
  CHECK(negligible_wrt(r, 0, 1));   // empty is negligible wrt any non-null event
  CHECK(negligible_wrt(r, 0, 3));
  CHECK(!negligible_wrt(r, 0, 0));  // ... but not wrt the null empty event
  CHECK(!negligible_wrt(r, 1, 3));  // a singleton never is: |A u B| > |B - A|
  CHECK(!negligible_wrt(r, 1, 2));
  CHECK(!negligible_wrt(r, 3, 3));
}

TEST_CASE("classification flags match hand-computed families") {
  Classification uni = classify(uniform2());
  REQUIRE(uni.verdict == Verdict::pass);
  CHECK(uni.flags.total);
  CHECK(uni.flags.standard);
  CHECK(!uni.flags.purely_nonstandard);

  // The complete relation is the fully degenerate family member: every
  // hypothesis below is vacuous, so all three flags hold.
  Classification comp = classify(EventRelation::complete(2));
  REQUIRE(comp.verdict == Verdict::pass);
  CHECK(comp.flags.total);
  CHECK(comp.flags.standard);
  CHECK(comp.flags.purely_nonstandard);

  Classification part = classify(rel_from({"1111", "0101", "0011", "0001"}));
  REQUIRE(part.verdict == Verdict::pass);
  CHECK(!part.flags.total);

  Classification bad = classify(EventRelation(1));
  CHECK(bad.verdict == Verdict::inconclusive);
  CHECK(bad.note.find("reflexivity") != std::string::npos);
}

TEST_CASE("standardness hypothesis exempts null events, not just the empty one") {
  // {s0} ~ empty (a nonempty null event) and S ~ {s1}. Complement reversal
  // holds; the narrower "A nonempty" reading of the standardness hypothesis
  // would reject it via A = {s0}, B = empty.
  EventRelation r = rel_from({"1111", "1111", "0011", "0011"});
  REQUIRE(check_gqp(r).verdict == Verdict::pass);
  CHECK(complement_reversal(r));

  Classification c = classify(r);
  REQUIRE(c.verdict == Verdict::pass);
  CHECK(c.flags.standard);

  bool nonempty_reading = true;
  for (event_mask A = 1; A < 4 && nonempty_reading; ++A)
    for (event_mask B = 0; B < 4; ++B)
      if (!(A & B) && !r.strictly_less(B, A | B)) {
        nonempty_reading = false;
        break;
      }
  CHECK(!nonempty_reading);
}

TEST_CASE("standardness is exactly complement reversal on every verified relation") {
  for (unsigned n = 0; n <= 2; ++n) {
    EnumerationResult all = enumerate_gqps(n, 1000000);
    REQUIRE(all.complete);
    for (const EventRelation& rel : all.relations) {
      INFO("n = " << n);
      CHECK(classify(rel).flags.standard == complement_reversal(rel));
    }
  }
}

TEST_CASE("purely nonstandard implies total on every verified relation") {
  for (unsigned n = 0; n <= 3; ++n) {
    EnumerationResult all = enumerate_gqps(n, 1000000);
    REQUIRE(all.complete);
    for (const EventRelation& rel : all.relations) {
      Classification c = classify(rel);
      if (c.flags.purely_nonstandard) CHECK(c.flags.total);
    }
  }
}

TEST_CASE("property ids round-trip and the whole suite passes on verified relations") {
  for (GqpProperty id : all_gqp_properties) {
    auto back = parse_gqp_property(to_string(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK(!parse_gqp_property("L99").has_value());

  for (unsigned n = 0; n <= 2; ++n) {
    EnumerationResult all = enumerate_gqps(n, 1000000);
    for (const EventRelation& rel : all.relations)
      for (GqpProperty id : all_gqp_properties) {
        CheckResult r = verify_gqp_property(rel, id);
        INFO("property " << to_string(id) << " at n = " << n);
        CHECK(r.verdict == Verdict::pass);
      }
  }

  // Gate: properties are consequences of the axioms, so unverified input is
  // undecided rather than scanned.
  CheckResult gated = verify_gqp_property(EventRelation(1), GqpProperty::l14_2);
  CHECK(gated.verdict == Verdict::inconclusive);
}

TEST_CASE("witness re-verification evaluates the statement at the fixed tuple") {
  // On a relation that breaks the subset property (A within B but not A <= B),
  // the ungated evaluator confirms the violation at the exact witness.
  EventRelation broken = uniform2();
  broken.set(1, 3, false);
  Witness w;
  w.events.emplace_back("A", Event(1, 2));
  w.events.emplace_back("B", Event(3, 2));
  CHECK(gqp_property_violation_at(broken, GqpProperty::l14_2, w));

  // The same tuple on the intact relation is not a violation.
  CHECK(!gqp_property_violation_at(uniform2(), GqpProperty::l14_2, w));

  Witness wrong_space;
  wrong_space.events.emplace_back("A", Event(1, 3));
  CHECK_THROWS_AS(gqp_property_violation_at(uniform2(), GqpProperty::l14_2, wrong_space),
                  input_error);
}
