// State spaces, events as bitmask sets, partially ordered consequence spaces,
// and the canonical act indexing. Oracles: set algebra is re-checked against
// direct mask arithmetic, the transitive closure against an independent
// Floyd-Warshall reachability pass, and the act index against explicit
// lexicographic sorting of value tuples.

#include "catch_amalgamated.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "gqp/core.hpp"
#include "gqp/errors.hpp"

using namespace gqp;

TEST_CASE("events round-trip through bitstrings with state 0 leftmost") {
  for (unsigned n = 0; n <= 4; ++n)
    for (event_mask m = 0; m < (event_mask(1) << n); ++m) {
      Event e(m, n);
      CHECK(e.bitstring().size() == n);
      CHECK(Event::from_bitstring(e.bitstring()) == e);
    }
  CHECK(Event::from_bitstring("10").contains(0));
  CHECK(!Event::from_bitstring("10").contains(1));
  CHECK(Event::from_bitstring("").n_states() == 0);

  CHECK_THROWS_AS(Event::from_bitstring("10x"), input_error);
  CHECK_THROWS_AS(Event(4, 2), input_error);   // bit outside the space
  CHECK_THROWS_AS(Event(0, 17), input_error);  // too many states
}

TEST_CASE("event set algebra matches mask arithmetic") {
  const unsigned n = 4;
  for (event_mask a = 0; a < 16; ++a)
    for (event_mask b = 0; b < 16; ++b) {
      Event A(a, n), B(b, n);
      CHECK(A.united(B).bits() == (a | b));
      CHECK(A.intersected(B).bits() == (a & b));
      CHECK(A.minus(B).bits() == (a & ~b));
      CHECK(A.complemented().bits() == (~a & 0xFu));
      CHECK(A.is_subset_of(B) == ((a & ~b) == 0));
      CHECK(A.disjoint_from(B) == ((a & b) == 0));
      CHECK(A.size() == static_cast<unsigned>(std::popcount(a)));
    }
  CHECK_THROWS_AS(Event(1, 2).united(Event(1, 3)), input_error);  // space mismatch
}

TEST_CASE("consequence order is the transitive closure of its generators") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned m = 5;
    // Random edges on a DAG shape i < j (acyclic by construction).
    std::vector<std::pair<consequence_t, consequence_t>> edges;
    std::bernoulli_distribution coin(0.3);
    for (consequence_t i = 0; i < m; ++i)
      for (consequence_t j = i + 1; j < m; ++j)
        if (coin(rng)) edges.emplace_back(i, j);
    ConsequenceSpace F(m, edges);

    // Independent closure: Floyd-Warshall reachability over the edges.
    bool reach[5][5] = {};
    for (auto [a, b] : edges) reach[a][b] = true;
    for (unsigned k = 0; k < m; ++k)
      for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;

    for (consequence_t i = 0; i < m; ++i)
      for (consequence_t j = 0; j < m; ++j) {
        CHECK(F.less(i, j) == reach[i][j]);
        CHECK(F.leq(i, j) == (i == j || reach[i][j]));
      }

    // strict_pairs is exactly the closure, sorted lexicographically.
    auto pairs = F.strict_pairs();
    CHECK(std::is_sorted(pairs.begin(), pairs.end()));
    std::size_t count = 0;
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = 0; j < m; ++j) count += reach[i][j] ? 1 : 0;
    CHECK(pairs.size() == count);
  }
}

TEST_CASE("cycles and bad generators are rejected") {
  CHECK_THROWS_AS(ConsequenceSpace(3, {{0, 1}, {1, 2}, {2, 0}}), input_error);
  CHECK_THROWS_AS(ConsequenceSpace(2, {{0, 0}}), input_error);
  CHECK_THROWS_AS(ConsequenceSpace(2, {{0, 5}}), input_error);
  CHECK_THROWS_AS(ConsequenceSpace(0), input_error);

  CHECK(ConsequenceSpace::totally_ordered(4).is_total());
  CHECK(!ConsequenceSpace(3, {{0, 2}, {1, 2}}).is_total());
  CHECK(ConsequenceSpace(1).is_total());
}

TEST_CASE("act indices enumerate value tuples lexicographically") {
  StateSpace S(3);
  ConsequenceSpace F = ConsequenceSpace::totally_ordered(3);
  ActSpace space{S, F};
  REQUIRE(space.act_count() == 27);

  // Oracle: generate all tuples, sort lexicographically (state 0 most
  // significant), and compare position by position.
  std::vector<std::vector<consequence_t>> tuples;
  for (consequence_t a = 0; a < 3; ++a)
    for (consequence_t b = 0; b < 3; ++b)
      for (consequence_t c = 0; c < 3; ++c) tuples.push_back({a, b, c});
  std::sort(tuples.begin(), tuples.end());

  for (act_index i = 0; i < 27; ++i) {
    Act f = act_from_index(space, i);
    CHECK(f.values() == tuples[i]);
    CHECK(act_to_index(space, f) == i);
  }

  CHECK(constant_act(space, 2).values() == std::vector<consequence_t>{2, 2, 2});
  CHECK_THROWS_AS(constant_act(space, 3), input_error);

  Event A = Event::from_bitstring("101");
  Act ind = indicator_act(space, A, 2, 0);
  CHECK(ind.values() == std::vector<consequence_t>{2, 0, 2});

  CHECK_THROWS_AS(act_to_index(space, Act({0, 1})), input_error);       // wrong length
  CHECK_THROWS_AS(act_to_index(space, Act({0, 1, 9})), input_error);    // bad value
}

TEST_CASE("act digit tables agree with the index decomposition") {
  StateSpace S(2);
  ConsequenceSpace F = ConsequenceSpace::totally_ordered(3);
  ActSpace space{S, F};
  ActDigits digits(space, 1 << 16);
  REQUIRE(digits.count() == 9);

  for (act_index f = 0; f < 9; ++f) {
    Act a = act_from_index(space, f);
    for (state_t s = 0; s < 2; ++s) CHECK(digits.digit(f, s) == a.value(s));
    // Restricting to the full event is the identity on indices.
    CHECK(digits.restriction_key(f, space.states.full_mask()) == f);
  }

  // Two acts agree on A iff their restriction keys match.
  for (event_mask A = 0; A < 4; ++A)
    for (act_index f = 0; f < 9; ++f)
      for (act_index g = 0; g < 9; ++g) {
        bool same = true;
        for (state_t s = 0; s < 2; ++s)
          if ((A >> s) & 1)
            if (digits.digit(f, s) != digits.digit(g, s)) same = false;
        CHECK(digits.agree_on(f, g, A) == same);
        CHECK((digits.restriction_key(f, A) == digits.restriction_key(g, A)) == same);
      }

  CHECK_THROWS_AS(ActDigits(space, 4), budget_error);  // 9 acts > cap 4
}

TEST_CASE("degenerate spaces still define acts") {
  // Zero states: exactly one (empty) act.
  ActSpace empty{StateSpace(0), ConsequenceSpace::totally_ordered(2)};
  CHECK(empty.act_count() == 1);
  CHECK(act_from_index(empty, 0).size() == 0);

  // One consequence: exactly one act per state count.
  ActSpace mono{StateSpace(3), ConsequenceSpace(1)};
  CHECK(mono.act_count() == 1);

  CHECK_THROWS_AS(StateSpace(17), input_error);
}
