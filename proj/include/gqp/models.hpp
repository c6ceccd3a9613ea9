#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gqp/core.hpp"
#include "gqp/epsilon.hpp"
#include "gqp/errors.hpp"
#include "gqp/preference.hpp"
#include "gqp/rational.hpp"

namespace gqp {

// A (possibly non-standard) probability on states plus utilities on
// consequences. Weights may carry eps terms; a model whose weights are all
// plain rationals doubles as a classical one.
struct ProbabilityModel {
  ActSpace space;
  std::vector<EpsilonNumber> weights;   // one per state, positive, sum 1
  std::vector<Rational> utilities;      // one per consequence, in [0,1]

  ProbabilityModel(ActSpace space_, std::vector<EpsilonNumber> weights_,
                   std::vector<Rational> utilities_)
      : space(std::move(space_)), weights(std::move(weights_)),
        utilities(std::move(utilities_)) {
    unsigned n = space.states.size();
    unsigned m = space.consequences.size();
    if (n == 0) throw input_error("probability model needs at least one state");
    if (weights.size() != n)
      throw input_error("expected one weight per state");
    if (utilities.size() != m)
      throw input_error("expected one utility per consequence");
    EpsilonNumber sum;
    for (unsigned s = 0; s < n; ++s) {
      if (weights[s].sign() <= 0)
        throw input_error("weight of state " + std::to_string(s) +
                          " must be strictly positive");
      sum = sum + weights[s];
    }
    if (!(sum == EpsilonNumber(Rational(1))))
      throw input_error("weights must sum to 1");
    for (unsigned c = 0; c < m; ++c)
      if (utilities[c] < 0 || utilities[c] > 1)
        throw input_error("utility of consequence " + std::to_string(c) +
                          " must lie in [0,1]");
    // utilities must embed the consequence order strictly
    for (consequence_t c = 0; c < m; ++c)
      for (consequence_t d = 0; d < m; ++d)
        if (space.consequences.less(c, d) && !(utilities[c] < utilities[d]))
          throw input_error("utilities must strictly respect the consequence "
                            "order (violated at " + std::to_string(c) + " < " +
                            std::to_string(d) + ")");
  }

  bool rational_weights() const {
    for (const EpsilonNumber& w : weights)
      if (!w.is_rational()) return false;
    return true;
  }
};

namespace detail {

inline std::vector<std::uint64_t> act_places(unsigned n, unsigned m) {
  std::vector<std::uint64_t> place(n, 1);
  for (unsigned s = n; s-- > 0;)
    if (s + 1 < n) place[s] = place[s + 1] * m;
  return place;
}

inline consequence_t act_digit(act_index f, state_t s,
                               const std::vector<std::uint64_t>& place, unsigned m) {
  return static_cast<consequence_t>((f / place[s]) % m);
}

}  // namespace detail

// Classical conditional-expectation preferences: f ≤_A g iff the expected
// utility of f given A is at most that of g. The empty event relates
// everything. Exact rational arithmetic throughout.
inline PreferenceStructure expectation_structure(const ProbabilityModel& model) {
  if (!model.rational_weights())
    throw input_error("expectation_structure needs rational weights; use "
                      "nonstandard_structure for eps-valued ones");
  unsigned n = model.space.states.size();
  unsigned m = model.space.consequences.size();
  std::vector<Rational> p(n);
  for (unsigned s = 0; s < n; ++s) p[s] = model.weights[s].as_rational();
  std::vector<Rational> u = model.utilities;
  std::vector<std::uint64_t> place = detail::act_places(n, m);
  auto rule = [n, m, p, u, place](event_mask A, act_index f, act_index g) {
    if (A == 0) return true;
    Rational diff(0);
    for (unsigned s = 0; s < n; ++s)
      if ((A >> s) & 1)
        diff += p[s] * (u[detail::act_digit(g, s, place, m)] -
                        u[detail::act_digit(f, s, place, m)]);
    return diff >= 0;
  };
  return PreferenceStructure(model.space, rule, "expectation model");
}

// Non-standard-probability preferences, defined through the strict relation
// f <_A g iff E[f|A] < E[g|A] by a non-infinitesimal margin. We store the
// induced weak relation, f ≤_A g iff st(E[g|A] − E[f|A]) ≥ 0, which has
// exactly that strict part; the completion choice is recorded here and in the
// provenance string rather than passed off as given.
inline PreferenceStructure nonstandard_structure(const ProbabilityModel& model) {
  unsigned n = model.space.states.size();
  unsigned m = model.space.consequences.size();
  std::vector<EpsilonNumber> p = model.weights;
  std::vector<Rational> u = model.utilities;
  std::vector<std::uint64_t> place = detail::act_places(n, m);
  auto rule = [n, m, p, u, place](event_mask A, act_index f, act_index g) {
    if (A == 0) return true;
    EpsilonNumber num, den;
    for (unsigned s = 0; s < n; ++s)
      if ((A >> s) & 1) {
        num = num + p[s] * EpsilonNumber(u[detail::act_digit(g, s, place, m)] -
                                         u[detail::act_digit(f, s, place, m)]);
        den = den + p[s];
      }
    // den > 0 since weights are positive; the quotient is finite because the
    // numerator's order is at least the denominator's
    return (num / den).standard_part() >= 0;
  };
  return PreferenceStructure(
      model.space, rule,
      "nonstandard model (weak relation: standard part of the conditional "
      "expectation difference is >= 0)");
}

// Plausibility ranking: states in strictly increasing plausibility. Acts are
// compared on the most plausible state of the conditioning event.
struct RankedModel {
  StateSpace states;
  std::vector<state_t> order;  // order[0] least plausible … order[n-1] most

  RankedModel(StateSpace states_, std::vector<state_t> order_)
      : states(std::move(states_)), order(std::move(order_)) {
    unsigned n = states.size();
    if (n == 0) throw input_error("ranked model needs at least one state");
    if (order.size() != n)
      throw input_error("rank order must list every state exactly once");
    std::vector<bool> seen(n, false);
    for (state_t s : order) {
      if (s >= n || seen[s])
        throw input_error("rank order must be a permutation of the states");
      seen[s] = true;
    }
  }
};

inline PreferenceStructure ranked_structure(const RankedModel& model,
                                            const ConsequenceSpace& consequences) {
  if (!consequences.is_total())
    throw input_error("ranked_structure needs a totally ordered consequence space");
  unsigned n = model.states.size();
  unsigned m = consequences.size();
  std::vector<unsigned> rank(n);  // higher = more plausible
  for (unsigned i = 0; i < n; ++i) rank[model.order[i]] = i;
  std::vector<std::uint64_t> place = detail::act_places(n, m);
  ConsequenceSpace cons = consequences;
  auto rule = [n, m, rank, place, cons](event_mask A, act_index f, act_index g) {
    if (A == 0) return true;
    state_t top = 0;
    bool found = false;
    for (unsigned s = 0; s < n; ++s)
      if (((A >> s) & 1) && (!found || rank[s] > rank[top])) {
        top = s;
        found = true;
      }
    consequence_t cf = detail::act_digit(f, top, place, m);
    consequence_t cg = detail::act_digit(g, top, place, m);
    return cons.leq(cf, cg);
  };
  return PreferenceStructure(ActSpace{model.states, consequences}, rule,
                             "ranked model");
}

}  // namespace gqp
