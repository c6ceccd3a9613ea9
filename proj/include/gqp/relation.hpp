#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gqp/bitmatrix.hpp"
#include "gqp/core.hpp"
#include "gqp/errors.hpp"
#include "gqp/result.hpp"

namespace gqp {

// ---------------------------------------------------------------------------
// EventRelation
// ---------------------------------------------------------------------------

// A boolean relation over all 2^n events: leq(A, B) means "A is not more
// plausible than B". Indifference and strict order are always computed from
// the two directed entries, never stored separately. Nothing is assumed at
// construction; check_gqp decides whether the axioms hold.
class EventRelation {
 public:
  static constexpr unsigned max_states = 12;

  explicit EventRelation(unsigned n_states)
      : n_(checked(n_states)), leq_(std::size_t{1} << n_) {}

  EventRelation(unsigned n_states, BitMatrix leq)
      : n_(checked(n_states)), leq_(std::move(leq)) {
    if (leq_.size() != (std::size_t{1} << n_))
      throw input_error("relation matrix must have one row per event");
  }

  static EventRelation complete(unsigned n_states) {
    EventRelation r(n_states);
    r.leq_ = BitMatrix(std::size_t{1} << n_states, true);
    return r;
  }

  unsigned n_states() const { return n_; }
  std::uint32_t event_count() const { return std::uint32_t{1} << n_; }

  bool leq(event_mask A, event_mask B) const { return leq_.get(A, B); }
  void set(event_mask A, event_mask B, bool value = true) { leq_.set(A, B, value); }

  bool indifferent(event_mask A, event_mask B) const {
    return leq(A, B) && leq(B, A);
  }
  bool strictly_less(event_mask A, event_mask B) const {
    return leq(A, B) && !leq(B, A);
  }
  // Null events of a relation are uniformly the A with A ≤ ∅.
  bool null_event(event_mask A) const { return leq(A, 0); }

  const BitMatrix& matrix() const { return leq_; }

  friend bool operator==(const EventRelation& a, const EventRelation& b) {
    return a.n_ == b.n_ && a.leq_ == b.leq_;
  }

 private:
  static unsigned checked(unsigned n) {
    if (n > max_states)
      throw input_error("event relation over " + std::to_string(n) +
                        " states exceeds the supported maximum of " +
                        std::to_string(max_states));
    return n;
  }

  unsigned n_;
  BitMatrix leq_;
};

// Def: A ≪ B iff B is not null and A ∪ B ≤ B − A. Disjointness is not
// required.
inline bool negligible_wrt(const EventRelation& rel, event_mask A, event_mask B) {
  return !rel.leq(B, 0) && rel.leq(A | B, B & ~A);
}

inline bool negligible_wrt(const EventRelation& rel, const Event& A, const Event& B) {
  if (A.n_states() != rel.n_states() || B.n_states() != rel.n_states())
    throw input_error("event over the wrong state space");
  return negligible_wrt(rel, A.bits(), B.bits());
}

// ---------------------------------------------------------------------------
// check_gqp: reflexivity, transitivity, and the four numbered axioms
// ---------------------------------------------------------------------------

namespace detail {

inline Witness rel_witness(unsigned n,
                           std::initializer_list<std::pair<const char*, event_mask>> evs) {
  Witness w;
  for (auto& [role, A] : evs) w.events.emplace_back(role, Event(A, n));
  return w;
}

// Ascending enumeration of the submasks of M (including 0 and M itself).
template <typename Fn>
void for_each_submask(event_mask M, Fn&& fn) {
  event_mask s = 0;
  for (;;) {
    fn(s);
    if (s == M) break;
    s = (s - M) & M;
  }
}

// One named component of the g.q.p. definition, scanned exhaustively. `emit`
// receives every violation in scan order; `instances` counts the tuples whose
// full hypothesis held (each required a conclusion check).
template <typename Emit>
void scan_gqp_component(const EventRelation& rel, std::string_view component,
                        std::uint64_t& instances, Emit&& emit) {
  unsigned n = rel.n_states();
  std::uint32_t E = rel.event_count();
  event_mask full = E - 1;
  if (component == "reflexivity") {
    for (event_mask A = 0; A < E; ++A) {
      ++instances;
      if (!rel.leq(A, A)) emit(rel_witness(n, {{"A", A}}));
    }
  } else if (component == "axiom4") {
    for (event_mask A = 0; A < E; ++A) {
      ++instances;
      if (!rel.leq(0, A)) emit(rel_witness(n, {{"A", A}}));
    }
  } else if (component == "axiom1") {
    // A ∩ D = B ∩ D = ∅, A ≤ B ⇒ A ∪ D ≤ B ∪ D
    for (event_mask A = 0; A < E; ++A)
      for (event_mask B = 0; B < E; ++B) {
        if (!rel.leq(A, B)) continue;
        for_each_submask(static_cast<event_mask>(full & ~(A | B)), [&](event_mask D) {
          ++instances;
          if (!rel.leq(A | D, B | D))
            emit(rel_witness(n, {{"A", A}, {"B", B}, {"D", D}}));
        });
      }
  } else if (component == "axiom2") {
    // A ∩ D = B ∩ D = ∅, A ∪ D ≤ B ∪ D, D ∪ B ̸≤ D ⇒ A ≤ B
    for (event_mask A = 0; A < E; ++A)
      for (event_mask B = 0; B < E; ++B)
        for_each_submask(static_cast<event_mask>(full & ~(A | B)), [&](event_mask D) {
          if (rel.leq(A | D, B | D) && !rel.leq(D | B, D)) {
            ++instances;
            if (!rel.leq(A, B))
              emit(rel_witness(n, {{"A", A}, {"B", B}, {"D", D}}));
          }
        });
  } else if (component == "axiom3") {
    // A ∩ B = ∅, A ≤ B, A ∪ B ≤ A ⇒ B ≤ ∅
    for (event_mask A = 0; A < E; ++A)
      for_each_submask(static_cast<event_mask>(full & ~A), [&](event_mask B) {
        if (rel.leq(A, B) && rel.leq(A | B, A)) {
          ++instances;
          if (!rel.leq(B, 0)) emit(rel_witness(n, {{"A", A}, {"B", B}}));
        }
      });
  } else if (component == "transitivity") {
    for (event_mask A = 0; A < E; ++A)
      for (event_mask B = 0; B < E; ++B) {
        if (!rel.leq(A, B)) continue;
        for (event_mask C = 0; C < E; ++C)
          if (rel.leq(B, C)) {
            ++instances;
            if (!rel.leq(A, C))
              emit(rel_witness(n, {{"A", A}, {"B", B}, {"C", C}}));
          }
      }
  } else {
    throw input_error("unknown g.q.p. component");
  }
}

struct StopScan {};

}  // namespace detail

// Components in the order they are checked and reported; the first failing
// component names the overall failure.
inline constexpr std::array<std::string_view, 6> gqp_components = {
    "reflexivity", "axiom4", "axiom1", "axiom2", "axiom3", "transitivity"};

// Pass iff the relation is a generalized qualitative probability. On failure
// the result is named after the first violated component (in gqp_components
// order) and carries the first violating tuple of that component's scan.
inline CheckResult check_gqp(const EventRelation& rel) {
  std::uint64_t total = 0;
  for (std::string_view component : gqp_components) {
    std::optional<Witness> first;
    std::uint64_t instances = 0;
    try {
      detail::scan_gqp_component(rel, component, instances, [&](Witness w) {
        first = std::move(w);
        throw detail::StopScan{};
      });
    } catch (const detail::StopScan&) {
    }
    total += instances;
    if (first)
      return CheckResult::failed(std::string(component), std::move(*first), instances);
  }
  return CheckResult::passed("gqp", total,
                             "reflexivity, transitivity and axioms 1-4 hold");
}

// Verbose form: one CheckResult per violation, across all components (a
// passing component contributes a single pass entry).
inline std::vector<CheckResult> check_gqp_all(const EventRelation& rel) {
  std::vector<CheckResult> out;
  for (std::string_view component : gqp_components) {
    std::size_t before = out.size();
    std::uint64_t instances = 0;
    detail::scan_gqp_component(rel, component, instances, [&](Witness w) {
      out.push_back(CheckResult::failed(std::string(component), std::move(w), 0));
    });
    for (std::size_t i = before; i < out.size(); ++i) out[i].instances = instances;
    if (out.size() == before)
      out.push_back(CheckResult::passed(std::string(component), instances));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Family classification
// ---------------------------------------------------------------------------

struct FamilyFlags {
  bool total = false;
  bool standard = false;
  bool purely_nonstandard = false;
};

struct Classification {
  Verdict verdict = Verdict::inconclusive;  // pass, or inconclusive if not a g.q.p.
  FamilyFlags flags;
  std::string note;
};

inline Classification classify(const EventRelation& rel) {
  CheckResult gate = check_gqp(rel);
  if (gate.verdict != Verdict::pass)
    return {Verdict::inconclusive, {},
            "not a g.q.p.: " + gate.id + " fails; family flags are undefined"};
  std::uint32_t E = rel.event_count();
  FamilyFlags f{true, true, true};
  for (event_mask A = 0; A < E && f.total; ++A)
    for (event_mask B = 0; B < E; ++B)
      if (!rel.leq(A, B) && !rel.leq(B, A)) {
        f.total = false;
        break;
      }
  // Standard: adding a non-null event to a disjoint one strictly increases
  // it. The hypothesis exempts null events, not merely the empty one: this is
  // the reading under which standardness is exactly equivalent to complement
  // reversal (A <= B implies ~B <= ~A), and the equivalence is re-checked
  // exhaustively in the test suite. Under the narrower "A nonempty" reading
  // the equivalence fails, e.g. on the two-state relation whose only
  // comparisons are forced, plus {s0} ~ empty and S ~ {s1}.
  for (event_mask A = 0; A < E && f.standard; ++A) {
    if (rel.leq(A, 0)) continue;
    for (event_mask B = 0; B < E; ++B)
      if (!(A & B) && !rel.strictly_less(B, A | B)) {
        f.standard = false;
        break;
      }
  }
  for (event_mask A = 0; A < E && f.purely_nonstandard; ++A)
    for (event_mask B = 0; B < E; ++B)
      if (rel.strictly_less(A, B) && !rel.indifferent(B & ~A, A | B)) {
        f.purely_nonstandard = false;
        break;
      }
  return {Verdict::pass, f, ""};
}

// ---------------------------------------------------------------------------
// Derived property suites (the L14.x / L15.x bullets, C5, C6, L13, and
// modularity of ≪): consequences of the axioms, re-checked exhaustively
// ---------------------------------------------------------------------------

enum class GqpProperty {
  l14_1, l14_2, l14_3, l14_4, l14_5, l14_6,
  l15_1, l15_2, l15_3, l15_4, l15_5, l15_6, l15_7, l15_8, l15_9, l15_10,
  l15_11, l15_12, l15_13,
  c5, c6, l13, modularity,
};

inline constexpr std::array<GqpProperty, 23> all_gqp_properties = {
    GqpProperty::l14_1, GqpProperty::l14_2, GqpProperty::l14_3, GqpProperty::l14_4,
    GqpProperty::l14_5, GqpProperty::l14_6, GqpProperty::l15_1, GqpProperty::l15_2,
    GqpProperty::l15_3, GqpProperty::l15_4, GqpProperty::l15_5, GqpProperty::l15_6,
    GqpProperty::l15_7, GqpProperty::l15_8, GqpProperty::l15_9, GqpProperty::l15_10,
    GqpProperty::l15_11, GqpProperty::l15_12, GqpProperty::l15_13, GqpProperty::c5,
    GqpProperty::c6, GqpProperty::l13, GqpProperty::modularity};

inline const char* to_string(GqpProperty id) {
  switch (id) {
    case GqpProperty::l14_1: return "L14.1";
    case GqpProperty::l14_2: return "L14.2";
    case GqpProperty::l14_3: return "L14.3";
    case GqpProperty::l14_4: return "L14.4";
    case GqpProperty::l14_5: return "L14.5";
    case GqpProperty::l14_6: return "L14.6";
    case GqpProperty::l15_1: return "L15.1";
    case GqpProperty::l15_2: return "L15.2";
    case GqpProperty::l15_3: return "L15.3";
    case GqpProperty::l15_4: return "L15.4";
    case GqpProperty::l15_5: return "L15.5";
    case GqpProperty::l15_6: return "L15.6";
    case GqpProperty::l15_7: return "L15.7";
    case GqpProperty::l15_8: return "L15.8";
    case GqpProperty::l15_9: return "L15.9";
    case GqpProperty::l15_10: return "L15.10";
    case GqpProperty::l15_11: return "L15.11";
    case GqpProperty::l15_12: return "L15.12";
    case GqpProperty::l15_13: return "L15.13";
    case GqpProperty::c5: return "C5";
    case GqpProperty::c6: return "C6";
    case GqpProperty::l13: return "L13";
    case GqpProperty::modularity: return "modularity";
  }
  return "?";
}

inline std::optional<GqpProperty> parse_gqp_property(std::string_view s) {
  for (GqpProperty id : all_gqp_properties)
    if (s == to_string(id)) return id;
  return std::nullopt;
}

namespace detail {

// Exhaustive scan helpers; each returns the first violating witness, in
// ascending (statement-variable) order, or nullopt, counting scanned tuples.
template <typename Pred>
std::optional<Witness> scan_singles(const EventRelation& rel, std::uint64_t& count,
                                    const char* r1, Pred&& violated) {
  std::uint32_t E = rel.event_count();
  for (event_mask A = 0; A < E; ++A) {
    ++count;
    if (violated(A)) return rel_witness(rel.n_states(), {{r1, A}});
  }
  return std::nullopt;
}

template <typename Pred>
std::optional<Witness> scan_pairs(const EventRelation& rel, std::uint64_t& count,
                                  const char* r1, const char* r2, Pred&& violated) {
  std::uint32_t E = rel.event_count();
  for (event_mask A = 0; A < E; ++A)
    for (event_mask B = 0; B < E; ++B) {
      ++count;
      if (violated(A, B))
        return rel_witness(rel.n_states(), {{r1, A}, {r2, B}});
    }
  return std::nullopt;
}

template <typename Pred>
std::optional<Witness> scan_triples(const EventRelation& rel, std::uint64_t& count,
                                    const char* r1, const char* r2, const char* r3,
                                    Pred&& violated) {
  std::uint32_t E = rel.event_count();
  for (event_mask A = 0; A < E; ++A)
    for (event_mask B = 0; B < E; ++B)
      for (event_mask C = 0; C < E; ++C) {
        ++count;
        if (violated(A, B, C))
          return rel_witness(rel.n_states(), {{r1, A}, {r2, B}, {r3, C}});
      }
  return std::nullopt;
}

template <typename Pred>
std::optional<Witness> scan_quads(const EventRelation& rel, std::uint64_t& count,
                                  const char* r1, const char* r2, const char* r3,
                                  const char* r4, Pred&& violated) {
  std::uint32_t E = rel.event_count();
  for (event_mask A = 0; A < E; ++A)
    for (event_mask B = 0; B < E; ++B)
      for (event_mask C = 0; C < E; ++C)
        for (event_mask D = 0; D < E; ++D) {
          ++count;
          if (violated(A, B, C, D))
            return rel_witness(rel.n_states(), {{r1, A}, {r2, B}, {r3, C}, {r4, D}});
        }
  return std::nullopt;
}

inline std::optional<Witness> gqp_property_first_violation(const EventRelation& rel,
                                                           GqpProperty id,
                                                           std::uint64_t& count) {
  auto lt = [&](event_mask a, event_mask b) { return rel.strictly_less(a, b); };
  auto le = [&](event_mask a, event_mask b) { return rel.leq(a, b); };
  auto ng = [&](event_mask a, event_mask b) { return negligible_wrt(rel, a, b); };
  auto subset = [](event_mask a, event_mask b) { return (a & ~b) == 0; };
  auto disjoint = [](event_mask a, event_mask b) { return (a & b) == 0; };
  switch (id) {
    case GqpProperty::l14_1:  // see gqp_property_note: checked as A <= empty
    case GqpProperty::c6:
      return scan_singles(rel, count, "A", [&](event_mask A) {
        return rel.null_event(A) != le(A, 0);
      });
    case GqpProperty::l14_2:
    case GqpProperty::c5:
      return scan_pairs(rel, count, "A", "B", [&](event_mask A, event_mask B) {
        return subset(A, B) && !le(A, B);
      });
    case GqpProperty::l14_3:
      return scan_triples(rel, count, "A", "B", "D",
                          [&](event_mask A, event_mask B, event_mask D) {
                            return disjoint(A, D) && disjoint(B, D) &&
                                   lt(A | D, B | D) && !lt(A, B);
                          });
    case GqpProperty::l14_4:
      return scan_triples(rel, count, "A", "B", "D",
                          [&](event_mask A, event_mask B, event_mask D) {
                            return disjoint(A, D) && disjoint(B, D) && lt(A, B) &&
                                   lt(D, B | D) && !lt(A | D, B | D);
                          });
    case GqpProperty::l14_5:
      return scan_quads(rel, count, "A", "B", "A'", "B'",
                        [&](event_mask A, event_mask B, event_mask A2, event_mask B2) {
                          return disjoint(A, B) && le(A2, A) && le(B2, B) &&
                                 !le(A2 | B2, A | B);
                        });
    case GqpProperty::l14_6:
      return scan_pairs(rel, count, "A", "B", [&](event_mask A, event_mask B) {
        return disjoint(A, B) && lt(0, A | B) && !lt(A, A | B) && !lt(B, A | B);
      });
    case GqpProperty::l15_1:
      return scan_triples(rel, count, "A", "B", "C",
                          [&](event_mask A, event_mask B, event_mask C) {
                            return subset(A, B) && ng(B, C) && !ng(A, C);
                          });
    case GqpProperty::l15_2:
      return scan_triples(rel, count, "A", "B", "C",
                          [&](event_mask A, event_mask B, event_mask C) {
                            return ng(A, B) && subset(B, C) && !ng(A, C);
                          });
    case GqpProperty::l15_3:
      return scan_pairs(rel, count, "A", "B", [&](event_mask A, event_mask B) {
        return ng(A, B) && !lt(A, B);
      });
    case GqpProperty::l15_4:
      return scan_triples(rel, count, "A", "B", "C",
                          [&](event_mask A, event_mask B, event_mask C) {
                            return subset(B, C) && ng(A, C) && !ng(A, B) && !ng(B, C);
                          });
    case GqpProperty::l15_5:
      return scan_triples(rel, count, "A", "B", "C",
                          [&](event_mask A, event_mask B, event_mask C) {
                            return disjoint(B, C) && ng(A, C) && !ng(A, B) &&
                                   !ng(B, C);
                          });
    case GqpProperty::modularity:
    case GqpProperty::l15_6:
      return scan_triples(rel, count, "A", "C", "B",
                          [&](event_mask A, event_mask C, event_mask B) {
                            return ng(A, C) && !ng(A, B) && !ng(B, C);
                          });
    case GqpProperty::l15_7:
      return scan_quads(rel, count, "A", "B", "C", "D",
                        [&](event_mask A, event_mask B, event_mask C, event_mask D) {
                          return le(A, B) && ng(B, C) && le(C, D) && !ng(A, D);
                        });
    case GqpProperty::l15_8:
      return scan_triples(rel, count, "A", "A'", "B",
                          [&](event_mask A, event_mask A2, event_mask B) {
                            return ng(A, B) && ng(A2, B) && !ng(A | A2, B);
                          });
    case GqpProperty::l15_9:
      return scan_triples(rel, count, "A", "B", "B'",
                          [&](event_mask A, event_mask B, event_mask B2) {
                            return ng(A, B | B2) && !ng(A, B) && !ng(A, B2);
                          });
    case GqpProperty::l15_10:
      return scan_triples(rel, count, "A", "B", "D",
                          [&](event_mask A, event_mask B, event_mask D) {
                            return disjoint(A, D) && disjoint(B, D) &&
                                   le(A | D, B | D) && !le(A, B) && !ng(A, B | D);
                          });
    case GqpProperty::l15_11:
      return scan_triples(rel, count, "A", "B", "D",
                          [&](event_mask A, event_mask B, event_mask D) {
                            return disjoint(A, D) && disjoint(B, D) &&
                                   le(A | D, B | D) && !le(A, B) && !ng(A | B, D);
                          });
    case GqpProperty::l15_12:
      return scan_triples(rel, count, "A", "B", "D",
                          [&](event_mask A, event_mask B, event_mask D) {
                            return disjoint(A, D) && le(A | D, B | D) && !le(A, B) &&
                                   !ng(A | B, D);
                          });
    case GqpProperty::l15_13:
      return scan_quads(rel, count, "A", "B", "A'", "B'",
                        [&](event_mask A, event_mask B, event_mask A2, event_mask B2) {
                          return disjoint(A, B) && le(A | B, A2 | B2) && le(B2, B) &&
                                 !le(A, A2) && !ng(A | A2, B2);
                        });
    case GqpProperty::l13:
      return scan_pairs(rel, count, "A", "B", [&](event_mask A, event_mask B) {
        return disjoint(A, B) && le(A, B) && le(A | B, A) &&
               !(le(A, 0) && le(B, 0));
      });
    default:
      throw input_error("unknown g.q.p. property id");
  }
}

inline std::string gqp_property_note(GqpProperty id) {
  switch (id) {
    case GqpProperty::l14_1:
      return "stated as 'null iff \xe2\x88\x85 \xe2\x89\xa4 A', which contradicts "
             "axiom 4; checked in the 'A \xe2\x89\xa4 \xe2\x88\x85' direction, "
             "which is definitional for relation-level null events";
    case GqpProperty::c6:
      return "relation-level null events are defined as A \xe2\x89\xa4 \xe2\x88\x85, "
             "so this is definitional here; the substantive form is checked "
             "against preference structures";
    case GqpProperty::l13:
      return "conclusion read as: both A and B are null";
    default:
      return "";
  }
}

}  // namespace detail

inline CheckResult verify_gqp_property(const EventRelation& rel, GqpProperty id) {
  CheckResult gate = check_gqp(rel);
  if (gate.verdict != Verdict::pass)
    return CheckResult::undecided(to_string(id),
                                  "not a g.q.p.: " + gate.id + " fails");
  std::uint64_t count = 0;
  std::optional<Witness> w = detail::gqp_property_first_violation(rel, id, count);
  std::string note = detail::gqp_property_note(id);
  if (w) return CheckResult::failed(to_string(id), std::move(*w), count, note);
  return CheckResult::passed(to_string(id), count, note);
}

// Re-evaluates a property at exactly the witness tuple (events in statement
// order), independently of the scan.
inline bool gqp_property_violation_at(const EventRelation& rel, GqpProperty id,
                                      const Witness& w) {
  std::vector<event_mask> e;
  for (auto& [role, ev] : w.events) {
    if (ev.n_states() != rel.n_states())
      throw input_error("witness event over the wrong state space");
    e.push_back(ev.bits());
  }
  auto need = [&](std::size_t k) {
    if (e.size() < k) throw input_error("witness is missing an event");
  };
  // Evaluate the statement directly at the fixed tuple.
  auto lt = [&](event_mask a, event_mask b) { return rel.strictly_less(a, b); };
  auto le = [&](event_mask a, event_mask b) { return rel.leq(a, b); };
  auto ng = [&](event_mask a, event_mask b) { return negligible_wrt(rel, a, b); };
  auto subset = [](event_mask a, event_mask b) { return (a & ~b) == 0; };
  auto disjoint = [](event_mask a, event_mask b) { return (a & b) == 0; };
  switch (id) {
    case GqpProperty::l14_1:
    case GqpProperty::c6:
      need(1);
      return rel.null_event(e[0]) != le(e[0], 0);
    case GqpProperty::l14_2:
    case GqpProperty::c5:
      need(2);
      return subset(e[0], e[1]) && !le(e[0], e[1]);
    case GqpProperty::l14_3:
      need(3);
      return disjoint(e[0], e[2]) && disjoint(e[1], e[2]) &&
             lt(e[0] | e[2], e[1] | e[2]) && !lt(e[0], e[1]);
    case GqpProperty::l14_4:
      need(3);
      return disjoint(e[0], e[2]) && disjoint(e[1], e[2]) && lt(e[0], e[1]) &&
             lt(e[2], e[1] | e[2]) && !lt(e[0] | e[2], e[1] | e[2]);
    case GqpProperty::l14_5:
      need(4);
      return disjoint(e[0], e[1]) && le(e[2], e[0]) && le(e[3], e[1]) &&
             !le(e[2] | e[3], e[0] | e[1]);
    case GqpProperty::l14_6:
      need(2);
      return disjoint(e[0], e[1]) && lt(0, e[0] | e[1]) &&
             !lt(e[0], e[0] | e[1]) && !lt(e[1], e[0] | e[1]);
    case GqpProperty::l15_1:
      need(3);
      return subset(e[0], e[1]) && ng(e[1], e[2]) && !ng(e[0], e[2]);
    case GqpProperty::l15_2:
      need(3);
      return ng(e[0], e[1]) && subset(e[1], e[2]) && !ng(e[0], e[2]);
    case GqpProperty::l15_3:
      need(2);
      return ng(e[0], e[1]) && !lt(e[0], e[1]);
    case GqpProperty::l15_4:
      need(3);
      return subset(e[1], e[2]) && ng(e[0], e[2]) && !ng(e[0], e[1]) &&
             !ng(e[1], e[2]);
    case GqpProperty::l15_5:
      need(3);
      return disjoint(e[1], e[2]) && ng(e[0], e[2]) && !ng(e[0], e[1]) &&
             !ng(e[1], e[2]);
    case GqpProperty::modularity:
    case GqpProperty::l15_6:
      need(3);  // witness order (A, C, B)
      return ng(e[0], e[1]) && !ng(e[0], e[2]) && !ng(e[2], e[1]);
    case GqpProperty::l15_7:
      need(4);
      return le(e[0], e[1]) && ng(e[1], e[2]) && le(e[2], e[3]) && !ng(e[0], e[3]);
    case GqpProperty::l15_8:
      need(3);  // (A, A', B)
      return ng(e[0], e[2]) && ng(e[1], e[2]) && !ng(e[0] | e[1], e[2]);
    case GqpProperty::l15_9:
      need(3);  // (A, B, B')
      return ng(e[0], e[1] | e[2]) && !ng(e[0], e[1]) && !ng(e[0], e[2]);
    case GqpProperty::l15_10:
      need(3);
      return disjoint(e[0], e[2]) && disjoint(e[1], e[2]) &&
             le(e[0] | e[2], e[1] | e[2]) && !le(e[0], e[1]) &&
             !ng(e[0], e[1] | e[2]);
    case GqpProperty::l15_11:
      need(3);
      return disjoint(e[0], e[2]) && disjoint(e[1], e[2]) &&
             le(e[0] | e[2], e[1] | e[2]) && !le(e[0], e[1]) &&
             !ng(e[0] | e[1], e[2]);
    case GqpProperty::l15_12:
      need(3);
      return disjoint(e[0], e[2]) && le(e[0] | e[2], e[1] | e[2]) &&
             !le(e[0], e[1]) && !ng(e[0] | e[1], e[2]);
    case GqpProperty::l15_13:
      need(4);  // (A, B, A', B')
      return disjoint(e[0], e[1]) && le(e[0] | e[1], e[2] | e[3]) &&
             le(e[3], e[1]) && !le(e[0], e[2]) && !ng(e[0] | e[2], e[3]);
    case GqpProperty::l13:
      need(2);
      return disjoint(e[0], e[1]) && le(e[0], e[1]) && le(e[0] | e[1], e[0]) &&
             !(le(e[0], 0) && le(e[1], 0));
  }
  throw input_error("unknown g.q.p. property id");
}

}  // namespace gqp
