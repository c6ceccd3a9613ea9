#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
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
// Comparison outcomes and checker configuration
// ---------------------------------------------------------------------------

// The four possible situations two acts can stand in, given an event.
enum class ComparisonOutcome {
  strictly_preferred_first,
  strictly_preferred_second,
  indifferent,
  undecided,
};

inline const char* to_string(ComparisonOutcome o) {
  switch (o) {
    case ComparisonOutcome::strictly_preferred_first: return "strictly-preferred-first";
    case ComparisonOutcome::strictly_preferred_second: return "strictly-preferred-second";
    case ComparisonOutcome::indifferent: return "indifferent";
    case ComparisonOutcome::undecided: return "undecided";
  }
  return "?";
}

enum class Postulate { Q0, Q1, Q2, Q3, Q4, Q4prime, Q5, Q6, Q7, R };

inline constexpr std::array<Postulate, 10> all_postulates = {
    Postulate::Q0, Postulate::Q1, Postulate::Q2,      Postulate::Q3, Postulate::Q4,
    Postulate::Q4prime, Postulate::Q5, Postulate::Q6, Postulate::Q7, Postulate::R};

inline const char* to_string(Postulate p) {
  switch (p) {
    case Postulate::Q0: return "Q0";
    case Postulate::Q1: return "Q1";
    case Postulate::Q2: return "Q2";
    case Postulate::Q3: return "Q3";
    case Postulate::Q4: return "Q4";
    case Postulate::Q4prime: return "Q'4";
    case Postulate::Q5: return "Q5";
    case Postulate::Q6: return "Q6";
    case Postulate::Q7: return "Q7";
    case Postulate::R: return "R";
  }
  return "?";
}

inline std::optional<Postulate> parse_postulate(std::string_view s) {
  for (Postulate p : all_postulates)
    if (s == to_string(p)) return p;
  return std::nullopt;
}

// Q5 is stated with a "not null" hypothesis but discussed as using the
// stronger "non-empty" one; both are implemented and the default is nonempty.
enum class Q5Variant { nonempty, notnull };
// Q7 as displayed quantifies over all ordered pairs of distinct constants;
// the surrounding discussion suggests the d < c restriction as a variant.
enum class Q7Prizes { all_pairs, ordered };

inline const char* to_string(Q5Variant v) {
  return v == Q5Variant::nonempty ? "nonempty" : "notnull";
}
inline const char* to_string(Q7Prizes v) {
  return v == Q7Prizes::all_pairs ? "all" : "ordered";
}

struct CheckOptions {
  std::uint64_t act_cap = 4096;  // max m^n acts a checker will enumerate
  Q5Variant q5_variant = Q5Variant::nonempty;
  Q7Prizes q7_prizes = Q7Prizes::all_pairs;
};

// ---------------------------------------------------------------------------
// PreferenceStructure
// ---------------------------------------------------------------------------

// A family of boolean relations leq(A, f, g) ("f is not preferred to g given
// A"), one per event, over the canonical act order. No laws are enforced at
// construction: postulates are checked, never assumed.
//
// Two backings exist: extensional (one bit matrix per event) and rule-backed
// (a pure predicate, supplied by the model generators). Rule-backed tables
// are materialized per event on first use and cached; the cache lives in the
// shared immutable implementation, so copies are cheap and checkers reuse
// each other's work.
class PreferenceStructure {
 public:
  using Rule = std::function<bool(event_mask, act_index, act_index)>;

  PreferenceStructure(ActSpace space, std::vector<BitMatrix> tables,
                      std::string provenance)
      : impl_(std::make_shared<Impl>(std::move(space), std::move(tables), Rule{},
                                     std::move(provenance))) {
    std::uint64_t acts = impl_->space.act_count();
    if (acts > table_act_limit)
      throw input_error("extensional structure over " + std::to_string(acts) +
                        " acts exceeds the supported table size");
    if (impl_->fixed.size() != impl_->space.states.event_count())
      throw input_error("extensional structure needs one table per event");
    for (const BitMatrix& t : impl_->fixed)
      if (t.size() != acts)
        throw input_error("preference table size does not match the act count");
  }

  PreferenceStructure(ActSpace space, Rule rule, std::string provenance)
      : impl_(std::make_shared<Impl>(std::move(space), std::vector<BitMatrix>{},
                                     std::move(rule), std::move(provenance))) {
    if (!impl_->rule) throw input_error("rule-backed structure needs a rule");
  }

  const ActSpace& space() const { return impl_->space; }
  unsigned n_states() const { return impl_->space.states.size(); }
  std::uint32_t event_count() const { return impl_->space.states.event_count(); }
  std::uint64_t act_count() const { return impl_->space.act_count(); }
  const std::string& provenance() const { return impl_->provenance; }
  bool is_extensional() const { return !impl_->fixed.empty(); }

  // Unvalidated hot path over raw encodings. Uses a cached table when one
  // exists, otherwise asks the rule directly.
  bool leq_raw(event_mask A, act_index f, act_index g) const {
    if (is_extensional()) return impl_->fixed[A].get(f, g);
    {
      std::lock_guard<std::mutex> lock(impl_->memo_mutex);
      if (impl_->memo[A]) return impl_->memo[A]->get(f, g);
    }
    return impl_->rule(A, f, g);
  }

  // Validated API-boundary form.
  bool leq(const Event& A, const Act& f, const Act& g) const {
    if (A.n_states() != n_states())
      throw input_error("event over the wrong state space");
    return leq_raw(A.bits(), act_to_index(impl_->space, f),
                   act_to_index(impl_->space, g));
  }

  // The full leq matrix for one event, materializing and caching it for
  // rule-backed structures. All exhaustive checkers go through this.
  const BitMatrix& table(event_mask A) const {
    if (A >= event_count()) throw input_error("event mask out of range");
    if (is_extensional()) return impl_->fixed[A];
    std::lock_guard<std::mutex> lock(impl_->memo_mutex);
    if (!impl_->memo[A]) {
      std::uint64_t acts = act_count();
      if (acts > table_act_limit)
        throw budget_error("cannot materialize a table over " +
                           std::to_string(acts) + " acts (limit " +

                           std::to_string(table_act_limit) + ")");
      auto t = std::make_unique<BitMatrix>(static_cast<std::size_t>(acts));
      for (act_index f = 0; f < acts; ++f)
        for (act_index g = 0; g < acts; ++g)
          if (impl_->rule(A, f, g)) t->set(f, g);
      impl_->memo[A] = std::move(t);
    }
    return *impl_->memo[A];
  }

  // Extensional snapshot (used to serialize rule-backed structures).
  PreferenceStructure materialized() const {
    std::vector<BitMatrix> tables;
    tables.reserve(event_count());
    for (event_mask A = 0; A < event_count(); ++A) tables.push_back(table(A));
    return PreferenceStructure(impl_->space, std::move(tables), impl_->provenance);
  }

  static constexpr std::uint64_t table_act_limit = 8192;

 private:
  struct Impl {
    Impl(ActSpace s, std::vector<BitMatrix> t, Rule r, std::string p)
        : space(std::move(s)), fixed(std::move(t)), rule(std::move(r)),
          provenance(std::move(p)), memo(space.states.event_count()) {}

    ActSpace space;
    std::vector<BitMatrix> fixed;  // empty <=> rule-backed
    Rule rule;
    std::string provenance;
    mutable std::mutex memo_mutex;
    mutable std::vector<std::unique_ptr<BitMatrix>> memo;
  };

  std::shared_ptr<const Impl> impl_;
};

inline ComparisonOutcome compare(const PreferenceStructure& ps, const Event& A,
                                 const Act& f, const Act& g) {
  bool fg = ps.leq(A, f, g);
  bool gf = ps.leq(A, g, f);
  if (fg && gf) return ComparisonOutcome::indifferent;
  if (fg) return ComparisonOutcome::strictly_preferred_second;
  if (gf) return ComparisonOutcome::strictly_preferred_first;
  return ComparisonOutcome::undecided;
}

// ---------------------------------------------------------------------------
// Checker scaffolding
// ---------------------------------------------------------------------------

namespace detail {

// Shared state for one exhaustive scan: decoded act digits, per-event tables,
// caches for the expensive derived predicates, and the instance counter that
// reports verification volume.
struct Ctx {
  const PreferenceStructure& ps;
  ActDigits digits;
  unsigned n;
  unsigned m;
  std::uint32_t events;
  act_index acts;
  std::vector<std::uint64_t> place;  // act-index weight of each state's digit
  std::uint64_t instances = 0;

  Ctx(const PreferenceStructure& ps_, const CheckOptions& opts)
      : ps(ps_),
        digits(ps_.space(), opts.act_cap),
        n(ps_.n_states()),
        m(ps_.space().consequences.size()),
        events(ps_.event_count()),
        acts(digits.count()),
        place(n, 1) {
    for (unsigned s = n; s-- > 0;)
      if (s + 1 < n) place[s] = place[s + 1] * m;
  }

  const BitMatrix& T(event_mask A) { return ps.table(A); }
  bool leq(event_mask A, act_index f, act_index g) { return T(A).get(f, g); }
  bool indiff(event_mask A, act_index f, act_index g) {
    const BitMatrix& t = T(A);
    return t.get(f, g) && t.get(g, f);
  }
  bool strict(event_mask A, act_index f, act_index g) {
    const BitMatrix& t = T(A);
    return t.get(f, g) && !t.get(g, f);
  }

  // Index of the two-valued act with value c on A and d elsewhere.
  act_index windex(event_mask A, consequence_t c, consequence_t d) {
    std::uint64_t idx = 0;
    for (unsigned s = 0; s < n; ++s) idx += place[s] * (((A >> s) & 1) ? c : d);
    return static_cast<act_index>(idx);
  }

  act_index cindex(consequence_t c) { return windex(0, 0, c); }

  // Def: A is null iff every ordered act pair is related given A, i.e. the
  // table for A is complete.
  bool null_event(event_mask A) {
    auto& cached = null_cache_[A];
    if (!cached) {
      bool all = true;
      const BitMatrix& t = T(A);
      for (act_index f = 0; f < acts && all; ++f)
        for (act_index g = 0; g < acts; ++g)
          if (!t.get(f, g)) {
            all = false;
            break;
          }
      cached = all;
    }
    return *cached;
  }

  // Def: A N B (A negligible compared to disjoint B) iff preferences given
  // A ∪ B coincide with preferences given B — table equality.
  bool negligible(event_mask A, event_mask B) {
    auto key = std::make_pair(A, B);
    auto it = neg_cache_.find(key);
    if (it == neg_cache_.end())
      it = neg_cache_.emplace(key, T(A | B) == T(B)).first;
    return it->second;
  }

  Event event(event_mask A) const { return Event(A, n); }
  Act act(act_index f) const { return act_from_index(ps.space(), f); }

 private:
  std::map<event_mask, std::optional<bool>> null_cache_;
  std::map<std::pair<event_mask, event_mask>, bool> neg_cache_;
};

// Constant-act preferences are compared at the full event S. Under Q5 this
// agrees with every non-empty event; structures violating Q5 still get a
// well-defined (documented) convention.
inline bool constants_leq_ctx(Ctx& c, consequence_t lo, consequence_t hi) {
  event_mask full = c.events - 1;
  return c.leq(full, c.cindex(lo), c.cindex(hi));
}

inline bool constants_strict_ctx(Ctx& c, consequence_t lo, consequence_t hi) {
  return constants_leq_ctx(c, lo, hi) && !constants_leq_ctx(c, hi, lo);
}

// All ordered pairs (lo, hi) of distinct consequences with lo strictly below
// hi in the structure's own constant order.
inline std::vector<std::pair<consequence_t, consequence_t>> strict_pairs_ctx(Ctx& c) {
  std::vector<std::pair<consequence_t, consequence_t>> out;
  for (consequence_t lo = 0; lo < c.m; ++lo)
    for (consequence_t hi = 0; hi < c.m; ++hi)
      if (lo != hi && constants_strict_ctx(c, lo, hi)) out.emplace_back(lo, hi);
  return out;
}

// Event comparison induced by the preferences, evaluated directly on the
// structure: A ≤ B iff for every strict constant pair d < c the act winning c
// on A is not preferred to the act winning c on B, given A ∪ B. Vacuously
// complete when no strict pair exists (the degenerate case the bridge guards
// with Q6).
inline bool derived_event_leq(
    Ctx& c, const std::vector<std::pair<consequence_t, consequence_t>>& strict_pairs,
    event_mask A, event_mask B) {
  for (auto [d, cc] : strict_pairs)
    if (!c.leq(A | B, c.windex(A, cc, d), c.windex(B, cc, d))) return false;
  return true;
}

// Enumerate, in ascending act-index order, all acts that agree with `base`
// outside `free_mask`; digits inside free_mask run through every combination.
template <typename Fn>
void for_each_completion(Ctx& c, event_mask free_mask,
                         const std::vector<consequence_t>& base, Fn&& fn) {
  std::vector<state_t> free_states;
  for (unsigned s = 0; s < c.n; ++s)
    if ((free_mask >> s) & 1) free_states.push_back(s);
  std::vector<consequence_t> cur = base;
  for (state_t s : free_states) cur[s] = 0;
  for (;;) {
    std::uint64_t idx = 0;
    for (unsigned s = 0; s < c.n; ++s) idx += c.place[s] * cur[s];
    fn(static_cast<act_index>(idx));
    // odometer over the free digits, last (least significant) state first,
    // so indices come out ascending
    std::size_t k = free_states.size();
    while (k > 0) {
      state_t s = free_states[k - 1];
      if (++cur[s] < c.m) break;
      cur[s] = 0;
      --k;
    }
    if (k == 0) break;
  }
}

inline std::vector<consequence_t> act_digits_of(Ctx& c, act_index f) {
  std::vector<consequence_t> v(c.n);
  for (unsigned s = 0; s < c.n; ++s) v[s] = c.digits.digit(f, s);
  return v;
}

inline Witness make_witness(Ctx& c,
                            std::initializer_list<std::pair<const char*, event_mask>> evs,
                            std::initializer_list<std::pair<const char*, act_index>> as,
                            std::initializer_list<std::pair<const char*, consequence_t>>
                                cs = {}) {
  Witness w;
  for (auto& [role, A] : evs) w.events.emplace_back(role, c.event(A));
  for (auto& [role, f] : as) w.acts.emplace_back(role, c.act(f));
  for (auto& [role, cq] : cs) w.consequences.emplace_back(role, cq);
  return w;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Null events, negligibility, constants
// ---------------------------------------------------------------------------

inline bool is_null(const PreferenceStructure& ps, const Event& A,
                    const CheckOptions& opts = {}) {
  if (A.n_states() != ps.n_states())
    throw input_error("event over the wrong state space");
  detail::Ctx c(ps, opts);
  return c.null_event(A.bits());
}

inline bool negligible_given(const PreferenceStructure& ps, const Event& A,
                             const Event& B, const CheckOptions& opts = {}) {
  if (A.n_states() != ps.n_states() || B.n_states() != ps.n_states())
    throw input_error("event over the wrong state space");
  if (!A.disjoint_from(B))
    throw input_error("negligible_given requires disjoint events");
  detail::Ctx c(ps, opts);
  return c.negligible(A.bits(), B.bits());
}

inline bool constants_leq(const PreferenceStructure& ps, consequence_t lo,
                          consequence_t hi, const CheckOptions& opts = {}) {
  if (lo >= ps.space().consequences.size() || hi >= ps.space().consequences.size())
    throw input_error("consequence index out of range");
  detail::Ctx c(ps, opts);
  return detail::constants_leq_ctx(c, lo, hi);
}

inline bool constants_strictly_less(const PreferenceStructure& ps, consequence_t lo,
                                    consequence_t hi, const CheckOptions& opts = {}) {
  return constants_leq(ps, lo, hi, opts) && !constants_leq(ps, hi, lo, opts);
}

// Strict constant pairs (lo, hi), lo below hi, in the structure's own order.
inline std::vector<std::pair<consequence_t, consequence_t>> strict_constant_pairs(
    const PreferenceStructure& ps, const CheckOptions& opts = {}) {
  detail::Ctx c(ps, opts);
  return detail::strict_pairs_ctx(c);
}

// ---------------------------------------------------------------------------
// Postulate checkers
// ---------------------------------------------------------------------------

namespace detail {

inline CheckResult check_q0(Ctx& c) {
  for (event_mask A = 0; A < c.events; ++A)
    for (act_index f = 0; f < c.acts; ++f) {
      ++c.instances;
      if (!c.leq(A, f, f))
        return CheckResult::failed("Q0", make_witness(c, {{"A", A}}, {{"f", f}}),
                                   c.instances);
    }
  return CheckResult::passed("Q0", c.instances);
}

inline CheckResult check_q1(Ctx& c) {
  for (event_mask A = 0; A < c.events; ++A) {
    const BitMatrix& t = c.T(A);
    for (act_index f = 0; f < c.acts; ++f)
      for (act_index g = 0; g < c.acts; ++g) {
        if (!t.get(f, g)) continue;
        for (act_index h = 0; h < c.acts; ++h) {
          if (!t.get(g, h)) continue;
          ++c.instances;
          if (!t.get(f, h))
            return CheckResult::failed(
                "Q1", make_witness(c, {{"A", A}}, {{"f", f}, {"g", g}, {"h", h}}),
                c.instances);
        }
      }
  }
  return CheckResult::passed("Q1", c.instances);
}

inline CheckResult check_q2(Ctx& c) {
  for (event_mask A = 0; A < c.events; ++A)
    for (act_index f = 0; f < c.acts; ++f)
      for (act_index g = 0; g < c.acts; ++g) {
        if (!c.digits.agree_on(f, g, A)) continue;
        ++c.instances;
        if (!c.indiff(A, f, g))
          return CheckResult::failed(
              "Q2", make_witness(c, {{"A", A}}, {{"f", f}, {"g", g}}), c.instances);
      }
  return CheckResult::passed("Q2", c.instances);
}

inline CheckResult check_q3(Ctx& c) {
  for (event_mask A = 0; A < c.events; ++A)
    for (event_mask B = 0; B < c.events; ++B) {
      if (A & B) continue;
      for (act_index f = 0; f < c.acts; ++f)
        for (act_index g = 0; g < c.acts; ++g) {
          if (!c.leq(A, f, g) || !c.indiff(B, f, g)) continue;
          ++c.instances;
          if (!c.leq(A | B, f, g))
            return CheckResult::failed(
                "Q3", make_witness(c, {{"A", A}, {"B", B}}, {{"f", f}, {"g", g}}),
                c.instances);
        }
    }
  return CheckResult::passed("Q3", c.instances);
}

inline CheckResult check_q4(Ctx& c, bool allow_negligible) {
  const char* id = allow_negligible ? "Q4" : "Q'4";
  for (event_mask A = 0; A < c.events; ++A)
    for (event_mask B = 0; B < c.events; ++B) {
      if (A & B) continue;
      for (act_index f = 0; f < c.acts; ++f)
        for (act_index g = 0; g < c.acts; ++g) {
          if (!c.leq(A | B, f, g) || !c.indiff(B, f, g)) continue;
          ++c.instances;
          if (c.leq(A, f, g)) continue;
          if (allow_negligible && c.negligible(A, B)) continue;
          return CheckResult::failed(
              id, make_witness(c, {{"A", A}, {"B", B}}, {{"f", f}, {"g", g}}),
              c.instances);
        }
    }
  return CheckResult::passed(id, c.instances);
}

inline CheckResult check_q5(Ctx& c, Q5Variant variant, bool annotate) {
  std::string note = std::string("hypothesis: A ") +
                     (variant == Q5Variant::nonempty ? "non-empty" : "not null");
  for (consequence_t cc = 0; cc < c.m; ++cc)
    for (consequence_t d = 0; d < c.m; ++d) {
      act_index ci = c.cindex(cc), di = c.cindex(d);
      for (event_mask A = 0; A < c.events; ++A) {
        bool admissible = variant == Q5Variant::nonempty ? A != 0 : !c.null_event(A);
        if (!admissible || !c.leq(A, ci, di)) continue;
        for (event_mask B = 0; B < c.events; ++B) {
          ++c.instances;
          if (!c.leq(B, ci, di)) {
            Witness w = make_witness(c, {{"A", A}, {"B", B}}, {},
                                     {{"c", cc}, {"d", d}});
            return CheckResult::failed("Q5", std::move(w), c.instances, note);
          }
        }
      }
    }
  CheckResult r = CheckResult::passed("Q5", c.instances, note);
  (void)annotate;
  return r;
}

// Runs the selected variant, then the other; when the verdicts differ the
// note says so, as both readings of the postulate are defensible.
inline CheckResult check_q5_both(Ctx& c, Q5Variant variant) {
  CheckResult main = check_q5(c, variant, true);
  Q5Variant other = variant == Q5Variant::nonempty ? Q5Variant::notnull
                                                   : Q5Variant::nonempty;
  Ctx c2(c.ps, CheckOptions{.act_cap = static_cast<std::uint64_t>(c.acts)});
  CheckResult alt = check_q5(c2, other, false);
  if (alt.verdict != main.verdict)
    main.note += std::string("; ") + to_string(other) +
                 " variant verdict: " + to_string(alt.verdict);
  return main;
}

inline CheckResult check_q6(Ctx& c) {
  for (consequence_t hi = 0; hi < c.m; ++hi)
    for (consequence_t lo = 0; lo < c.m; ++lo) {
      ++c.instances;
      if (lo != hi && constants_strict_ctx(c, lo, hi))
        return CheckResult::passed("Q6", c.instances,
                                   "witnessed by constants " + std::to_string(lo) +
                                       " < " + std::to_string(hi) +
                                       " (constants compared at S)");
    }
  return CheckResult::failed("Q6", Witness{}, c.instances,
                             "no strict constant pair exists (constants compared "
                             "at S); existential failure has no witness tuple");
}

inline CheckResult check_q7(Ctx& c, Q7Prizes prizes) {
  std::string note = std::string("prize pairs: ") +
                     (prizes == Q7Prizes::all_pairs
                          ? "all ordered pairs of distinct constants"
                          : "restricted to d < c");
  event_mask full = c.events - 1;
  for (event_mask A = 0; A < c.events; ++A)
    for (event_mask B = 0; B < c.events; ++B) {
      if (A & B) continue;
      for (event_mask D = 0; D < c.events; ++D) {
        if ((D & (A | B)) != (A | B)) continue;
        for (consequence_t cc = 0; cc < c.m; ++cc)
          for (consequence_t d = 0; d < c.m; ++d) {
            if (cc == d) continue;
            if (prizes == Q7Prizes::ordered && !constants_strict_ctx(c, d, cc))
              continue;
            // hypothesis on the two-valued acts, for this prize pair
            if (!c.leq(A | B, c.windex(A, cc, d), c.windex(B, cc, d))) continue;
            // f = d on A, free elsewhere; g = d on B, free elsewhere
            std::vector<consequence_t> fbase(c.n, 0), gbase(c.n, 0);
            for (unsigned s = 0; s < c.n; ++s) {
              if ((A >> s) & 1) fbase[s] = d;
              if ((B >> s) & 1) gbase[s] = d;
            }
            for_each_completion(c, full & ~A, fbase, [&](act_index f) {
              for_each_completion(c, full & ~B, gbase, [&](act_index g) {
                if (!c.leq(D, f, g)) return;
                // f' = c on A, = f on D−A, free outside D (same for g')
                std::vector<consequence_t> fp = act_digits_of(c, f);
                std::vector<consequence_t> gp = act_digits_of(c, g);
                for (unsigned s = 0; s < c.n; ++s) {
                  if ((A >> s) & 1) fp[s] = cc;
                  if ((B >> s) & 1) gp[s] = cc;
                }
                for_each_completion(c, full & ~D, fp, [&](act_index f2) {
                  for_each_completion(c, full & ~D, gp, [&](act_index g2) {
                    ++c.instances;
                    if (!c.leq(D, f2, g2))
                      throw CheckResult::failed(
                          "Q7",
                          make_witness(c, {{"A", A}, {"B", B}, {"D", D}},
                                       {{"f", f}, {"g", g}, {"f'", f2}, {"g'", g2}},
                                       {{"c", cc}, {"d", d}}),
                          c.instances, note);
                  });
                });
              });
            });
          }
      }
    }
  return CheckResult::passed("Q7", c.instances,
                             note + "; instances = evaluated conclusion tuples");
}

inline CheckResult check_r(Ctx& c) {
  auto pairs = strict_pairs_ctx(c);
  std::string note =
      "quantified over " + std::to_string(pairs.size()) + " strict constant pair" +
      (pairs.size() == 1 ? "" : "s");
  for (event_mask A = 0; A < c.events; ++A)
    for (event_mask B = 0; B < c.events; ++B)
      for (auto [d, cc] : pairs) {
        if (!c.leq(A | B, c.windex(A, cc, d), c.windex(B, cc, d))) continue;
        for (auto [d2, cc2] : pairs) {
          ++c.instances;
          if (!c.leq(A | B, c.windex(A, cc2, d2), c.windex(B, cc2, d2))) {
            Witness w = make_witness(c, {{"A", A}, {"B", B}}, {},
                                     {{"c", cc}, {"d", d}, {"c'", cc2}, {"d'", d2}});
            return CheckResult::failed("R", std::move(w), c.instances, note);
          }
        }
      }
  return CheckResult::passed("R", c.instances, note);
}

}  // namespace detail

inline CheckResult check_postulate(const PreferenceStructure& ps, Postulate id,
                                   const CheckOptions& opts = {}) {
  detail::Ctx c(ps, opts);
  try {
    switch (id) {
      case Postulate::Q0: return detail::check_q0(c);
      case Postulate::Q1: return detail::check_q1(c);
      case Postulate::Q2: return detail::check_q2(c);
      case Postulate::Q3: return detail::check_q3(c);
      case Postulate::Q4: return detail::check_q4(c, true);
      case Postulate::Q4prime: return detail::check_q4(c, false);
      case Postulate::Q5: return detail::check_q5_both(c, opts.q5_variant);
      case Postulate::Q6: return detail::check_q6(c);
      case Postulate::Q7: return detail::check_q7(c, opts.q7_prizes);
      case Postulate::R: return detail::check_r(c);
    }
  } catch (CheckResult& failure) {
    return failure;  // deep loops bail out by throwing the failed result
  }
  throw input_error("unknown postulate id");
}

// ---------------------------------------------------------------------------
// Witness re-verification
// ---------------------------------------------------------------------------

namespace detail {

inline const Event& wev(const Witness& w, std::size_t i) {
  if (i >= w.events.size()) throw input_error("witness is missing an event");
  return w.events[i].second;
}
inline const Act& wact(const Witness& w, std::size_t i) {
  if (i >= w.acts.size()) throw input_error("witness is missing an act");
  return w.acts[i].second;
}
inline consequence_t wcons(const Witness& w, std::size_t i) {
  if (i >= w.consequences.size()) throw input_error("witness is missing a consequence");
  return w.consequences[i].second;
}

}  // namespace detail

// Evaluates the quantified statement at exactly the witness instance,
// independently of the scanning code, and reports whether it is violated
// there. Used by tests and by report consumers to re-check failures.
inline bool postulate_violation_at(const PreferenceStructure& ps, Postulate id,
                                   const Witness& w, const CheckOptions& opts = {}) {
  using namespace detail;
  Ctx c(ps, opts);
  auto ev = [&](std::size_t i) { return wev(w, i).bits(); };
  auto ac = [&](std::size_t i) { return act_to_index(ps.space(), wact(w, i)); };
  switch (id) {
    case Postulate::Q0:
      return !c.leq(ev(0), ac(0), ac(0));
    case Postulate::Q1:
      return c.leq(ev(0), ac(0), ac(1)) && c.leq(ev(0), ac(1), ac(2)) &&
             !c.leq(ev(0), ac(0), ac(2));
    case Postulate::Q2:
      return c.digits.agree_on(ac(0), ac(1), ev(0)) && !c.indiff(ev(0), ac(0), ac(1));
    case Postulate::Q3: {
      event_mask A = ev(0), B = ev(1);
      return !(A & B) && c.leq(A, ac(0), ac(1)) && c.indiff(B, ac(0), ac(1)) &&
             !c.leq(A | B, ac(0), ac(1));
    }
    case Postulate::Q4: {
      event_mask A = ev(0), B = ev(1);
      return !(A & B) && c.leq(A | B, ac(0), ac(1)) && c.indiff(B, ac(0), ac(1)) &&
             !c.leq(A, ac(0), ac(1)) && !c.negligible(A, B);
    }
    case Postulate::Q4prime: {
      event_mask A = ev(0), B = ev(1);
      return !(A & B) && c.leq(A | B, ac(0), ac(1)) && c.indiff(B, ac(0), ac(1)) &&
             !c.leq(A, ac(0), ac(1));
    }
    case Postulate::Q5: {
      event_mask A = ev(0), B = ev(1);
      consequence_t cc = wcons(w, 0), d = wcons(w, 1);
      bool admissible = opts.q5_variant == Q5Variant::nonempty ? A != 0
                                                               : !c.null_event(A);
      return admissible && c.leq(A, c.cindex(cc), c.cindex(d)) &&
             !c.leq(B, c.cindex(cc), c.cindex(d));
    }
    case Postulate::Q6: {
      // existential: the violation is global, so re-verify by re-scanning
      for (consequence_t hi = 0; hi < c.m; ++hi)
        for (consequence_t lo = 0; lo < c.m; ++lo)
          if (lo != hi && constants_strict_ctx(c, lo, hi)) return false;
      return true;
    }
    case Postulate::Q7: {
      event_mask A = ev(0), B = ev(1), D = ev(2);
      consequence_t cc = wcons(w, 0), d = wcons(w, 1);
      act_index f = ac(0), g = ac(1), f2 = ac(2), g2 = ac(3);
      if ((A & B) || (D & (A | B)) != (A | B) || cc == d) return false;
      if (opts.q7_prizes == Q7Prizes::ordered && !constants_strict_ctx(c, d, cc))
        return false;
      event_mask full = c.events - 1;
      auto const_on = [&](act_index h, event_mask X, consequence_t v) {
        for (unsigned s = 0; s < c.n; ++s)
          if (((X >> s) & 1) && c.digits.digit(h, s) != v) return false;
        return true;
      };
      return c.leq(A | B, c.windex(A, cc, d), c.windex(B, cc, d)) &&
             const_on(f, A, d) && const_on(g, B, d) && const_on(f2, A, cc) &&
             const_on(g2, B, cc) && c.digits.agree_on(f2, f, (D & ~A) & full) &&
             c.digits.agree_on(g2, g, (D & ~B) & full) && c.leq(D, f, g) &&
             !c.leq(D, f2, g2);
    }
    case Postulate::R: {
      event_mask A = ev(0), B = ev(1);
      consequence_t cc = wcons(w, 0), d = wcons(w, 1);
      consequence_t cc2 = wcons(w, 2), d2 = wcons(w, 3);
      return constants_strict_ctx(c, d, cc) && constants_strict_ctx(c, d2, cc2) &&
             c.leq(A | B, c.windex(A, cc, d), c.windex(B, cc, d)) &&
             !c.leq(A | B, c.windex(A, cc2, d2), c.windex(B, cc2, d2));
    }
  }
  throw input_error("unknown postulate id");
}

// ---------------------------------------------------------------------------
// Lemma suites (brute-force verification of the consequences of Q1–Q5)
// ---------------------------------------------------------------------------

enum class PreferenceLemma { L1, L2, L3, L4, L5, L6, L7, C1, C2, C3, C4 };

inline constexpr std::array<PreferenceLemma, 11> all_preference_lemmas = {
    PreferenceLemma::L1, PreferenceLemma::L2, PreferenceLemma::C1,
    PreferenceLemma::C2, PreferenceLemma::C3, PreferenceLemma::C4,
    PreferenceLemma::L3, PreferenceLemma::L4, PreferenceLemma::L5,
    PreferenceLemma::L6, PreferenceLemma::L7};

inline const char* to_string(PreferenceLemma id) {
  switch (id) {
    case PreferenceLemma::L1: return "L1";
    case PreferenceLemma::L2: return "L2";
    case PreferenceLemma::L3: return "L3";
    case PreferenceLemma::L4: return "L4";
    case PreferenceLemma::L5: return "L5";
    case PreferenceLemma::L6: return "L6";
    case PreferenceLemma::L7: return "L7";
    case PreferenceLemma::C1: return "C1";
    case PreferenceLemma::C2: return "C2";
    case PreferenceLemma::C3: return "C3";
    case PreferenceLemma::C4: return "C4";
  }
  return "?";
}

inline std::optional<PreferenceLemma> parse_preference_lemma(std::string_view s) {
  for (PreferenceLemma id : all_preference_lemmas)
    if (s == to_string(id)) return id;
  return std::nullopt;
}

// The postulates each statement's proof rests on; the suite is gated on them
// and reports inconclusive (naming the failure) when the structure does not
// qualify, so a lemma "fail" always means a genuine discrepancy.
inline std::span<const Postulate> lemma_assumptions(PreferenceLemma id) {
  using P = Postulate;
  static constexpr std::array<P, 2> l1{P::Q1, P::Q2};
  static constexpr std::array<P, 1> l2{P::Q2};
  static constexpr std::array<P, 3> l3{P::Q1, P::Q2, P::Q3};
  static constexpr std::array<P, 4> l4{P::Q1, P::Q2, P::Q3, P::Q4};
  static constexpr std::array<P, 4> l5{P::Q1, P::Q2, P::Q3, P::Q4};
  static constexpr std::array<P, 2> l6{P::Q2, P::Q3};
  static constexpr std::array<P, 5> l7{P::Q1, P::Q2, P::Q3, P::Q4, P::Q5};
  static constexpr std::array<P, 1> c1{P::Q3};
  static constexpr std::array<P, 1> c2{P::Q4};
  static constexpr std::array<P, 2> c3{P::Q3, P::Q4};
  static constexpr std::array<P, 2> c4{P::Q3, P::Q4};
  switch (id) {
    case PreferenceLemma::L1: return l1;
    case PreferenceLemma::L2: return l2;
    case PreferenceLemma::L3: return l3;
    case PreferenceLemma::L4: return l4;
    case PreferenceLemma::L5: return l5;
    case PreferenceLemma::L6: return l6;
    case PreferenceLemma::L7: return l7;
    case PreferenceLemma::C1: return c1;
    case PreferenceLemma::C2: return c2;
    case PreferenceLemma::C3: return c3;
    case PreferenceLemma::C4: return c4;
  }
  return {};
}

namespace detail {

inline CheckResult lemma_l1(Ctx& c) {
  for (event_mask A = 0; A < c.events; ++A)
    for (act_index f = 0; f < c.acts; ++f)
      for (act_index f2 = 0; f2 < c.acts; ++f2) {
        if (!c.digits.agree_on(f, f2, A)) continue;
        for (act_index g = 0; g < c.acts; ++g) {
          if (!c.leq(A, f, g)) continue;
          for (act_index g2 = 0; g2 < c.acts; ++g2) {
            if (!c.digits.agree_on(g, g2, A)) continue;
            ++c.instances;
            if (!c.leq(A, f2, g2))
              return CheckResult::failed(
                  "L1",
                  make_witness(c, {{"A", A}},
                               {{"f", f}, {"f'", f2}, {"g", g}, {"g'", g2}}),
                  c.instances);
          }
        }
      }
  return CheckResult::passed("L1", c.instances);
}

inline CheckResult lemma_l2(Ctx& c) {
  for (act_index h = 0; h < c.acts; ++h)
    for (act_index h2 = 0; h2 < c.acts; ++h2) {
      ++c.instances;
      if (!c.leq(0, h, h2))
        return CheckResult::failed(
            "L2", make_witness(c, {}, {{"h", h}, {"h'", h2}}), c.instances);
    }
  return CheckResult::passed("L2", c.instances);
}

// shared skeleton: quantify disjoint (A,B) and act pairs (f,g)
template <typename Pred>
CheckResult lemma_disjoint_pairs(Ctx& c, const char* id, Pred&& violated) {
  for (event_mask A = 0; A < c.events; ++A)
    for (event_mask B = 0; B < c.events; ++B) {
      if (A & B) continue;
      for (act_index f = 0; f < c.acts; ++f)
        for (act_index g = 0; g < c.acts; ++g)
          if (violated(A, B, f, g))
            return CheckResult::failed(
                id, make_witness(c, {{"A", A}, {"B", B}}, {{"f", f}, {"g", g}}),
                c.instances);
    }
  return CheckResult::passed(id, c.instances);
}

inline CheckResult lemma_c1(Ctx& c) {
  return lemma_disjoint_pairs(c, "C1", [&](event_mask A, event_mask B, act_index f,
                                           act_index g) {
    if (!c.indiff(A, f, g) || !c.indiff(B, f, g)) return false;
    ++c.instances;
    return !c.indiff(A | B, f, g);
  });
}

inline CheckResult lemma_c2(Ctx& c) {
  return lemma_disjoint_pairs(c, "C2", [&](event_mask A, event_mask B, act_index f,
                                           act_index g) {
    if (!c.indiff(A | B, f, g) || !c.indiff(B, f, g)) return false;
    ++c.instances;
    return !c.indiff(A, f, g) && !c.negligible(A, B);
  });
}

inline CheckResult lemma_c3(Ctx& c) {
  return lemma_disjoint_pairs(c, "C3", [&](event_mask A, event_mask B, act_index f,
                                           act_index g) {
    if (!c.strict(A, f, g) || !c.indiff(B, f, g)) return false;
    ++c.instances;
    return !c.strict(A | B, f, g) && !c.negligible(A, B);
  });
}

inline CheckResult lemma_c4(Ctx& c) {
  return lemma_disjoint_pairs(c, "C4", [&](event_mask A, event_mask B, act_index f,
                                           act_index g) {
    if (!c.strict(A | B, f, g) || !c.indiff(B, f, g)) return false;
    ++c.instances;
    return !c.strict(A, f, g);
  });
}

inline CheckResult lemma_l3(Ctx& c) {
  return lemma_disjoint_pairs(c, "L3", [&](event_mask A, event_mask B, act_index f,
                                           act_index g) {
    if (!c.leq(A, f, g) || !c.leq(B, f, g)) return false;
    ++c.instances;
    return !c.leq(A | B, f, g);
  });
}

inline CheckResult lemma_l4(Ctx& c) {
  return lemma_disjoint_pairs(c, "L4", [&](event_mask A, event_mask B, act_index f,
                                           act_index g) {
    if (!c.strict(A, f, g) || !c.strict(B, f, g)) return false;
    ++c.instances;
    return !c.strict(A | B, f, g);
  });
}

inline CheckResult lemma_l5(Ctx& c) {
  for (event_mask A = 0; A < c.events; ++A)
    for (event_mask B = 0; B < c.events; ++B) {
      if (A & B) continue;
      event_mask U = A | B;
      for (act_index f = 0; f < c.acts; ++f)
        for (act_index g = 0; g < c.acts; ++g) {
          if (!c.digits.agree_on(f, g, B) || !c.leq(U, f, g)) continue;
          for (act_index f2 = 0; f2 < c.acts; ++f2) {
            if (!c.digits.agree_on(f, f2, A)) continue;
            for (act_index g2 = 0; g2 < c.acts; ++g2) {
              if (!c.digits.agree_on(g, g2, A) || !c.digits.agree_on(f2, g2, B))
                continue;
              ++c.instances;
              if (!c.leq(U, f2, g2))
                return CheckResult::failed(
                    "L5",
                    make_witness(c, {{"A", A}, {"B", B}},
                                 {{"f", f}, {"g", g}, {"f'", f2}, {"g'", g2}}),
                    c.instances);
            }
          }
        }
    }
  return CheckResult::passed("L5", c.instances);
}

inline CheckResult lemma_l6(Ctx& c) {
  for (event_mask A = 0; A < c.events; ++A)
    for (event_mask B = 0; B < c.events; ++B)
      for (event_mask D = 0; D < c.events; ++D) {
        if ((D & (A | B)) != (A | B)) continue;
        for (consequence_t cc = 0; cc < c.m; ++cc)
          for (consequence_t d = 0; d < c.m; ++d) {
            if (cc == d) continue;
            act_index wa = c.windex(A, cc, d), wb = c.windex(B, cc, d);
            if (!c.leq(A | B, wa, wb)) continue;
            ++c.instances;
            if (!c.leq(D, wa, wb))
              return CheckResult::failed(
                  "L6",
                  make_witness(c, {{"A", A}, {"B", B}, {"D", D}}, {},
                               {{"c", cc}, {"d", d}}),
                  c.instances);
          }
      }
  return CheckResult::passed("L6", c.instances);
}

inline CheckResult lemma_l7(Ctx& c) {
  auto pairs = strict_pairs_ctx(c);
  for (event_mask A = 0; A < c.events; ++A)
    for (event_mask B = 0; B < c.events; ++B) {
      if (!derived_event_leq(c, pairs, A, B)) continue;
      for (consequence_t cc = 0; cc < c.m; ++cc)
        for (consequence_t d = 0; d < c.m; ++d) {
          if (cc == d || !constants_leq_ctx(c, cc, d)) continue;
          ++c.instances;
          if (!c.leq(A | B, c.windex(B, cc, d), c.windex(A, cc, d)))
            return CheckResult::failed(
                "L7",
                make_witness(c, {{"A", A}, {"B", B}}, {}, {{"c", cc}, {"d", d}}),
                c.instances,
                "hypothesis A \xe2\x89\xa4 B evaluated via the derived event relation");
        }
    }
  return CheckResult::passed("L7", c.instances,
                             "hypothesis A \xe2\x89\xa4 B evaluated via the derived "
                             "event relation");
}

}  // namespace detail

inline CheckResult verify_preference_lemma(const PreferenceStructure& ps,
                                           PreferenceLemma id,
                                           const CheckOptions& opts = {}) {
  for (Postulate p : lemma_assumptions(id)) {
    CheckResult gate = check_postulate(ps, p, opts);
    if (gate.verdict != Verdict::pass)
      return CheckResult::undecided(
          to_string(id), std::string("assumed postulate ") + to_string(p) +
                             " does not hold on this structure");
  }
  detail::Ctx c(ps, opts);
  CheckResult r = [&] {
    switch (id) {
      case PreferenceLemma::L1: return detail::lemma_l1(c);
      case PreferenceLemma::L2: return detail::lemma_l2(c);
      case PreferenceLemma::L3: return detail::lemma_l3(c);
      case PreferenceLemma::L4: return detail::lemma_l4(c);
      case PreferenceLemma::L5: return detail::lemma_l5(c);
      case PreferenceLemma::L6: return detail::lemma_l6(c);
      case PreferenceLemma::L7: return detail::lemma_l7(c);
      case PreferenceLemma::C1: return detail::lemma_c1(c);
      case PreferenceLemma::C2: return detail::lemma_c2(c);
      case PreferenceLemma::C3: return detail::lemma_c3(c);
      case PreferenceLemma::C4: return detail::lemma_c4(c);
    }
    throw input_error("unknown lemma id");
  }();
  if (r.verdict == Verdict::fail)
    r.note += (r.note.empty() ? "" : "; ") +
              std::string("violation on a structure satisfying the assumed "
                          "postulates: implementation bug or statement "
                          "discrepancy");
  return r;
}

inline bool lemma_violation_at(const PreferenceStructure& ps, PreferenceLemma id,
                               const Witness& w, const CheckOptions& opts = {}) {
  using namespace detail;
  Ctx c(ps, opts);
  auto ev = [&](std::size_t i) { return wev(w, i).bits(); };
  auto ac = [&](std::size_t i) { return act_to_index(ps.space(), wact(w, i)); };
  switch (id) {
    case PreferenceLemma::L1: {
      event_mask A = ev(0);
      act_index f = ac(0), f2 = ac(1), g = ac(2), g2 = ac(3);
      return c.digits.agree_on(f, f2, A) && c.digits.agree_on(g, g2, A) &&
             c.leq(A, f, g) && !c.leq(A, f2, g2);
    }
    case PreferenceLemma::L2:
      return !c.leq(0, ac(0), ac(1));
    case PreferenceLemma::C1: {
      event_mask A = ev(0), B = ev(1);
      return !(A & B) && c.indiff(A, ac(0), ac(1)) && c.indiff(B, ac(0), ac(1)) &&
             !c.indiff(A | B, ac(0), ac(1));
    }
    case PreferenceLemma::C2: {
      event_mask A = ev(0), B = ev(1);
      return !(A & B) && c.indiff(A | B, ac(0), ac(1)) &&
             c.indiff(B, ac(0), ac(1)) && !c.indiff(A, ac(0), ac(1)) &&
             !c.negligible(A, B);
    }
    case PreferenceLemma::C3: {
      event_mask A = ev(0), B = ev(1);
      return !(A & B) && c.strict(A, ac(0), ac(1)) && c.indiff(B, ac(0), ac(1)) &&
             !c.strict(A | B, ac(0), ac(1)) && !c.negligible(A, B);
    }
    case PreferenceLemma::C4: {
      event_mask A = ev(0), B = ev(1);
      return !(A & B) && c.strict(A | B, ac(0), ac(1)) &&
             c.indiff(B, ac(0), ac(1)) && !c.strict(A, ac(0), ac(1));
    }
    case PreferenceLemma::L3: {
      event_mask A = ev(0), B = ev(1);
      return !(A & B) && c.leq(A, ac(0), ac(1)) && c.leq(B, ac(0), ac(1)) &&
             !c.leq(A | B, ac(0), ac(1));
    }
    case PreferenceLemma::L4: {
      event_mask A = ev(0), B = ev(1);
      return !(A & B) && c.strict(A, ac(0), ac(1)) && c.strict(B, ac(0), ac(1)) &&
             !c.strict(A | B, ac(0), ac(1));
    }
    case PreferenceLemma::L5: {
      event_mask A = ev(0), B = ev(1);
      act_index f = ac(0), g = ac(1), f2 = ac(2), g2 = ac(3);
      return !(A & B) && c.digits.agree_on(f, f2, A) && c.digits.agree_on(g, g2, A) &&
             c.digits.agree_on(f, g, B) && c.digits.agree_on(f2, g2, B) &&
             c.leq(A | B, f, g) && !c.leq(A | B, f2, g2);
    }
    case PreferenceLemma::L6: {
      event_mask A = ev(0), B = ev(1), D = ev(2);
      consequence_t cc = wcons(w, 0), d = wcons(w, 1);
      if ((D & (A | B)) != (A | B) || cc == d) return false;
      act_index wa = c.windex(A, cc, d), wb = c.windex(B, cc, d);
      return c.leq(A | B, wa, wb) && !c.leq(D, wa, wb);
    }
    case PreferenceLemma::L7: {
      event_mask A = ev(0), B = ev(1);
      consequence_t cc = wcons(w, 0), d = wcons(w, 1);
      if (cc == d || !constants_leq_ctx(c, cc, d)) return false;
      return derived_event_leq(c, strict_pairs_ctx(c), A, B) &&
             !c.leq(A | B, c.windex(B, cc, d), c.windex(A, cc, d));
    }
  }
  throw input_error("unknown lemma id");
}

}  // namespace gqp
