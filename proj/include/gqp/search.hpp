#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gqp/bridge.hpp"
#include "gqp/core.hpp"
#include "gqp/errors.hpp"
#include "gqp/models.hpp"
#include "gqp/preference.hpp"
#include "gqp/relation.hpp"
#include "gqp/result.hpp"

namespace gqp {

// ---------------------------------------------------------------------------
// PartialRelation: tri-state event relation used as search state
// ---------------------------------------------------------------------------

enum class TriState : std::uint8_t { unknown, yes, no };

inline const char* to_string(TriState t) {
  switch (t) {
    case TriState::unknown: return "unknown";
    case TriState::yes: return "yes";
    case TriState::no: return "no";
  }
  return "?";
}

// A partially decided event relation. Cells only ever move from unknown to
// yes or no, by assertion or propagation; a decided cell never changes.
class PartialRelation {
 public:
  static constexpr unsigned max_states = 5;

  explicit PartialRelation(unsigned n)
      : n_(checked(n)), cells_(std::size_t{1} << (2 * n_), TriState::unknown) {}

  unsigned n_states() const { return n_; }
  std::uint32_t event_count() const { return std::uint32_t{1} << n_; }
  std::uint32_t cell_count() const { return static_cast<std::uint32_t>(cells_.size()); }

  std::uint32_t cell(event_mask A, event_mask B) const {
    return (static_cast<std::uint32_t>(A) << n_) | static_cast<std::uint32_t>(B);
  }
  event_mask cell_row(std::uint32_t c) const { return c >> n_; }
  event_mask cell_col(std::uint32_t c) const { return c & (event_count() - 1); }

  TriState get(event_mask A, event_mask B) const { return cells_[cell(A, B)]; }
  TriState get_cell(std::uint32_t c) const { return cells_[c]; }

  void assert_yes(event_mask A, event_mask B) { assign(A, B, TriState::yes); }
  void assert_no(event_mask A, event_mask B) { assign(A, B, TriState::no); }

  bool fully_decided() const {
    for (TriState t : cells_)
      if (t == TriState::unknown) return false;
    return true;
  }

  // Requires every cell to be decided.
  EventRelation materialize() const {
    EventRelation rel(n_);
    std::uint32_t E = event_count();
    for (event_mask A = 0; A < E; ++A)
      for (event_mask B = 0; B < E; ++B) {
        TriState t = get(A, B);
        if (t == TriState::unknown)
          throw precondition_error(
              "cannot materialize a partial relation with undecided entries");
        rel.set(A, B, t == TriState::yes);
      }
    return rel;
  }

 private:
  static unsigned checked(unsigned n) {
    if (n > max_states)
      throw input_error("partial relation over " + std::to_string(n) +
                        " states exceeds the supported maximum of " +
                        std::to_string(max_states));
    return n;
  }

  void assign(event_mask A, event_mask B, TriState v) {
    TriState& t = cells_[cell(A, B)];
    if (t != TriState::unknown && t != v)
      throw input_error("conflicting assertion for an already decided entry");
    t = v;
  }

  unsigned n_;
  std::vector<TriState> cells_;
};

// ---------------------------------------------------------------------------
// Propagation engine
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr std::uint32_t no_cell = 0xffffffffu;

enum class PropRule : std::uint8_t {
  asserted,      // set by the caller
  reflexivity,   // A <= A
  empty_least,   // axiom 4: empty <= A
  subset,        // A subset of B implies A <= B
  transitivity,  // from two yes cells
  axiom1,        // A <= B forces (A|D) <= (B|D) for D disjoint from both
  totality,      // extension search only: (A,B) no forces (B,A) yes
};

inline const char* to_string(PropRule r) {
  switch (r) {
    case PropRule::asserted: return "asserted";
    case PropRule::reflexivity: return "reflexivity";
    case PropRule::empty_least: return "axiom4";
    case PropRule::subset: return "subset";
    case PropRule::transitivity: return "transitivity";
    case PropRule::axiom1: return "axiom1";
    case PropRule::totality: return "totality";
  }
  return "?";
}

struct CellProv {
  PropRule rule = PropRule::asserted;
  std::uint32_t c1 = no_cell, c2 = no_cell;
};

// Closes a tri-state relation under the positive forcing rules. Cheap to
// copy, so depth-first searches branch by copying the engine. Axioms 2 and 3
// are not closure-friendly (their conclusions are conditional on negative
// entries) and are handled by decided_axiom23_violation instead.
class Propagator {
 public:
  Propagator(unsigned n, bool totality)
      : pr_(n),
        prov_(pr_.cell_count()),
        totality_(totality),
        E_(pr_.event_count()) {}

  const PartialRelation& relation() const { return pr_; }
  bool dead() const { return dead_; }

  // Unconditional entries: reflexivity, empty <= A, subset monotonicity.
  bool seed() {
    for (event_mask A = 0; A < E_; ++A)
      if (!force(pr_.cell(A, A), TriState::yes, {PropRule::reflexivity})) return false;
    for (event_mask A = 0; A < E_; ++A)
      if (!force(pr_.cell(0, A), TriState::yes, {PropRule::empty_least})) return false;
    for (event_mask B = 0; B < E_; ++B) {
      event_mask A = 0;
      for (;;) {  // submasks of B, ascending
        if (!force(pr_.cell(A, B), TriState::yes, {PropRule::subset})) return false;
        if (A == B) break;
        A = (A - B) & B;
      }
    }
    return drain();
  }

  // Assert one entry and propagate to the fixpoint.
  bool assume(event_mask A, event_mask B, TriState v) {
    if (!force(pr_.cell(A, B), v, {PropRule::asserted})) return false;
    return drain();
  }
  bool assume_cell(std::uint32_t c, TriState v) {
    if (!force(c, v, {PropRule::asserted})) return false;
    return drain();
  }

  std::optional<std::uint32_t> first_unknown() const {
    for (std::uint32_t c = 0; c < pr_.cell_count(); ++c)
      if (pr_.get_cell(c) == TriState::unknown) return c;
    return std::nullopt;
  }

  // Provenance chain of a decided cell: dependency-ordered descriptions.
  void explain(std::uint32_t c, std::vector<std::string>& out,
               std::set<std::uint32_t>& seen) const {
    if (pr_.get_cell(c) == TriState::unknown || !seen.insert(c).second) return;
    const CellProv& p = prov_[c];
    if (p.c1 != no_cell) explain(p.c1, out, seen);
    if (p.c2 != no_cell) explain(p.c2, out, seen);
    out.push_back(describe(c));
  }

  std::string describe(std::uint32_t c) const {
    unsigned n = pr_.n_states();
    return Event(pr_.cell_row(c), n).bitstring() + " <= " +
           Event(pr_.cell_col(c), n).bitstring() + ": " +
           gqp::to_string(pr_.get_cell(c)) + " [" + to_string(prov_[c].rule) + "]";
  }

  // Conflict details, valid when dead() is true.
  std::uint32_t conflict_cell() const { return conflict_cell_; }
  const CellProv& conflict_attempt() const { return conflict_attempt_; }
  TriState conflict_wanted() const { return conflict_wanted_; }
  const CellProv& provenance(std::uint32_t c) const { return prov_[c]; }

 private:
  bool force(std::uint32_t c, TriState v, CellProv p) {
    TriState cur = pr_.get_cell(c);
    if (cur == v) return true;
    if (cur != TriState::unknown) {
      dead_ = true;
      conflict_cell_ = c;
      conflict_attempt_ = p;
      conflict_wanted_ = v;
      return false;
    }
    if (v == TriState::yes)
      pr_.assert_yes(pr_.cell_row(c), pr_.cell_col(c));
    else
      pr_.assert_no(pr_.cell_row(c), pr_.cell_col(c));
    prov_[c] = p;
    queue_.push_back(c);
    return true;
  }

  bool drain() {
    while (!queue_.empty()) {
      std::uint32_t c = queue_.front();
      queue_.pop_front();
      event_mask A = pr_.cell_row(c), B = pr_.cell_col(c);
      if (pr_.get_cell(c) == TriState::no) {
        if (totality_ &&
            !force(pr_.cell(B, A), TriState::yes, {PropRule::totality, c}))
          return false;
        continue;
      }
      // transitivity, against every existing yes entry
      for (event_mask C = 0; C < E_; ++C) {
        if (pr_.get(B, C) == TriState::yes &&
            !force(pr_.cell(A, C), TriState::yes,
                   {PropRule::transitivity, c, pr_.cell(B, C)}))
          return false;
        if (pr_.get(C, A) == TriState::yes &&
            !force(pr_.cell(C, B), TriState::yes,
                   {PropRule::transitivity, pr_.cell(C, A), c}))
          return false;
      }
      // axiom 1: union with any D disjoint from both sides
      event_mask free = (E_ - 1) & ~(A | B);
      event_mask D = 0;
      for (;;) {
        D = (D - free) & free;  // skip D = 0 (no-op)
        if (D == 0) break;
        if (!force(pr_.cell(A | D, B | D), TriState::yes, {PropRule::axiom1, c}))
          return false;
      }
    }
    return true;
  }

  PartialRelation pr_;
  std::vector<CellProv> prov_;
  std::deque<std::uint32_t> queue_;
  bool totality_;
  bool dead_ = false;
  std::uint32_t E_;
  std::uint32_t conflict_cell_ = no_cell;
  CellProv conflict_attempt_;
  TriState conflict_wanted_ = TriState::unknown;
};

// True when some fully decided tuple already violates axiom 2 or axiom 3.
// Exact at leaves (everything decided); a sound prune everywhere else.
inline bool decided_axiom23_violation(const PartialRelation& pr) {
  std::uint32_t E = pr.event_count();
  event_mask full = E - 1;
  auto yes = [&](event_mask a, event_mask b) { return pr.get(a, b) == TriState::yes; };
  auto no = [&](event_mask a, event_mask b) { return pr.get(a, b) == TriState::no; };
  // axiom 2: (A|D) <= (B|D) yes, (D|B) <= D no, A <= B no
  for (event_mask A = 0; A < E; ++A)
    for (event_mask B = 0; B < E; ++B) {
      if (!no(A, B)) continue;
      event_mask free = full & ~(A | B);
      event_mask D = 0;
      for (;;) {
        if (yes(A | D, B | D) && no(D | B, D)) return true;
        if (D == free) break;
        D = (D - free) & free;
      }
    }
  // axiom 3: A,B disjoint, A <= B yes, (A|B) <= A yes, B <= empty no
  for (event_mask A = 0; A < E; ++A) {
    event_mask free = full & ~A;
    event_mask B = 0;
    for (;;) {
      if (yes(A, B) && yes(A | B, A) && no(B, 0)) return true;
      if (B == free) break;
      B = (B - free) & free;
    }
  }
  return false;
}

}  // namespace detail

// Result of closing a partial relation under the forcing rules: either the
// least fixpoint, or a contradiction along with the derivations that clashed.
struct PropagationOutcome {
  PartialRelation relation;
  bool contradiction = false;
  std::string conflict;             // the entry that was forced both ways
  std::vector<std::string> chain;   // dependency-ordered derivation lines
};

inline PropagationOutcome propagate(const PartialRelation& pr,
                                    bool totality = false) {
  detail::Propagator eng(pr.n_states(), totality);
  std::uint32_t E = pr.event_count();
  bool ok = true;
  for (event_mask A = 0; A < E && ok; ++A)
    for (event_mask B = 0; B < E && ok; ++B) {
      TriState t = pr.get(A, B);
      if (t != TriState::unknown) ok = eng.assume(A, B, t);
    }
  if (ok) ok = eng.seed();
  PropagationOutcome out{eng.relation(), !ok, "", {}};
  if (!ok) {
    std::uint32_t c = eng.conflict_cell();
    unsigned n = pr.n_states();
    const detail::CellProv& attempt = eng.conflict_attempt();
    out.conflict = Event(out.relation.cell_row(c), n).bitstring() + " <= " +
                   Event(out.relation.cell_col(c), n).bitstring() +
                   " is already " + to_string(out.relation.get_cell(c)) +
                   " but rule '" + detail::to_string(attempt.rule) +
                   "' forces " + to_string(eng.conflict_wanted());
    std::set<std::uint32_t> seen;
    if (attempt.c1 != detail::no_cell) eng.explain(attempt.c1, out.chain, seen);
    if (attempt.c2 != detail::no_cell) eng.explain(attempt.c2, out.chain, seen);
    eng.explain(c, out.chain, seen);
    out.chain.push_back(out.conflict);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration of g.q.p. by constraint-propagated depth-first search
// ---------------------------------------------------------------------------

using RelationSink = std::function<void(const EventRelation&)>;

struct SearchStats {
  bool complete = true;            // false when the node budget ran out
  std::uint64_t nodes_explored = 0;  // branching decisions taken
  std::uint64_t emitted = 0;
};

namespace detail {

struct DfsCtl {
  std::uint64_t budget;
  SearchStats stats;
  const RelationSink* sink;
};

// Branches on the first unknown cell in ascending (A, B) order, yes before
// no. Leaves reached here satisfy reflexivity, transitivity, axioms 1 and 4
// and subset monotonicity by propagation; axioms 2 and 3 are checked via the
// decided-cell scan, which is exact once everything is decided.
inline void gqp_dfs(const Propagator& eng, DfsCtl& ctl) {
  if (!ctl.stats.complete) return;
  if (decided_axiom23_violation(eng.relation())) return;
  std::optional<std::uint32_t> c = eng.first_unknown();
  if (!c) {
    ++ctl.stats.emitted;
    (*ctl.sink)(eng.relation().materialize());
    return;
  }
  if (ctl.stats.nodes_explored >= ctl.budget) {
    ctl.stats.complete = false;
    return;
  }
  ++ctl.stats.nodes_explored;
  {
    Propagator branch = eng;
    if (branch.assume_cell(*c, TriState::yes)) gqp_dfs(branch, ctl);
  }
  {
    Propagator branch = eng;
    if (branch.assume_cell(*c, TriState::no)) gqp_dfs(branch, ctl);
  }
}

}  // namespace detail

// Streams every g.q.p. over n states, each exactly once, in the deterministic
// depth-first order (first undecided pair ascending, yes branch first). A
// budget of `budget` branching nodes bounds the search; when it is exhausted
// the stats are marked incomplete.
inline SearchStats enumerate_gqps(unsigned n, std::uint64_t budget,
                                  const RelationSink& sink) {
  detail::Propagator root(n, false);
  detail::DfsCtl ctl{budget, {}, &sink};
  if (root.seed()) detail::gqp_dfs(root, ctl);
  return ctl.stats;
}

struct EnumerationResult {
  std::vector<EventRelation> relations;
  bool complete = true;
  std::uint64_t nodes_explored = 0;
};

inline EnumerationResult enumerate_gqps(unsigned n, std::uint64_t budget) {
  EnumerationResult out;
  SearchStats stats = enumerate_gqps(
      n, budget, [&](const EventRelation& r) { out.relations.push_back(r); });
  out.complete = stats.complete;
  out.nodes_explored = stats.nodes_explored;
  return out;
}

// Seeded random sampling: randomized depth-first descents with backtracking.
// Each walk flips a coin for the branch to try first at every undecided cell
// and backtracks out of dead ends, so it always reaches some relation in the
// class (which is never empty: the complete relation satisfies the axioms).
// The draw distribution is deliberately simple and *not* uniform. Distinct
// relations only; deterministic given the seed.
struct SampleResult {
  std::vector<EventRelation> relations;
  std::uint64_t nodes_explored = 0;
  std::uint64_t walks = 0;
  bool budget_exhausted = false;
};

namespace detail {

struct SampleCtl {
  std::mt19937_64 rng;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
};

inline std::optional<EventRelation> sample_descend(const Propagator& eng,
                                                   SampleCtl& ctl) {
  if (decided_axiom23_violation(eng.relation())) return std::nullopt;
  std::optional<std::uint32_t> c = eng.first_unknown();
  if (!c) return eng.relation().materialize();
  TriState first = (ctl.rng() & 1u) ? TriState::yes : TriState::no;
  TriState second = first == TriState::yes ? TriState::no : TriState::yes;
  for (TriState v : {first, second}) {
    if (ctl.nodes >= ctl.budget) {
      ctl.exhausted = true;
      return std::nullopt;
    }
    ++ctl.nodes;
    Propagator branch = eng;
    if (!branch.assume_cell(*c, v)) continue;
    std::optional<EventRelation> leaf = sample_descend(branch, ctl);
    if (leaf) return leaf;
    if (ctl.exhausted) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

inline SampleResult sample_gqps(unsigned n, std::size_t count, std::uint64_t seed,
                                std::uint64_t budget) {
  SampleResult out;
  detail::Propagator root(n, false);
  if (!root.seed()) return out;
  detail::SampleCtl ctl{std::mt19937_64(seed), budget, 0, false};
  std::set<std::string> seen;
  while (out.relations.size() < count && !ctl.exhausted) {
    if (ctl.nodes >= ctl.budget) {
      ctl.exhausted = true;
      break;
    }
    ++out.walks;
    std::optional<EventRelation> rel = detail::sample_descend(root, ctl);
    if (!rel) continue;
    std::string key;
    key.reserve(rel->event_count() * rel->event_count());
    for (event_mask A = 0; A < rel->event_count(); ++A)
      for (event_mask B = 0; B < rel->event_count(); ++B)
        key.push_back(rel->leq(A, B) ? '1' : '0');
    if (seen.insert(std::move(key)).second) out.relations.push_back(std::move(*rel));
  }
  out.nodes_explored = ctl.nodes;
  out.budget_exhausted = ctl.exhausted;
  return out;
}

// ---------------------------------------------------------------------------
// Total extensions
// ---------------------------------------------------------------------------

struct ExtensionResult {
  std::vector<EventRelation> relations;
  bool complete = true;
  std::uint64_t nodes_explored = 0;
};

// All total g.q.p. extending rel: the comparisons of rel are preserved (yes
// entries stay yes, strict pairs stay strict) and only incomparable pairs may
// be decided. Deterministic order; complete within the node budget.
inline ExtensionResult total_extensions(const EventRelation& rel,
                                        std::uint64_t budget) {
  CheckResult gate = check_gqp(rel);
  if (gate.verdict != Verdict::pass)
    throw precondition_error(
        "input is not a generalized qualitative probability: " + gate.id +
        " fails");
  unsigned n = rel.n_states();
  std::uint32_t E = rel.event_count();
  detail::Propagator root(n, /*totality=*/true);
  bool ok = true;
  for (event_mask A = 0; A < E && ok; ++A)
    for (event_mask B = 0; B < E && ok; ++B) {
      if (rel.leq(A, B))
        ok = root.assume(A, B, TriState::yes);
      else if (rel.leq(B, A))  // strict pair of rel: preserved in extensions
        ok = root.assume(A, B, TriState::no);
    }
  if (ok) ok = root.seed();
  ExtensionResult out;
  if (!ok) return out;  // cannot happen for a verified g.q.p.
  RelationSink sink = [&](const EventRelation& r) { out.relations.push_back(r); };
  detail::DfsCtl ctl{budget, {}, &sink};
  detail::gqp_dfs(root, ctl);
  out.complete = ctl.stats.complete;
  out.nodes_explored = ctl.stats.nodes_explored;
  return out;
}

// ---------------------------------------------------------------------------
// Conjecture verdicts
// ---------------------------------------------------------------------------

enum class ConjectureStatus {
  holds_on_instance,
  counterexample_found,
  inconclusive,
};

inline const char* to_string(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::holds_on_instance: return "holds-on-instance";
    case ConjectureStatus::counterexample_found: return "counterexample-found";
    case ConjectureStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

struct ConjectureVerdict {
  ConjectureStatus status = ConjectureStatus::inconclusive;
  std::string note;
  // Intersection instance evidence:
  std::optional<EventRelation> relation;      // the instance examined
  std::optional<EventRelation> intersection;  // conjunction of all extensions
  std::uint64_t extensions = 0;
  // Independence-search evidence:
  std::optional<PreferenceStructure> structure;
  std::optional<Witness> witness;
  // Search volume:
  std::uint64_t nodes_explored = 0;
  std::uint64_t candidates = 0;            // structures examined (raw)
  std::uint64_t candidates_canonical = 0;  // after symmetry reduction
  std::uint64_t seed = 0;
  bool exhaustive = false;
};

// Does rel equal the intersection (entrywise conjunction) of all its total
// extensions? The intersection itself is only compared, never axiom-checked:
// the class is not closed under intersection.
inline ConjectureVerdict check_intersection_conjecture(const EventRelation& rel,
                                                       std::uint64_t budget) {
  ConjectureVerdict v;
  v.relation = rel;
  ExtensionResult ext = total_extensions(rel, budget);
  v.nodes_explored = ext.nodes_explored;
  v.extensions = ext.relations.size();
  if (!ext.complete) {
    v.status = ConjectureStatus::inconclusive;
    v.note = "node budget exhausted before the set of total extensions was "
             "known to be complete";
    return v;
  }
  unsigned n = rel.n_states();
  std::uint32_t E = rel.event_count();
  EventRelation inter = EventRelation::complete(n);
  for (const EventRelation& t : ext.relations)
    for (event_mask A = 0; A < E; ++A)
      for (event_mask B = 0; B < E; ++B)
        if (!t.leq(A, B)) inter.set(A, B, false);
  v.intersection = inter;
  if (ext.relations.empty()) {
    // Convention: an empty intersection is the complete relation.
    v.status = inter == rel ? ConjectureStatus::holds_on_instance
                            : ConjectureStatus::counterexample_found;
    v.note = "no total extension exists; the empty intersection is taken to "
             "be the complete relation";
    return v;
  }
  if (inter == rel) {
    v.status = ConjectureStatus::holds_on_instance;
    v.note = "the relation equals the intersection of its " +
             std::to_string(v.extensions) + " total extension" +
             (v.extensions == 1 ? "" : "s");
  } else {
    v.status = ConjectureStatus::counterexample_found;
    v.note = "the intersection of the " + std::to_string(v.extensions) +
             " total extensions differs from the relation";
  }
  return v;
}

// ---------------------------------------------------------------------------
// Independence search: can the first six postulates hold while level-set
// indifference fails?
// ---------------------------------------------------------------------------

struct Q7SearchOptions {
  std::uint64_t seed = 0;
  CheckOptions check;
  bool require_q7 = false;  // diagnostic: restrict to candidates passing Q7
};

namespace detail {

// All reflexive-transitive k-by-k boolean matrices, encoded row-major with
// bit (i*k + j) meaning i <= j, in ascending code order. Small k only.
inline std::vector<std::uint64_t> preorders_on(unsigned k) {
  if (k == 0 || k * k > 24)
    throw input_error("preorder enumeration supports 1 to 4 elements");
  std::vector<std::uint64_t> out;
  std::uint64_t total = std::uint64_t{1} << (k * k);
  for (std::uint64_t code = 0; code < total; ++code) {
    bool ok = true;
    for (unsigned i = 0; i < k && ok; ++i)
      ok = (code >> (i * k + i)) & 1u;
    for (unsigned i = 0; i < k && ok; ++i)
      for (unsigned j = 0; j < k && ok; ++j) {
        if (!((code >> (i * k + j)) & 1u)) continue;
        for (unsigned l = 0; l < k && ok; ++l)
          if (((code >> (j * k + l)) & 1u) && !((code >> (i * k + l)) & 1u))
            ok = false;
      }
    if (ok) out.push_back(code);
  }
  return out;
}

// Conjugates a k-by-k code by the permutation p (new[i][j] = old[p(i)][p(j)]).
inline std::uint64_t conjugate_code(std::uint64_t code, unsigned k,
                                    const std::vector<unsigned>& p) {
  std::uint64_t out = 0;
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j)
      if ((code >> (p[i] * k + p[j])) & 1u) out |= std::uint64_t{1} << (i * k + j);
  return out;
}

// Lifts one preorder per event, given on restriction classes, to preference
// tables. The class of act f at event A is its restriction key, so table A
// relates f <= g iff the preorder at A relates their keys.
inline PreferenceStructure structure_from_class_preorders(
    const ActSpace& space, const std::vector<BitMatrix>& class_preorders,
    const std::string& provenance) {
  ActDigits digits(space, /*cap=*/1u << 16);
  std::uint32_t E = space.states.event_count();
  std::uint32_t acts = static_cast<std::uint32_t>(space.act_count());
  std::vector<BitMatrix> tables;
  tables.reserve(E);
  for (event_mask A = 0; A < E; ++A) {
    BitMatrix t(acts);
    for (act_index f = 0; f < acts; ++f) {
      std::size_t kf = static_cast<std::size_t>(digits.restriction_key(f, A));
      for (act_index g = 0; g < acts; ++g) {
        std::size_t kg = static_cast<std::size_t>(digits.restriction_key(g, A));
        if (class_preorders[A].get(kf, kg)) t.set(f, g, true);
      }
    }
    tables.push_back(std::move(t));
  }
  return PreferenceStructure(space, std::move(tables), provenance);
}

inline BitMatrix matrix_from_code(std::uint64_t code, unsigned k) {
  BitMatrix m(k);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j)
      if ((code >> (i * k + j)) & 1u) m.set(i, j, true);
  return m;
}

inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
  // modulo reduction: a negligible bias is acceptable for candidate sampling
  return bound ? rng() % bound : 0;
}

// Scans all events for a violation of level-set indifference, without any
// postulate gating (callers filter candidates themselves).
inline std::optional<Witness> level_set_violation(const PreferenceStructure& ps,
                                                  const CheckOptions& opts) {
  Ctx c(ps, opts);
  auto pairs = strict_pairs_ctx(c);
  for (event_mask A = 0; A < c.events; ++A) {
    std::uint64_t ignored = 0;
    std::optional<Witness> w = theorem2_scan_event(c, pairs, A, ignored);
    if (w) return w;
  }
  return std::nullopt;
}

// Candidate passes the first six postulates (and optionally the seventh).
inline bool passes_q1_q6(const PreferenceStructure& ps, const CheckOptions& opts,
                         bool also_q7) {
  for (Postulate id : {Postulate::Q1, Postulate::Q2, Postulate::Q3, Postulate::Q4,
                       Postulate::Q5, Postulate::Q6})
    if (check_postulate(ps, id, opts).verdict != Verdict::pass) return false;
  if (also_q7 && check_postulate(ps, Postulate::Q7, opts).verdict != Verdict::pass)
    return false;
  return true;
}

}  // namespace detail

// Looks for a preference structure satisfying the first six postulates on
// which level-set indifference fails. Exhaustive (up to swapping the two
// states) at bounds (2, 2); seeded sampling over preorder tables, models and
// constructed structures otherwise. The budget counts candidate structures.
inline ConjectureVerdict search_q7_independence(unsigned max_states,
                                                unsigned max_consequences,
                                                std::uint64_t budget,
                                                const Q7SearchOptions& opts = {}) {
  if (max_states < 1 || max_states > 4)
    throw input_error("independence search supports 1 to 4 states");
  if (max_consequences < 2 || max_consequences > 4)
    throw input_error("independence search supports 2 to 4 consequences");
  ConjectureVerdict v;
  v.seed = opts.seed;
  auto finish_counterexample = [&](PreferenceStructure ps, Witness w) {
    v.status = ConjectureStatus::counterexample_found;
    v.structure = std::move(ps);
    v.witness = std::move(w);
    v.note = "structure passes the first six postulates but has act pairs "
             "with pairwise indifferent level sets that are not indifferent";
  };

  if (max_states == 2 && max_consequences == 2) {
    // Exhaustive sweep. Structures passing the reflexivity, transitivity and
    // agreement postulates are exactly those whose comparisons factor through
    // act restrictions, so one preorder per event on restriction classes
    // covers the whole space: 1 x 4 x 4 x 355 combinations.
    ActSpace space{StateSpace(2), ConsequenceSpace::totally_ordered(2)};
    std::vector<std::uint64_t> p1 = detail::preorders_on(1);
    std::vector<std::uint64_t> p2 = detail::preorders_on(2);
    std::vector<std::uint64_t> p4 = detail::preorders_on(4);
    // State swap: acts (d0,d1) -> (d1,d0); restriction classes on the full
    // event permute accordingly, singleton classes are fixed.
    std::vector<unsigned> act_swap = {0, 2, 1, 3};
    for (std::uint64_t ca : p2)
      for (std::uint64_t cb : p2) {
        for (std::uint64_t cs : p4) {
          ++v.candidates;
          if (v.candidates > budget) {
            v.status = ConjectureStatus::inconclusive;
            v.note = "budget exhausted during the exhaustive sweep";
            v.nodes_explored = v.candidates - 1;
            return v;
          }
          std::uint64_t swapped_cs = detail::conjugate_code(cs, 4, act_swap);
          if (std::tuple(cb, ca, swapped_cs) < std::tuple(ca, cb, cs))
            continue;  // the swapped twin is examined instead
          ++v.candidates_canonical;
          std::vector<BitMatrix> pre;
          pre.push_back(detail::matrix_from_code(p1[0], 1));
          pre.push_back(detail::matrix_from_code(ca, 2));
          pre.push_back(detail::matrix_from_code(cb, 2));
          pre.push_back(detail::matrix_from_code(cs, 4));
          PreferenceStructure ps =
              detail::structure_from_class_preorders(space, pre, "search");
          if (!detail::passes_q1_q6(ps, opts.check, opts.require_q7)) continue;
          std::optional<Witness> w = detail::level_set_violation(ps, opts.check);
          if (w) {
            v.nodes_explored = v.candidates;
            v.exhaustive = false;
            finish_counterexample(std::move(ps), std::move(*w));
            return v;
          }
        }
      }
    v.nodes_explored = v.candidates;
    v.exhaustive = true;
    v.status = ConjectureStatus::holds_on_instance;
    v.note = "exhaustive at 2 states, 2 consequences (up to state relabeling): "
             "every structure passing the first six postulates satisfies "
             "level-set indifference";
    return v;
  }

  // Sampled search at larger bounds.
  std::mt19937_64 rng(opts.seed);
  unsigned n = max_states, m = max_consequences;
  ActSpace space{StateSpace(n), ConsequenceSpace::totally_ordered(m)};
  std::uint32_t E = space.states.event_count();
  auto random_rational_weights = [&]() {
    std::vector<unsigned> raw(n);
    unsigned total = 0;
    for (unsigned i = 0; i < n; ++i) total += raw[i] = 1 + (unsigned)detail::rand_below(rng, 8);
    std::vector<EpsilonNumber> w;
    for (unsigned i = 0; i < n; ++i)
      w.emplace_back(Rational(raw[i], total));
    return w;
  };
  auto random_utilities = [&]() {
    // strictly increasing rationals in [0, 1]
    std::vector<unsigned> bumps(m);
    unsigned total = 0;
    for (unsigned i = 0; i < m; ++i) total += bumps[i] = 1 + (unsigned)detail::rand_below(rng, 4);
    std::vector<Rational> u;
    unsigned acc = 0;
    for (unsigned i = 0; i < m; ++i) {
      acc += bumps[i];
      u.emplace_back(Rational(acc, total + 1));
    }
    return u;
  };
  while (v.candidates < budget) {
    ++v.candidates;
    std::uint64_t source = v.candidates % 5;
    std::optional<PreferenceStructure> ps;
    try {
      switch (source) {
        case 0: {  // random per-event preorders on restriction classes
          std::vector<BitMatrix> pre;
          bool feasible = true;
          for (event_mask A = 0; A < E; ++A) {
            std::size_t k = 1;
            for (unsigned s = 0; s < n; ++s)
              if ((A >> s) & 1u) k *= m;
            if (k > 64) { feasible = false; break; }
            BitMatrix t(k);
            for (std::size_t i = 0; i < k; ++i) {
              t.set(i, i, true);
              for (std::size_t j = 0; j < k; ++j)
                if (i != j && detail::rand_below(rng, 4) == 0) t.set(i, j, true);
            }
            t.close_transitive();
            pre.push_back(std::move(t));
          }
          if (feasible)
            ps = detail::structure_from_class_preorders(space, pre, "search");
          break;
        }
        case 1: {  // constructed from a sampled g.q.p. (two consequences)
          SampleResult s = sample_gqps(n, 1, rng(), 4096);
          if (!s.relations.empty())
            ps = construct_preferences(s.relations.front());
          break;
        }
        case 2: {  // expectation model with random rational weights
          ps = expectation_structure(
              ProbabilityModel(space, random_rational_weights(), random_utilities()));
          break;
        }
        case 3: {  // non-standard model: infinitesimal perturbations
          std::vector<EpsilonNumber> w = random_rational_weights();
          EpsilonNumber shift(Rational(0));
          for (unsigned i = 1; i < n; ++i) {
            int coin = (int)detail::rand_below(rng, 3) - 1;  // -1, 0, +1
            if (coin == 0) continue;
            EpsilonNumber delta = EpsilonNumber::epsilon(i) *
                                  EpsilonNumber(Rational(coin));
            w[i] = w[i] + delta;
            shift = shift + delta;
          }
          w[0] = w[0] - shift;
          ps = nonstandard_structure(ProbabilityModel(space, w, random_utilities()));
          break;
        }
        case 4: {  // ranked model with a random plausibility order
          std::vector<state_t> order(n);
          for (unsigned i = 0; i < n; ++i) order[i] = i;
          for (unsigned i = n; i > 1; --i)
            std::swap(order[i - 1], order[detail::rand_below(rng, i)]);
          ps = ranked_structure(RankedModel(space.states, order),
                                space.consequences);
          break;
        }
      }
    } catch (const input_error&) {
      continue;  // a malformed random candidate is just skipped
    }
    if (!ps) continue;
    if (!detail::passes_q1_q6(*ps, opts.check, opts.require_q7)) continue;
    std::optional<Witness> w = detail::level_set_violation(*ps, opts.check);
    if (w) {
      v.nodes_explored = v.candidates;
      finish_counterexample(std::move(*ps), std::move(*w));
      return v;
    }
  }
  v.nodes_explored = v.candidates;
  v.status = ConjectureStatus::inconclusive;
  v.note = "no counterexample among the sampled candidates; the bounds were "
           "not swept exhaustively";
  return v;
}

}  // namespace gqp
