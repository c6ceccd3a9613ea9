#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gqp/bitmatrix.hpp"
#include "gqp/errors.hpp"

namespace gqp {

using state_t = unsigned;
using consequence_t = unsigned;

// Events are subsets of the state space, encoded as bitmasks: state i <-> bit i.
// The integer value of the mask is the canonical event ordering everywhere
// (enumeration, matrix rows, witnesses).
using event_mask = std::uint32_t;

using act_index = std::uint32_t;

// Finite state space. Only the count matters for semantics; optional labels
// ride along for display.
class StateSpace {
 public:
  explicit StateSpace(unsigned n, std::vector<std::string> labels = {})
      : n_(n), labels_(std::move(labels)) {
    if (n_ > max_states)
      throw input_error("state space too large: " + std::to_string(n_) +
                        " states (max " + std::to_string(max_states) + ")");
    if (!labels_.empty() && labels_.size() != n_)
      throw input_error("label count does not match state count");
  }

  static constexpr unsigned max_states = 16;

  unsigned size() const { return n_; }
  std::uint32_t event_count() const { return std::uint32_t{1} << n_; }
  event_mask full_mask() const { return event_count() - 1; }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const StateSpace& a, const StateSpace& b) {
    return a.n_ == b.n_;
  }

 private:
  unsigned n_;
  std::vector<std::string> labels_;
};

// Value wrapper for an event when the state count should travel with the mask
// (validated API boundaries, witnesses, text I/O). Hot loops use raw masks.
class Event {
 public:
  Event(event_mask bits, unsigned n_states) : bits_(bits), n_(n_states) {
    if (n_ > StateSpace::max_states) throw input_error("event over too many states");
    if (bits_ & ~low_mask(n_))
      throw input_error("event mask " + std::to_string(bits_) +
                        " has bits outside a " + std::to_string(n_) + "-state space");
  }

  static Event empty(unsigned n_states) { return Event(0, n_states); }
  static Event full(unsigned n_states) { return Event(low_mask(n_states), n_states); }

  // Bitstring convention: state 0 is the leftmost character.
  static Event from_bitstring(std::string_view s) {
    if (s.size() > StateSpace::max_states)
      throw input_error("event bitstring longer than max state count");
    event_mask bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        bits |= event_mask{1} << i;
      else if (s[i] != '0')
        throw input_error("event bitstring must be over {0,1}");
    }
    return Event(bits, static_cast<unsigned>(s.size()));
  }

  std::string bitstring() const {
    std::string s(n_, '0');
    for (unsigned i = 0; i < n_; ++i)
      if (contains(i)) s[i] = '1';
    return s;
  }

  event_mask bits() const { return bits_; }
  unsigned n_states() const { return n_; }
  bool contains(state_t s) const { return (bits_ >> s) & 1; }
  unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  bool is_empty() const { return bits_ == 0; }

  Event united(const Event& o) const { return Event(bits_ | same(o).bits_, n_); }
  Event intersected(const Event& o) const { return Event(bits_ & same(o).bits_, n_); }
  Event minus(const Event& o) const { return Event(bits_ & ~same(o).bits_, n_); }
  Event complemented() const { return Event(~bits_ & low_mask(n_), n_); }
  bool is_subset_of(const Event& o) const { return (bits_ & ~same(o).bits_) == 0; }
  bool disjoint_from(const Event& o) const { return (bits_ & same(o).bits_) == 0; }

  friend bool operator==(const Event& a, const Event& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  static event_mask low_mask(unsigned n) {
    return n == 0 ? 0 : static_cast<event_mask>((std::uint64_t{1} << n) - 1);
  }
  const Event& same(const Event& o) const {
    if (o.n_ != n_) throw input_error("events over different state spaces");
    return o;
  }

  event_mask bits_;
  unsigned n_;
};

// Consequences with a strict partial order (possibly total, possibly empty).
// Construction takes generator pairs "i < j" over indices, closes them
// transitively and rejects cycles.
class ConsequenceSpace {
 public:
  explicit ConsequenceSpace(unsigned m,
                            const std::vector<std::pair<consequence_t, consequence_t>>&
                                strict_pairs = {})
      : m_(m), below_(m) {
    if (m_ == 0) throw input_error("consequence space must be nonempty");
    for (auto [lo, hi] : strict_pairs) {
      if (lo >= m_ || hi >= m_)
        throw input_error("consequence order pair out of range");
      below_.set(lo, hi);
    }
    below_.close_transitive();
    for (consequence_t c = 0; c < m_; ++c)
      if (below_.get(c, c))
        throw input_error("consequence order has a cycle through index " +
                          std::to_string(c));
  }

  // Total order 0 < 1 < ... < m-1.
  static ConsequenceSpace totally_ordered(unsigned m) {
    std::vector<std::pair<consequence_t, consequence_t>> pairs;
    for (consequence_t c = 0; c + 1 < m; ++c) pairs.emplace_back(c, c + 1);
    return ConsequenceSpace(m, pairs);
  }

  unsigned size() const { return m_; }
  bool less(consequence_t c, consequence_t d) const { return below_.get(c, d); }
  bool leq(consequence_t c, consequence_t d) const { return c == d || less(c, d); }
  bool comparable(consequence_t c, consequence_t d) const {
    return c == d || less(c, d) || less(d, c);
  }

  bool is_total() const {
    for (consequence_t c = 0; c < m_; ++c)
      for (consequence_t d = c + 1; d < m_; ++d)
        if (!comparable(c, d)) return false;
    return true;
  }

  // All strict pairs (lo, hi) with lo < hi in the order, sorted; this is the
  // canonical serialization of the order and the iteration set for checks
  // quantifying over "c strictly above d".
  std::vector<std::pair<consequence_t, consequence_t>> strict_pairs() const {
    std::vector<std::pair<consequence_t, consequence_t>> out;
    for (consequence_t lo = 0; lo < m_; ++lo)
      for (consequence_t hi = 0; hi < m_; ++hi)
        if (below_.get(lo, hi)) out.emplace_back(lo, hi);
    return out;
  }

  friend bool operator==(const ConsequenceSpace& a, const ConsequenceSpace& b) {
    return a.m_ == b.m_ && a.below_ == b.below_;
  }

 private:
  unsigned m_;
  BitMatrix below_;  // below_(c, d) <=> c strictly below d; transitive, irreflexive
};

// An act assigns a consequence to every state.
class Act {
 public:
  Act() = default;
  explicit Act(std::vector<consequence_t> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  consequence_t value(state_t s) const { return values_[s]; }
  const std::vector<consequence_t>& values() const { return values_; }

  friend bool operator==(const Act& a, const Act& b) { return a.values_ == b.values_; }

 private:
  std::vector<consequence_t> values_;
};

// The universe acts live in: a state space with a partially ordered
// consequence space. Acts are indexed lexicographically with state 0 as the
// most significant digit, so index 0 is the constant act with consequence 0
// and enumeration order is stable across runs.
struct ActSpace {
  StateSpace states;
  ConsequenceSpace consequences;

  std::uint64_t act_count() const {
    std::uint64_t count = 1;
    for (unsigned s = 0; s < states.size(); ++s) {
      if (count > (std::uint64_t{1} << 48))
        throw input_error("act space size m^n overflows the supported range");
      count *= consequences.size();
    }
    return count;
  }

  friend bool operator==(const ActSpace& a, const ActSpace& b) {
    return a.states == b.states && a.consequences == b.consequences;
  }
};

inline void validate_act(const ActSpace& space, const Act& f) {
  if (f.size() != space.states.size())
    throw input_error("act length " + std::to_string(f.size()) +
                      " does not match state count " +
                      std::to_string(space.states.size()));
  for (state_t s = 0; s < f.size(); ++s)
    if (f.value(s) >= space.consequences.size())
      throw input_error("act value out of consequence range at state " +
                        std::to_string(s));
}

inline act_index act_to_index(const ActSpace& space, const Act& f) {
  validate_act(space, f);
  std::uint64_t idx = 0;
  for (state_t s = 0; s < space.states.size(); ++s)
    idx = idx * space.consequences.size() + f.value(s);
  return static_cast<act_index>(idx);
}

inline Act act_from_index(const ActSpace& space, std::uint64_t index) {
  unsigned n = space.states.size();
  unsigned m = space.consequences.size();
  std::vector<consequence_t> values(n);
  for (unsigned s = n; s-- > 0;) {
    values[s] = static_cast<consequence_t>(index % m);
    index /= m;
  }
  if (index != 0) throw input_error("act index out of range");
  return Act(std::move(values));
}

inline Act constant_act(const ActSpace& space, consequence_t c) {
  if (c >= space.consequences.size())
    throw input_error("constant act consequence out of range");
  return Act(std::vector<consequence_t>(space.states.size(), c));
}

// c on A, d off A.
inline Act indicator_act(const ActSpace& space, const Event& A, consequence_t c,
                         consequence_t d) {
  if (A.n_states() != space.states.size())
    throw input_error("indicator event over the wrong state space");
  if (c >= space.consequences.size() || d >= space.consequences.size())
    throw input_error("indicator act consequence out of range");
  std::vector<consequence_t> values(space.states.size(), d);
  for (state_t s = 0; s < space.states.size(); ++s)
    if (A.contains(s)) values[s] = c;
  return Act(std::move(values));
}

inline bool acts_agree_on(const Act& f, const Act& g, const Event& A) {
  if (f.size() != g.size() || f.size() != A.n_states())
    throw input_error("acts_agree_on: mismatched sizes");
  for (state_t s = 0; s < f.size(); ++s)
    if (A.contains(s) && f.value(s) != g.value(s)) return false;
  return true;
}

// Full decode of the act space: digit strings for every act index, plus
// restriction keys used to test agreement on an event in O(n). Memory is
// act_count * n bytes; construction enforces the caller's cap so runaway
// spaces surface as budget errors, not allocation failures.
class ActDigits {
 public:
  ActDigits(const ActSpace& space, std::uint64_t cap)
      : n_(space.states.size()), m_(space.consequences.size()) {
    std::uint64_t count = space.act_count();
    if (count > cap)
      throw budget_error("act space size " + std::to_string(count) +
                         " exceeds cap " + std::to_string(cap));
    count_ = static_cast<act_index>(count);
    unsigned m = space.consequences.size();
    digits_.resize(static_cast<std::size_t>(count_) * std::max(1u, n_));
    std::vector<consequence_t> cur(n_, 0);
    for (act_index f = 0; f < count_; ++f) {
      for (unsigned s = 0; s < n_; ++s)
        digits_[static_cast<std::size_t>(f) * n_ + s] = static_cast<std::uint8_t>(cur[s]);
      for (unsigned s = n_; s-- > 0;) {  // odometer, state n-1 least significant
        if (++cur[s] < m) break;
        cur[s] = 0;
      }
    }
  }

  act_index count() const { return count_; }
  unsigned n_states() const { return n_; }

  std::uint8_t digit(act_index f, state_t s) const {
    return digits_[static_cast<std::size_t>(f) * n_ + s];
  }

  // Two acts agree on A iff their keys match. Keys are bounded by m^|A|,
  // which fits comfortably in 64 bits under the act_count overflow guard.
  std::uint64_t restriction_key(act_index f, event_mask A) const {
    std::uint64_t key = 0;
    for (unsigned s = 0; s < n_; ++s)
      if ((A >> s) & 1) key = key * m_ + digit(f, s);
    return key;
  }

  bool agree_on(act_index f, act_index g, event_mask A) const {
    for (unsigned s = 0; s < n_; ++s)
      if (((A >> s) & 1) && digit(f, s) != digit(g, s)) return false;
    return true;
  }

 private:
  unsigned n_;
  unsigned m_;
  act_index count_ = 0;
  std::vector<std::uint8_t> digits_;
};

}  // namespace gqp
