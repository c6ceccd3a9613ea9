#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gqp/core.hpp"

namespace gqp {

enum class Verdict { pass, fail, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

// A concrete violating instance: role-labelled events, acts and consequences,
// in the order the check's statement quantifies them. Checks always report the
// lexicographically first violation in scan order, so witnesses are stable
// across runs, and every checker has a matching *_violated_at re-verifier that
// evaluates exactly this instance.
struct Witness {
  std::vector<std::pair<std::string, Event>> events;
  std::vector<std::pair<std::string, Act>> acts;
  std::vector<std::pair<std::string, consequence_t>> consequences;

  bool empty() const {
    return events.empty() && acts.empty() && consequences.empty();
  }

  friend bool operator==(const Witness& a, const Witness& b) {
    return a.events == b.events && a.acts == b.acts &&
           a.consequences == b.consequences;
  }
};

// Outcome of one named check. `instances` counts the quantifier instances the
// scan actually evaluated (0 when the check is not instance-based), so reports
// show the verification volume. `note` carries human-oriented qualifications:
// variant choices, vacuity warnings, statement discrepancies.
struct CheckResult {
  std::string id;
  Verdict verdict = Verdict::pass;
  std::optional<Witness> witness;
  std::string note;
  std::uint64_t instances = 0;

  static CheckResult passed(std::string id, std::uint64_t instances,
                            std::string note = "") {
    return {std::move(id), Verdict::pass, std::nullopt, std::move(note), instances};
  }
  static CheckResult failed(std::string id, Witness w, std::uint64_t instances,
                            std::string note = "") {
    return {std::move(id), Verdict::fail, std::move(w), std::move(note), instances};
  }
  static CheckResult undecided(std::string id, std::string note) {
    return {std::move(id), Verdict::inconclusive, std::nullopt, std::move(note), 0};
  }
};

}  // namespace gqp
