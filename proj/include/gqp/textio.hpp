#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gqp/core.hpp"
#include "gqp/epsilon.hpp"
#include "gqp/errors.hpp"
#include "gqp/models.hpp"
#include "gqp/preference.hpp"
#include "gqp/relation.hpp"

// Text format, version 1. Line oriented; '#' starts a comment; blank lines
// are ignored. Sections, in canonical order:
//
//   states: <n>
//   consequences: <m>          (structure and model documents)
//   order: <i> < <j>           (strict consequence-order pairs)
//   act: <v0> <v1> ...         (optional auxiliary acts)
//   ...payload...
//
// followed by exactly one payload:
//
//   relation:                  event relation: 2^n rows of 2^n chars 0/1,
//   <rows>                     rows and columns in event integer order
//
//   prefs for <bitstring>:     one block per event (all 2^n of them),
//   <rows>                     act-count rows of act-count chars 0/1
//
//   model: expectation|nonstandard|ranked
//   weight <s>: <rational> [+|- <rational> eps[^k]]...
//   utility <c>: <rational>
//   rank: <s0> <s1> ...        (least plausible first)
//
// Events are bitstrings with state 0 leftmost. Acts and consequences use
// their canonical integer encodings. emit(parse(file)) == file byte-for-byte
// on canonical files; parse(emit(x)) == x always.

namespace gqp {

enum class DocumentKind { relation, structure, model };

inline const char* to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::relation: return "relation";
    case DocumentKind::structure: return "structure";
    case DocumentKind::model: return "model";
  }
  return "?";
}

enum class ModelKind { expectation, nonstandard, ranked };

inline const char* to_string(ModelKind k) {
  switch (k) {
    case ModelKind::expectation: return "expectation";
    case ModelKind::nonstandard: return "nonstandard";
    case ModelKind::ranked: return "ranked";
  }
  return "?";
}

// Parsed model description. Syntax-only at parse time; build() performs the
// semantic validation (weights positive and summing to 1, utilities order-
// compatible, rank a permutation) and constructs the preference structure.
struct ModelSpec {
  ModelKind kind;
  unsigned n_states;
  ConsequenceSpace consequences;
  std::vector<EpsilonNumber> weights;
  std::vector<Rational> utilities;
  std::vector<state_t> rank;

  PreferenceStructure build() const {
    ActSpace space{StateSpace(n_states), consequences};
    switch (kind) {
      case ModelKind::expectation:
        return expectation_structure(ProbabilityModel(space, weights, utilities));
      case ModelKind::nonstandard:
        return nonstandard_structure(ProbabilityModel(space, weights, utilities));
      case ModelKind::ranked:
        return ranked_structure(RankedModel(StateSpace(n_states), rank), consequences);
    }
    throw input_error("unknown model kind");
  }
};

struct Document {
  DocumentKind kind;
  std::optional<EventRelation> relation;
  std::optional<PreferenceStructure> structure;
  std::optional<ModelSpec> model;
  std::vector<Act> acts;  // auxiliary act lines, preserved for round trips

  // The preference structure this document denotes (building the model when
  // needed). Relation documents have none.
  PreferenceStructure realize() const {
    if (kind == DocumentKind::structure) return *structure;
    if (kind == DocumentKind::model) return model->build();
    throw input_error("a relation document does not denote a preference structure");
  }
};

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

struct TextRow {
  std::size_t line;      // 1-based
  std::size_t base_col;  // 1-based column of the first content character
  std::string text;      // comment-stripped, trimmed
};

struct TextToken {
  std::string text;
  std::size_t col;  // 1-based
};

inline std::vector<TextRow> split_rows(std::string_view text) {
  std::vector<TextRow> rows;
  std::size_t line = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::size_t cut = raw.find('#');
    if (cut != std::string_view::npos) raw = raw.substr(0, cut);
    std::size_t first = raw.find_first_not_of(" \t");
    if (first != std::string_view::npos) {
      std::size_t last = raw.find_last_not_of(" \t");
      rows.push_back({line, first + 1, std::string(raw.substr(first, last - first + 1))});
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return rows;
}

inline std::vector<TextToken> tokenize(const TextRow& row) {
  std::vector<TextToken> out;
  std::size_t i = 0;
  while (i < row.text.size()) {
    if (row.text[i] == ' ' || row.text[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < row.text.size() && row.text[i] != ' ' && row.text[i] != '\t') ++i;
    out.push_back({row.text.substr(start, i - start), row.base_col + start});
  }
  return out;
}

class DocParser {
 public:
  explicit DocParser(std::string_view text) : rows_(split_rows(text)) {}

  Document parse() {
    unsigned n = parse_states();
    std::optional<unsigned> m;
    std::vector<std::pair<consequence_t, consequence_t>> order;
    std::size_t last_order_line = 0;
    if (key() == "consequences") m = parse_consequences();
    while (key() == "order") {
      if (!m) fail_here("order lines require a consequences section");
      last_order_line = cur().line;
      order.push_back(parse_order(*m));
    }
    std::optional<ConsequenceSpace> cons;
    if (m) {
      try {
        cons.emplace(*m, order);
      } catch (const input_error& e) {
        throw parse_error(last_order_line ? last_order_line : rows_[i_ - 1].line, 1,
                          e.what());
      }
    }
    std::vector<Act> acts;
    while (key() == "act") {
      if (!cons) fail_here("act lines require a consequences section");
      acts.push_back(parse_act(n, cons->size()));
    }

    std::string k = key();
    if (k == "relation") {
      if (m) fail_here("a relation document must not declare consequences");
      Document doc{DocumentKind::relation, parse_relation(n), std::nullopt,
                   std::nullopt, std::move(acts)};
      finish("relation");
      return doc;
    }
    if (k == "prefs") {
      if (!cons) fail_here("preference blocks require a consequences section");
      Document doc{DocumentKind::structure, std::nullopt,
                   parse_prefs(n, *cons), std::nullopt, std::move(acts)};
      finish("structure");
      return doc;
    }
    if (k == "model") {
      if (!cons) fail_here("a model document requires a consequences section");
      Document doc{DocumentKind::model, std::nullopt, std::nullopt,
                   parse_model(n, *cons), std::move(acts)};
      finish("model");
      return doc;
    }
    if (i_ >= rows_.size())
      throw parse_error(end_line(), 1,
                        "missing payload: expected 'relation:', 'prefs for "
                        "<event>:' blocks, or 'model:'");
    fail_here("unknown directive '" + k + "'");
  }

 private:
  [[noreturn]] void fail_here(const std::string& msg) {
    if (i_ < rows_.size()) throw parse_error(cur().line, cur().base_col, msg);
    throw parse_error(end_line(), 1, msg);
  }
  std::size_t end_line() const {
    return rows_.empty() ? 1 : rows_.back().line + 1;
  }
  const TextRow& cur() const { return rows_[i_]; }

  // Directive name of the current row: leading characters up to ':' or space.
  std::string key() const {
    if (i_ >= rows_.size()) return "";
    const std::string& t = rows_[i_].text;
    std::size_t cut = t.find_first_of(": \t");
    return t.substr(0, cut);
  }

  // Splits "head: tail"; returns tail tokens, checks the head matches.
  std::vector<TextToken> directive(const std::string& expect_head,
                                   std::size_t head_tokens = 1) {
    if (i_ >= rows_.size())
      throw parse_error(end_line(), 1, "expected '" + expect_head + "' section");
    const TextRow& row = cur();
    std::size_t colon = row.text.find(':');
    if (colon == std::string::npos)
      throw parse_error(row.line, row.base_col + row.text.size(),
                        "expected ':' in '" + expect_head + "' line");
    TextRow head{row.line, row.base_col, row.text.substr(0, colon)};
    std::vector<TextToken> head_toks = tokenize(head);
    if (head_toks.empty() || head_toks[0].text != expect_head ||
        head_toks.size() != head_tokens)
      throw parse_error(row.line, row.base_col,
                        "expected '" + expect_head + "' section");
    TextRow tail{row.line, row.base_col + colon + 1, row.text.substr(colon + 1)};
    std::vector<TextToken> toks = tokenize(tail);
    if (head_tokens > 1) toks.insert(toks.begin(), head_toks[1]);
    ++i_;
    return toks;
  }

  unsigned parse_uint(const TextToken& tok, const char* what, std::size_t line) {
    if (tok.text.empty() || tok.text.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error(line, tok.col, std::string("expected ") + what +
                                           ", got '" + tok.text + "'");
    unsigned long v = 0;
    for (char c : tok.text) {
      v = v * 10 + static_cast<unsigned long>(c - '0');
      if (v > 1000000ul)
        throw parse_error(line, tok.col, std::string(what) + " out of range");
    }
    return static_cast<unsigned>(v);
  }

  Rational parse_rat(const TextToken& tok, std::size_t line) {
    try {
      return parse_rational(tok.text);
    } catch (const input_error& e) {
      throw parse_error(line, tok.col, e.what());
    }
  }

  void expect_count(const std::vector<TextToken>& toks, std::size_t want,
                    std::size_t line, std::size_t after_col, const char* what) {
    if (toks.size() < want)
      throw parse_error(line, after_col, std::string("expected ") + what);
    if (toks.size() > want)
      throw parse_error(line, toks[want].col,
                        std::string("unexpected trailing content after ") + what);
  }

  unsigned parse_states() {
    if (rows_.empty())
      throw parse_error(1, 1, "empty document: expected 'states: <n>' first");
    if (key() != "states")
      throw parse_error(cur().line, cur().base_col,
                        "expected 'states: <n>' as the first section");
    std::size_t line = cur().line;
    std::vector<TextToken> toks = directive("states");
    expect_count(toks, 1, line, 1, "one state count");
    unsigned n = parse_uint(toks[0], "a state count", line);
    if (n > StateSpace::max_states)
      throw parse_error(line, toks[0].col,
                        "state count exceeds the supported maximum of " +
                            std::to_string(StateSpace::max_states));
    return n;
  }

  unsigned parse_consequences() {
    std::size_t line = cur().line;
    std::vector<TextToken> toks = directive("consequences");
    expect_count(toks, 1, line, 1, "one consequence count");
    unsigned m = parse_uint(toks[0], "a consequence count", line);
    if (m == 0)
      throw parse_error(line, toks[0].col, "consequence count must be positive");
    return m;
  }

  std::pair<consequence_t, consequence_t> parse_order(unsigned m) {
    std::size_t line = cur().line;
    std::vector<TextToken> toks = directive("order");
    expect_count(toks, 3, line, 1, "'<i> < <j>'");
    if (toks[1].text != "<")
      throw parse_error(line, toks[1].col, "expected '<' between the indices");
    consequence_t lo = parse_uint(toks[0], "a consequence index", line);
    consequence_t hi = parse_uint(toks[2], "a consequence index", line);
    if (lo >= m || hi >= m)
      throw parse_error(line, (lo >= m ? toks[0] : toks[2]).col,
                        "consequence index out of range (have " +
                            std::to_string(m) + " consequences)");
    return {lo, hi};
  }

  Act parse_act(unsigned n, unsigned m) {
    std::size_t line = cur().line;
    std::vector<TextToken> toks = directive("act");
    if (toks.size() != n)
      throw parse_error(line, 1,
                        "act line has " + std::to_string(toks.size()) +
                            " values, expected one per state (" +
                            std::to_string(n) + ")");
    std::vector<consequence_t> values;
    for (const TextToken& t : toks) {
      consequence_t v = parse_uint(t, "a consequence index", line);
      if (v >= m)
        throw parse_error(line, t.col,
                          "consequence index out of range (have " +
                              std::to_string(m) + " consequences)");
      values.push_back(v);
    }
    return Act(std::move(values));
  }

  // A block of `rows` lines, each `width` characters over {0,1}.
  std::vector<std::string> parse_matrix(std::size_t rows, std::size_t width,
                                        const char* what) {
    std::vector<std::string> out;
    while (out.size() < rows) {
      if (i_ >= rows_.size() ||
          cur().text.find_first_not_of("01") != std::string::npos) {
        std::size_t line = i_ < rows_.size() ? cur().line : end_line();
        throw parse_error(line, 1,
                          std::string(what) + " block has " +
                              std::to_string(out.size()) + " rows, expected " +
                              std::to_string(rows));
      }
      if (cur().text.size() != width)
        throw parse_error(cur().line, cur().base_col,
                          std::string(what) + " row has " +
                              std::to_string(cur().text.size()) +
                              " entries, expected " + std::to_string(width));
      out.push_back(cur().text);
      ++i_;
    }
    return out;
  }

  EventRelation parse_relation(unsigned n) {
    std::size_t line = cur().line;
    std::vector<TextToken> toks = directive("relation");
    expect_count(toks, 0, line, 1, "the bare 'relation:' header");
    if (n > EventRelation::max_states)
      throw parse_error(line, 1,
                        "relation over " + std::to_string(n) +
                            " states exceeds the supported maximum of " +
                            std::to_string(EventRelation::max_states));
    std::uint32_t E = std::uint32_t{1} << n;
    std::vector<std::string> m = parse_matrix(E, E, "relation");
    EventRelation rel(n);
    for (event_mask A = 0; A < E; ++A)
      for (event_mask B = 0; B < E; ++B)
        rel.set(A, B, m[A][B] == '1');
    return rel;
  }

  PreferenceStructure parse_prefs(unsigned n, const ConsequenceSpace& cons) {
    ActSpace space{StateSpace(n), cons};
    std::uint64_t acts64 = space.act_count();
    if (acts64 > (std::uint64_t{1} << 20))
      throw parse_error(cur().line, cur().base_col,
                        "act space too large to read extensionally");
    std::size_t acts = static_cast<std::size_t>(acts64);
    std::uint32_t E = space.states.event_count();
    std::vector<std::optional<BitMatrix>> tables(E);
    while (key() == "prefs") {
      const TextRow& row = cur();
      std::size_t line = row.line;
      std::size_t colon = row.text.find(':');
      if (colon == std::string::npos)
        throw parse_error(line, row.base_col + row.text.size(),
                          "expected ':' in the 'prefs for <event>' line");
      TextRow head{line, row.base_col, row.text.substr(0, colon)};
      std::vector<TextToken> toks = tokenize(head);
      ++i_;
      // tokens: "prefs", "for", then the event bitstring (absent when n = 0)
      if (toks.size() < 2 || toks[1].text != "for" || toks.size() > 3)
        throw parse_error(line, toks.size() < 2 ? row.base_col : toks[1].col,
                          "expected 'prefs for <event>:'");
      std::string bits;
      std::size_t bits_col = toks[1].col + 4;
      if (toks.size() == 3) {
        bits = toks[2].text;
        bits_col = toks[2].col;
      }
      if (bits.size() != n)
        throw parse_error(line, bits_col,
                          "event bitstring has " + std::to_string(bits.size()) +
                              " characters, expected one per state (" +
                              std::to_string(n) + ")");
      if (bits.find_first_not_of("01") != std::string::npos)
        throw parse_error(line, bits_col, "event bitstring must be over {0,1}");
      event_mask A = n == 0 ? 0 : Event::from_bitstring(bits).bits();
      if (tables[A])
        throw parse_error(line, bits_col,
                          "duplicate preference block for event " + bits);
      std::vector<std::string> m = parse_matrix(acts, acts, "preference");
      BitMatrix t(acts);
      for (std::size_t f = 0; f < acts; ++f)
        for (std::size_t g = 0; g < acts; ++g)
          if (m[f][g] == '1') t.set(f, g);
      tables[A] = std::move(t);
    }
    for (event_mask A = 0; A < E; ++A)
      if (!tables[A])
        throw parse_error(end_line(), 1,
                          "missing preference block for event " +
                              Event(A, n).bitstring());
    std::vector<BitMatrix> fixed;
    fixed.reserve(E);
    for (event_mask A = 0; A < E; ++A) fixed.push_back(std::move(*tables[A]));
    return PreferenceStructure(std::move(space), std::move(fixed), "file");
  }

  EpsilonNumber parse_weight_value(const std::vector<TextToken>& toks,
                                   std::size_t from, std::size_t line) {
    Poly p(Rational(parse_rat(toks[from], line)));
    std::size_t i = from + 1;
    while (i < toks.size()) {
      const std::string& sep = toks[i].text;
      if (sep != "+" && sep != "-")
        throw parse_error(line, toks[i].col, "expected '+' or '-' before an eps term");
      if (i + 2 >= toks.size())
        throw parse_error(line, toks[i].col + 1,
                          "incomplete eps term: expected '<rational> eps[^k]'");
      Rational coeff = parse_rat(toks[i + 1], line);
      if (sep == "-") coeff = -coeff;
      const std::string& et = toks[i + 2].text;
      std::size_t k = 1;
      if (et != "eps") {
        if (et.rfind("eps^", 0) != 0)
          throw parse_error(line, toks[i + 2].col, "expected 'eps' or 'eps^<k>'");
        TextToken kt{et.substr(4), toks[i + 2].col + 4};
        k = parse_uint(kt, "an eps power", line);
        if (k == 0)
          throw parse_error(line, kt.col, "eps power must be at least 1");
      }
      p = p + Poly::eps_power(k, coeff);
      i += 3;
    }
    return EpsilonNumber(std::move(p));
  }

  ModelSpec parse_model(unsigned n, const ConsequenceSpace& cons) {
    std::size_t line = cur().line;
    std::vector<TextToken> toks = directive("model");
    expect_count(toks, 1, line, 1, "one model kind");
    ModelKind kind;
    if (toks[0].text == "expectation") kind = ModelKind::expectation;
    else if (toks[0].text == "nonstandard") kind = ModelKind::nonstandard;
    else if (toks[0].text == "ranked") kind = ModelKind::ranked;
    else
      throw parse_error(line, toks[0].col,
                        "unknown model kind '" + toks[0].text +
                            "' (expected expectation, nonstandard, or ranked)");
    ModelSpec spec{kind, n, cons, {}, {}, {}};
    if (kind == ModelKind::ranked) {
      std::size_t rline = i_ < rows_.size() ? cur().line : end_line();
      if (key() != "rank")
        throw parse_error(rline, 1, "ranked model requires a 'rank:' line");
      std::vector<TextToken> rt = directive("rank");
      if (rt.size() != n)
        throw parse_error(rline, 1,
                          "rank line has " + std::to_string(rt.size()) +
                              " states, expected " + std::to_string(n));
      for (const TextToken& t : rt)
        spec.rank.push_back(parse_uint(t, "a state index", rline));
      return spec;
    }
    std::map<unsigned, EpsilonNumber> weights;
    std::map<unsigned, Rational> utilities;
    while (key() == "weight" || key() == "utility") {
      bool is_weight = key() == "weight";
      std::size_t dline = cur().line;
      std::vector<TextToken> dt = directive(is_weight ? "weight" : "utility", 2);
      if (dt.empty())
        throw parse_error(dline, 1, "missing index before ':'");
      unsigned idx = parse_uint(dt[0], is_weight ? "a state index" : "a consequence index",
                                dline);
      unsigned bound = is_weight ? n : cons.size();
      if (idx >= bound)
        throw parse_error(dline, dt[0].col,
                          std::string(is_weight ? "state" : "consequence") +
                              " index out of range");
      if (dt.size() < 2)
        throw parse_error(dline, dt[0].col + 1, "missing value");
      if (is_weight) {
        if (weights.count(idx))
          throw parse_error(dline, dt[0].col,
                            "duplicate weight for state " + std::to_string(idx));
        weights.emplace(idx, parse_weight_value(dt, 1, dline));
      } else {
        if (utilities.count(idx))
          throw parse_error(dline, dt[0].col, "duplicate utility for consequence " +
                                                  std::to_string(idx));
        if (dt.size() > 2)
          throw parse_error(dline, dt[2].col, "unexpected trailing content after "
                                              "the utility value");
        utilities.emplace(idx, parse_rat(dt[1], dline));
      }
    }
    for (unsigned s = 0; s < n; ++s)
      if (!weights.count(s))
        throw parse_error(end_line(), 1, "missing weight for state " + std::to_string(s));
    for (unsigned c = 0; c < cons.size(); ++c)
      if (!utilities.count(c))
        throw parse_error(end_line(), 1,
                          "missing utility for consequence " + std::to_string(c));
    for (auto& kv : weights) spec.weights.push_back(std::move(kv.second));
    for (auto& kv : utilities) spec.utilities.push_back(std::move(kv.second));
    return spec;
  }

  void finish(const char* kind) {
    if (i_ < rows_.size())
      fail_here(std::string("unexpected content after the ") + kind + " payload");
  }

  std::vector<TextRow> rows_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline Document parse_document(std::string_view text) {
  return detail::DocParser(text).parse();
}

inline EventRelation parse_relation_document(std::string_view text) {
  Document doc = parse_document(text);
  if (doc.kind != DocumentKind::relation)
    throw input_error(std::string("expected a relation document, found a ") +
                      to_string(doc.kind) + " document");
  return *doc.relation;
}

inline PreferenceStructure parse_structure_document(std::string_view text) {
  Document doc = parse_document(text);
  if (doc.kind == DocumentKind::relation)
    throw input_error("expected a preference or model document, found a "
                      "relation document");
  return doc.realize();
}

// ---------------------------------------------------------------------------
// Emission (canonical form)
// ---------------------------------------------------------------------------

namespace detail {

inline void emit_header(std::string& out, unsigned n, const ConsequenceSpace* cons,
                        const std::vector<Act>& acts) {
  out += "states: " + std::to_string(n) + "\n";
  if (!cons) return;
  out += "consequences: " + std::to_string(cons->size()) + "\n";
  for (auto [lo, hi] : cons->strict_pairs())
    out += "order: " + std::to_string(lo) + " < " + std::to_string(hi) + "\n";
  for (const Act& f : acts) {
    out += "act:";
    for (consequence_t v : f.values()) out += " " + std::to_string(v);
    out += "\n";
  }
}

inline std::string emit_epsilon(const EpsilonNumber& w) {
  if (!w.is_polynomial())
    throw input_error("only polynomial weights can be serialized");
  const Poly& p = w.polynomial();
  std::string out = gqp::to_string(p.coeff(0));
  for (int k = 1; k <= p.degree(); ++k) {
    Rational c = p.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    out += c < 0 ? " - " : " + ";
    out += gqp::to_string(c < 0 ? Rational(-c) : c);
    out += k == 1 ? " eps" : " eps^" + std::to_string(k);
  }
  return out;
}

}  // namespace detail

inline std::string emit_relation(const EventRelation& rel) {
  std::string out;
  detail::emit_header(out, rel.n_states(), nullptr, {});
  out += "relation:\n";
  std::uint32_t E = rel.event_count();
  for (event_mask A = 0; A < E; ++A) {
    for (event_mask B = 0; B < E; ++B) out += rel.leq(A, B) ? '1' : '0';
    out += '\n';
  }
  return out;
}

inline std::string emit_structure(const PreferenceStructure& ps,
                                  const std::vector<Act>& acts = {}) {
  std::string out;
  unsigned n = ps.n_states();
  detail::emit_header(out, n, &ps.space().consequences, acts);
  std::uint64_t acts64 = ps.act_count();
  if (acts64 > (std::uint64_t{1} << 20))
    throw input_error("act space too large to serialize extensionally");
  std::size_t count = static_cast<std::size_t>(acts64);
  for (event_mask A = 0; A < ps.event_count(); ++A) {
    out += "prefs for " + Event(A, n).bitstring() + ":\n";
    const BitMatrix& t = ps.table(A);
    for (std::size_t f = 0; f < count; ++f) {
      for (std::size_t g = 0; g < count; ++g) out += t.get(f, g) ? '1' : '0';
      out += '\n';
    }
  }
  return out;
}

inline std::string emit_model(const ModelSpec& spec,
                              const std::vector<Act>& acts = {}) {
  std::string out;
  detail::emit_header(out, spec.n_states, &spec.consequences, acts);
  out += "model: " + std::string(to_string(spec.kind)) + "\n";
  if (spec.kind == ModelKind::ranked) {
    out += "rank:";
    for (state_t s : spec.rank) out += " " + std::to_string(s);
    out += "\n";
    return out;
  }
  for (unsigned s = 0; s < spec.weights.size(); ++s)
    out += "weight " + std::to_string(s) + ": " +
           detail::emit_epsilon(spec.weights[s]) + "\n";
  for (unsigned c = 0; c < spec.utilities.size(); ++c)
    out += "utility " + std::to_string(c) + ": " + to_string(spec.utilities[c]) +
           "\n";
  return out;
}

inline std::string emit_document(const Document& doc) {
  switch (doc.kind) {
    case DocumentKind::relation: return emit_relation(*doc.relation);
    case DocumentKind::structure: return emit_structure(*doc.structure, doc.acts);
    case DocumentKind::model: return emit_model(*doc.model, doc.acts);
  }
  throw input_error("unknown document kind");
}

}  // namespace gqp
