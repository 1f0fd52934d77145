#pragma once

// Text and JSON forms of maps, words, cells and terms.
//
//   map      (v0,v1,...)->n
//   gen      eta{n,i} | mu{n,i}
//   word     id{n} | gen ( ; gen )*
//   cell     a{n,i} | p{..} | q{..} | etaeta{..} | etamu{..} | mumu{..} | mueta{..}
//   basic    [ word? | cell | word? ]      empty contexts sit at the cell's ends
//   term     basic ( * basic )* | word      a bare word is an identity term
//
// Parsing is purely syntactic: composability and index bounds are left to
// validate_word / validate_term.

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "simplex/adjunction.hpp"
#include "simplex/delta.hpp"
#include "simplex/error.hpp"
#include "simplex/lg_terms.hpp"
#include "simplex/models.hpp"

namespace simplex {

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const noexcept { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000) throw parse_error(start, "number is too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return value;
  }

  /// {a,b} or {a}
  std::vector<std::size_t> indices() {
    expect('{');
    std::vector<std::size_t> out{number()};
    while (consume(',')) out.push_back(number());
    expect('}');
    return out;
  }

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(pos_, msg + " at position " + std::to_string(pos_)); }

  void rewind(std::size_t p) { pos_ = p; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::pair<std::size_t, std::size_t> index_pair(Cursor& c, std::size_t at) {
  auto ix = c.indices();
  if (ix.size() != 2) throw parse_error(at, "expected two indices at position " + std::to_string(at));
  return {ix[0], ix[1]};
}

/// Generators until the next token that cannot continue a word.
inline std::optional<OneCellWord> parse_word_body(Cursor& c) {
  if (!std::isalpha(static_cast<unsigned char>(c.peek()))) return std::nullopt;
  const std::size_t at = c.pos();
  const std::size_t name_at = c.pos();
  const std::string name = c.identifier();
  if (name == "id") {
    auto ix = c.indices();
    if (ix.size() != 1) throw parse_error(name_at, "id takes one index at position " + std::to_string(name_at));
    return identity_word(ix[0]);
  }
  c.rewind(at);
  std::vector<DeltaGen> gens;
  do {
    c.skip_ws();
    const std::size_t gat = c.pos();
    const std::string g = c.identifier();
    if (g != "eta" && g != "mu") throw parse_error(gat, "unknown generator '" + g + "' at position " + std::to_string(gat));
    auto [n, i] = index_pair(c, gat);
    gens.push_back(g == "eta" ? eta(n, i) : mu(n, i));
  } while (c.consume(';'));
  return OneCellWord{gens.front().dom(), gens.back().cod(), std::move(gens)};
}

inline OneCellWord literal_concat(const OneCellWord& a, const OneCellWord& b) {
  OneCellWord out{a.dom, b.cod, a.gens};
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  return out;
}

/// Endpoints of a generator's boundary words; defined even for invalid shifts.
inline std::pair<ordinal, ordinal> cell_ends(const GenTwoCell& g) {
  const auto b = base_boundary(g.kind);
  return {b.dom.dom + g.shift_n, b.dom.cod + g.shift_n};
}

inline GenTwoCell parse_cell(Cursor& c) {
  c.skip_ws();
  const std::size_t at = c.pos();
  const std::string name = c.identifier();
  auto kind = kind_from_name(name);
  if (!kind) throw parse_error(at, "unknown cell '" + name + "' at position " + std::to_string(at));
  auto [n, i] = index_pair(c, at);
  return {*kind, n, i};
}

inline BasicTwoCell parse_basic(Cursor& c) {
  c.expect('[');
  auto pre = parse_word_body(c);
  c.expect('|');
  const GenTwoCell g = parse_cell(c);
  c.expect('|');
  auto post = parse_word_body(c);
  c.expect(']');
  const auto [from, to] = cell_ends(g);
  return {pre ? *pre : identity_word(from), g, post ? *post : identity_word(to)};
}

/// Domain and codomain read off literally, so that invalid input still
/// yields a term for validate_term to diagnose.
inline Boundary literal_boundary(const BasicTwoCell& b) {
  if (b.gen.valid()) {
    const auto g = gen_boundary(b.gen);
    return {literal_concat(literal_concat(b.pre, g.dom), b.post), literal_concat(literal_concat(b.pre, g.cod), b.post)};
  }
  return {literal_concat(b.pre, b.post), literal_concat(b.pre, b.post)};
}

}  // namespace detail

inline MonotoneMap parse_map(std::string_view text) {
  detail::Cursor c(text);
  c.expect('(');
  std::vector<std::size_t> values;
  if (!c.consume(')')) {
    do values.push_back(c.number());
    while (c.consume(','));
    c.expect(')');
  }
  c.expect('-');
  c.expect('>');
  const std::size_t cod = c.number();
  c.expect_end();
  return MonotoneMap(cod, std::move(values));
}

inline std::string print_map(const MonotoneMap& f) {
  std::string s = "(";
  for (std::size_t k = 0; k < f.values().size(); ++k) s += (k ? "," : "") + std::to_string(f.values()[k]);
  return s + ")->" + std::to_string(f.cod());
}

/// An empty or blank text is the identity word at `start`, which must then
/// be given.
inline OneCellWord parse_word(std::string_view text, std::optional<ordinal> start = std::nullopt) {
  detail::Cursor c(text);
  if (c.at_end()) {
    if (!start) throw parse_error(0, "an empty word needs a declared object");
    return identity_word(*start);
  }
  auto w = detail::parse_word_body(c);
  if (!w) c.fail("expected a word");
  c.expect_end();
  return *w;
}

inline DeltaGen parse_gen(std::string_view text) {
  auto w = parse_word(text);
  if (w.gens.size() != 1) throw parse_error(0, "expected a single generator");
  return w.gens.front();
}

inline GenTwoCell parse_cell(std::string_view text) {
  detail::Cursor c(text);
  auto g = detail::parse_cell(c);
  c.expect_end();
  return g;
}

inline BasicTwoCell parse_basic(std::string_view text) {
  detail::Cursor c(text);
  auto b = detail::parse_basic(c);
  c.expect_end();
  return b;
}

inline TwoCellTerm parse_term(std::string_view text) {
  detail::Cursor c(text);
  if (c.peek() != '[') {
    auto w = detail::parse_word_body(c);
    if (!w) c.fail("expected a term");
    c.expect_end();
    return identity_term(*w);
  }
  std::vector<BasicTwoCell> basics{detail::parse_basic(c)};
  while (c.consume('*')) basics.push_back(detail::parse_basic(c));
  c.expect_end();
  return {detail::literal_boundary(basics.front()).dom, detail::literal_boundary(basics.back()).cod,
          std::move(basics)};
}

inline std::string print(const OneCellWord& w) { return to_string(w); }
inline std::string print(const GenTwoCell& g) { return to_string(g); }
inline std::string print(const BasicTwoCell& b) { return to_string(b); }
inline std::string print(const TwoCellTerm& t) { return to_string(t); }
inline std::string print(const MonotoneMap& f) { return print_map(f); }

// ---------------------------------------------------------------------------
// JSON

using json = nlohmann::ordered_json;

inline void to_json(json& j, const MonotoneMap& f) { j = json{{"dom", f.dom()}, {"cod", f.cod()}, {"values", f.values()}}; }

inline void from_json(const json& j, MonotoneMap& f) {
  f = MonotoneMap(j.at("cod").get<std::size_t>(), j.at("values").get<std::vector<std::size_t>>());
  if (f.dom() != j.at("dom").get<std::size_t>()) throw parse_error(0, "map dom does not match its values");
}

inline void to_json(json& j, const DeltaGen& g) {
  j = json{{"kind", g.kind == GenKind::eta ? "eta" : "mu"}, {"sup", g.sup}, {"idx", g.idx}};
}

inline void from_json(const json& j, DeltaGen& g) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "eta" && kind != "mu") throw parse_error(0, "unknown generator kind " + kind);
  g = {kind == "eta" ? GenKind::eta : GenKind::mu, j.at("sup").get<std::size_t>(), j.at("idx").get<std::size_t>()};
}

inline void to_json(json& j, const OneCellWord& w) { j = json{{"dom", w.dom}, {"cod", w.cod}, {"gens", w.gens}}; }

inline void from_json(const json& j, OneCellWord& w) {
  w = {j.at("dom").get<ordinal>(), j.at("cod").get<ordinal>(), j.at("gens").get<std::vector<DeltaGen>>()};
}

inline void to_json(json& j, const GenTwoCell& g) {
  j = json{{"kind", kind_name(g.kind)}, {"shift_n", g.shift_n}, {"shift_i", g.shift_i}};
}

inline void from_json(const json& j, GenTwoCell& g) {
  const auto name = j.at("kind").get<std::string>();
  auto kind = kind_from_name(name);
  if (!kind) throw parse_error(0, "unknown cell kind " + name);
  g = {*kind, j.at("shift_n").get<std::size_t>(), j.at("shift_i").get<std::size_t>()};
}

inline void to_json(json& j, const BasicTwoCell& b) { j = json{{"pre", b.pre}, {"gen", b.gen}, {"post", b.post}}; }

inline void from_json(const json& j, BasicTwoCell& b) {
  b = {j.at("pre").get<OneCellWord>(), j.at("gen").get<GenTwoCell>(), j.at("post").get<OneCellWord>()};
}

inline void to_json(json& j, const TwoCellTerm& t) { j = json{{"dom", t.dom}, {"cod", t.cod}, {"basics", t.basics}}; }

inline void from_json(const json& j, TwoCellTerm& t) {
  t = {j.at("dom").get<OneCellWord>(), j.at("cod").get<OneCellWord>(), j.at("basics").get<std::vector<BasicTwoCell>>()};
}

inline void to_json(json& j, const FinPoset& p) { j = json{{"n", p.size()}, {"leq", p.relation()}}; }

inline void from_json(const json& j, FinPoset& p) {
  auto leq = j.at("leq").get<std::vector<std::vector<bool>>>();
  if (leq.size() != j.at("n").get<std::size_t>()) throw parse_error(0, "poset n does not match the order matrix");
  p = FinPoset(std::move(leq));
}

inline void to_json(json& j, const PosetMap& f) { j = json{{"dom", f.dom()}, {"cod", f.cod()}, {"values", f.values()}}; }

inline void to_json(json& j, const AdjString& s) {
  j = json{{"source", std::string(1, side_name(s.source))}, {"letters", s.letters}};
}

inline void to_json(json& j, const Adj2Gen& g) {
  j = json{{"kind", g.kind == Adj2Kind::unit ? "eta" : "eps"}, {"pos", g.pos}};
}

inline void to_json(json& j, const Adj2Word& w) { j = json{{"dom", w.dom}, {"cod", w.cod}, {"gens", w.gens}}; }

inline void to_json(json& j, const Adj3Gen& g) {
  j = json{{"text", to_string(g)}, {"on", g.on}, {"offset", g.offset}};
  if (g.zeta) j["zeta"] = *g.zeta;
}

inline void to_json(json& j, const Adj3Basic& b) { j = json{{"pre", b.pre}, {"gen", b.gen}, {"post", b.post}}; }

inline void to_json(json& j, const Adj3Term& t) {
  j = json{{"text", to_string(t)}, {"dom", t.dom}, {"cod", t.cod}, {"basics", t.basics}};
}

}  // namespace simplex
