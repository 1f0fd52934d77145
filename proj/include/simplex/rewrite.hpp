#pragma once

// Bounded equality of cell terms: bidirectional breadth-first search over
// strict interchange and the five coherence axioms used in both directions
// under arbitrary whiskering. Sound, never complete: a failed search is
// reported as unknown, not as inequality.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "simplex/error.hpp"
#include "simplex/lg_coherence.hpp"
#include "simplex/lg_terms.hpp"

namespace simplex {

struct Move {
  std::string description;
  TwoCellTerm result;
};

namespace detail {

inline std::size_t segment_end(const OneCellWord& pre, const OneCellWord& seg) { return pre.size() + seg.size(); }

/// Both ways of commuting basics j and j+1 when they touch disjoint
/// segments of the word between them.
inline void interchange_moves(const TwoCellTerm& t, std::size_t j, std::vector<Move>& out) {
  const BasicTwoCell& b1 = t.basics[j];
  const BasicTwoCell& b2 = t.basics[j + 1];
  const Boundary g1 = gen_boundary(b1.gen);
  const Boundary g2 = gen_boundary(b2.gen);
  const OneCellWord middle = concat(concat(b1.pre, g1.cod), b1.post);

  const std::size_t s1 = b1.pre.size();
  const std::size_t e1 = segment_end(b1.pre, g1.cod);
  const std::size_t s2 = b2.pre.size();
  const std::size_t e2 = segment_end(b2.pre, g2.dom);

  auto emit = [&](BasicTwoCell first, BasicTwoCell second) {
    TwoCellTerm r = t;
    r.basics[j] = std::move(first);
    r.basics[j + 1] = std::move(second);
    for (const auto& m : out) {
      if (m.result == r) return;
    }
    out.push_back({"interchange at " + std::to_string(j), std::move(r)});
  };

  if (e1 <= s2) {
    // middle = X ++ g1.cod ++ Y ++ g2.dom ++ Z
    const OneCellWord y = subword(middle, e1, s2);
    emit(BasicTwoCell{concat(concat(b1.pre, g1.dom), y), b2.gen, b2.post},
         BasicTwoCell{b1.pre, b1.gen, concat(concat(y, g2.cod), b2.post)});
  }
  if (e2 <= s1) {
    // middle = X ++ g2.dom ++ Y ++ g1.cod ++ Z
    const OneCellWord y = subword(middle, e2, s1);
    emit(BasicTwoCell{b2.pre, b2.gen, concat(concat(y, g1.dom), b1.post)},
         BasicTwoCell{concat(concat(b2.pre, g2.cod), y), b1.gen, b1.post});
  }
}

inline bool ends_with(const OneCellWord& w, const OneCellWord& suffix) {
  if (suffix.size() > w.size()) return false;
  return std::equal(suffix.gens.begin(), suffix.gens.end(), w.gens.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

inline bool starts_with(const OneCellWord& w, const OneCellWord& prefix) {
  if (prefix.size() > w.size()) return false;
  return std::equal(prefix.gens.begin(), prefix.gens.end(), w.gens.begin());
}

class AxiomTable {
 public:
  static const AxiomTable& get() {
    static const AxiomTable table;
    return table;
  }

  const AxiomInstance& base(AxiomName name) const { return base_[static_cast<std::size_t>(name)]; }

 private:
  AxiomTable() {
    for (auto name : all_axioms) base_.push_back(axiom_sides(name, 0, 0));
  }
  std::vector<AxiomInstance> base_;
};

/// Replaces an occurrence of `from` (a whiskered, tensored copy of it)
/// starting at basic j by the matching copy of `to`.
inline void substitute_nonempty(const TwoCellTerm& t, std::size_t j, const TwoCellTerm& from, const TwoCellTerm& to,
                                const std::string& label, std::vector<Move>& out) {
  const std::size_t len = from.basics.size();
  if (j + len > t.basics.size()) return;
  const BasicTwoCell& head = t.basics[j];
  const GenTwoCell& pattern = from.basics.front().gen;
  if (head.gen.kind != pattern.kind || head.gen.shift_n < pattern.shift_n || head.gen.shift_i < pattern.shift_i) return;
  const std::size_t n = head.gen.shift_n - pattern.shift_n;
  const std::size_t i = head.gen.shift_i - pattern.shift_i;
  if (i > n) return;

  const TwoCellTerm src = tensor_shift(from, i, n - i);
  const BasicTwoCell& s0 = src.basics.front();
  if (!ends_with(head.pre, s0.pre) || !starts_with(head.post, s0.post)) return;
  const OneCellWord pre = subword(head.pre, 0, head.pre.size() - s0.pre.size());
  const OneCellWord post = subword(head.post, s0.post.size(), head.post.size());
  if (pre.cod != src.dom.dom || src.dom.cod != post.dom) return;

  const TwoCellTerm placed = whisker_compose(src, pre, post);
  for (std::size_t k = 0; k < len; ++k) {
    if (placed.basics[k] != t.basics[j + k]) return;
  }
  const TwoCellTerm repl = whisker_compose(tensor_shift(to, i, n - i), pre, post);
  TwoCellTerm r{t.dom, t.cod, {}};
  r.basics.reserve(t.basics.size() - len + repl.basics.size());
  r.basics.insert(r.basics.end(), t.basics.begin(), t.basics.begin() + static_cast<std::ptrdiff_t>(j));
  r.basics.insert(r.basics.end(), repl.basics.begin(), repl.basics.end());
  r.basics.insert(r.basics.end(), t.basics.begin() + static_cast<std::ptrdiff_t>(j + len), t.basics.end());
  out.push_back({label + " at " + std::to_string(j), std::move(r)});
}

/// Inserts a copy of `to` wherever the single-generator domain of the
/// identity side `from` occurs in the word before basic j.
inline void substitute_identity(const TwoCellTerm& t, std::size_t j, const TwoCellTerm& from, const TwoCellTerm& to,
                                const std::string& label, std::vector<Move>& out) {
  const DeltaGen pattern = from.dom.gens.front();
  const OneCellWord& word = j == 0 ? t.dom : basic_boundary(t.basics[j - 1]).cod;
  for (std::size_t r = 0; r < word.size(); ++r) {
    const DeltaGen& g = word.gens[r];
    if (g.kind != pattern.kind || g.sup < pattern.sup || g.idx < pattern.idx) continue;
    const std::size_t n = g.sup - pattern.sup;
    const std::size_t i = g.idx - pattern.idx;
    if (i > n) continue;
    const TwoCellTerm repl =
        whisker_compose(tensor_shift(to, i, n - i), subword(word, 0, r), subword(word, r + 1, word.size()));
    TwoCellTerm res{t.dom, t.cod, {}};
    res.basics.insert(res.basics.end(), t.basics.begin(), t.basics.begin() + static_cast<std::ptrdiff_t>(j));
    res.basics.insert(res.basics.end(), repl.basics.begin(), repl.basics.end());
    res.basics.insert(res.basics.end(), t.basics.begin() + static_cast<std::ptrdiff_t>(j), t.basics.end());
    out.push_back({label + " at " + std::to_string(j) + ":" + std::to_string(r), std::move(res)});
  }
}

}  // namespace detail

/// Every term one move away from t, in the fixed exploration order:
/// interchanges left to right, then axiom substitutions left to right.
inline std::vector<Move> rewrite_moves(const TwoCellTerm& t) {
  std::vector<Move> out;
  for (std::size_t j = 0; j + 1 < t.basics.size(); ++j) detail::interchange_moves(t, j, out);

  const auto& table = detail::AxiomTable::get();
  for (std::size_t j = 0; j <= t.basics.size(); ++j) {
    for (auto name : all_axioms) {
      const AxiomInstance& ax = table.base(name);
      const std::string n(axiom_name(name));
      for (int dir = 0; dir < 2; ++dir) {
        const TwoCellTerm& from = dir == 0 ? ax.lhs : ax.rhs;
        const TwoCellTerm& to = dir == 0 ? ax.rhs : ax.lhs;
        const std::string label = n + (dir == 0 ? " forward" : " backward");
        if (from.is_identity()) {
          detail::substitute_identity(t, j, from, to, label, out);
        } else if (j < t.basics.size()) {
          detail::substitute_nonempty(t, j, from, to, label, out);
        }
      }
    }
  }
  return out;
}

enum class Verdict : std::uint8_t { equal, unknown };

struct SearchOptions {
  std::size_t depth = 4;
  std::size_t node_budget = 100'000;
};

struct ProofStep {
  std::string move;  // empty for the starting term
  TwoCellTerm term;
};

struct EqualityResult {
  Verdict verdict = Verdict::unknown;
  std::string reason;              // proved | depth-exhausted | search-exhausted | boundary-mismatch | invalid-term
  std::size_t depth = 0;           // proof length when equal
  std::size_t nodes = 0;           // distinct terms visited
  std::optional<std::string> witness;
  std::vector<ProofStep> proof;    // t1 to t2 when equal
};

namespace detail {

struct SearchNode {
  TwoCellTerm term;
  std::string parent;  // key of the parent; empty at the root
  std::string move;
  std::size_t depth = 0;
};

using Visited = std::unordered_map<std::string, SearchNode>;

inline std::vector<ProofStep> trace_to_root(const Visited& seen, std::string key) {
  std::vector<ProofStep> steps;
  while (true) {
    const SearchNode& node = seen.at(key);
    steps.push_back({node.move, node.term});
    if (node.parent.empty()) break;
    key = node.parent;
  }
  return steps;
}

}  // namespace detail

/// Decides t1 = t2 up to `depth` moves, or answers unknown. Throws
/// resource_limit_error when more than node_budget distinct terms are visited.
inline EqualityResult bounded_equal(const TwoCellTerm& t1, const TwoCellTerm& t2, const SearchOptions& opts = {}) {
  EqualityResult res;
  if (auto d = validate_term(t1)) {
    res.reason = "invalid-term";
    res.witness = "first term: " + *d;
    return res;
  }
  if (auto d = validate_term(t2)) {
    res.reason = "invalid-term";
    res.witness = "second term: " + *d;
    return res;
  }
  if (t1.dom != t2.dom) {
    res.reason = "boundary-mismatch";
    res.witness = "domains differ: " + to_string(t1.dom) + " vs " + to_string(t2.dom);
    return res;
  }
  if (t1.cod != t2.cod) {
    res.reason = "boundary-mismatch";
    res.witness = "codomains differ: " + to_string(t1.cod) + " vs " + to_string(t2.cod);
    return res;
  }

  const std::string k1 = to_string(t1);
  const std::string k2 = to_string(t2);
  res.nodes = 1;
  if (k1 == k2) {
    res.verdict = Verdict::equal;
    res.reason = "proved";
    res.proof.push_back({"", t1});
    return res;
  }

  std::array<detail::Visited, 2> seen;
  std::array<std::vector<std::string>, 2> frontier;
  std::array<std::size_t, 2> level{0, 0};
  seen[0].emplace(k1, detail::SearchNode{t1, "", "", 0});
  seen[1].emplace(k2, detail::SearchNode{t2, "", "", 0});
  frontier[0].push_back(k1);
  frontier[1].push_back(k2);
  res.nodes = 2;

  auto finish = [&](const std::string& meet) {
    auto left = detail::trace_to_root(seen[0], meet);
    auto right = detail::trace_to_root(seen[1], meet);
    std::vector<ProofStep> proof(left.rbegin(), left.rend());
    // Walk the second tree back to t2; each edge is traversed in reverse.
    for (std::size_t k = 0; k + 1 < right.size(); ++k) {
      proof.push_back({"inverse of " + right[k].move, right[k + 1].term});
    }
    res.verdict = Verdict::equal;
    res.reason = "proved";
    res.depth = proof.size() - 1;
    res.proof = std::move(proof);
  };

  while (level[0] + level[1] < opts.depth) {
    const std::size_t side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (frontier[side].empty()) {
      res.reason = "search-exhausted";
      return res;
    }
    std::vector<std::string> next;
    for (const auto& key : frontier[side]) {
      const TwoCellTerm current = seen[side].at(key).term;
      for (auto& mv : rewrite_moves(current)) {
        std::string nk = to_string(mv.result);
        if (seen[side].count(nk) != 0) continue;
        seen[side].emplace(nk, detail::SearchNode{std::move(mv.result), key, std::move(mv.description),
                                                  level[side] + 1});
        ++res.nodes;
        if (seen[1 - side].count(nk) != 0) {
          finish(nk);
          return res;
        }
        if (res.nodes > opts.node_budget) {
          throw resource_limit_error("equality search visited more than " + std::to_string(opts.node_budget) +
                                     " terms");
        }
        next.push_back(std::move(nk));
      }
    }
    frontier[side] = std::move(next);
    ++level[side];
  }
  res.reason = "depth-exhausted";
  return res;
}

}  // namespace simplex
