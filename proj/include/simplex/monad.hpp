#pragma once

// The one-object 2-category whose hom is the simplicial category, its monad
// (1, eta, mu), and interpretation of generator words into other monads.

#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "simplex/delta.hpp"
#include "simplex/error.hpp"

namespace simplex {

/// A monad (T, eta, mu) on an object of some 2-category, observed through its
/// components at a chosen base object. Cells are whatever the model uses for
/// 2-cell components; equality must be an equivalence relation.
template <class M>
concept MonadModel = requires(const M& m, const typename M::object_type& x, const typename M::cell_type& c) {
  { m.t_object(x) } -> std::same_as<typename M::object_type>;
  { m.t_cell(c) } -> std::same_as<typename M::cell_type>;
  { m.unit(x) } -> std::same_as<typename M::cell_type>;
  { m.mult(x) } -> std::same_as<typename M::cell_type>;
  { m.identity(x) } -> std::same_as<typename M::cell_type>;
  { m.compose(c, c) } -> std::same_as<typename M::cell_type>;
  { m.source(c) } -> std::same_as<typename M::object_type>;
  { m.target(c) } -> std::same_as<typename M::object_type>;
  { m.equal(c, c) } -> std::convertible_to<bool>;
  { m.equal(x, x) } -> std::convertible_to<bool>;
};

template <MonadModel M>
typename M::object_type t_power(const M& model, typename M::object_type x, std::size_t k) {
  for (std::size_t j = 0; j < k; ++j) x = model.t_object(x);
  return x;
}

/// Image of a single generator: eta{n,i} is T^i(eta at T^{n-i} base), and
/// mu{n,i} is T^i(mu at T^{n-i-1} base).
template <MonadModel M>
typename M::cell_type interpret_gen(const DeltaGen& g, const M& model, const typename M::object_type& base) {
  require_valid(g);
  auto cell = g.kind == GenKind::eta ? model.unit(t_power(model, base, g.sup - g.idx))
                                     : model.mult(t_power(model, base, g.sup - g.idx - 1));
  for (std::size_t j = 0; j < g.idx; ++j) cell = model.t_cell(cell);
  return cell;
}

template <MonadModel M>
typename M::cell_type checked_compose(const M& model, const typename M::cell_type& second,
                                      const typename M::cell_type& first) {
  if (!model.equal(model.target(first), model.source(second))) {
    throw model_error("model boundary mismatch while composing interpreted cells");
  }
  return model.compose(second, first);
}

/// Interprets an application-order word starting at T^start, left to right.
template <MonadModel M>
typename M::cell_type interpret_word(ordinal start, std::span<const DeltaGen> word, const M& model,
                                     const typename M::object_type& base) {
  auto acc = model.identity(t_power(model, base, start));
  for (const auto& g : word) acc = checked_compose(model, interpret_gen(g, model, base), acc);
  return acc;
}

/// Same functor computed by splitting the word in halves; agrees with
/// interpret_word on every word exactly when the images of generators alone
/// determine the interpretation.
template <MonadModel M>
typename M::cell_type interpret_word_fold(ordinal start, std::span<const DeltaGen> word, const M& model,
                                          const typename M::object_type& base) {
  if (word.empty()) return model.identity(t_power(model, base, start));
  if (word.size() == 1) {
    if (word[0].dom() != start) throw boundary_error("word does not start at the declared object");
    return interpret_gen(word[0], model, base);
  }
  std::size_t half = word.size() / 2;
  auto first = interpret_word_fold(start, word.first(half), model, base);
  auto second = interpret_word_fold(word[half].dom(), word.subspan(half), model, base);
  if (word[half - 1].cod() != word[half].dom()) throw boundary_error("word is not composable");
  return checked_compose(model, second, first);
}

struct LawCheck {
  std::string name;
  bool holds = false;
  MonotoneMap lhs;
  MonotoneMap rhs;
};

/// Associativity and both unit laws of (1, eta: 0 -> 1, mu: 2 -> 1) in Delta.
inline std::vector<LawCheck> verify_monad_laws_delta() {
  const MonotoneMap unit = gen_to_map(eta(0, 0));
  const MonotoneMap mult = gen_to_map(mu(1, 0));
  const MonotoneMap id1 = identity_map(1);

  std::vector<LawCheck> out;
  auto add = [&](std::string name, MonotoneMap lhs, MonotoneMap rhs) {
    bool holds = lhs == rhs;
    out.push_back({std::move(name), holds, std::move(lhs), std::move(rhs)});
  };
  add("associativity", compose_maps(mult, tensor_maps(id1, mult)), compose_maps(mult, tensor_maps(mult, id1)));
  add("left_unit", compose_maps(mult, tensor_maps(unit, id1)), id1);
  add("right_unit", compose_maps(mult, tensor_maps(id1, unit)), id1);
  return out;
}

/// A composable pair: u runs from `start`, v continues from u's end.
struct WordPair {
  ordinal start = 0;
  std::vector<DeltaGen> first;
  std::vector<DeltaGen> second;
};

struct FunctorialityReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

inline std::string word_text(std::span<const DeltaGen> w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " ; " : "") + to_string(w[k]);
  return s.empty() ? "<empty>" : s;
}

/// interpret(u ++ v) == interpret(v) o interpret(u) for every sampled pair.
template <MonadModel M>
FunctorialityReport check_functoriality(const M& model, const typename M::object_type& base,
                                        std::span<const WordPair> samples) {
  FunctorialityReport report;
  for (const auto& s : samples) {
    ++report.checked;
    std::vector<DeltaGen> joined = s.first;
    joined.insert(joined.end(), s.second.begin(), s.second.end());
    ordinal mid = s.first.empty() ? s.start : s.first.back().cod();
    try {
      auto whole = interpret_word(s.start, joined, model, base);
      auto split = checked_compose(model, interpret_word(mid, s.second, model, base),
                                   interpret_word(s.start, s.first, model, base));
      if (!model.equal(whole, split)) {
        report.failures.push_back("interpret(uv) != interpret(v)interpret(u) for u = " + word_text(s.first) +
                                  ", v = " + word_text(s.second));
      }
    } catch (const error& e) {
      report.failures.push_back(std::string("interpretation failed: ") + e.what());
    }
  }
  return report;
}

}  // namespace simplex
