#pragma once

// Shared generators for unit and acceptance tests.

#include <algorithm>
#include <array>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "simplex/lg_terms.hpp"

namespace simplex::testing {

/// A random valid word of the given length starting at `start`.
inline OneCellWord random_word(std::mt19937& rng, ordinal start, std::size_t length, ordinal max_object = 5) {
  std::vector<DeltaGen> gens;
  ordinal at = start;
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<DeltaGen> options;
    if (at + 1 <= max_object) {
      for (std::size_t i = 0; i <= at; ++i) options.push_back(eta(at, i));
    }
    if (at >= 2) {
      for (std::size_t i = 0; i + 1 < at; ++i) options.push_back(mu(at - 1, i));
    }
    if (options.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    gens.push_back(options[pick(rng)]);
    at = gens.back().cod();
  }
  return make_word(start, std::move(gens));
}

/// A random walk of `length` basic cells out of `dom`.
inline TwoCellTerm random_term(std::mt19937& rng, const OneCellWord& dom, std::size_t length) {
  TwoCellTerm t = identity_term(dom);
  for (std::size_t k = 0; k < length; ++k) {
    auto options = applicable_basics(t.cod);
    if (options.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    t = vcompose(single(options[pick(rng)]), t);
  }
  return t;
}

/// A reproducible mix of identity terms and random walks, with contexts on
/// both sides of most cells.
inline std::vector<TwoCellTerm> term_corpus(std::size_t count, unsigned seed = 2024) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> start(0, 4), len(0, 4), tlen(0, 4);
  std::vector<TwoCellTerm> out;
  while (out.size() < count) {
    auto dom = random_word(rng, start(rng), len(rng));
    out.push_back(random_term(rng, dom, tlen(rng)));
  }
  return out;
}

/// Applies the generators of `blocks` in the order `order`, each to its own
/// segment of the concatenated domain words.
inline TwoCellTerm block_term(const std::vector<GenTwoCell>& blocks, const std::vector<std::size_t>& order) {
  std::vector<OneCellWord> state;
  for (const auto& g : blocks) state.push_back(gen_boundary(g).dom);
  auto joined = [&](std::size_t from, std::size_t to, ordinal at) {
    OneCellWord w = identity_word(at);
    for (std::size_t k = from; k < to; ++k) w = concat(w, state[k]);
    return w;
  };
  const ordinal start = state.front().dom;
  TwoCellTerm t = identity_term(joined(0, state.size(), start));
  for (std::size_t k : order) {
    OneCellWord pre = joined(0, k, start);
    OneCellWord post = joined(k + 1, state.size(), state[k].cod);
    t = vcompose(single(BasicTwoCell{pre, blocks[k], post}), t);
    state[k] = gen_boundary(blocks[k]).cod;
  }
  return t;
}

/// Ten pairs of terms that differ only by reordering cells acting on
/// disjoint segments, at most four adjacent transpositions apart.
inline std::vector<std::pair<TwoCellTerm, TwoCellTerm>> interchange_fixtures() {
  using K = TwoCellKind;
  // a: T^5 -> T^3, then four cells living at T^3 (q has an empty domain).
  const std::vector<GenTwoCell> blocks{{K::a, 2, 0}, {K::mueta, 1, 0}, {K::p, 2, 1}, {K::etamu, 1, 1}, {K::q, 2, 0}};
  const std::vector<std::size_t> base{0, 1, 2, 3, 4};
  const std::vector<std::vector<std::size_t>> perms{
      {1, 0, 2, 3, 4}, {0, 1, 2, 4, 3}, {1, 0, 3, 2, 4}, {2, 0, 1, 3, 4}, {0, 3, 1, 2, 4},
      {3, 0, 1, 2, 4}, {0, 1, 4, 3, 2}, {2, 1, 0, 3, 4}, {4, 0, 1, 2, 3}, {3, 1, 0, 2, 4}};
  std::vector<std::pair<TwoCellTerm, TwoCellTerm>> out;
  for (const auto& p : perms) out.emplace_back(block_term(blocks, base), block_term(blocks, p));
  return out;
}

}  // namespace simplex::testing
