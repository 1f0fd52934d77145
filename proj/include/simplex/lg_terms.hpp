#pragma once

// Free cell calculus of the universal lax-Gray 2-monad. Objects are T^n,
// 1-cells are literal words of eta/mu generators (no simplicial identities),
// and 2-cells are vertical strings of whiskered generator instances.
//
// Everything is in application order: the leftmost generator or basic cell is
// applied first.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simplex/delta.hpp"
#include "simplex/error.hpp"

namespace simplex {

// ---------------------------------------------------------------------------
// 1-cells

struct OneCellWord {
  ordinal dom = 0;
  ordinal cod = 0;
  std::vector<DeltaGen> gens;

  bool empty() const noexcept { return gens.empty(); }
  std::size_t size() const noexcept { return gens.size(); }

  /// Object between generator k-1 and generator k.
  ordinal object_at(std::size_t k) const { return k == 0 ? dom : gens.at(k - 1).cod(); }

  friend bool operator==(const OneCellWord&, const OneCellWord&) = default;
  friend auto operator<=>(const OneCellWord&, const OneCellWord&) = default;
};

inline OneCellWord identity_word(ordinal n) { return {n, n, {}}; }

inline std::string to_string(const OneCellWord& w) {
  if (w.gens.empty()) return "id{" + std::to_string(w.dom) + "}";
  std::string s;
  for (std::size_t k = 0; k < w.gens.size(); ++k) s += (k ? " ; " : "") + to_string(w.gens[k]);
  return s;
}

/// Names the first broken invariant of a word, if any.
inline std::optional<std::string> validate_word(const OneCellWord& w) {
  ordinal at = w.dom;
  for (std::size_t k = 0; k < w.gens.size(); ++k) {
    const auto& g = w.gens[k];
    if (!g.valid()) return "generator " + to_string(g) + " at position " + std::to_string(k) + " has an invalid index";
    if (g.dom() != at) {
      return "generator " + to_string(g) + " at position " + std::to_string(k) + " starts at T^" +
             std::to_string(g.dom()) + " but the word is at T^" + std::to_string(at);
    }
    at = g.cod();
  }
  if (at != w.cod) return "word ends at T^" + std::to_string(at) + " but declares codomain T^" + std::to_string(w.cod);
  return std::nullopt;
}

/// Builds a word from `start`, computing its codomain; throws on a bad chain.
inline OneCellWord make_word(ordinal start, std::vector<DeltaGen> gens) {
  OneCellWord w{start, start, std::move(gens)};
  if (!w.gens.empty()) w.cod = w.gens.back().cod();
  if (auto diag = validate_word(w)) throw boundary_error(*diag);
  return w;
}

/// Builds a word whose start is read off its first generator.
inline OneCellWord make_word(std::vector<DeltaGen> gens) {
  if (gens.empty()) throw boundary_error("an empty word needs an explicit object");
  ordinal start = gens.front().dom();
  return make_word(start, std::move(gens));
}

/// `first` followed by `second`.
inline OneCellWord concat(const OneCellWord& first, const OneCellWord& second) {
  if (first.cod != second.dom) {
    throw boundary_error("cannot concatenate " + to_string(first) + " with " + to_string(second));
  }
  OneCellWord w{first.dom, second.cod, first.gens};
  w.gens.insert(w.gens.end(), second.gens.begin(), second.gens.end());
  return w;
}

constexpr DeltaGen shift_gen(DeltaGen g, std::size_t n, std::size_t i) {
  g.sup += n;
  g.idx += i;
  return g;
}

/// T^i w T^{n-i}.
inline OneCellWord shift_word(const OneCellWord& w, std::size_t n, std::size_t i) {
  OneCellWord out{w.dom + n, w.cod + n, {}};
  out.gens.reserve(w.gens.size());
  for (const auto& g : w.gens) out.gens.push_back(shift_gen(g, n, i));
  return out;
}

/// w[from, to) as a word.
inline OneCellWord subword(const OneCellWord& w, std::size_t from, std::size_t to) {
  OneCellWord out{w.object_at(from), w.object_at(to), {}};
  out.gens.assign(w.gens.begin() + static_cast<std::ptrdiff_t>(from), w.gens.begin() + static_cast<std::ptrdiff_t>(to));
  return out;
}

// ---------------------------------------------------------------------------
// Generator 2-cells

enum class TwoCellKind : std::uint8_t { a, p, q, etaeta, etamu, mumu, mueta };

inline constexpr std::array<TwoCellKind, 7> all_two_cell_kinds{
    TwoCellKind::a,     TwoCellKind::p,    TwoCellKind::q,    TwoCellKind::etaeta,
    TwoCellKind::etamu, TwoCellKind::mumu, TwoCellKind::mueta};

inline constexpr std::array<TwoCellKind, 4> lax_kinds{TwoCellKind::etaeta, TwoCellKind::etamu, TwoCellKind::mumu,
                                                      TwoCellKind::mueta};

inline std::string_view kind_name(TwoCellKind k) {
  switch (k) {
    case TwoCellKind::a: return "a";
    case TwoCellKind::p: return "p";
    case TwoCellKind::q: return "q";
    case TwoCellKind::etaeta: return "etaeta";
    case TwoCellKind::etamu: return "etamu";
    case TwoCellKind::mumu: return "mumu";
    case TwoCellKind::mueta: return "mueta";
  }
  return "?";
}

inline std::optional<TwoCellKind> kind_from_name(std::string_view name) {
  for (auto k : all_two_cell_kinds) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

/// The instance T^i zeta T^{n-i} of a generator family, i = shift_i, n = shift_n.
struct GenTwoCell {
  TwoCellKind kind = TwoCellKind::a;
  std::size_t shift_n = 0;
  std::size_t shift_i = 0;

  bool valid() const noexcept { return shift_i <= shift_n; }

  friend bool operator==(const GenTwoCell&, const GenTwoCell&) = default;
  friend auto operator<=>(const GenTwoCell&, const GenTwoCell&) = default;
};

inline std::string to_string(const GenTwoCell& g) {
  return std::string(kind_name(g.kind)) + "{" + std::to_string(g.shift_n) + "," + std::to_string(g.shift_i) + "}";
}

/// Which of the four lax cells (etaeta, etamu, mumu, mueta) have their
/// direction reversed relative to the shipped table. All false is the
/// orientation the calculus uses; the others exist for the audit.
struct Orientation {
  std::array<bool, 4> flipped{};

  bool is_flipped(TwoCellKind k) const noexcept {
    for (std::size_t j = 0; j < lax_kinds.size(); ++j) {
      if (lax_kinds[j] == k) return flipped[j];
    }
    return false;
  }

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

inline constexpr Orientation shipped_orientation{};

struct Boundary {
  OneCellWord dom;
  OneCellWord cod;
  friend bool operator==(const Boundary&, const Boundary&) = default;
};

namespace detail {

inline Boundary base_boundary(TwoCellKind k) {
  switch (k) {
    case TwoCellKind::a:  // mu . T mu => mu . mu T
      return {{3, 1, {mu(2, 1), mu(1, 0)}}, {3, 1, {mu(2, 0), mu(1, 0)}}};
    case TwoCellKind::p:  // mu . T eta => 1_T
      return {{1, 1, {eta(1, 1), mu(1, 0)}}, identity_word(1)};
    case TwoCellKind::q:  // 1_T => mu . eta T
      return {identity_word(1), {1, 1, {eta(1, 0), mu(1, 0)}}};
    case TwoCellKind::etaeta:
      return {{0, 2, {eta(0, 0), eta(1, 0)}}, {0, 2, {eta(0, 0), eta(1, 1)}}};
    case TwoCellKind::etamu:
      return {{2, 2, {mu(1, 0), eta(1, 0)}}, {2, 2, {eta(2, 0), mu(2, 1)}}};
    case TwoCellKind::mumu:
      return {{4, 2, {mu(3, 2), mu(2, 0)}}, {4, 2, {mu(3, 0), mu(2, 1)}}};
    case TwoCellKind::mueta:
      return {{2, 2, {eta(2, 2), mu(2, 0)}}, {2, 2, {mu(1, 0), eta(1, 1)}}};
  }
  throw index_error("unknown generator kind");
}

}  // namespace detail

inline void require_valid(const GenTwoCell& g) {
  if (!g.valid()) {
    throw index_error("generator " + to_string(g) + " needs shift_i <= shift_n");
  }
}

/// Domain and codomain words of a generator instance, in application order.
inline Boundary gen_boundary(const GenTwoCell& g, const Orientation& o = shipped_orientation) {
  require_valid(g);
  Boundary b = detail::base_boundary(g.kind);
  if (o.is_flipped(g.kind)) std::swap(b.dom, b.cod);
  return {shift_word(b.dom, g.shift_n, g.shift_i), shift_word(b.cod, g.shift_n, g.shift_i)};
}

/// T^left g T^right.
constexpr GenTwoCell whisker_tensor(GenTwoCell g, std::size_t left, std::size_t right) {
  g.shift_n += left + right;
  g.shift_i += left;
  return g;
}

// ---------------------------------------------------------------------------
// Basic 2-cells and terms

/// A generator instance whiskered by 1-cells: pre is applied before the
/// generator's domain, post after its codomain.
struct BasicTwoCell {
  OneCellWord pre;
  GenTwoCell gen;
  OneCellWord post;

  friend bool operator==(const BasicTwoCell&, const BasicTwoCell&) = default;
  friend auto operator<=>(const BasicTwoCell&, const BasicTwoCell&) = default;
};

inline std::string to_string(const BasicTwoCell& b) {
  std::string s = "[";
  s += b.pre.empty() ? " " : " " + to_string(b.pre) + " ";
  s += "| " + to_string(b.gen) + " |";
  s += b.post.empty() ? " " : " " + to_string(b.post) + " ";
  return s + "]";
}

/// Context words are taken at the generator's own boundary objects.
inline BasicTwoCell bare_basic(const GenTwoCell& g, const Orientation& o = shipped_orientation) {
  auto b = gen_boundary(g, o);
  return {identity_word(b.dom.dom), g, identity_word(b.dom.cod)};
}

inline Boundary basic_boundary(const BasicTwoCell& b, const Orientation& o = shipped_orientation) {
  auto g = gen_boundary(b.gen, o);
  return {concat(concat(b.pre, g.dom), b.post), concat(concat(b.pre, g.cod), b.post)};
}

struct TwoCellTerm {
  OneCellWord dom;
  OneCellWord cod;
  std::vector<BasicTwoCell> basics;

  bool is_identity() const noexcept { return basics.empty(); }

  friend bool operator==(const TwoCellTerm&, const TwoCellTerm&) = default;
  friend auto operator<=>(const TwoCellTerm&, const TwoCellTerm&) = default;
};

inline std::string to_string(const TwoCellTerm& t) {
  if (t.basics.empty()) return to_string(t.dom);
  std::string s;
  for (std::size_t k = 0; k < t.basics.size(); ++k) s += (k ? " * " : "") + to_string(t.basics[k]);
  return s;
}

inline TwoCellTerm identity_term(const OneCellWord& w) { return {w, w, {}}; }

inline TwoCellTerm single(const BasicTwoCell& b, const Orientation& o = shipped_orientation) {
  auto bd = basic_boundary(b, o);
  return {std::move(bd.dom), std::move(bd.cod), {b}};
}

inline TwoCellTerm single(const GenTwoCell& g, const Orientation& o = shipped_orientation) {
  return single(bare_basic(g, o), o);
}

/// t2 after t1; the middle words must be literally equal.
inline TwoCellTerm vcompose(const TwoCellTerm& t2, const TwoCellTerm& t1) {
  if (t1.cod != t2.dom) {
    throw boundary_error("cannot compose: " + to_string(t1.cod) + " is not " + to_string(t2.dom));
  }
  TwoCellTerm out{t1.dom, t2.cod, t1.basics};
  out.basics.insert(out.basics.end(), t2.basics.begin(), t2.basics.end());
  return out;
}

/// Precomposes every basic with `pre` and postcomposes with `post`.
inline TwoCellTerm whisker_compose(const TwoCellTerm& t, const OneCellWord& pre, const OneCellWord& post) {
  TwoCellTerm out{concat(concat(pre, t.dom), post), concat(concat(pre, t.cod), post), {}};
  out.basics.reserve(t.basics.size());
  for (const auto& b : t.basics) out.basics.push_back({concat(pre, b.pre), b.gen, concat(b.post, post)});
  return out;
}

/// T^left t T^right: shifts every generator and every context word.
inline TwoCellTerm tensor_shift(const TwoCellTerm& t, std::size_t left, std::size_t right) {
  const std::size_t n = left + right;
  TwoCellTerm out{shift_word(t.dom, n, left), shift_word(t.cod, n, left), {}};
  out.basics.reserve(t.basics.size());
  for (const auto& b : t.basics) {
    out.basics.push_back({shift_word(b.pre, n, left), whisker_tensor(b.gen, left, right), shift_word(b.post, n, left)});
  }
  return out;
}

/// Re-checks every invariant of a term; the diagnostic names the first violation.
inline std::optional<std::string> validate_term(const TwoCellTerm& t, const Orientation& o = shipped_orientation) {
  auto where = [&](std::size_t k) { return "basic " + std::to_string(k) + " " + to_string(t.basics[k]) + ": "; };
  for (std::size_t k = 0; k < t.basics.size(); ++k) {
    const auto& b = t.basics[k];
    if (auto d = validate_word(b.pre)) return where(k) + "pre context: " + *d;
    if (auto d = validate_word(b.post)) return where(k) + "post context: " + *d;
    if (!b.gen.valid()) return where(k) + "generator shift_i exceeds shift_n";
    auto g = gen_boundary(b.gen, o);
    if (b.pre.cod != g.dom.dom) {
      return where(k) + "pre context ends at T^" + std::to_string(b.pre.cod) + " but the generator starts at T^" +
             std::to_string(g.dom.dom);
    }
    if (g.dom.cod != b.post.dom) {
      return where(k) + "generator ends at T^" + std::to_string(g.dom.cod) + " but the post context starts at T^" +
             std::to_string(b.post.dom);
    }
  }
  if (auto d = validate_word(t.dom)) return "domain: " + *d;
  if (auto d = validate_word(t.cod)) return "codomain: " + *d;
  OneCellWord at = t.dom;
  for (std::size_t k = 0; k < t.basics.size(); ++k) {
    auto bd = basic_boundary(t.basics[k], o);
    if (bd.dom != at) {
      return where(k) + "domain " + to_string(bd.dom) + " does not match the preceding word " + to_string(at);
    }
    at = std::move(bd.cod);
  }
  if (at != t.cod) return "term ends at " + to_string(at) + " but declares codomain " + to_string(t.cod);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Matching generator instances inside words

/// The unique instance of `kind` whose domain occurs in w starting at
/// position r (for kinds with a nonempty domain).
inline std::optional<GenTwoCell> match_domain_at(const OneCellWord& w, std::size_t r, TwoCellKind kind,
                                                 const Orientation& o = shipped_orientation) {
  Boundary base = detail::base_boundary(kind);
  if (o.is_flipped(kind)) std::swap(base.dom, base.cod);
  const auto& pattern = base.dom.gens;
  if (pattern.empty() || r + pattern.size() > w.gens.size()) return std::nullopt;
  const DeltaGen& head = w.gens[r];
  if (head.kind != pattern[0].kind || head.sup < pattern[0].sup || head.idx < pattern[0].idx) return std::nullopt;
  const std::size_t n = head.sup - pattern[0].sup;
  const std::size_t i = head.idx - pattern[0].idx;
  if (i > n) return std::nullopt;
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    if (w.gens[r + k] != shift_gen(pattern[k], n, i)) return std::nullopt;
  }
  return GenTwoCell{kind, n, i};
}

/// Every basic 2-cell whose domain is exactly w, ordered by position, then
/// kind, then shift.
inline std::vector<BasicTwoCell> applicable_basics(const OneCellWord& w, const Orientation& o = shipped_orientation) {
  std::vector<BasicTwoCell> out;
  for (std::size_t r = 0; r <= w.gens.size(); ++r) {
    for (auto kind : all_two_cell_kinds) {
      Boundary base = detail::base_boundary(kind);
      if (o.is_flipped(kind)) std::swap(base.dom, base.cod);
      if (base.dom.gens.empty()) {
        // Empty-domain cells live at a fixed object and can be inserted at any gap.
        const ordinal here = w.object_at(r);
        if (here < base.dom.dom) continue;
        const std::size_t n = here - base.dom.dom;
        for (std::size_t i = 0; i <= n; ++i) {
          out.push_back({subword(w, 0, r), GenTwoCell{kind, n, i}, subword(w, r, w.gens.size())});
        }
      } else if (auto g = match_domain_at(w, r, kind, o)) {
        const std::size_t len = base.dom.gens.size();
        out.push_back({subword(w, 0, r), *g, subword(w, r + len, w.gens.size())});
      }
    }
  }
  return out;
}

/// All well-formed terms out of dom with at most max_len basics, breadth
/// first in applicable_basics order. Throws resource_limit_error past `limit`.
inline std::vector<TwoCellTerm> enumerate_terms(const OneCellWord& dom, std::size_t max_len,
                                                std::size_t limit = 1'000'000,
                                                const Orientation& o = shipped_orientation) {
  if (auto d = validate_word(dom)) throw boundary_error(*d);
  std::vector<TwoCellTerm> out{identity_term(dom)};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (const auto& b : applicable_basics(out[k].cod, o)) {
        if (out.size() >= limit) {
          throw resource_limit_error("term enumeration exceeded " + std::to_string(limit) + " terms");
        }
        TwoCellTerm t = out[k];
        t.cod = basic_boundary(b, o).cod;
        t.basics.push_back(b);
        out.push_back(std::move(t));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace simplex
