#pragma once

// Concrete monads to interpret the free calculus in: the lift monad on finite
// posets, and the simplicial category acting on itself.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "simplex/delta.hpp"
#include "simplex/error.hpp"
#include "simplex/lg_coherence.hpp"
#include "simplex/lg_terms.hpp"
#include "simplex/monad.hpp"

namespace simplex {

inline constexpr std::size_t default_max_poset_size = 6;

/// A finite poset on {0, ..., n-1}, stored as its order matrix.
class FinPoset {
 public:
  FinPoset() = default;

  explicit FinPoset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
    const std::size_t n = leq_.size();
    for (std::size_t a = 0; a < n; ++a) {
      if (leq_[a].size() != n) throw model_error("order matrix is not square");
      if (!leq_[a][a]) throw model_error("order is not reflexive at " + std::to_string(a));
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && leq_[a][b] && leq_[b][a]) {
          throw model_error("order is not antisymmetric at " + std::to_string(a) + ", " + std::to_string(b));
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (leq_[a][b] && leq_[b][c] && !leq_[a][c]) {
            throw model_error("order is not transitive at " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                              std::to_string(c));
          }
        }
      }
    }
  }

  static FinPoset discrete(std::size_t n) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < n; ++k) m[k][k] = true;
    return FinPoset(std::move(m));
  }

  static FinPoset chain(std::size_t n) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) m[a][b] = true;
    return FinPoset(std::move(m));
  }

  std::size_t size() const noexcept { return leq_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_.at(a).at(b); }
  const std::vector<std::vector<bool>>& relation() const noexcept { return leq_; }

  std::optional<std::size_t> bottom() const {
    for (std::size_t b = 0; b < size(); ++b) {
      bool below_all = true;
      for (std::size_t k = 0; k < size(); ++k) below_all = below_all && leq_[b][k];
      if (below_all) return b;
    }
    return std::nullopt;
  }

  friend bool operator==(const FinPoset&, const FinPoset&) = default;

 private:
  std::vector<std::vector<bool>> leq_;
};

/// Every poset structure on {0, ..., n-1}.
inline std::vector<FinPoset> all_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::size_t total = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) total *= 3;
  std::vector<FinPoset> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < n; ++k) m[k][k] = true;
    std::size_t c = code;
    for (const auto& [a, b] : pairs) {
      if (c % 3 == 1) m[a][b] = true;
      if (c % 3 == 2) m[b][a] = true;
      c /= 3;
    }
    try {
      out.emplace_back(std::move(m));
    } catch (const model_error&) {
    }
  }
  return out;
}

/// A monotone map between finite posets.
class PosetMap {
 public:
  PosetMap(FinPoset dom, FinPoset cod, std::vector<std::size_t> values)
      : dom_(std::move(dom)), cod_(std::move(cod)), values_(std::move(values)) {
    if (values_.size() != dom_.size()) throw model_error("map has the wrong number of values");
    for (std::size_t v : values_) {
      if (v >= cod_.size()) throw model_error("map value " + std::to_string(v) + " is outside the codomain");
    }
    for (std::size_t a = 0; a < dom_.size(); ++a)
      for (std::size_t b = 0; b < dom_.size(); ++b)
        if (dom_.leq(a, b) && !cod_.leq(values_[a], values_[b])) throw model_error("map is not monotone");
  }

  const FinPoset& dom() const noexcept { return dom_; }
  const FinPoset& cod() const noexcept { return cod_; }
  const std::vector<std::size_t>& values() const noexcept { return values_; }
  std::size_t operator()(std::size_t k) const { return values_.at(k); }

  friend bool operator==(const PosetMap&, const PosetMap&) = default;

 private:
  FinPoset dom_;
  FinPoset cod_;
  std::vector<std::size_t> values_;
};

inline PosetMap identity_poset_map(const FinPoset& p) {
  std::vector<std::size_t> v(p.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = k;
  return {p, p, std::move(v)};
}

/// g after f.
inline PosetMap compose_poset_maps(const PosetMap& g, const PosetMap& f) {
  if (f.cod() != g.dom()) throw boundary_error("poset maps are not composable");
  std::vector<std::size_t> v(f.dom().size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = g(f(k));
  return {f.dom(), g.cod(), std::move(v)};
}

/// Every monotone map p -> q, in lexicographic order of value vectors.
inline std::vector<PosetMap> all_poset_maps(const FinPoset& p, const FinPoset& q) {
  std::vector<PosetMap> out;
  std::vector<std::size_t> v(p.size(), 0);
  auto extend = [&](auto& self, std::size_t k) -> void {
    if (k == p.size()) {
      out.emplace_back(p, q, v);
      return;
    }
    for (std::size_t x = 0; x < q.size(); ++x) {
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        if (p.leq(j, k) && !q.leq(v[j], x)) ok = false;
        if (p.leq(k, j) && !q.leq(x, v[j])) ok = false;
      }
      if (!ok) continue;
      v[k] = x;
      self(self, k + 1);
    }
  };
  extend(extend, 0);
  return out;
}

// Lift monad: T adjoins a new bottom at index 0 and shifts the rest up by one.

inline FinPoset lift(const FinPoset& p) {
  const std::size_t n = p.size() + 1;
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t b = 0; b < n; ++b) m[0][b] = true;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) m[a + 1][b + 1] = p.leq(a, b);
  return FinPoset(std::move(m));
}

inline PosetMap lift_map(const PosetMap& g) {
  std::vector<std::size_t> v{0};
  for (std::size_t x : g.values()) v.push_back(x + 1);
  return {lift(g.dom()), lift(g.cod()), std::move(v)};
}

inline PosetMap lift_unit(const FinPoset& p) {
  std::vector<std::size_t> v(p.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = k + 1;
  return {p, lift(p), std::move(v)};
}

inline PosetMap lift_mult(const FinPoset& p) {
  const FinPoset tp = lift(p);
  std::vector<std::size_t> v{0, 0};
  for (std::size_t k = 0; k < p.size(); ++k) v.push_back(k + 1);
  return {lift(tp), tp, std::move(v)};
}

struct LiftMonadData {
  FinPoset t;
  PosetMap unit;
  PosetMap mult;
};

inline LiftMonadData lift_monad_data(const FinPoset& p) { return {lift(p), lift_unit(p), lift_mult(p)}; }

/// The lift monad as a model. With `corrupt_mult` set, mu collapses
/// everything to the new bottom, which is monotone but unlawful.
struct LiftPosetModel {
  using object_type = FinPoset;
  using cell_type = PosetMap;

  bool corrupt_mult = false;

  FinPoset t_object(const FinPoset& p) const { return lift(p); }
  PosetMap t_cell(const PosetMap& g) const { return lift_map(g); }
  PosetMap unit(const FinPoset& p) const { return lift_unit(p); }
  PosetMap mult(const FinPoset& p) const {
    if (!corrupt_mult) return lift_mult(p);
    const FinPoset tp = lift(p);
    return {lift(tp), tp, std::vector<std::size_t>(tp.size() + 1, 0)};
  }
  PosetMap identity(const FinPoset& p) const { return identity_poset_map(p); }
  PosetMap compose(const PosetMap& second, const PosetMap& first) const { return compose_poset_maps(second, first); }
  FinPoset source(const PosetMap& g) const { return g.dom(); }
  FinPoset target(const PosetMap& g) const { return g.cod(); }
  bool equal(const PosetMap& a, const PosetMap& b) const { return a == b; }
  bool equal(const FinPoset& a, const FinPoset& b) const { return a == b; }
};

/// The simplicial category acting on itself: T = 1 + -, eta = delta_0,
/// mu = sigma_0 + id. At base 0 every word denotes its own map.
struct DeltaSelfModel {
  using object_type = ordinal;
  using cell_type = MonotoneMap;

  bool corrupt_mult = false;

  ordinal t_object(ordinal n) const { return n + 1; }
  MonotoneMap t_cell(const MonotoneMap& g) const { return tensor_maps(identity_map(1), g); }
  MonotoneMap unit(ordinal n) const { return tensor_maps(gen_to_map(eta(0, 0)), identity_map(n)); }
  MonotoneMap mult(ordinal n) const {
    if (corrupt_mult) return MonotoneMap(n + 1, std::vector<std::size_t>(n + 2, 0));
    return tensor_maps(gen_to_map(mu(1, 0)), identity_map(n));
  }
  MonotoneMap identity(ordinal n) const { return identity_map(n); }
  MonotoneMap compose(const MonotoneMap& second, const MonotoneMap& first) const { return compose_maps(second, first); }
  ordinal source(const MonotoneMap& g) const { return g.dom(); }
  ordinal target(const MonotoneMap& g) const { return g.cod(); }
  bool equal(const MonotoneMap& a, const MonotoneMap& b) const { return a == b; }
  bool equal(ordinal a, ordinal b) const { return a == b; }
};

static_assert(MonadModel<LiftPosetModel>);
static_assert(MonadModel<DeltaSelfModel>);

struct NamedCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

inline bool all_hold(const std::vector<NamedCheck>& checks) {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

/// Monad laws of any model at one component, plus naturality of eta and mu
/// against the supplied maps.
template <MonadModel M>
std::vector<NamedCheck> check_monad_laws(const M& m, const typename M::object_type& x,
                                         const std::vector<typename M::cell_type>& naturality_maps = {}) {
  std::vector<NamedCheck> out;
  auto add = [&](std::string name, auto&& compute) {
    try {
      const bool holds = compute();
      out.push_back({std::move(name), holds, ""});
    } catch (const error& e) {
      out.push_back({std::move(name), false, e.what()});
    }
  };
  const auto tx = m.t_object(x);
  add("associativity", [&] {
    return m.equal(checked_compose(m, m.mult(x), m.t_cell(m.mult(x))),
                   checked_compose(m, m.mult(x), m.mult(tx)));
  });
  add("left_unit", [&] { return m.equal(checked_compose(m, m.mult(x), m.unit(tx)), m.identity(tx)); });
  add("right_unit", [&] { return m.equal(checked_compose(m, m.mult(x), m.t_cell(m.unit(x))), m.identity(tx)); });
  if (!naturality_maps.empty()) {
    add("unit_naturality", [&] {
      for (const auto& g : naturality_maps) {
        auto lhs = checked_compose(m, m.t_cell(g), m.unit(m.source(g)));
        auto rhs = checked_compose(m, m.unit(m.target(g)), g);
        if (!m.equal(lhs, rhs)) return false;
      }
      return true;
    });
    add("mult_naturality", [&] {
      for (const auto& g : naturality_maps) {
        auto lhs = checked_compose(m, m.t_cell(g), m.mult(m.source(g)));
        auto rhs = checked_compose(m, m.mult(m.target(g)), m.t_cell(m.t_cell(g)));
        if (!m.equal(lhs, rhs)) return false;
      }
      return true;
    });
  }
  return out;
}

/// Lift-monad laws at p, with naturality against every monotone endomap.
inline std::vector<NamedCheck> check_lift_monad_laws(const FinPoset& p, bool corrupt_mult = false) {
  return check_monad_laws(LiftPosetModel{corrupt_mult}, p, all_poset_maps(p, p));
}

template <MonadModel M>
typename M::cell_type evaluate_word(const OneCellWord& w, const M& model, const typename M::object_type& base) {
  return interpret_word(w.dom, w.gens, model, base);
}

/// Evaluates a term in a strict model. Every generator must land on an
/// identity, so the result is the identity 2-cell on the returned 1-cell,
/// the common image of dom and cod.
template <MonadModel M>
typename M::cell_type evaluate_term(const TwoCellTerm& t, const M& model, const typename M::object_type& base) {
  if (auto diag = validate_term(t)) throw boundary_error("invalid term: " + *diag);
  for (std::size_t k = 0; k < t.basics.size(); ++k) {
    const auto b = basic_boundary(t.basics[k]);
    if (!model.equal(evaluate_word(b.dom, model, base), evaluate_word(b.cod, model, base))) {
      throw model_error("basic " + std::to_string(k) + " " + to_string(t.basics[k]) +
                        " does not evaluate to an identity");
    }
  }
  auto image = evaluate_word(t.dom, model, base);
  if (!model.equal(image, evaluate_word(t.cod, model, base))) throw model_error("term boundaries evaluate apart");
  return image;
}

/// Both sides of every axiom instance with shift_n <= max_n evaluate to the
/// same identity 2-cell.
template <MonadModel M>
std::vector<NamedCheck> check_axioms_in_model(const M& model, const typename M::object_type& base,
                                              std::size_t max_n = 1) {
  std::vector<NamedCheck> out;
  for (auto name : all_axioms) {
    NamedCheck c{std::string(axiom_name(name)), true, ""};
    for (std::size_t n = 0; n <= max_n && c.holds; ++n) {
      for (std::size_t i = 0; i <= n && c.holds; ++i) {
        const auto ax = axiom_sides(name, n, i);
        try {
          if (!model.equal(evaluate_term(ax.lhs, model, base), evaluate_term(ax.rhs, model, base))) {
            c = {c.name, false, "sides evaluate apart at shift {" + std::to_string(n) + "," + std::to_string(i) + "}"};
          }
        } catch (const error& e) {
          c = {c.name, false, "shift {" + std::to_string(n) + "," + std::to_string(i) + "}: " + e.what()};
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// A random composable word of length <= max_len from `start`, with all
/// objects at most max_object.
inline std::vector<DeltaGen> random_delta_word(std::mt19937& rng, ordinal start, std::size_t max_len,
                                               ordinal max_object) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  const std::size_t len = len_dist(rng);
  std::vector<DeltaGen> out;
  ordinal at = start;
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<DeltaGen> options;
    if (at < max_object)
      for (std::size_t i = 0; i <= at; ++i) options.push_back(eta(at, i));
    for (std::size_t i = 0; i + 1 < at; ++i) options.push_back(mu(at - 1, i));
    if (options.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    out.push_back(options[pick(rng)]);
    at = out.back().cod();
  }
  return out;
}

struct UniversalityReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Sampled evidence that interpretation is the functor determined by the
/// images of eta and mu: functoriality on composable pairs, agreement of two
/// interpreters, and equal images for words denoting the same map.
template <MonadModel M>
UniversalityReport check_universality_samples(const M& model, const typename M::object_type& base,
                                              std::size_t samples = 50, std::size_t max_len = 4,
                                              ordinal max_object = 4, unsigned seed = 5489U) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> start_dist(0, max_object);
  std::vector<WordPair> pairs;
  for (std::size_t k = 0; k < samples; ++k) {
    WordPair wp;
    wp.start = start_dist(rng);
    wp.first = random_delta_word(rng, wp.start, max_len, max_object);
    wp.second = random_delta_word(rng, wp.first.empty() ? wp.start : wp.first.back().cod(), max_len, max_object);
    pairs.push_back(std::move(wp));
  }

  UniversalityReport report;
  auto functoriality = check_functoriality(model, base, pairs);
  report.checked += functoriality.checked;
  report.failures = functoriality.failures;

  for (const auto& wp : pairs) {
    std::vector<DeltaGen> w = wp.first;
    w.insert(w.end(), wp.second.begin(), wp.second.end());
    const std::string text = word_text(w);
    report.checked += 2;
    try {
      if (!model.equal(interpret_word(wp.start, w, model, base), interpret_word_fold(wp.start, w, model, base))) {
        report.failures.push_back("direct and fold interpreters disagree on " + text);
      }
      const auto normal = factorize(eval_word(wp.start, w)).to_word();
      if (!model.equal(interpret_word(wp.start, w, model, base), interpret_word(wp.start, normal, model, base))) {
        report.failures.push_back("image of " + text + " differs from the image of its normal form " +
                                  word_text(normal));
      }
    } catch (const error& e) {
      report.failures.push_back("interpretation of " + text + " failed: " + e.what());
    }
  }
  return report;
}

}  // namespace simplex
