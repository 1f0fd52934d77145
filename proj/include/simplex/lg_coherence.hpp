#pragma once

// The five coherence axioms of a lax-Gray monad as pairs of cell terms,
// their boundary audit, and the projection onto the simplicial category.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simplex/delta.hpp"
#include "simplex/lg_terms.hpp"

namespace simplex {

enum class AxiomName : std::uint8_t { Ma, Meta, Mmu, Mq, Mp };

inline constexpr std::array<AxiomName, 5> all_axioms{AxiomName::Ma, AxiomName::Meta, AxiomName::Mmu, AxiomName::Mq,
                                                     AxiomName::Mp};

inline std::string_view axiom_name(AxiomName a) {
  switch (a) {
    case AxiomName::Ma: return "Ma";
    case AxiomName::Meta: return "Meta";
    case AxiomName::Mmu: return "Mmu";
    case AxiomName::Mq: return "Mq";
    case AxiomName::Mp: return "Mp";
  }
  return "?";
}

struct AxiomInstance {
  AxiomName name = AxiomName::Ma;
  std::size_t shift_n = 0;
  std::size_t shift_i = 0;
  TwoCellTerm lhs;
  TwoCellTerm rhs;
};

namespace detail {

/// One whiskered cell of an axiom side, as written in the axiom.
struct Step {
  OneCellWord pre;
  GenTwoCell gen;
  OneCellWord post;
};

inline OneCellWord w(std::initializer_list<DeltaGen> gens) { return make_word(std::vector<DeltaGen>(gens)); }

/// Chains the steps in application order; vcompose rejects any mismatch.
inline TwoCellTerm chain(const std::vector<Step>& steps, const Orientation& o) {
  TwoCellTerm acc = single(BasicTwoCell{steps.front().pre, steps.front().gen, steps.front().post}, o);
  for (std::size_t k = 1; k < steps.size(); ++k) {
    acc = vcompose(single(BasicTwoCell{steps[k].pre, steps[k].gen, steps[k].post}, o), acc);
  }
  return acc;
}

constexpr GenTwoCell g(TwoCellKind k, std::size_t n = 0, std::size_t i = 0) { return {k, n, i}; }

/// Base instance (no tensor shift). The written composites are read
/// rightmost cell first, so each step list starts with the rightmost cell.
inline AxiomInstance base_axiom(AxiomName name, const Orientation& o) {
  using K = TwoCellKind;
  const auto id = identity_word;
  AxiomInstance ax{name, 0, 0, {}, {}};
  switch (name) {
    case AxiomName::Ma:
      // a.muT^2 .. mu.mumu .. a.T^2mu  =  mu.aT .. a.TmuT .. mu.Ta
      ax.lhs = chain({{w({mu(3, 2)}), g(K::a), id(1)},
                      {id(4), g(K::mumu), w({mu(1, 0)})},
                      {w({mu(3, 0)}), g(K::a), id(1)}},
                     o);
      ax.rhs = chain({{id(4), g(K::a, 1, 1), w({mu(1, 0)})},
                      {w({mu(3, 1)}), g(K::a), id(1)},
                      {id(4), g(K::a, 1, 0), w({mu(1, 0)})}},
                     o);
      break;
    case AxiomName::Meta:
      // p.eta .. mu.etaeta .. q.eta  =  1_eta
      ax.lhs = chain({{w({eta(0, 0)}), g(K::q), id(1)},
                      {id(0), g(K::etaeta), w({mu(1, 0)})},
                      {w({eta(0, 0)}), g(K::p), id(1)}},
                     o);
      ax.rhs = identity_term(w({eta(0, 0)}));
      break;
    case AxiomName::Mmu:
      // 1_mu  =  mu.pT .. a.TetaT .. mu.Tq
      ax.lhs = identity_term(w({mu(1, 0)}));
      ax.rhs = chain({{id(2), g(K::q, 1, 1), w({mu(1, 0)})},
                      {w({eta(2, 1)}), g(K::a), id(1)},
                      {id(2), g(K::p, 1, 0), w({mu(1, 0)})}},
                     o);
      break;
    case AxiomName::Mq:
      // a.etaT^2 .. mu.etamu .. q.mu  =  mu.qT
      ax.lhs = chain({{w({mu(1, 0)}), g(K::q), id(1)},
                      {id(2), g(K::etamu), w({mu(1, 0)})},
                      {w({eta(2, 0)}), g(K::a), id(1)}},
                     o);
      ax.rhs = chain({{id(2), g(K::q, 1, 0), w({mu(1, 0)})}}, o);
      break;
    case AxiomName::Mp:
      // p.mu .. mu.mueta .. a.T^2eta  =  mu.Tp
      ax.lhs = chain({{w({eta(2, 2)}), g(K::a), id(1)},
                      {id(2), g(K::mueta), w({mu(1, 0)})},
                      {w({mu(1, 0)}), g(K::p), id(1)}},
                     o);
      ax.rhs = chain({{id(2), g(K::p, 1, 1), w({mu(1, 0)})}}, o);
      break;
  }
  if (ax.lhs.dom != ax.rhs.dom || ax.lhs.cod != ax.rhs.cod) {
    throw boundary_error("axiom " + std::string(axiom_name(name)) + " has sides with different boundaries");
  }
  return ax;
}

}  // namespace detail

/// The axiom tensored as T^i (axiom) T^{n-i}. Throws boundary_error if the
/// sides fail to chain, which only happens under a non-shipped orientation.
inline AxiomInstance axiom_sides(AxiomName name, std::size_t shift_n, std::size_t shift_i,
                                 const Orientation& o = shipped_orientation) {
  if (shift_i > shift_n) throw index_error("axiom shift needs shift_i <= shift_n");
  AxiomInstance base = detail::base_axiom(name, o);
  const std::size_t right = shift_n - shift_i;
  return {name, shift_n, shift_i, tensor_shift(base.lhs, shift_i, right), tensor_shift(base.rhs, shift_i, right)};
}

struct AxiomCheck {
  AxiomName name = AxiomName::Ma;
  std::size_t shift_n = 0;
  std::size_t shift_i = 0;
  bool ok = false;
  std::string message;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool ok() const noexcept {
    for (const auto& c : checks) {
      if (!c.ok) return false;
    }
    return true;
  }
};

/// Every axiom at every shift_n <= max_n and every valid shift_i.
inline AxiomReport check_axiom_boundaries(std::size_t max_n, const Orientation& o = shipped_orientation) {
  AxiomReport report;
  for (auto name : all_axioms) {
    for (std::size_t n = 0; n <= max_n; ++n) {
      for (std::size_t i = 0; i <= n; ++i) {
        AxiomCheck c{name, n, i, false, {}};
        try {
          auto ax = axiom_sides(name, n, i, o);
          auto dl = validate_term(ax.lhs, o);
          auto dr = validate_term(ax.rhs, o);
          if (dl) {
            c.message = "lhs: " + *dl;
          } else if (dr) {
            c.message = "rhs: " + *dr;
          } else if (ax.lhs.dom != ax.rhs.dom || ax.lhs.cod != ax.rhs.cod) {
            c.message = "sides have different boundaries";
          } else {
            c.ok = true;
          }
        } catch (const error& e) {
          c.message = e.what();
        }
        report.checks.push_back(std::move(c));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Projection onto the simplicial category

inline MonotoneMap project_to_delta(const OneCellWord& word) { return eval_word(word.dom, word.gens); }

inline std::pair<MonotoneMap, MonotoneMap> project_to_delta(const TwoCellTerm& t) {
  return {project_to_delta(t.dom), project_to_delta(t.cod)};
}

inline std::pair<MonotoneMap, MonotoneMap> project_to_delta(const GenTwoCell& g,
                                                            const Orientation& o = shipped_orientation) {
  auto b = gen_boundary(g, o);
  return {project_to_delta(b.dom), project_to_delta(b.cod)};
}

// ---------------------------------------------------------------------------
// Orientation audit

struct OrientationOutcome {
  Orientation orientation;
  std::array<bool, 5> chains{};  // indexed like all_axioms
  bool all_chain() const noexcept {
    for (bool b : chains) {
      if (!b) return false;
    }
    return true;
  }
};

struct OrientationAudit {
  std::vector<OrientationOutcome> outcomes;  // all 16 sign choices, shipped first

  /// True when the shipped table is the only one chaining all five axioms.
  bool shipped_is_unique() const noexcept {
    std::size_t winners = 0;
    bool shipped_wins = false;
    for (const auto& o : outcomes) {
      if (o.all_chain()) {
        ++winners;
        shipped_wins = shipped_wins || o.orientation == shipped_orientation;
      }
    }
    return winners == 1 && shipped_wins;
  }
};

inline bool axiom_chains(AxiomName name, const Orientation& o) {
  try {
    detail::base_axiom(name, o);
    return true;
  } catch (const boundary_error&) {
    return false;
  }
}

inline OrientationAudit orientation_audit() {
  OrientationAudit audit;
  for (unsigned mask = 0; mask < 16; ++mask) {
    OrientationOutcome out;
    for (std::size_t j = 0; j < 4; ++j) out.orientation.flipped[j] = ((mask >> j) & 1U) != 0;
    for (std::size_t a = 0; a < all_axioms.size(); ++a) out.chains[a] = axiom_chains(all_axioms[a], out.orientation);
    audit.outcomes.push_back(out);
  }
  return audit;
}

}  // namespace simplex
